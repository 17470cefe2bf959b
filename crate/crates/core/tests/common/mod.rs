//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

use verbalis::group::{
    alternating, cyclic, dihedral, direct_product, elementary_abelian, is_isomorphic, quaternion8, subgroups,
    symmetric,
};
use verbalis::{Caps, FiniteGroup, GroupHom, SubgroupSet, Word};

/// Named groups of order at most `max`, labeled.
pub fn named(max: usize) -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.push(cyclic(n).unwrap().with_label(format!("C{n}")));
    }
    for n in 3..=max / 2 {
        out.push(dihedral(n).unwrap().with_label(format!("D{n}")));
    }
    let mut extra = vec![
        (quaternion8(), "Q8".to_string()),
        (alternating(4).unwrap(), "A4".to_string()),
        (symmetric(4).unwrap(), "S4".to_string()),
    ];
    for (p, k) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)] {
        extra.push((elementary_abelian(p, k).unwrap(), format!("E{p}^{k}")));
    }
    for (g, l) in extra {
        if g.order() <= max {
            out.push(g.with_label(l));
        }
    }
    out
}

/// Named groups plus their pairwise direct products, all of order at most `max`.
pub fn corpus(max: usize) -> Vec<FiniteGroup> {
    let base = named(max);
    let mut out = base.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            if a.order() >= 2 && b.order() >= 2 && a.order() * b.order() <= max {
                let l = format!("{}x{}", a.label().unwrap(), b.label().unwrap());
                out.push(direct_product(a, b).with_label(l));
            }
        }
    }
    out
}

/// One representative per isomorphism class, first occurrence kept.
pub fn classes(gs: &[FiniteGroup], caps: &Caps) -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = Vec::new();
    for g in gs {
        if !out.iter().any(|h| h.order() == g.order() && is_isomorphic(g, h, caps).unwrap()) {
            out.push(g.clone());
        }
    }
    out
}

pub fn name(g: &FiniteGroup) -> String {
    g.label().map_or_else(|| format!("<order {}>", g.order()), str::to_string)
}

/// The six words used throughout: x, x², x³, [x1,x2], x²·[x1,x2] on
/// disjoint variables, x⁶.
pub fn word_family() -> Vec<Word> {
    let mut ws: Vec<Word> = ["x", "x^2", "x^3", "[x1,x2]"].iter().map(|s| Word::parse(s).unwrap()).collect();
    ws.push(verbalis::words::combine_words(&[ws[1].clone(), ws[3].clone()]).unwrap());
    ws.push(Word::parse("x^6").unwrap());
    ws
}

/// The same group with element labels permuted by `perm` (which fixes 0).
pub fn relabel(g: &FiniteGroup, perm: &[usize]) -> (FiniteGroup, GroupHom) {
    let n = g.order();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| perm[g.mul(inv[x], inv[y])]).collect()).collect();
    let h = FiniteGroup::from_table(&rows).unwrap();
    let iso = GroupHom::new(g.clone(), h.clone(), perm.to_vec()).unwrap();
    (h, iso)
}

/// A deterministic non-trivial permutation of `0..n` fixing 0.
pub fn shuffle(n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    if n > 2 {
        p[1..].reverse();
        let m = p.len();
        p[1..m].rotate_left(1);
    }
    p
}

/// Frattini cover by definition: onto, and no proper subgroup maps onto the
/// target.
pub fn is_frattini_cover_by_definition(phi: &GroupHom, caps: &Caps) -> bool {
    if !phi.is_surjective() {
        return false;
    }
    let k = phi.source();
    let t = phi.target().order();
    subgroups(k, caps).unwrap().iter().filter(|h| !h.is_whole()).all(|h| {
        let img: std::collections::BTreeSet<_> = h.elements().iter().map(|&x| phi.apply(x)).collect();
        img.len() < t
    })
}

pub fn elements_of(h: &SubgroupSet) -> Vec<usize> {
    h.elements().to_vec()
}
