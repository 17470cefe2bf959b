//! Bounded elementary equivalence via the Ehrenfeucht–Fraïssé game.
//!
//! A position is a partial isomorphism between the subgroups generated by
//! the pebbled elements. Spoiler loses nothing by only playing outside the
//! current subgroups, and every such move at least doubles them, so games
//! longer than `⌈log₂ n⌉ + 1` rounds are decided like that one.

use std::collections::HashMap;

use super::{Formula, Model, Sentence};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{Elem, ElemSet, FiniteGroup};
use crate::words::Expr;

const NONE: u32 = u32::MAX;

struct Game<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    memo: HashMap<(Vec<u32>, usize), bool>,
}

impl Game<'_> {
    fn image(&self, map: &[u32]) -> ElemSet {
        ElemSet::from_elems(self.h.order(), map.iter().filter(|&&v| v != NONE).map(|&v| v as usize))
    }

    /// Extends the partial isomorphism by `a ↦ b` to `⟨dom, a⟩`, if possible.
    fn extend(&self, map: &[u32], a: Elem, b: Elem) -> Option<Vec<u32>> {
        let (g, h) = (self.g, self.h);
        let mut m = map.to_vec();
        let mut used = self.image(map);
        if used.contains(b) {
            return None;
        }
        let mut gens: Vec<(Elem, Elem)> =
            (0..m.len()).filter(|&x| m[x] != NONE).map(|x| (x, m[x] as usize)).collect();
        gens.push((a, b));
        m[a] = b as u32;
        used.insert(b);
        let mut stack: Vec<Elem> = gens.iter().map(|&(x, _)| x).collect();
        while let Some(x) = stack.pop() {
            for &(s, t) in &gens {
                let y = g.mul(x, s);
                let v = h.mul(m[x] as usize, t);
                if m[y] == NONE {
                    if !used.insert(v) {
                        return None;
                    }
                    m[y] = v as u32;
                    stack.push(y);
                } else if m[y] as usize != v {
                    return None;
                }
            }
        }
        Some(m)
    }

    fn duplicator_wins(&mut self, map: &[u32], rounds: usize) -> bool {
        if rounds == 0 {
            return true;
        }
        let size = map.iter().filter(|&&v| v != NONE).count();
        let (ng, nh) = (self.g.order(), self.h.order());
        if size == ng || size == nh {
            return size == ng && size == nh;
        }
        let key = (map.to_vec(), rounds);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let cod = self.image(map);
        let mut result = true;
        'spoiler: for a in (0..ng).filter(|&a| map[a] == NONE) {
            let answered = (0..nh).filter(|&b| !cod.contains(b)).any(|b| {
                self.extend(map, a, b).is_some_and(|m| self.duplicator_wins(&m, rounds - 1))
            });
            if !answered {
                result = false;
                break 'spoiler;
            }
        }
        if result {
            for b in (0..nh).filter(|&b| !cod.contains(b)) {
                let answered = (0..ng).filter(|&a| map[a] == NONE).any(|a| {
                    self.extend(map, a, b).is_some_and(|m| self.duplicator_wins(&m, rounds - 1))
                });
                if !answered {
                    result = false;
                    break;
                }
            }
        }
        self.memo.insert(key, result);
        result
    }
}

/// Rounds after which longer games give the same answer.
fn decisive_rounds(n: usize) -> usize {
    (usize::BITS - n.saturating_sub(1).leading_zeros()) as usize + 1
}

/// Whether `g` and `h` satisfy the same sentences of quantifier depth at
/// most `depth`. At depth `⌈log₂ max(|G|,|H|)⌉ + 1` and beyond this is
/// isomorphism.
pub fn bounded_elementary_equivalence(g: &FiniteGroup, h: &FiniteGroup, depth: usize, caps: &Caps) -> Result<bool> {
    let n = g.order().max(h.order());
    if n > caps.enumeration {
        return Err(Error::CapExceeded(format!(
            "elementary equivalence on order {n} exceeds enumeration cap {}",
            caps.enumeration
        )));
    }
    let rounds = depth.min(decisive_rounds(n));
    let mut game = Game { g, h, memo: HashMap::new() };
    let mut start = vec![NONE; g.order()];
    start[g.identity()] = h.identity() as u32;
    Ok(game.duplicator_wins(&start, rounds))
}

fn v(i: usize) -> Expr {
    Expr::var(&format!("v{i}"))
}

fn pow(e: Expr, k: i64) -> Expr {
    Expr::Power(Box::new(e), k)
}

fn family_atoms(d: usize) -> Vec<Formula> {
    let mut out = Vec::new();
    for i in 1..=d {
        for k in 1..=4 {
            let lhs = if k == 1 { v(i) } else { pow(v(i), k) };
            out.push(Formula::Eq(lhs, Expr::Identity));
        }
    }
    for i in 1..=d {
        for j in i + 1..=d {
            out.push(Formula::Eq(Expr::product(vec![v(i), v(j)]), Expr::product(vec![v(j), v(i)])));
            out.push(Formula::Eq(v(i), v(j)));
            out.push(Formula::Eq(pow(v(i), 2), v(j)));
            out.push(Formula::Eq(pow(v(j), 2), v(i)));
            out.push(Formula::Eq(pow(Expr::product(vec![v(i), v(j)]), 2), Expr::Identity));
            for k in j + 1..=d {
                out.push(Formula::Eq(Expr::product(vec![v(i), v(j)]), v(k)));
            }
        }
    }
    out
}

/// Prenex sentences over `v1..v_depth` with an atomic or negated atomic
/// matrix, every quantifier prefix of each length up to `depth`.
pub fn sentence_family(depth: usize) -> Vec<Sentence> {
    let mut out = Vec::new();
    for d in 1..=depth {
        let atoms = family_atoms(d);
        for prefix in 0..1usize << d {
            for a in &atoms {
                for matrix in [a.clone(), Formula::not(a.clone())] {
                    let f = (1..=d).rev().fold(matrix, |f, i| {
                        let name = format!("v{i}");
                        if prefix >> (i - 1) & 1 == 0 {
                            Formula::forall(&name, f)
                        } else {
                            Formula::exists(&name, f)
                        }
                    });
                    out.push(Sentence::new(f).expect("all variables bound"));
                }
            }
        }
    }
    out
}

/// Whether `g` and `h` agree on every member of [`sentence_family`].
pub fn sentence_family_agrees(g: &FiniteGroup, h: &FiniteGroup, depth: usize, caps: &Caps) -> Result<bool> {
    for s in sentence_family(depth) {
        let a = Model::new(s.formula(), g, caps)?.holds(&[]);
        let b = Model::new(s.formula(), h, caps)?.holds(&[]);
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}
