//! Isomorphism testing by backtracking over generator images.

use super::subgroup::conjugacy_classes;
use super::{Elem, FiniteGroup, GroupHom};
use crate::caps::Caps;
use crate::error::Result;

/// Per-element invariant: (element order, conjugacy class size).
fn element_signatures(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let mut sig = vec![(0, 0); g.order()];
    for class in conjugacy_classes(g) {
        for &a in &class {
            sig[a] = (g.element_order(a), class.len());
        }
    }
    sig
}

/// Sorted multiset of element signatures; equal for isomorphic groups.
pub fn invariant_signature(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let mut s = element_signatures(g);
    s.sort_unstable();
    s
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup, caps: &Caps) -> Result<bool> {
    Ok(is_isomorphic_witness(g, h, caps)?.is_some())
}

/// Returns an isomorphism `g → h` if one exists.
pub fn is_isomorphic_witness(g: &FiniteGroup, h: &FiniteGroup, caps: &Caps) -> Result<Option<GroupHom>> {
    caps.check_isomorphism(g.order())?;
    caps.check_isomorphism(h.order())?;
    if g.order() != h.order() {
        return Ok(None);
    }
    let sg = element_signatures(g);
    let sh = element_signatures(h);
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }
    let gens = g.generators().to_vec();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&x| h.elements().filter(|&y| sh[y] == sg[x]).collect())
        .collect();
    let mut search = Search {
        g,
        h,
        gens: &gens,
        candidates: &candidates,
        images: Vec::with_capacity(gens.len()),
    };
    Ok(search.run().map(|map| GroupHom::new_unchecked(g.clone(), h.clone(), map)))
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: &'a [Elem],
    candidates: &'a [Vec<Elem>],
    images: Vec<Elem>,
}

impl Search<'_> {
    fn run(&mut self) -> Option<Vec<Elem>> {
        let depth = self.images.len();
        if depth == self.gens.len() {
            let map = self.extend()?;
            return if map.iter().all(|&x| x != usize::MAX) { Some(map) } else { None };
        }
        for i in 0..self.candidates[depth].len() {
            let y = self.candidates[depth][i];
            self.images.push(y);
            if self.extend().is_some() {
                if let Some(m) = self.run() {
                    return Some(m);
                }
            }
            self.images.pop();
        }
        None
    }

    /// Extends the current generator prefix along the Cayley graph of the
    /// subgroup it generates; `None` on an inconsistency or collision.
    fn extend(&self) -> Option<Vec<Elem>> {
        let (g, h) = (self.g, self.h);
        let k = self.images.len();
        let mut map = vec![usize::MAX; g.order()];
        let mut used = vec![false; h.order()];
        map[0] = 0;
        used[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for i in 0..k {
                let y = g.mul(x, self.gens[i]);
                let fy = h.mul(map[x], self.images[i]);
                if map[y] == usize::MAX {
                    if used[fy] {
                        return None;
                    }
                    used[fy] = true;
                    map[y] = fy;
                    stack.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Some(map)
    }
}
