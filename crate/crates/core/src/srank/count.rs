//! Counting normal subgroups with a prescribed quotient.
//!
//! The series route fixes a composition series `1 = F₀ ◁ … ◁ Fₙ = F` and
//! finds kernels for `F_k` inside `H` by first peeling off a simple quotient
//! `S = F_k/F_{k-1}` (kernels `K` with `H/K ≅ S`), then recursing into `K`
//! for `F_{k-1}`, then keeping only candidates normal in `H` with
//! `H/N ≅ F_k`.

use std::collections::HashMap;

use super::simple_quotient_kernels;
use crate::caps::Caps;
use crate::error::Result;
use crate::group::{
    composition_series, is_isomorphic, is_normal, normal_subgroups, quotient, subgroup_as_group,
    ElemSet, FiniteGroup, SubgroupSet,
};
use crate::par;

/// `{N ◁ G : G/N ≅ F}` by direct enumeration.
pub fn quotient_kernels_brute(g: &FiniteGroup, f: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    if g.order() % f.order() != 0 {
        return Ok(vec![]);
    }
    let candidates: Vec<SubgroupSet> =
        normal_subgroups(g, caps)?.into_iter().filter(|n| n.index() == f.order()).collect();
    let keep = par::map(&candidates, |n| is_isomorphic(&quotient(g, n)?.0, f, caps));
    let mut out = Vec::new();
    for (n, k) in candidates.into_iter().zip(keep) {
        if k? {
            out.push(n);
        }
    }
    Ok(out)
}

pub fn count_quotients_brute(g: &FiniteGroup, f: &FiniteGroup, caps: &Caps) -> Result<usize> {
    Ok(quotient_kernels_brute(g, f, caps)?.len())
}

struct SeriesCounter<'a> {
    g: &'a FiniteGroup,
    caps: &'a Caps,
    /// `levels[k]` is `F_k` as a standalone group.
    levels: Vec<FiniteGroup>,
    /// `factors[k-1] = F_k / F_{k-1}`.
    factors: Vec<FiniteGroup>,
    memo: HashMap<(usize, ElemSet), Vec<ElemSet>>,
}

impl SeriesCounter<'_> {
    /// Normal subgroups `N` of the subgroup `h` (both as element sets of G)
    /// with `h/N ≅ F_k`.
    fn kernels(&mut self, k: usize, h: &ElemSet) -> Result<Vec<ElemSet>> {
        if k == 0 {
            return Ok(vec![h.clone()]);
        }
        let key = (k, h.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let target = self.levels[k].clone();
        let h_order = h.len();
        let mut found: Vec<ElemSet> = Vec::new();
        if h_order % target.order() == 0 {
            let hs = SubgroupSet::new(self.g, h.iter())?;
            let (hg, emb) = subgroup_as_group(self.g, &hs);
            let local = |bits: &ElemSet| -> ElemSet {
                ElemSet::from_elems(hg.order(), (0..emb.len()).filter(|&i| bits.contains(emb[i])))
            };
            for kk in simple_quotient_kernels(&hg, &self.factors[k - 1], self.caps)? {
                let k_bits = ElemSet::from_elems(self.g.order(), kk.elements().iter().map(|&i| emb[i]));
                for n in self.kernels(k - 1, &k_bits)? {
                    if found.contains(&n) || h_order / n.len() != target.order() {
                        continue;
                    }
                    let n_local = SubgroupSet::new(&hg, local(&n).iter())?;
                    if !is_normal(&hg, &n_local) {
                        continue;
                    }
                    let (q, _) = quotient(&hg, &n_local)?;
                    if is_isomorphic(&q, &target, self.caps)? {
                        found.push(n);
                    }
                }
            }
        }
        self.memo.insert(key, found.clone());
        Ok(found)
    }
}

/// `{N ◁ G : G/N ≅ F}` through a composition series of `F`.
pub fn quotient_kernels_via_series(g: &FiniteGroup, f: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    caps.check_enumeration(g.order())?;
    let series = composition_series(f, caps)?;
    let levels = series.chain.iter().map(|c| subgroup_as_group(f, c).0).collect();
    let mut counter = SeriesCounter { g, caps, levels, factors: series.factors, memo: HashMap::new() };
    let top = series.chain.len() - 1;
    let mut out = counter
        .kernels(top, &ElemSet::full(g.order()))?
        .into_iter()
        .map(|n| SubgroupSet::new(g, n.iter()))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

pub fn count_quotients_via_series(g: &FiniteGroup, f: &FiniteGroup, caps: &Caps) -> Result<usize> {
    Ok(quotient_kernels_via_series(g, f, caps)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, elementary_abelian, quaternion8, symmetric, trivial};

    #[test]
    fn examples_match() {
        let caps = Caps::default();
        let v4 = elementary_abelian(2, 2).unwrap();
        let c2 = cyclic(2).unwrap();
        let s3 = symmetric(3).unwrap();
        assert_eq!(count_quotients_brute(&v4, &c2, &caps).unwrap(), 3);
        assert_eq!(count_quotients_via_series(&v4, &c2, &caps).unwrap(), 3);
        assert_eq!(count_quotients_brute(&s3, &s3, &caps).unwrap(), 1);
        assert_eq!(count_quotients_via_series(&s3, &s3, &caps).unwrap(), 1);
        assert_eq!(count_quotients_via_series(&quaternion8(), &c2, &caps).unwrap(), 3);
        assert_eq!(count_quotients_brute(&cyclic(6).unwrap(), &cyclic(4).unwrap(), &caps).unwrap(), 0);
        assert_eq!(count_quotients_via_series(&cyclic(6).unwrap(), &cyclic(4).unwrap(), &caps).unwrap(), 0);
    }

    #[test]
    fn kernel_sets_agree_on_small_groups() {
        let caps = Caps::default();
        let gs = [dihedral(4).unwrap(), symmetric(4).unwrap(), quaternion8(), cyclic(12).unwrap(), elementary_abelian(2, 3).unwrap()];
        let fs = [trivial(), cyclic(2).unwrap(), cyclic(4).unwrap(), elementary_abelian(2, 2).unwrap(), symmetric(3).unwrap(), dihedral(4).unwrap(), cyclic(6).unwrap()];
        for g in &gs {
            for f in &fs {
                assert_eq!(
                    quotient_kernels_via_series(g, f, &caps).unwrap(),
                    quotient_kernels_brute(g, f, &caps).unwrap(),
                    "{g:?} -> {f:?}"
                );
            }
        }
    }
}
