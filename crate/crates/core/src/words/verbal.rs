use std::collections::VecDeque;

use super::{eval_letters, Letter, Word};
use crate::caps::Caps;
use crate::error::Result;
use crate::group::{generated_subgroup, ElemSet, Elem, FiniteGroup, SubgroupSet};
use crate::par;

/// Verbal subgroup `w(G)` together with its width and the raw value set.
#[derive(Clone, Debug)]
pub struct VerbalResult {
    pub subgroup: SubgroupSet,
    /// Least `r` such that every element of the subgroup is a product of
    /// `r` values or inverse values; `0` iff the subgroup is trivial.
    pub width: usize,
    /// `{ w(g) : g ∈ Gⁿ }`, sorted.
    pub value_set: Vec<Elem>,
}

pub(crate) fn evaluation_cost(order: usize, arity: usize, len: usize) -> u128 {
    (order as u128).saturating_pow(arity as u32).saturating_mul(len.max(1) as u128)
}

/// All values of a reduced letter sequence over `arity` variables.
///
/// Assignments run in odometer order; the first variable is split across
/// threads and the partial sets are unioned.
pub(crate) fn values_of_letters(g: &FiniteGroup, letters: &[Letter], arity: usize) -> ElemSet {
    let n = g.order();
    if arity == 0 {
        return ElemSet::from_elems(n, [eval_letters(g, letters, &[])]);
    }
    par::fold_range(
        n,
        || ElemSet::new(n),
        |mut acc, first| {
            let mut asg = vec![0; arity];
            asg[0] = first;
            loop {
                acc.insert(eval_letters(g, letters, &asg));
                if !advance(&mut asg[1..], n) {
                    break;
                }
            }
            acc
        },
        |mut a, b| {
            a.union_with(&b);
            a
        },
    )
}

/// Odometer step; false once every digit has wrapped.
pub(crate) fn advance(digits: &mut [Elem], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// `{ w(g) : g ∈ Gⁿ }` by exhaustive assignment.
pub fn value_set(w: &Word, g: &FiniteGroup, caps: &Caps) -> Result<ElemSet> {
    let letters = w.letters();
    caps.check_evaluation(evaluation_cost(g.order(), w.arity(), letters.len()))?;
    Ok(values_of_letters(g, &letters, w.arity()))
}

/// Breadth-first eccentricity of the identity in the Cayley graph of the
/// subgroup generated by `values` with respect to `values ∪ values⁻¹`.
pub fn width_from_values(g: &FiniteGroup, values: &ElemSet) -> usize {
    let steps = symmetric_steps(g, values);
    if steps.is_empty() {
        return 0;
    }
    let mut dist = vec![usize::MAX; g.order()];
    dist[0] = 0;
    let mut queue = VecDeque::from([0]);
    let mut ecc = 0;
    while let Some(x) = queue.pop_front() {
        for &s in &steps {
            let y = g.mul(x, s);
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                ecc = dist[y];
                queue.push_back(y);
            }
        }
    }
    ecc
}

fn symmetric_steps(g: &FiniteGroup, values: &ElemSet) -> Vec<Elem> {
    let mut s = ElemSet::new(g.order());
    for v in values.iter().filter(|&v| v != 0) {
        s.insert(v);
        s.insert(g.inv(v));
    }
    s.to_vec()
}

/// Products of at most `r` values or inverse values.
pub fn expressible_within(g: &FiniteGroup, values: &ElemSet, r: usize) -> ElemSet {
    let steps = symmetric_steps(g, values);
    let mut reached = ElemSet::from_elems(g.order(), [0]);
    let mut layer = vec![0];
    for _ in 0..r {
        let mut next = Vec::new();
        for &x in &layer {
            for &s in &steps {
                let y = g.mul(x, s);
                if reached.insert(y) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    reached
}

/// `w(G)`, its width and the value set.
pub fn verbal_subgroup(w: &Word, g: &FiniteGroup, caps: &Caps) -> Result<VerbalResult> {
    let values = value_set(w, g, caps)?;
    let value_set = values.to_vec();
    let subgroup = generated_subgroup(g, &value_set);
    let width = width_from_values(g, &values);
    Ok(VerbalResult { subgroup, width, value_set })
}

/// `true` iff every assignment evaluates to the identity.
pub fn is_law(w: &Word, a: &FiniteGroup, caps: &Caps) -> Result<bool> {
    let letters = w.letters();
    caps.check_evaluation(evaluation_cost(a.order(), w.arity(), letters.len()))?;
    Ok(is_law_letters(a, &letters, w.arity()))
}

pub(crate) fn is_law_letters(a: &FiniteGroup, letters: &[Letter], arity: usize) -> bool {
    if letters.is_empty() {
        return true;
    }
    let n = a.order();
    par::all_range(n, |first| {
        let mut asg = vec![0; arity];
        asg[0] = first;
        loop {
            if eval_letters(a, letters, &asg) != 0 {
                return false;
            }
            if !advance(&mut asg[1..], n) {
                return true;
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, elementary_abelian, quaternion8, symmetric};
    use crate::Error;

    fn w(t: &str) -> Word {
        Word::parse(t).unwrap()
    }

    /// Oracle: every element of A3 is a commutator in S3, by listing all 36 pairs.
    #[test]
    fn commutators_of_s3() {
        let g = symmetric(3).unwrap();
        let mut brute = ElemSet::new(6);
        for a in g.elements() {
            for b in g.elements() {
                brute.insert(g.commutator(a, b));
            }
        }
        assert_eq!(brute.len(), 3);
        let r = verbal_subgroup(&w("[x1,x2]"), &g, &Caps::default()).unwrap();
        assert_eq!(r.value_set, brute.to_vec());
        assert_eq!(r.subgroup.order(), 3);
        assert!(r.subgroup.is_normal());
        assert_eq!(r.width, 1);
    }

    #[test]
    fn squares_of_c4() {
        let r = verbal_subgroup(&w("x^2"), &cyclic(4).unwrap(), &Caps::default()).unwrap();
        assert_eq!(r.subgroup.elements(), &[0, 2]);
        assert_eq!(r.width, 1);
    }

    #[test]
    fn identity_word_and_abelian_commutators() {
        let caps = Caps::default();
        let q = quaternion8();
        let r = verbal_subgroup(&w("x"), &q, &caps).unwrap();
        assert!(r.subgroup.is_whole());
        assert_eq!(r.width, 1);
        let r = verbal_subgroup(&w("[x1,x2]"), &elementary_abelian(2, 3).unwrap(), &caps).unwrap();
        assert!(r.subgroup.is_trivial());
        assert_eq!(r.width, 0);
    }

    #[test]
    fn laws() {
        let caps = Caps::default();
        assert!(is_law(&w("x^2"), &cyclic(2).unwrap(), &caps).unwrap());
        assert!(!is_law(&w("[x1,x2]"), &symmetric(3).unwrap(), &caps).unwrap());
        assert!(is_law(&w("x^6"), &symmetric(3).unwrap(), &caps).unwrap());
    }

    #[test]
    fn evaluation_cap() {
        let caps = Caps { evaluation: 100, ..Caps::default() };
        let err = verbal_subgroup(&w("[x1,x2]"), &symmetric(3).unwrap(), &caps).unwrap_err();
        assert!(matches!(err, Error::EvaluationExceedsCap { needed: 144, cap: 100 }));
    }

    #[test]
    fn expressible_layers() {
        let g = cyclic(8).unwrap();
        let vals = ElemSet::from_elems(8, [0, 1]);
        assert_eq!(expressible_within(&g, &vals, 2).to_vec(), vec![0, 1, 2, 6, 7]);
        assert_eq!(width_from_values(&g, &vals), 4);
    }
}
