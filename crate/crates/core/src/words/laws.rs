//! Bounded law enumeration, combined words and variety-generated verbal
//! subgroups.

use super::verbal::{evaluation_cost, is_law_letters, values_of_letters};
use super::{Expr, Letter, Word};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{
    generated_subgroup, is_isomorphic, normal_subgroups, power, quotient, subgroups, ElemSet,
    FiniteGroup, SubgroupSet,
};

fn var_names(max_vars: usize) -> Vec<String> {
    (1..=max_vars).map(|i| format!("x{i}")).collect()
}

/// Freely reduced words over `x1..x{max_vars}` of length `1..=max_length`,
/// ordered by length and then lexicographically by letter
/// (`x1 < x1⁻¹ < x2 < ...`).
fn reduced_words(max_vars: usize, max_length: usize) -> Vec<Vec<Letter>> {
    let alphabet: Vec<Letter> = (0..max_vars)
        .flat_map(|v| [Letter { var: v, inverse: false }, Letter { var: v, inverse: true }])
        .collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max_length {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                if w.last().is_some_and(|&t| t.cancels(l)) {
                    continue;
                }
                let mut x = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Re-indexes letters onto the variables they actually use, in first-use order.
fn compact(letters: &[Letter], names: &[String]) -> (Vec<Letter>, Vec<String>) {
    let mut used: Vec<usize> = Vec::new();
    let mut out = Vec::with_capacity(letters.len());
    for l in letters {
        let idx = match used.iter().position(|&u| u == l.var) {
            Some(i) => i,
            None => {
                used.push(l.var);
                used.len() - 1
            }
        };
        out.push(Letter { var: idx, inverse: l.inverse });
    }
    (out, used.into_iter().map(|u| names[u].clone()).collect())
}

/// Every nonempty freely reduced word within the bounds that is a law of `a`.
pub fn enumerate_laws(a: &FiniteGroup, max_vars: usize, max_length: usize, caps: &Caps) -> Result<Vec<Word>> {
    if max_vars == 0 || max_length == 0 {
        return Err(Error::InvalidParameter("law bounds must be positive".into()));
    }
    let names = var_names(max_vars);
    let candidates = reduced_words(max_vars, max_length);
    let budget: u128 = candidates
        .iter()
        .map(|w| evaluation_cost(a.order(), compact(w, &names).1.len(), w.len()))
        .sum();
    caps.check_evaluation(budget)?;
    let mut laws = Vec::new();
    for w in &candidates {
        let (letters, vars) = compact(w, &names);
        if is_law_letters(a, &letters, vars.len()) {
            laws.push(Word::from_letters(&letters, &vars));
        }
    }
    Ok(laws)
}

/// `w₁(x̄₁) ⋯ wₙ(x̄ₙ)` over disjoint variable tuples `x1, x2, ...`.
///
/// A single word is returned unchanged.
pub fn combine_words(ws: &[Word]) -> Result<Word> {
    match ws {
        [] => Err(Error::InvalidParameter("combine_words needs at least one word".into())),
        [w] => Ok(w.clone()),
        _ => {
            let mut offset = 0;
            let mut factors = Vec::with_capacity(ws.len());
            for w in ws {
                let vars = w.variables();
                let renamed = w.expr().rename(&|v| {
                    let i = vars.iter().position(|x| x == v).expect("variable of word");
                    format!("x{}", offset + i + 1)
                });
                offset += vars.len();
                factors.push(renamed);
            }
            Ok(Word::from_expr(Expr::product(factors)))
        }
    }
}

/// Subgroup of `g` generated by `w(g)` over the laws of `a` within the bounds.
///
/// This approximates the verbal subgroup for the variety generated by `a`
/// from below; it grows as the bounds grow.
pub fn variety_verbal_subgroup(
    g: &FiniteGroup,
    a: &FiniteGroup,
    max_vars: usize,
    max_length: usize,
    caps: &Caps,
) -> Result<SubgroupSet> {
    let laws = enumerate_laws(a, max_vars, max_length, caps)?;
    let budget: u128 = laws.iter().map(|w| evaluation_cost(g.order(), w.arity(), w.length())).sum();
    caps.check_evaluation(budget)?;
    let mut values = ElemSet::from_elems(g.order(), [0]);
    for w in &laws {
        values.union_with(&values_of_letters(g, &w.letters(), w.arity()));
    }
    Ok(generated_subgroup(g, &values.to_vec()))
}

/// Verbal subgroup for the variety generated by `a`, computed the other way
/// round: the intersection of all normal `N` such that `G/N` is a quotient
/// of a subgroup of `aᵏ` for some `k ≤ max_power`.
///
/// Independent of word enumeration; `variety_verbal_subgroup` is always
/// contained in the result.
pub fn birkhoff_verbal_subgroup(g: &FiniteGroup, a: &FiniteGroup, max_power: usize, caps: &Caps) -> Result<SubgroupSet> {
    let mut sections: Vec<FiniteGroup> = Vec::new();
    for k in 1..=max_power {
        let ak = power(a, k, caps)?;
        for u in subgroups(&ak, caps)? {
            let (ug, _) = crate::group::subgroup_as_group(&ak, &u);
            for m in normal_subgroups(&ug, caps)? {
                sections.push(quotient(&ug, &m)?.0);
            }
        }
    }
    let mut bits = ElemSet::full(g.order());
    for n in normal_subgroups(g, caps)? {
        let (q, _) = quotient(g, &n)?;
        let mut in_variety = false;
        for s in sections.iter().filter(|s| s.order() == q.order()) {
            if is_isomorphic(&q, s, caps)? {
                in_variety = true;
                break;
            }
        }
        if in_variety {
            bits.intersect_with(n.bits());
        }
    }
    Ok(SubgroupSet::new(g, bits.iter())?)
}
