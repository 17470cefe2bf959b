use super::{Formula, Sentence};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::words::{verbal_subgroup, Expr, Word};

const MAX_R: usize = 8;

fn check_r(r: usize) -> Result<()> {
    if r == 0 || r > MAX_R {
        return Err(Error::InvalidParameter(format!("r must lie in 1..={MAX_R}, got {r}")));
    }
    Ok(())
}

/// `w` applied to the variable tuple `prefix{j}_1, ..., prefix{j}_n`.
fn instance(w: &Word, prefix: &str, j: usize) -> (Expr, Vec<String>) {
    let names: Vec<String> = (1..=w.arity()).map(|i| format!("{prefix}{j}_{i}")).collect();
    let expr = w.expr().rename(&|v| {
        let i = w.variables().iter().position(|x| x == v).unwrap();
        names[i].clone()
    });
    (expr, names)
}

fn membership_with(w: &Word, r: usize, x: &Expr, prefix: &str) -> Formula {
    let instances: Vec<(Expr, Vec<String>)> = (1..=r).map(|j| instance(w, prefix, j)).collect();
    let disjuncts = (0..1usize << r)
        .map(|mask| {
            let factors = instances
                .iter()
                .enumerate()
                .map(|(j, (e, _))| if mask >> (r - 1 - j) & 1 == 1 { e.clone().inverse() } else { e.clone() })
                .collect();
            Formula::Eq(x.clone(), Expr::product(factors))
        })
        .collect();
    let body = Formula::or(disjuncts);
    instances.iter().rev().flat_map(|(_, names)| names.iter().rev()).fold(body, |f, v| Formula::exists(v, f))
}

/// `φ(x) := ∃h₁…h_r ⋁_ε x = w(h₁)^ε₁ ⋯ w(h_r)^ε_r`, with `2^r` disjuncts
/// ordered so that `+` precedes `-` lexicographically.
pub fn membership_formula(w: &Word, r: usize) -> Result<Formula> {
    check_r(r)?;
    Ok(membership_with(w, r, &Expr::var("x"), "h"))
}

/// `∀g₁…g_s φ(w(g₁)^δ₁ ⋯ w(g_s)^δ_s)` with `φ` the membership formula.
/// Signs are `true` for `+1`.
pub fn length_bound_sentence(w: &Word, r: usize, s: usize, delta: &[bool]) -> Result<Sentence> {
    check_r(r)?;
    if s <= r {
        return Err(Error::InvalidParameter(format!("need s > r, got s = {s}, r = {r}")));
    }
    if delta.len() != s {
        return Err(Error::InvalidParameter(format!("sign vector has length {}, expected {s}", delta.len())));
    }
    let instances: Vec<(Expr, Vec<String>)> = (1..=s).map(|j| instance(w, "g", j)).collect();
    let product = Expr::product(
        instances
            .iter()
            .zip(delta)
            .map(|((e, _), &plus)| if plus { e.clone() } else { e.clone().inverse() })
            .collect(),
    );
    let body = membership_with(w, r, &product, "h");
    let f = instances.iter().rev().flat_map(|(_, names)| names.iter().rev()).fold(body, |f, v| Formula::forall(v, f));
    Sentence::new(f)
}

/// A variable-name prefix that no name in `names` starts with.
fn fresh_prefix(names: &[String]) -> String {
    let mut p = String::from("h");
    while names.iter().any(|n| n.starts_with(&p)) {
        p.push('h');
    }
    p
}

/// Replaces every atom `t₁ = t₂` by membership of `t₁·t₂⁻¹` in `w(G)`,
/// so that `G ⊨ φ′(g)` iff `G/w(G) ⊨ φ(g·w(G))` whenever `width_w(G) ≤ r`.
pub fn relativize(phi: &Formula, w: &Word, r: usize) -> Result<Formula> {
    check_r(r)?;
    let prefix = fresh_prefix(&phi.all_vars());
    Ok(phi.map_atoms(&mut |a, b| {
        let diff = match b {
            Expr::Identity => a.clone(),
            _ => Expr::product(vec![a.clone(), b.clone().inverse()]),
        };
        membership_with(w, r, &diff, &prefix)
    }))
}

/// [`relativize`] with `r` taken from the width of `w` in `g` (at least 1).
pub fn relativize_for(phi: &Formula, w: &Word, g: &FiniteGroup, caps: &Caps) -> Result<(Formula, usize)> {
    let r = verbal_subgroup(w, g, caps)?.width.max(1);
    Ok((relativize(phi, w, r)?, r))
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::folog::{evaluate, Model};
    use crate::group::{alternating, cyclic, dihedral, quotient, symmetric, Elem};

    fn defined(f: &Formula, g: &FiniteGroup) -> Vec<Elem> {
        Model::new(f, g, &Caps::default()).unwrap().defined_set().unwrap().to_vec()
    }

    fn signs(s: usize) -> impl Iterator<Item = Vec<bool>> {
        (0..1usize << s).map(move |m| (0..s).map(|j| m >> j & 1 == 0).collect())
    }

    #[test]
    fn membership_examples() {
        let c4 = cyclic(4).unwrap();
        let f = membership_formula(&Word::parse("x^2").unwrap(), 1).unwrap();
        assert_eq!(f.to_string(), "exists h1_1. x = h1_1^2 | x = (h1_1^2)^-1");
        assert_eq!(defined(&f, &c4), vec![0, 2]);
        let s3 = symmetric(3).unwrap();
        let f = membership_formula(&Word::parse("[x1,x2]").unwrap(), 1).unwrap();
        let a3 = crate::group::normal_subgroups(&s3, &Caps::default()).unwrap()[1].elements().to_vec();
        assert_eq!(defined(&f, &s3), a3);
        let f = membership_formula(&Word::parse("x").unwrap(), 1).unwrap();
        assert_eq!(defined(&f, &s3).len(), 6);
        assert!(membership_formula(&Word::parse("x").unwrap(), 0).is_err());
        assert!(membership_formula(&Word::parse("x").unwrap(), 9).is_err());
    }

    #[test]
    fn membership_has_all_sign_patterns() {
        let f = membership_formula(&Word::parse("[x1,x2]").unwrap(), 3).unwrap();
        let mut body = &f;
        let mut bound = 0;
        while let Formula::Quant(_, _, b) = body {
            body = b;
            bound += 1;
        }
        assert_eq!(bound, 6);
        assert!(matches!(body, Formula::Or(xs) if xs.len() == 8));
    }

    #[test]
    fn length_sentence_examples() {
        let caps = Caps::default();
        let none = HashMap::new();
        let sq = Word::parse("x^2").unwrap();
        let s = length_bound_sentence(&sq, 1, 2, &[true, true]).unwrap();
        assert!(evaluate(s.formula(), &cyclic(4).unwrap(), &none, &caps).unwrap());
        let comm = Word::parse("[x1,x2]").unwrap();
        let s = length_bound_sentence(&comm, 1, 2, &[true, false]).unwrap();
        assert!(evaluate(s.formula(), &symmetric(3).unwrap(), &none, &caps).unwrap());

        // squares of D4 already form a subgroup, so width 1 and the sentence holds
        let d4 = dihedral(4).unwrap();
        assert_eq!(verbal_subgroup(&sq, &d4, &caps).unwrap().width, 1);
        let s = length_bound_sentence(&sq, 1, 2, &[true, true]).unwrap();
        assert!(evaluate(s.formula(), &d4, &none, &caps).unwrap());

        // squares of A4 are e and the 3-cycles; width 2
        let a4 = alternating(4).unwrap();
        assert_eq!(verbal_subgroup(&sq, &a4, &caps).unwrap().width, 2);
        assert!(!evaluate(s.formula(), &a4, &none, &caps).unwrap());
        for d in signs(3) {
            let s = length_bound_sentence(&sq, 2, 3, &d).unwrap();
            assert!(evaluate(s.formula(), &a4, &none, &caps).unwrap());
        }
    }

    #[test]
    fn length_sentence_preconditions() {
        let w = Word::parse("x").unwrap();
        assert!(length_bound_sentence(&w, 2, 2, &[true, true]).is_err());
        assert!(length_bound_sentence(&w, 1, 2, &[true]).is_err());
    }

    #[test]
    fn relativize_examples() {
        let caps = Caps::default();
        let c4 = cyclic(4).unwrap();
        let sq = Word::parse("x^2").unwrap();
        let n = verbal_subgroup(&sq, &c4, &caps).unwrap().subgroup;
        let (q, _) = quotient(&c4, &n).unwrap();
        let none = HashMap::new();
        for (text, expected) in [("forall y. y = e", false), ("forall y. y*y = e", true)] {
            let phi = Formula::parse(text).unwrap();
            let rel = relativize(&phi, &sq, 1).unwrap();
            assert_eq!(evaluate(&rel, &c4, &none, &caps).unwrap(), expected);
            assert_eq!(evaluate(&phi, &q, &none, &caps).unwrap(), expected);
        }
        let phi = Formula::parse("exists y. !y = e").unwrap();
        let (rel, r) = relativize_for(&phi, &Word::parse("x").unwrap(), &symmetric(3).unwrap(), &caps).unwrap();
        assert_eq!(r, 1);
        assert!(!evaluate(&rel, &symmetric(3).unwrap(), &none, &caps).unwrap());
    }

    #[test]
    fn relativize_avoids_capture() {
        let phi = Formula::parse("forall h1_1. exists hx. h1_1 = hx^2").unwrap();
        let rel = relativize(&phi, &Word::parse("x^2").unwrap(), 1).unwrap();
        assert!(rel.to_string().contains("hh1_1"));
        let caps = Caps::default();
        let c4 = cyclic(4).unwrap();
        let (q, _) = quotient(&c4, &verbal_subgroup(&Word::parse("x^2").unwrap(), &c4, &caps).unwrap().subgroup).unwrap();
        let none = HashMap::new();
        assert_eq!(evaluate(&rel, &c4, &none, &caps).unwrap(), evaluate(&phi, &q, &none, &caps).unwrap());
    }
}
