mod common;

use std::collections::HashMap;

use common::{classes, corpus, name, relabel, shuffle, word_family};
use proptest::prelude::*;
use verbalis::folog::{
    bounded_elementary_equivalence, evaluate, evaluate_exhaustive, formula_family, membership_formula,
    sentence_family_agrees, Formula, Model,
};
use verbalis::group::{alternating, is_isomorphic};
use verbalis::words::{expressible_within, verbal_subgroup, Expr};
use verbalis::{Caps, ElemSet, FiniteGroup, Word};

fn env(x: usize, y: usize, z: usize) -> HashMap<String, usize> {
    [("x", x), ("y", y), ("z", z)].iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn renaming_bound_variables_keeps_truth() {
    let caps = Caps::default();
    for g in corpus(8) {
        for phi in formula_family() {
            let renamed = phi.rename_bound("q");
            assert_eq!(renamed.free_vars(), phi.free_vars());
            let free = phi.free_vars();
            for x in g.elements() {
                let a: HashMap<String, usize> = free.iter().map(|v| (v.clone(), x)).collect();
                assert_eq!(
                    evaluate(&phi, &g, &a, &caps).unwrap(),
                    evaluate(&renamed, &g, &a, &caps).unwrap(),
                    "{} / {phi}",
                    name(&g)
                );
            }
        }
    }
}

#[test]
fn membership_defines_the_verbal_subgroup_once_r_reaches_the_width() {
    let caps = Caps::default();
    for g in corpus(12) {
        for w in word_family() {
            let v = verbal_subgroup(&w, &g, &caps).unwrap();
            let values = ElemSet::from_elems(g.order(), v.value_set.iter().copied());
            for r in 1..=v.width.max(1) + 1 {
                let phi = membership_formula(&w, r).unwrap();
                let defined = Model::new(&phi, &g, &caps).unwrap().defined_set().unwrap();
                assert_eq!(defined, expressible_within(&g, &values, r), "{} / {w} / r={r}", name(&g));
                if r >= v.width {
                    assert_eq!(defined.to_vec(), v.subgroup.elements(), "{} / {w} / r={r}", name(&g));
                }
            }
        }
    }
    // below the width only part of the subgroup is defined
    let a4 = alternating(4).unwrap();
    let w = Word::parse("x^2").unwrap();
    let defined = Model::new(&membership_formula(&w, 1).unwrap(), &a4, &caps).unwrap().defined_set().unwrap();
    assert_eq!(defined.len(), 9);
    assert_eq!(verbal_subgroup(&w, &a4, &caps).unwrap().subgroup.order(), 12);
}

#[test]
fn isomorphic_groups_are_equivalent_at_every_depth() {
    let caps = Caps::default();
    for g in corpus(12) {
        let (copy, _) = relabel(&g, &shuffle(g.order()));
        for d in 0..=3 {
            assert!(bounded_elementary_equivalence(&g, &copy, d, &caps).unwrap(), "{} at {d}", name(&g));
        }
    }
}

#[test]
fn equivalence_at_the_decisive_depth_is_isomorphism() {
    let caps = Caps::default();
    let gs = classes(&corpus(8), &caps);
    for (i, a) in gs.iter().enumerate() {
        for b in &gs[i..] {
            if a.order() != b.order() {
                continue;
            }
            let d = (usize::BITS - (a.order() - 1).leading_zeros()) as usize + 1;
            assert_eq!(
                bounded_elementary_equivalence(a, b, d, &caps).unwrap(),
                is_isomorphic(a, b, &caps).unwrap(),
                "{} vs {}",
                name(a),
                name(b)
            );
        }
    }
}

#[test]
fn game_equivalence_implies_family_agreement() {
    let caps = Caps::default();
    let gs = classes(&corpus(12), &caps);
    for (i, a) in gs.iter().enumerate() {
        for b in &gs[i + 1..] {
            for d in 0..=2 {
                if bounded_elementary_equivalence(a, b, d, &caps).unwrap() {
                    assert!(sentence_family_agrees(a, b, d, &caps).unwrap(), "{} vs {} at {d}", name(a), name(b));
                }
            }
        }
    }
}

fn arb_term() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![Just(Expr::var("x")), Just(Expr::var("y")), Just(Expr::var("z")), Just(Expr::Identity)];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..3).prop_map(Expr::Product),
            (inner.clone(), -2i64..3).prop_map(|(e, k)| Expr::Power(Box::new(e), k)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Commutator(Box::new(a), Box::new(b))),
        ]
    })
}

fn arb_formula() -> impl Strategy<Value = Formula> {
    let atom = (arb_term(), arb_term()).prop_map(|(a, b)| Formula::eq(a, b));
    let var = prop_oneof![Just("x"), Just("y"), Just("z")];
    atom.prop_recursive(4, 12, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            prop::collection::vec(inner.clone(), 2..3).prop_map(Formula::and),
            prop::collection::vec(inner.clone(), 2..3).prop_map(Formula::or),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (var.clone(), inner.clone()).prop_map(|(v, f)| Formula::forall(v, f)),
            (var.clone(), inner).prop_map(|(v, f)| Formula::exists(v, f)),
        ]
    })
}

fn small_groups() -> Vec<FiniteGroup> {
    classes(&corpus(12), &Caps::default())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn planner_agrees_with_plain_recursion(phi in arb_formula(), gi in 0usize..64, x in 0usize..64, y in 0usize..64, z in 0usize..64) {
        let caps = Caps::default();
        let gs = small_groups();
        let g = &gs[gi % gs.len()];
        let n = g.order();
        let a = env(x % n, y % n, z % n);
        prop_assert_eq!(evaluate(&phi, g, &a, &caps).unwrap(), evaluate_exhaustive(&phi, g, &a, &caps).unwrap());
        // printing and parsing round-trips
        let back = Formula::parse(&phi.to_string()).unwrap();
        prop_assert_eq!(evaluate(&back, g, &a, &caps).unwrap(), evaluate_exhaustive(&phi, g, &a, &caps).unwrap());
    }
}
