mod common;

use common::{classes, corpus, name, relabel};
use proptest::prelude::*;
use verbalis::group::{
    composition_series_with, core, group_from_permutations, is_isomorphic, is_isomorphic_witness, is_normal,
    normal_subgroups, quotient, subgroups, Permutation,
};
use verbalis::{Caps, ElemSet, FiniteGroup, SeriesChoice, SubgroupSet};

#[test]
fn corpus_groups_satisfy_the_axioms() {
    for g in corpus(48) {
        g.validate().unwrap_or_else(|e| panic!("{}: {e}", name(&g)));
    }
}

#[test]
fn normal_members_of_the_lattice_are_the_normal_subgroups() {
    let caps = Caps::default();
    for g in corpus(48) {
        let from_lattice: Vec<SubgroupSet> =
            subgroups(&g, &caps).unwrap().into_iter().filter(|h| is_normal(&g, h)).collect();
        let direct = normal_subgroups(&g, &caps).unwrap();
        assert_eq!(from_lattice, direct, "{}", name(&g));
        for h in &direct {
            assert!(h.is_normal());
        }
    }
}

/// `K/N` as a subgroup of `H/N`.
fn image(h: &SubgroupSet, proj: &verbalis::GroupHom) -> SubgroupSet {
    SubgroupSet::new(proj.target(), h.elements().iter().map(|&x| proj.apply(x))).unwrap()
}

#[test]
fn third_isomorphism_theorem_on_all_chains() {
    let caps = Caps::default();
    let mut chains = 0;
    for g in corpus(24) {
        let ns = normal_subgroups(&g, &caps).unwrap();
        for n in &ns {
            let (gn, proj) = quotient(&g, n).unwrap();
            for k in ns.iter().filter(|k| n.is_subset(k)) {
                let kn = image(k, &proj);
                assert!(is_normal(&gn, &kn));
                let (lhs, _) = quotient(&gn, &kn).unwrap();
                let (rhs, _) = quotient(&g, k).unwrap();
                assert!(is_isomorphic(&lhs, &rhs, &caps).unwrap(), "{}", name(&g));
                chains += 1;
            }
        }
    }
    assert!(chains > 1000);
}

fn same_multiset(a: &[FiniteGroup], b: &[FiniteGroup], caps: &Caps) -> bool {
    let mut left: Vec<&FiniteGroup> = b.iter().collect();
    a.len() == b.len()
        && a.iter().all(|x| match left.iter().position(|y| is_isomorphic(x, y, caps).unwrap()) {
            Some(i) => {
                left.swap_remove(i);
                true
            }
            None => false,
        })
}

#[test]
fn jordan_holder() {
    let caps = Caps::default();
    for g in corpus(48) {
        let a = composition_series_with(&g, &caps, SeriesChoice::First).unwrap();
        let b = composition_series_with(&g, &caps, SeriesChoice::Last).unwrap();
        assert!(same_multiset(&a.factors, &b.factors, &caps), "{}", name(&g));
        let product: usize = a.factors.iter().map(|f| f.order()).product();
        assert_eq!(product, g.order());
        for w in a.chain.windows(2) {
            assert!(w[0].is_subset(&w[1]));
        }
    }
}

#[test]
fn core_is_the_largest_normal_subgroup_inside() {
    let caps = Caps::default();
    for g in corpus(24) {
        let ns = normal_subgroups(&g, &caps).unwrap();
        for h in subgroups(&g, &caps).unwrap() {
            let c = core(&g, &h);
            assert!(is_normal(&g, &c) && c.is_subset(&h), "{}", name(&g));
            for n in ns.iter().filter(|n| n.is_subset(&h)) {
                assert!(n.is_subset(&c));
            }
        }
    }
}

fn arb_perm(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

fn small_classes() -> Vec<FiniteGroup> {
    classes(&corpus(16), &Caps::default())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn isomorphism_is_an_equivalence(i in 0usize..40, j in 0usize..40, k in 0usize..40, seed in any::<u64>()) {
        let caps = Caps::default();
        let gs = small_classes();
        let (a, b, c) = (&gs[i % gs.len()], &gs[j % gs.len()], &gs[k % gs.len()]);
        prop_assert!(is_isomorphic(a, a, &caps).unwrap());
        prop_assert_eq!(is_isomorphic(a, b, &caps).unwrap(), is_isomorphic(b, a, &caps).unwrap());
        // a relabeled copy is isomorphic, and transitivity through it
        let n = a.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for x in (2..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(x, 1 + (s >> 33) as usize % x);
        }
        let (copy, _) = relabel(a, &perm);
        let w = is_isomorphic_witness(a, &copy, &caps).unwrap().expect("relabeled copy");
        prop_assert!(w.is_bijective());
        prop_assert_eq!(is_isomorphic(&copy, c, &caps).unwrap(), is_isomorphic(a, c, &caps).unwrap());
        // distinct classes stay distinct
        prop_assert_eq!(is_isomorphic(a, b, &caps).unwrap(), i % gs.len() == j % gs.len());
    }

    #[test]
    fn permutation_closures_are_groups(p in arb_perm(5), q in arb_perm(5)) {
        let caps = Caps::default();
        let gens = [Permutation::from_images(p).unwrap(), Permutation::from_images(q).unwrap()];
        let g = group_from_permutations(5, &gens, &caps).unwrap();
        prop_assert!(g.validate().is_ok());
        prop_assert_eq!(120 % g.order(), 0);
        // Lagrange for every element
        for a in g.elements() {
            prop_assert_eq!(g.order() % g.element_order(a), 0);
        }
        let full = ElemSet::full(g.order());
        prop_assert_eq!(full.len(), g.order());
    }
}
