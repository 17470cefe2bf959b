mod common;

use common::{classes, corpus, is_frattini_cover_by_definition, name, relabel, shuffle};
use verbalis::group::{alternating, cyclic, is_normal, min_generators, normal_subgroups, quotient};
use verbalis::srank::{
    check_frattini_cover, count_quotients_brute, count_quotients_via_series, frattini_subgroup, non_generators,
    s_rank, s_rank_subadditivity_check,
};
use verbalis::{Caps, FiniteGroup, SubgroupSet};

fn simples() -> Vec<FiniteGroup> {
    vec![cyclic(2).unwrap(), cyclic(3).unwrap(), cyclic(5).unwrap(), cyclic(7).unwrap(), alternating(5).unwrap()]
}

#[test]
fn frattini_is_the_set_of_non_generators() {
    let caps = Caps::default();
    for g in corpus(32) {
        let phi = frattini_subgroup(&g, &caps).unwrap();
        assert_eq!(phi.bits(), &non_generators(&g, &caps).unwrap(), "{}", name(&g));
        assert!(is_normal(&g, &phi));
    }
}

#[test]
fn s_radical_is_characteristic() {
    let caps = Caps::default();
    for g in corpus(24) {
        let perm = shuffle(g.order());
        let (copy, iso) = relabel(&g, &perm);
        for s in simples() {
            let a = s_rank(&g, &s, &caps).unwrap();
            let b = s_rank(&copy, &s, &caps).unwrap();
            assert_eq!(a.rank, b.rank);
            let moved = SubgroupSet::new(&copy, a.m.elements().iter().map(|&x| iso.apply(x))).unwrap();
            assert_eq!(moved, b.m, "{}", name(&g));
            // invariant under every inner automorphism
            for h in g.elements() {
                assert!(a.m.elements().iter().all(|&x| a.m.contains(g.conj(x, h))));
            }
        }
    }
}

#[test]
fn ranks_are_subadditive_over_normal_subgroups() {
    let caps = Caps::default();
    for g in corpus(24) {
        for n in normal_subgroups(&g, &caps).unwrap() {
            for s in simples().iter().take(3) {
                assert!(s_rank_subadditivity_check(&g, &n, s, &caps).unwrap(), "{}", name(&g));
            }
        }
    }
}

#[test]
fn both_counting_methods_agree() {
    let caps = Caps::default();
    let targets = classes(&corpus(12), &caps);
    for g in corpus(24) {
        for f in targets.iter().filter(|f| g.order() % f.order() == 0) {
            assert_eq!(
                count_quotients_via_series(&g, f, &caps).unwrap(),
                count_quotients_brute(&g, f, &caps).unwrap(),
                "{} onto {}",
                name(&g),
                name(f)
            );
        }
    }
}

#[test]
fn projections_are_covers_exactly_below_frattini() {
    let caps = Caps::default();
    let (mut covers, mut others) = (0, 0);
    for g in corpus(32) {
        let phi = frattini_subgroup(&g, &caps).unwrap();
        let d = min_generators(&g, &caps).unwrap();
        for n in normal_subgroups(&g, &caps).unwrap() {
            let (q, proj) = quotient(&g, &n).unwrap();
            let check = check_frattini_cover(&proj, &caps).unwrap();
            assert_eq!(check.is_cover, n.is_subset(&phi));
            assert_eq!(check.is_cover, is_frattini_cover_by_definition(&proj, &caps), "{}", name(&g));
            if check.is_cover {
                assert_eq!(min_generators(&q, &caps).unwrap(), d, "{}", name(&g));
                covers += 1;
            } else {
                others += 1;
            }
        }
    }
    assert!(covers > 50 && others > 50);
}
