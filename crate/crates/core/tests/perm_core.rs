// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use std::collections::BTreeMap;

use chromgroup::{Limits, PermGroup, Permutation};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn random_perm(rng: &mut StdRng, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

fn class_size_multiset(g: &PermGroup) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for s in g.conjugacy_classes(&Limits::default()).unwrap().sizes {
        *out.entry(s).or_default() += 1;
    }
    out
}

#[test]
fn chain_order_matches_closure() {
    let lim = Limits::default();
    for (name, g) in common::corpus() {
        if g.order() > 5000 {
            continue;
        }
        let closure = g.closure_elements(&lim).unwrap();
        assert_eq!(closure.len() as u128, g.order(), "{name}");
        let mut chain = g.chain().elements();
        chain.sort();
        let mut sorted = closure.clone();
        sorted.sort();
        assert_eq!(chain, sorted, "{name}");
    }
}

#[test]
fn membership_soundness() {
    let lim = Limits::default();
    let mut rng = StdRng::seed_from_u64(7);
    for (name, g) in common::corpus() {
        if g.order() > 5000 {
            continue;
        }
        let closure = g.closure_elements(&lim).unwrap();
        for x in &closure {
            assert!(g.contains(x).unwrap(), "{name}: {x}");
        }
        let set: std::collections::HashSet<_> = closure.iter().cloned().collect();
        for _ in 0..50 {
            let r = random_perm(&mut rng, g.degree());
            assert_eq!(g.contains(&r).unwrap(), set.contains(&r), "{name}: {r}");
        }
    }
}

#[test]
fn relabeling_invariance() {
    let lim = Limits::default();
    let mut rng = StdRng::seed_from_u64(11);
    for (name, g) in common::corpus() {
        if g.order() > 5000 {
            continue;
        }
        let sigma = random_perm(&mut rng, g.degree());
        let h = g.conjugated_by(&sigma).unwrap();
        assert_eq!(h.order(), g.order(), "{name}");
        assert_eq!(
            h.fingerprint(&lim).unwrap(),
            g.fingerprint(&lim).unwrap(),
            "{name}"
        );
        assert_eq!(class_size_multiset(&h), class_size_multiset(&g), "{name}");
    }
}

#[test]
fn class_reps_ignore_generator_order() {
    let lim = Limits::default();
    let mut rng = StdRng::seed_from_u64(13);
    for (name, g) in common::corpus() {
        if g.order() > 5000 {
            continue;
        }
        let mut gens = g.generators().to_vec();
        gens.shuffle(&mut rng);
        gens.push(Permutation::identity(g.degree()));
        let h = PermGroup::from_generators(g.degree(), gens).unwrap();
        let a = g.conjugacy_classes(&lim).unwrap();
        let b = h.conjugacy_classes(&lim).unwrap();
        assert_eq!(a.reps, b.reps, "{name}");
        assert_eq!(a.sizes, b.sizes, "{name}");
    }
}

#[test]
fn centralizer_by_double_filtering() {
    let lim = Limits::default();
    let mut rng = StdRng::seed_from_u64(17);
    for (name, g) in common::corpus() {
        if g.order() > 5000 {
            continue;
        }
        let els = g.elements(&lim).unwrap();
        for _ in 0..4 {
            let s: Vec<Permutation> = els.choose_multiple(&mut rng, 2).cloned().collect();
            let t: Vec<Permutation> = els.choose_multiple(&mut rng, 1).cloned().collect();
            let cs = g.centralizer(&lim, &s).unwrap();
            assert_eq!(g.order() % cs.order(), 0, "{name}");
            let both: Vec<Permutation> = s.iter().chain(&t).cloned().collect();
            let cst = g.centralizer(&lim, &both).unwrap();
            let filtered: Vec<Permutation> = cs
                .elements(&lim)
                .unwrap()
                .into_iter()
                .filter(|x| t.iter().all(|y| x.commutes_with(y)))
                .collect();
            assert_eq!(cst.elements(&lim).unwrap(), filtered, "{name}");
        }
    }
}

#[test]
fn centralizer_rejects_foreign_elements() {
    let s3 = common::gens(4, &["(0 1 2)", "(0 1)"]);
    let outside = Permutation::parse_cycles("(2 3)", 4).unwrap();
    let err = s3.centralizer(&Limits::default(), &[outside]).unwrap_err();
    assert!(err.to_string().contains("not in"), "{err}");
}

#[test]
fn sylow_has_exact_p_part() {
    let lim = Limits::default();
    for (name, g) in common::corpus() {
        if g.order() > 5000 {
            continue;
        }
        for p in [2u64, 3, 5] {
            let s = g.sylow_subgroup(&lim, p).unwrap();
            assert_eq!(
                s.order(),
                chromgroup::arith::p_part(g.order(), p),
                "{name} p={p}"
            );
            for x in s.elements(&lim).unwrap() {
                assert!(
                    chromgroup::arith::is_power_of(x.order() as u128, p),
                    "{name}"
                );
                assert!(g.contains(&x).unwrap());
            }
        }
    }
}

#[test]
fn threshold_is_reported() {
    let big = chromgroup::constructors::symmetric(10).unwrap();
    let err = big.conjugacy_classes(&Limits::default()).unwrap_err();
    assert!(err.is_threshold());
    assert!(err.to_string().contains("desk-scale exceeded"), "{err}");
    let small = Limits::default().with_max_order(100);
    let err = chromgroup::constructors::symmetric(5)
        .unwrap()
        .elements(&small)
        .unwrap_err();
    assert!(err.is_threshold());
}

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn random_groups_agree_with_closure(
        gens in (2usize..8).prop_flat_map(|d| proptest::collection::vec(arb_perm(d), 1..4).prop_map(move |g| (d, g)))
    ) {
        let (d, gens) = gens;
        let g = PermGroup::from_generators(d, gens).unwrap();
        let lim = Limits::default();
        prop_assert_eq!(g.closure_elements(&lim).unwrap().len() as u128, g.order());
        let c = g.conjugacy_classes(&lim).unwrap();
        prop_assert_eq!(c.sizes.iter().sum::<u64>() as u128, g.order());
    }
}

#[test]
fn equal_fingerprints_only_for_isomorphic_corpus_groups() {
    // pairs built two ways on purpose
    let isomorphic = [("D_8", "C_2wrC_2"), ("S_3", "GL_2(F_2)")];
    let lim = Limits::default();
    let list: Vec<_> = common::corpus()
        .into_iter()
        .filter(|(_, g)| g.order() <= 5000)
        .map(|(name, g)| (name, g.fingerprint(&lim).unwrap()))
        .collect();
    for (i, (a, fa)) in list.iter().enumerate() {
        for (b, fb) in &list[i + 1..] {
            if fa == fb {
                assert!(
                    isomorphic.contains(&(a, b)) || isomorphic.contains(&(b, a)),
                    "unexpected fingerprint collision: {a} and {b}"
                );
            }
        }
    }
}
