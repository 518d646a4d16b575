// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use chromgroup::chromatic::*;
use chromgroup::constructors::*;
use chromgroup::{Limits, PermGroup, Permutation};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn small_corpus() -> Vec<(&'static str, PermGroup)> {
    common::corpus()
        .into_iter()
        .filter(|(_, g)| g.order() <= 1000)
        .collect()
}

#[test]
fn two_stage_identity_on_corpus() {
    let lim = Limits::default();
    for (name, g) in small_corpus() {
        for p in [2u64, 3] {
            for n in 0..=3usize {
                for t in 0..=n {
                    let r = verify_transchromatic_identity(name, &g, p, n, t, &lim).unwrap();
                    assert!(r.pass, "{name} p={p} n={n} t={t}: {} != {}", r.lhs, r.rhs);
                    let parts: u64 = r.per_component.iter().map(|c| c.rank_t).sum();
                    assert_eq!(parts, r.rhs);
                }
            }
        }
    }
}

#[test]
fn coprime_collapse() {
    let lim = Limits::default();
    for (name, g) in small_corpus() {
        for p in [2u64, 3, 5, 7] {
            if g.order() % p as u128 != 0 {
                for h in 0..=3 {
                    assert_eq!(hkr_rank(&g, p, h, &lim).unwrap(), 1, "{name} p={p} h={h}");
                }
            }
        }
    }
}

#[test]
fn monotone_in_height() {
    let lim = Limits::default();
    for (name, g) in small_corpus() {
        for p in [2u64, 3] {
            let d2 = commuting_tuple_classes(&g, p, 2, &lim).unwrap();
            let d1 = commuting_tuple_classes(&g, p, 1, &lim).unwrap();
            assert!(d2.components.len() >= d1.components.len(), "{name}");
            // dropping the last coordinate hits every class of 1-tuples
            let classes = g.conjugacy_classes(&lim).unwrap();
            let mut hit = std::collections::BTreeSet::new();
            for c in &d2.components {
                hit.insert(classes.class_of(&c.tuple.entries()[0]).unwrap());
            }
            let expected: std::collections::BTreeSet<usize> = d1
                .components
                .iter()
                .map(|c| classes.class_of(&c.tuple.entries()[0]).unwrap())
                .collect();
            assert_eq!(hit, expected, "{name} p={p}");
        }
    }
}

#[test]
fn orbit_sizes_sum_to_raw_count() {
    let lim = Limits::default();
    for (name, g) in small_corpus() {
        for h in 0..=2 {
            let d = commuting_tuple_classes(&g, 2, h, &lim).unwrap();
            let total: u64 = d.components.iter().map(|c| c.orbit_size).sum();
            assert_eq!(total, d.raw_count, "{name} h={h}");
            for c in &d.components {
                assert_eq!(
                    c.orbit_size as u128 * c.centralizer.order(),
                    g.order(),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn rank_survives_relabeling() {
    let lim = Limits::default();
    let mut rng = StdRng::seed_from_u64(3);
    for (name, g) in small_corpus() {
        let mut images: Vec<u32> = (0..g.degree() as u32).collect();
        images.shuffle(&mut rng);
        let h = g
            .conjugated_by(&Permutation::from_images(images).unwrap())
            .unwrap();
        for p in [2u64, 3] {
            assert_eq!(
                hkr_rank(&g, p, 2, &lim).unwrap(),
                hkr_rank(&h, p, 2, &lim).unwrap(),
                "{name}"
            );
        }
    }
}

#[test]
fn ptuple_validation() {
    let s3 = symmetric(3).unwrap();
    let t = Permutation::parse_cycles("(0 1)", 3).unwrap();
    let r = Permutation::parse_cycles("(0 1 2)", 3).unwrap();
    assert!(PTuple::new(&s3, 2, vec![t.clone()]).is_ok());
    assert!(PTuple::new(&s3, 2, vec![r.clone()]).is_err());
    assert!(PTuple::new(&s3, 3, vec![r.clone(), r.pow(2)]).is_ok());
    let u = Permutation::parse_cycles("(1 2)", 3).unwrap();
    assert!(PTuple::new(&s3, 2, vec![t, u]).is_err());
    assert!(PTuple::new(&s3, 4, vec![r]).is_err());
}

#[test]
fn height_and_order_limits() {
    let lim = Limits::default();
    assert!(hkr_rank(&cyclic(2).unwrap(), 2, 5, &lim)
        .unwrap_err()
        .is_threshold());
    assert!(verify_transchromatic_identity("C_2", &cyclic(2).unwrap(), 2, 1, 2, &lim).is_err());
    let tight = Limits::default().with_max_order(10);
    assert!(hkr_rank(&symmetric(4).unwrap(), 2, 1, &tight)
        .unwrap_err()
        .is_threshold());
}

#[test]
fn report_round_trips_through_json() {
    let r =
        verify_transchromatic_identity("S_4", &symmetric(4).unwrap(), 2, 2, 1, &Limits::default())
            .unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: chromgroup::TranschromaticReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
}
