// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use chromgroup::chromatic::verify_transchromatic_identity;
use chromgroup::dsl::{parse, Evaluator};
use chromgroup::registry::*;
use chromgroup::{Error, Limits};

fn seeded(p: u64) -> Registry {
    Registry::from_entries(seed_defaults(p, &Limits::default()).unwrap()).unwrap()
}

fn names(entries: &[RegistryEntry]) -> Vec<&str> {
    entries.iter().map(|e| e.name.as_str()).collect()
}

#[test]
fn seeds_match_expected_axioms() {
    let lim = Limits::default();
    let reg = seeded(2);
    let mut ev = Evaluator::new(lim);
    for k in 1..=7 {
        let tree = certify(&parse(&format!("s({k})")).unwrap(), 2, &reg, &mut ev)
            .unwrap()
            .unwrap();
        assert_eq!(tree.rule, Rule::Seed(SeedAxiom::Symmetric));
    }
    let gl = certify(&parse("gl(2,3)").unwrap(), 2, &reg, &mut ev)
        .unwrap()
        .unwrap();
    assert_eq!(gl.rule, Rule::Seed(SeedAxiom::GeneralLinear));
    let trivial = certify(&parse("c(1)").unwrap(), 2, &reg, &mut ev)
        .unwrap()
        .unwrap();
    assert_eq!(trivial.rule, Rule::Seed(SeedAxiom::Abelian));
    let reg3 = seeded(3);
    let bad: Vec<_> = reg3
        .entries()
        .iter()
        .filter(|e| e.status == Status::Bad)
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].order, 729);
    assert!(seeded(2).entries().iter().all(|e| e.status == Status::Good));
}

#[test]
fn one_step_from_gl23() {
    let lim = Limits::default();
    let mut ev = Evaluator::new(lim);
    let mut reg = Registry::new();
    let root = certify(&parse("gl(2,3)").unwrap(), 2, &reg, &mut ev)
        .unwrap()
        .unwrap();
    reg.record(&root, 2, &mut ev).unwrap();
    let added = explore(&mut reg, 2, 10_000, 1, &mut ev).unwrap();
    let n = names(&added);
    assert!(n.contains(&"wr(gl(2,3),c(2))"), "{n:?}");
    assert!(
        n.contains(&"cent(wr(gl(2,3),c(2)),order=4,czorder=96)"),
        "{n:?}"
    );
    assert!(added.iter().all(|e| e.order <= 10_000));
}

#[test]
fn two_steps_reach_order_192() {
    let lim = Limits::default();
    let mut ev = Evaluator::new(lim);
    let mut reg = Registry::new();
    let root = certify(&parse("gl(2,3)").unwrap(), 2, &reg, &mut ev)
        .unwrap()
        .unwrap();
    reg.record(&root, 2, &mut ev).unwrap();
    explore(&mut reg, 2, 20_000, 2, &mut ev).unwrap();
    let target = "cent(wr(cent(wr(gl(2,3),c(2)),order=4,czorder=96),c(2)),order=8,czorder=192)";
    let e = reg
        .get(2, target)
        .expect("order-192 centralizer registered");
    assert_eq!(e.order, 192);
    assert_eq!(e.rule, "centralizer");
}

#[test]
fn trivial_start_only_grows_by_wreaths() {
    let lim = Limits::default();
    for p in [2u64, 3] {
        let mut ev = Evaluator::new(lim);
        let mut reg = Registry::new();
        let root = certify(&parse("c(1)").unwrap(), p, &reg, &mut ev)
            .unwrap()
            .unwrap();
        reg.record(&root, p, &mut ev).unwrap();
        // a single step only has the trivial group to work with
        let added = explore(&mut reg, p, 1000, 1, &mut ev).unwrap();
        assert_eq!(names(&added), vec![format!("wr(c(1),c({p}))").as_str()]);
        assert_eq!(added[0].order, p as u128);
        // below p^2 no product can appear either
        let added = explore(&mut reg, p, (p * p - 1) as u128, 4, &mut ev).unwrap();
        assert!(added.is_empty(), "{:?}", names(&added));
    }
}

#[test]
fn explore_is_idempotent_and_replays() {
    let lim = Limits::default();
    let mut ev = Evaluator::new(lim);
    let mut reg = seeded(2);
    let first = explore(&mut reg, 2, 200, 2, &mut ev).unwrap();
    assert!(!first.is_empty());
    let second = explore(&mut reg, 2, 200, 2, &mut ev).unwrap();
    assert!(second.is_empty(), "{:?}", names(&second));
    for e in reg.entries() {
        if e.status != Status::Good {
            continue;
        }
        let tree = Certifier::new(&reg, &mut ev, 2).expand(e).unwrap();
        replay(&tree, 2, &reg, &mut ev).unwrap_or_else(|err| panic!("{}: {err}", e.name));
    }
}

#[test]
fn good_entries_satisfy_identity() {
    let lim = Limits::default();
    let mut ev = Evaluator::new(lim);
    let mut reg = seeded(2);
    explore(&mut reg, 2, 100, 1, &mut ev).unwrap();
    for e in reg.good_entries(2).cloned().collect::<Vec<_>>() {
        let Some(expr) = e.parsed_expr().unwrap() else {
            continue;
        };
        let g = ev.evaluate(&expr).unwrap();
        for p in [2u64, 3] {
            for n in 0..=2 {
                for t in 0..=n {
                    let r = verify_transchromatic_identity(&e.name, &g, p, n, t, &lim).unwrap();
                    assert!(r.pass, "{} p={p} n={n} t={t}", e.name);
                }
            }
        }
    }
}

#[test]
fn no_bad_certification_at_three() {
    let lim = Limits::default();
    let mut ev = Evaluator::new(lim);
    let mut reg = seeded(3);
    let bad = reg
        .entries()
        .iter()
        .find(|e| e.status == Status::Bad)
        .unwrap()
        .fingerprint
        .clone();
    let added = explore(&mut reg, 3, 1000, 2, &mut ev).unwrap();
    assert!(added.iter().all(|e| e.fingerprint != bad));
    for (name, g) in common::corpus() {
        if g.order() > 5000 {
            continue;
        }
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.txt");
        std::fs::write(&path, chromgroup::genfile::write_generators(&g)).unwrap();
        let expr = parse(&format!("ingest({:?})", path.to_string_lossy())).unwrap();
        match certify(&expr, 3, &reg, &mut ev) {
            Ok(Some(tree)) => assert_ne!(
                ev.fingerprint(&expr).unwrap(),
                bad,
                "{name}: {}",
                tree.render()
            ),
            Ok(None) => {}
            Err(e) => panic!("{name}: {e}"),
        }
    }
}

#[test]
fn bad_fingerprint_blocks_certification() {
    let lim = Limits::default();
    let mut ev = Evaluator::new(lim);
    let mut reg = Registry::new();
    let fp = ev.fingerprint(&parse("d(4)").unwrap()).unwrap();
    reg.insert(RegistryEntry {
        name: "planted".into(),
        expr: None,
        prime: 2,
        order: 8,
        fingerprint: fp,
        status: Status::Bad,
        rule: "citation:test".into(),
        parents: vec![],
    })
    .unwrap();
    let err = certify(&parse("wr(c(2),c(2))").unwrap(), 2, &reg, &mut ev).unwrap_err();
    assert!(matches!(err, Error::Consistency(_)), "{err}");
}

#[test]
fn save_load_round_trip() {
    let lim = Limits::default();
    let mut ev = Evaluator::new(lim);
    let mut reg = seeded(3);
    explore(&mut reg, 3, 100, 1, &mut ev).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reg.jsonl");
    reg.save(&path).unwrap();
    assert_eq!(Registry::load(&path).unwrap(), reg);
    std::fs::write(&path, "").unwrap();
    assert!(Registry::load(&path).unwrap().is_empty());
    let mut text = reg.to_text();
    text.push_str("{\"name\": oops}\n");
    let lines = text.lines().count();
    std::fs::write(&path, text).unwrap();
    match Registry::load(&path).unwrap_err() {
        Error::Format { line, .. } => assert_eq!(line, lines),
        other => panic!("{other}"),
    }
}

#[test]
fn derivation_depth_is_bounded() {
    let lim = Limits::default();
    let mut ev = Evaluator::new(lim);
    let reg = seeded(2);
    let expr = parse("wr(wr(wr(gl(2,3),c(2)),c(2)),c(2))").unwrap();
    assert!(Certifier::new(&reg, &mut ev, 2)
        .with_depth(2)
        .certify(&expr)
        .unwrap()
        .is_none());
    let deep = Certifier::new(&reg, &mut ev, 2)
        .with_depth(4)
        .certify(&expr)
        .unwrap()
        .unwrap();
    assert_eq!(deep.depth(), 4);
}
