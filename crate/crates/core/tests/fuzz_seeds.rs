// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Runs the checked-in fuzz corpus through the same checks as the fuzz
//! targets, so the seeds stay meaningful on a stable toolchain.

use std::path::PathBuf;

use chromgroup::dsl::parse;
use chromgroup::genfile::{parse_generators, write_generators};
use chromgroup::registry::Registry;
use chromgroup::Permutation;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            (path.display().to_string(), std::fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn parse_expr_seeds() {
    let mut accepted = 0;
    for (name, data) in seeds("parse_expr") {
        if let Ok(expr) = parse(std::str::from_utf8(&data).unwrap()) {
            assert_eq!(parse(&expr.to_string()).unwrap(), expr, "{name}");
            accepted += 1;
        }
    }
    assert!(accepted > 0);
}

#[test]
fn parse_generators_seeds() {
    for (name, data) in seeds("parse_generators") {
        if let Ok(group) = parse_generators(std::str::from_utf8(&data).unwrap()) {
            let again = parse_generators(&write_generators(&group)).unwrap();
            assert_eq!(again.order(), group.order(), "{name}");
        }
    }
}

#[test]
fn registry_load_seeds() {
    for (name, data) in seeds("registry_load") {
        if let Ok(reg) = Registry::read_from(&data[..]) {
            assert_eq!(
                Registry::read_from(reg.to_text().as_bytes()).unwrap(),
                reg,
                "{name}"
            );
        }
    }
}

#[test]
fn parse_cycles_seeds() {
    for (name, data) in seeds("parse_cycles") {
        let (&degree, rest) = data.split_first().unwrap();
        if let Ok(p) =
            Permutation::parse_cycles(std::str::from_utf8(rest).unwrap(), degree as usize)
        {
            assert_eq!(
                Permutation::parse_cycles(&p.to_string(), p.degree()).unwrap(),
                p,
                "{name}"
            );
        }
    }
}
