// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use chromgroup::constructors::*;
use chromgroup::{PermGroup, Permutation};

pub fn gens(d: usize, list: &[&str]) -> PermGroup {
    PermGroup::from_generators(
        d,
        list.iter()
            .map(|g| Permutation::parse_cycles(g, d).unwrap())
            .collect(),
    )
    .unwrap()
}

pub fn a4() -> PermGroup {
    gens(4, &["(0 1 2)", "(1 2 3)"])
}

/// The named groups of the identity suite.
pub fn identity_suite() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("C_6", cyclic(6).unwrap()),
        ("S_3", symmetric(3).unwrap()),
        ("S_4", symmetric(4).unwrap()),
        ("D_8", dihedral(4).unwrap()),
        ("Q_8", quaternion8()),
        ("A_4", a4()),
        ("C_2xC_4", abelian(&[2, 4]).unwrap()),
        ("GL_2(F_3)", general_linear(2, 3).unwrap()),
        (
            "S_3xS_3",
            direct_product(&symmetric(3).unwrap(), &symmetric(3).unwrap()),
        ),
    ]
}

/// Test corpus: the identity suite plus a spread of small groups.
pub fn corpus() -> Vec<(&'static str, PermGroup)> {
    let mut out = identity_suite();
    out.extend([
        ("1", PermGroup::trivial(1)),
        ("C_2", cyclic(2).unwrap()),
        ("C_3", cyclic(3).unwrap()),
        ("C_4", cyclic(4).unwrap()),
        ("C_9", cyclic(9).unwrap()),
        ("C_2^3", abelian(&[2, 2, 2]).unwrap()),
        ("C_3xC_3", abelian(&[3, 3]).unwrap()),
        ("D_10", dihedral(5).unwrap()),
        ("D_12", dihedral(6).unwrap()),
        ("D_16", dihedral(8).unwrap()),
        ("C_2wrC_2", wreath_cyclic(&cyclic(2).unwrap(), 2).unwrap()),
        ("C_3wrC_2", wreath_cyclic(&cyclic(3).unwrap(), 2).unwrap()),
        (
            "S_3wrC_2",
            wreath_cyclic(&symmetric(3).unwrap(), 2).unwrap(),
        ),
        ("GL_2(F_2)", general_linear(2, 2).unwrap()),
        (
            "Q_8xC_2",
            direct_product(&quaternion8(), &cyclic(2).unwrap()),
        ),
        ("A_4xC_3", direct_product(&a4(), &cyclic(3).unwrap())),
        ("S_5", symmetric(5).unwrap()),
        ("U_3(F_3)", unipotent_radical(3, 3).unwrap()),
    ]);
    out
}
