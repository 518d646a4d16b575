// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Text format for generator lists.
//!
//! ```text
//! # Mathieu group M_12
//! degree 12
//! (1 2 3 4 5 6 7 8 9 10 11)
//! (2 6 10 7)(3 9 4 5)
//! ```
//!
//! The first significant line gives the degree; every further nonempty line
//! is one generator in 0-based disjoint-cycle notation. `#` starts a comment
//! and `()` denotes the identity.

use std::fmt::Write as _;
use std::path::Path;

use crate::{Error, PermGroup, Permutation, Result};

pub fn parse_generators(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Format {
            line: line_no,
            message,
        };
        match degree {
            None => {
                let d = line
                    .strip_prefix("degree")
                    .filter(|rest| rest.starts_with(char::is_whitespace))
                    .ok_or_else(|| err(format!("expected `degree <d>`, found {line:?}")))?
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad degree: {e}")))?;
                if d == 0 {
                    return Err(err("degree must be at least 1".into()));
                }
                if d > u32::MAX as usize / 2 {
                    return Err(err(format!("degree {d} is too large")));
                }
                degree = Some(d);
            }
            Some(d) => {
                let g = Permutation::parse_cycles(line, d).map_err(|e| err(e.to_string()))?;
                gens.push(g);
            }
        }
    }
    let degree = degree.ok_or(Error::Format {
        line: 0,
        message: "missing `degree` line".into(),
    })?;
    if gens.is_empty() {
        return Err(Error::Format {
            line: 0,
            message: "no generators".into(),
        });
    }
    PermGroup::from_generators(degree, gens)
}

pub fn read_generators(path: impl AsRef<Path>) -> Result<PermGroup> {
    parse_generators(&std::fs::read_to_string(path)?)
}

pub fn write_generators(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        let _ = writeln!(out, "{g}");
    }
    out
}
