// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Isomorphism-invariant fingerprints.
//!
//! Equal fingerprints are necessary for isomorphism but not sufficient: the
//! registry treats equal fingerprints as the same group, which can merge
//! non-isomorphic groups that happen to agree on every recorded invariant.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Limits, PermGroup, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fingerprint {
    pub order: u64,
    pub exponent: u64,
    /// `(element order, count)` pairs, ascending.
    pub element_order_histogram: Vec<(u64, u64)>,
    /// `(class size, count)` pairs, ascending.
    pub class_size_histogram: Vec<(u64, u64)>,
    pub center_order: u64,
    pub derived_order: u64,
    pub abelian: bool,
}

fn histogram(values: impl IntoIterator<Item = u64>) -> Vec<(u64, u64)> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h.into_iter().collect()
}

impl Fingerprint {
    pub fn count_of_order(&self, order: u64) -> u64 {
        self.element_order_histogram
            .iter()
            .find(|(o, _)| *o == order)
            .map_or(0, |(_, c)| *c)
    }
}

impl PermGroup {
    pub fn fingerprint(&self, limits: &Limits) -> Result<Fingerprint> {
        let table = self.table(limits)?;
        let orders: Vec<u64> = table.elements.iter().map(|g| g.order()).collect();
        let exponent = orders.iter().fold(1u64, |acc, o| acc.lcm(o));
        let classes = self.conjugacy_classes(limits)?;
        Ok(Fingerprint {
            order: self.order() as u64,
            exponent,
            element_order_histogram: histogram(orders),
            class_size_histogram: histogram(classes.sizes.iter().copied()),
            center_order: self.center(limits)?.order() as u64,
            derived_order: self.derived_subgroup()?.order() as u64,
            abelian: self.is_abelian(),
        })
    }
}
