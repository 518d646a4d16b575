// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use crate::Permutation;

/// Sorted element list of a group with a reverse index, so that index order
/// is lexicographic order on image arrays.
#[derive(Debug)]
pub(crate) struct ElementTable {
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl ElementTable {
    pub fn new(mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        ElementTable { elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &Permutation) -> Option<u32> {
        self.index.get(g).copied()
    }

    /// Index permutation induced by `x ↦ s^-1 x s`.
    pub fn conjugation_action(&self, s: &Permutation) -> Vec<u32> {
        self.elements
            .iter()
            .map(|x| {
                self.index_of(&x.conjugate_by(s))
                    .expect("table is closed under conjugation by its own elements")
            })
            .collect()
    }
}
