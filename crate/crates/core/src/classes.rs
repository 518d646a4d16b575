// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Conjugacy classes by orbit closure under the generators.

use std::sync::Arc;

use crate::table::ElementTable;
use crate::{Limits, PermGroup, Permutation, Result};

/// Conjugacy classes of a group, ordered by their lexicographically minimal
/// representatives.
#[derive(Debug, Clone)]
pub struct ConjClassTable {
    pub reps: Vec<Permutation>,
    pub sizes: Vec<u64>,
    table: Arc<ElementTable>,
    class_of: Vec<u32>,
}

impl ConjClassTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class id of `g`, or `None` if `g` is not in the group.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.table
            .index_of(g)
            .map(|i| self.class_of[i as usize] as usize)
    }

    /// Members of class `id`, in lexicographic order.
    pub fn members(&self, id: usize) -> impl Iterator<Item = &Permutation> {
        self.table
            .elements
            .iter()
            .zip(&self.class_of)
            .filter(move |(_, &c)| c as usize == id)
            .map(|(g, _)| g)
    }
}

impl PermGroup {
    /// Orbits of the conjugation action. Errors above the enumeration limit.
    pub fn conjugacy_classes(&self, limits: &Limits) -> Result<ConjClassTable> {
        let table = self.table(limits)?;
        let actions: Vec<Vec<u32>> = self
            .generators()
            .iter()
            .filter(|s| !s.is_identity())
            .map(|s| table.conjugation_action(s))
            .collect();
        let (class_of, reps_idx, sizes) = orbits(table.len(), &actions);
        Ok(ConjClassTable {
            reps: reps_idx
                .iter()
                .map(|&i| table.elements[i as usize].clone())
                .collect(),
            sizes,
            table,
            class_of,
        })
    }
}

/// Orbits of the group generated by `actions` on `0..n`. Orbit ids follow the
/// smallest member, which is also returned as the representative.
pub(crate) fn orbits(n: usize, actions: &[Vec<u32>]) -> (Vec<u32>, Vec<u32>, Vec<u64>) {
    const UNSEEN: u32 = u32::MAX;
    let mut class_of = vec![UNSEEN; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if class_of[start] != UNSEEN {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(start as u32);
        class_of[start] = id;
        stack.push(start as u32);
        let mut size = 0u64;
        while let Some(x) = stack.pop() {
            size += 1;
            for act in actions {
                let y = act[x as usize];
                if class_of[y as usize] == UNSEEN {
                    class_of[y as usize] = id;
                    stack.push(y);
                }
            }
        }
        sizes.push(size);
    }
    (class_of, reps, sizes)
}
