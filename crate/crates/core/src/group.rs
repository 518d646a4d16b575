// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Finitely generated permutation groups.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{is_power_of, p_part, require_prime};
use crate::chain::StabilizerChain;
use crate::table::ElementTable;
use crate::{Error, Limits, Permutation, Result};

/// A permutation group given by generators, with its stabilizer chain.
///
/// The chain is built eagerly; the sorted element list is materialized on the
/// first enumeration call and shared between clones.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<StabilizerChain>,
    table: Arc<OnceLock<Arc<ElementTable>>>,
}

impl PermGroup {
    /// Builds the group generated by `gens`, all of which must have degree `degree`.
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let chain = StabilizerChain::new(degree, &gens)?;
        Ok(PermGroup {
            degree,
            generators: gens,
            chain: Arc::new(chain),
            table: Arc::default(),
        })
    }

    /// The trivial group on `degree` points (generated by the identity).
    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree.max(1), vec![Permutation::identity(degree.max(1))])
            .expect("identity generates")
    }

    /// Subgroup spanned by `elements`, which must form a group. Generators
    /// are picked greedily in lexicographic order, so the result only depends
    /// on the element set.
    pub(crate) fn from_elements(degree: usize, elements: &[Permutation]) -> Self {
        let mut sorted: Vec<&Permutation> = elements.iter().collect();
        sorted.sort_unstable();
        let mut group = Self::trivial(degree);
        let mut gens: Vec<Permutation> = Vec::new();
        for g in sorted {
            if group.chain.contains(g) {
                continue;
            }
            gens.push(g.clone());
            group = Self::from_generators(degree, gens.clone())
                .expect("subgroup of an enumerable group has a small order");
            if group.order() as usize == elements.len() {
                break;
            }
        }
        debug_assert_eq!(group.order() as usize, elements.len());
        let owned: Vec<Permutation> = elements.to_vec();
        let _ = group.table.set(Arc::new(ElementTable::new(owned)));
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    /// Product of the transversal sizes along the chain.
    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        self.check_degree(g)?;
        Ok(self.chain.contains(g))
    }

    fn check_degree(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(())
    }

    pub(crate) fn table(&self, limits: &Limits) -> Result<Arc<ElementTable>> {
        if let Some(t) = self.table.get() {
            return Ok(t.clone());
        }
        limits.check_order(self.order())?;
        Ok(self
            .table
            .get_or_init(|| Arc::new(ElementTable::new(self.chain.elements())))
            .clone())
    }

    /// All elements in lexicographic order of their image arrays.
    pub fn elements(&self, limits: &Limits) -> Result<Vec<Permutation>> {
        Ok(self.table(limits)?.elements.clone())
    }

    /// Exhaustive closure of the generators under right multiplication,
    /// independent of the stabilizer chain. Sorted.
    pub fn closure_elements(&self, limits: &Limits) -> Result<Vec<Permutation>> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(self.degree);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for s in &self.generators {
                let y = x.mul(s);
                if !seen.contains(&y) {
                    if seen.len() as u128 >= limits.max_order {
                        return Err(Error::DeskScaleExceeded {
                            order: seen.len() as u128 + 1,
                            limit: limits.max_order,
                        });
                    }
                    seen.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// `{x ∈ G : xs = sx for all s ∈ S}` by filtering the element list.
    pub fn centralizer(&self, limits: &Limits, set: &[Permutation]) -> Result<PermGroup> {
        for s in set {
            if !self.contains(s)? {
                return Err(Error::NotInGroup(s.to_string()));
            }
        }
        let table = self.table(limits)?;
        let elements: Vec<Permutation> = table
            .elements
            .iter()
            .filter(|x| set.iter().all(|s| x.commutes_with(s)))
            .cloned()
            .collect();
        Ok(PermGroup::from_elements(self.degree, &elements))
    }

    pub fn center(&self, limits: &Limits) -> Result<PermGroup> {
        self.centralizer(limits, &self.generators.clone())
    }

    /// Smallest subgroup containing `gens` and normalized by `self`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> Result<PermGroup> {
        let mut current: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if current.is_empty() {
            return Ok(Self::trivial(self.degree));
        }
        let mut group = Self::from_generators(self.degree, current.clone())?;
        'grow: loop {
            for h in group.generators.clone() {
                for s in &self.generators {
                    let c = h.conjugate_by(s);
                    if !group.chain.contains(&c) {
                        current.push(c);
                        group = Self::from_generators(self.degree, current.clone())?;
                        continue 'grow;
                    }
                }
            }
            return Ok(group);
        }
    }

    /// Commutator subgroup: normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// A Sylow p-subgroup, grown from the trivial group by adjoining the
    /// lexicographically least p-element of the normalizer not yet contained.
    pub fn sylow_subgroup(&self, limits: &Limits, p: u64) -> Result<PermGroup> {
        require_prime(p)?;
        let table = self.table(limits)?;
        let target = p_part(self.order(), p);
        let mut sylow = Self::trivial(self.degree);
        let mut gens: Vec<Permutation> = Vec::new();
        while sylow.order() < target {
            let pgens = sylow.generators.clone();
            let next = table
                .elements
                .iter()
                .find(|g| {
                    is_power_of(g.order() as u128, p)
                        && !sylow.chain.contains(g)
                        && pgens
                            .iter()
                            .all(|x| sylow.chain.contains(&x.conjugate_by(g)))
                })
                .expect("a proper p-subgroup has a p-element in its normalizer outside it");
            gens.push(next.clone());
            sylow = Self::from_generators(self.degree, gens.clone())?;
        }
        Ok(sylow)
    }

    /// The group with every generator conjugated by `sigma` (a relabeling of points).
    pub fn conjugated_by(&self, sigma: &Permutation) -> Result<PermGroup> {
        self.check_degree(sigma)?;
        Self::from_generators(
            self.degree,
            self.generators
                .iter()
                .map(|g| g.conjugate_by(sigma))
                .collect(),
        )
    }

    /// Lengths of the orbits on points, sorted.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start as u32];
            let mut len = 0;
            while let Some(x) = stack.pop() {
                len += 1;
                for g in &self.generators {
                    let y = g.apply(x);
                    if !std::mem::replace(&mut seen[y as usize], true) {
                        stack.push(y);
                    }
                }
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}
