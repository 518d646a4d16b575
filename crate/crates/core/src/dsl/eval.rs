// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use super::GroupExpr;
use crate::constructors::{atomic_group, direct_product, general_linear, wreath_cyclic};
use crate::fingerprint::Fingerprint;
use crate::{genfile, Error, Limits, PermGroup, Permutation, Result};

/// A conjugacy class of a given element order.
#[derive(Debug, Clone)]
pub struct ClassRow {
    pub rep: Permutation,
    pub class_size: u64,
    pub centralizer_order: u128,
}

/// Class representatives of elements of order `order`, in lexicographic order.
pub fn class_reps_of_order(
    group: &PermGroup,
    order: u64,
    limits: &Limits,
) -> Result<Vec<ClassRow>> {
    let classes = group.conjugacy_classes(limits)?;
    Ok(classes
        .reps
        .iter()
        .zip(&classes.sizes)
        .filter(|(rep, _)| rep.order() == order)
        .map(|(rep, &size)| ClassRow {
            rep: rep.clone(),
            class_size: size,
            centralizer_order: group.order() / size as u128,
        })
        .collect())
}

/// Evaluates expressions, memoizing every subexpression.
#[derive(Debug, Default)]
pub struct Evaluator {
    limits: Limits,
    cache: HashMap<GroupExpr, PermGroup>,
    fingerprints: HashMap<GroupExpr, Fingerprint>,
}

impl Evaluator {
    pub fn new(limits: Limits) -> Self {
        Evaluator {
            limits,
            cache: HashMap::new(),
            fingerprints: HashMap::new(),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn evaluate(&mut self, expr: &GroupExpr) -> Result<PermGroup> {
        if let Some(g) = self.cache.get(expr) {
            return Ok(g.clone());
        }
        let g = self.build(expr)?;
        self.cache.insert(expr.clone(), g.clone());
        Ok(g)
    }

    pub fn fingerprint(&mut self, expr: &GroupExpr) -> Result<Fingerprint> {
        if let Some(f) = self.fingerprints.get(expr) {
            return Ok(f.clone());
        }
        let f = self.evaluate(expr)?.fingerprint(&self.limits)?;
        self.fingerprints.insert(expr.clone(), f.clone());
        Ok(f)
    }

    /// The representative picked by a `cent(...)` node.
    pub fn centralized_element(&mut self, expr: &GroupExpr) -> Result<Option<Permutation>> {
        let GroupExpr::Cent {
            inner,
            order,
            czorder,
        } = expr
        else {
            return Ok(None);
        };
        let group = self.evaluate(inner)?;
        self.select_rep(&group, *order, *czorder).map(Some)
    }

    fn select_rep(
        &self,
        group: &PermGroup,
        order: u64,
        czorder: Option<u64>,
    ) -> Result<Permutation> {
        class_reps_of_order(group, order, &self.limits)?
            .into_iter()
            .find(|row| czorder.is_none_or(|cz| row.centralizer_order == cz as u128))
            .map(|row| row.rep)
            .ok_or(Error::NoSuchClass {
                order,
                czorder: czorder.map(u128::from),
            })
    }

    fn build(&mut self, expr: &GroupExpr) -> Result<PermGroup> {
        match expr {
            GroupExpr::Atom { kind, params } => atomic_group(*kind, params),
            GroupExpr::Prod(a, b) => {
                let a = self.evaluate(a)?;
                let b = self.evaluate(b)?;
                Ok(direct_product(&a, &b))
            }
            GroupExpr::Wr(base, n) => wreath_cyclic(&self.evaluate(base)?, *n),
            GroupExpr::GL { n, q } => general_linear(*n, *q),
            GroupExpr::Syl { p, inner } => self.evaluate(inner)?.sylow_subgroup(&self.limits, *p),
            GroupExpr::Cent {
                inner,
                order,
                czorder,
            } => {
                let group = self.evaluate(inner)?;
                let rep = self.select_rep(&group, *order, *czorder)?;
                group.centralizer(&self.limits, &[rep])
            }
            GroupExpr::Ingest(path) => genfile::read_generators(path),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn order(text: &str) -> u128 {
        Evaluator::default()
            .evaluate(&parse(text).unwrap())
            .unwrap()
            .order()
    }

    #[test]
    fn small_examples() {
        assert_eq!(order("syl(2, s(4))"), 8);
        assert_eq!(order("prod(s(3),c(2))"), 12);
        assert_eq!(order("ab(2,3)"), 6);
        assert_eq!(order("cent(s(4),order=2,czorder=8)"), 8);
        assert_eq!(order("cent(s(4),order=2,czorder=4)"), 4);
        assert_eq!(order("cent(d(4),order=4)"), 4);
    }

    #[test]
    fn missing_class() {
        let err = Evaluator::default()
            .evaluate(&parse("cent(s(3),order=4)").unwrap())
            .unwrap_err();
        assert!(matches!(err, Error::NoSuchClass { order: 4, .. }));
    }

    #[test]
    fn deterministic() {
        let e = parse("cent(wr(s(3),c(2)),order=2)").unwrap();
        let a = Evaluator::default().evaluate(&e).unwrap();
        let b = Evaluator::default().evaluate(&e).unwrap();
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn ingest_reads_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s4.txt");
        std::fs::write(&path, "degree 4\n(0 1)\n(0 1 2 3)\n").unwrap();
        let e = GroupExpr::Ingest(path.to_string_lossy().into_owned());
        assert_eq!(Evaluator::default().evaluate(&e).unwrap().order(), 24);
        let missing = GroupExpr::Ingest(dir.path().join("nope").to_string_lossy().into_owned());
        assert!(matches!(
            Evaluator::default().evaluate(&missing),
            Err(Error::Io(_))
        ));
    }
}
