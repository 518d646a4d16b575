// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Backward search over the closure rules.
//!
//! Rules, tried in this order at every node:
//!
//! * `SEED`: an axiom class (abelian, symmetric, `GL_n(F_q)` with `q ≠ p`,
//!   order `p^3`, order 32 at `p = 2`, dihedral/`Q_8` as metacyclic,
//!   elementary abelian ⋊ `C_p`), or a good registry entry with the same fingerprint.
//! * `PRODUCT`: `G × H` with both factors good.
//! * `WREATH`: `G ≀ C_p` with `G` good.
//! * `CENTRALIZER`: `C_G(g)` for a p-power element `g` of a good `G`.
//! * `SYLOW`: `G` is good if its Sylow p-subgroup is.
//! * `FACTOR`: `H_1` is good if `H_1 × H_2` and `H_2` are.

use std::fmt::{self, Write as _};

use super::seeds::SPLIT_TEST_MAX_ORDER;
use super::{is_elementary_abelian_by_cyclic, Registry, RegistryEntry, Status};
use crate::arith::{is_power_of, p_part};
use crate::constructors::AtomKind;
use crate::dsl::{Evaluator, GroupExpr};
use crate::report::DerivationNode;
use crate::{Error, Fingerprint, PermGroup, Result};

pub const DEFAULT_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeedAxiom {
    Abelian,
    Symmetric,
    GeneralLinear,
    OrderP3,
    Order32,
    Metacyclic,
    ElementaryAbelianByCyclic,
    /// A seed entry of the registry (for instance an ingested group).
    Registered,
}

impl SeedAxiom {
    pub fn label(self) -> &'static str {
        match self {
            SeedAxiom::Abelian => "abelian",
            SeedAxiom::Symmetric => "symmetric",
            SeedAxiom::GeneralLinear => "general-linear",
            SeedAxiom::OrderP3 => "order-p3",
            SeedAxiom::Order32 => "order-32",
            SeedAxiom::Metacyclic => "metacyclic",
            SeedAxiom::ElementaryAbelianByCyclic => "elementary-abelian-by-cyclic",
            SeedAxiom::Registered => "registered",
        }
    }

    fn from_label(label: &str) -> Self {
        [
            SeedAxiom::Abelian,
            SeedAxiom::Symmetric,
            SeedAxiom::GeneralLinear,
            SeedAxiom::OrderP3,
            SeedAxiom::Order32,
            SeedAxiom::Metacyclic,
            SeedAxiom::ElementaryAbelianByCyclic,
        ]
        .into_iter()
        .find(|a| a.label() == label)
        .unwrap_or(SeedAxiom::Registered)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Seed(SeedAxiom),
    Product,
    Wreath,
    Centralizer,
    Sylow,
    Factor,
}

impl Rule {
    pub fn label(self) -> String {
        match self {
            Rule::Seed(a) => format!("seed:{}", a.label()),
            Rule::Product => "product".into(),
            Rule::Wreath => "wreath".into(),
            Rule::Centralizer => "centralizer".into(),
            Rule::Sylow => "sylow".into(),
            Rule::Factor => "factor".into(),
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Some(match label {
            "product" => Rule::Product,
            "wreath" => Rule::Wreath,
            "centralizer" => Rule::Centralizer,
            "sylow" => Rule::Sylow,
            "factor" => Rule::Factor,
            _ => Rule::Seed(SeedAxiom::from_label(label.strip_prefix("seed:")?)),
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A proof that a group is good. Leaves are seeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTree {
    pub expr: Option<GroupExpr>,
    /// Registry entry the node was taken from, if any.
    pub name: Option<String>,
    pub order: u128,
    pub rule: Rule,
    pub children: Vec<DerivationTree>,
}

impl DerivationTree {
    fn leaf(expr: &GroupExpr, order: u128, axiom: SeedAxiom) -> Self {
        DerivationTree {
            expr: Some(expr.clone()),
            name: None,
            order,
            rule: Rule::Seed(axiom),
            children: Vec::new(),
        }
    }

    pub fn label(&self) -> String {
        match (&self.expr, &self.name) {
            (Some(e), _) => e.to_string(),
            (None, Some(n)) => n.clone(),
            (None, None) => "?".into(),
        }
    }

    /// Rules along the leftmost spine, root first.
    pub fn spine(&self) -> Vec<Rule> {
        let mut out = vec![self.rule];
        let mut node = self;
        while let Some(c) = node.children.first() {
            out.push(c.rule);
            node = c;
        }
        out
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(Self::depth).max().unwrap_or(0)
    }

    pub fn render(&self) -> String {
        fn go(t: &DerivationTree, indent: usize, out: &mut String) {
            let _ = writeln!(
                out,
                "{:indent$}{} [{}] order {}",
                "",
                t.label(),
                t.rule,
                t.order
            );
            for c in &t.children {
                go(c, indent + 2, out);
            }
        }
        let mut out = String::new();
        go(self, 0, &mut out);
        out
    }

    /// Serializable form of the tree.
    pub fn to_node(&self) -> DerivationNode {
        DerivationNode {
            expr: self.expr.as_ref().map(ToString::to_string),
            name: self.name.clone(),
            order: self.order,
            rule: self.rule.label(),
            children: self.children.iter().map(Self::to_node).collect(),
        }
    }
}

/// Certification context: a registry snapshot, an evaluator and the prime.
pub struct Certifier<'a> {
    registry: &'a Registry,
    eval: &'a mut Evaluator,
    prime: u64,
    max_depth: usize,
}

/// [`Certifier::certify`] with the default depth.
pub fn certify(
    expr: &GroupExpr,
    prime: u64,
    registry: &Registry,
    eval: &mut Evaluator,
) -> Result<Option<DerivationTree>> {
    Certifier::new(registry, eval, prime).certify(expr)
}

/// Re-checks every rule application of `tree` against `registry`.
pub fn replay(
    tree: &DerivationTree,
    prime: u64,
    registry: &Registry,
    eval: &mut Evaluator,
) -> Result<()> {
    Certifier::new(registry, eval, prime).replay(tree)
}

fn replay_error(node: &DerivationTree, why: impl fmt::Display) -> Error {
    Error::Registry(format!(
        "replay of {} [{}] failed: {why}",
        node.label(),
        node.rule
    ))
}

impl<'a> Certifier<'a> {
    pub fn new(registry: &'a Registry, eval: &'a mut Evaluator, prime: u64) -> Self {
        Certifier {
            registry,
            eval,
            prime,
            max_depth: DEFAULT_DEPTH,
        }
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.max_depth = depth;
        self
    }

    /// First derivation found, or `None` if the rules do not reach `expr`
    /// within the depth bound. A derivation for a group whose fingerprint is
    /// registered bad is a consistency error.
    pub fn certify(&mut self, expr: &GroupExpr) -> Result<Option<DerivationTree>> {
        let tree = self.search(expr, self.max_depth)?;
        if let Some(t) = &tree {
            self.guard(t)?;
        }
        Ok(tree)
    }

    fn enumerable(&mut self, expr: &GroupExpr) -> Result<Option<Fingerprint>> {
        let order = self.eval.evaluate(expr)?.order();
        if order > self.eval.limits().max_order {
            return Ok(None);
        }
        self.eval.fingerprint(expr).map(Some)
    }

    fn guard(&mut self, tree: &DerivationTree) -> Result<()> {
        if let Some(expr) = &tree.expr {
            if let Some(fp) = self.enumerable(expr)? {
                if self.registry.status_of(self.prime, &fp) == Some(Status::Bad) {
                    return Err(Error::Consistency(format!(
                        "{expr} was derived good but its fingerprint is registered bad"
                    )));
                }
            }
        }
        tree.children.iter().try_for_each(|c| self.guard(c))
    }

    fn seed_axiom(&mut self, expr: &GroupExpr, group: &PermGroup) -> Result<Option<SeedAxiom>> {
        let p = self.prime;
        let order = group.order();
        let syntactic = match expr {
            GroupExpr::Atom { kind, .. } => Some(match kind {
                AtomKind::Cyclic | AtomKind::Abelian => SeedAxiom::Abelian,
                AtomKind::Symmetric => SeedAxiom::Symmetric,
                AtomKind::Dihedral | AtomKind::Quaternion8 => SeedAxiom::Metacyclic,
            }),
            GroupExpr::GL { q, .. } if *q != p => Some(SeedAxiom::GeneralLinear),
            _ => None,
        };
        if syntactic.is_some() {
            return Ok(syntactic);
        }
        if group.is_abelian() {
            return Ok(Some(SeedAxiom::Abelian));
        }
        if order == (p as u128).pow(3) {
            return Ok(Some(SeedAxiom::OrderP3));
        }
        if p == 2 && order == 32 {
            return Ok(Some(SeedAxiom::Order32));
        }
        if order <= SPLIT_TEST_MAX_ORDER
            && is_power_of(order, p)
            && is_elementary_abelian_by_cyclic(group, p, self.eval.limits())?
        {
            return Ok(Some(SeedAxiom::ElementaryAbelianByCyclic));
        }
        Ok(None)
    }

    fn check_axiom(
        &mut self,
        axiom: SeedAxiom,
        expr: &GroupExpr,
        group: &PermGroup,
    ) -> Result<bool> {
        let p = self.prime;
        let order = group.order();
        Ok(match axiom {
            SeedAxiom::Abelian => group.is_abelian(),
            SeedAxiom::Symmetric => matches!(
                expr,
                GroupExpr::Atom {
                    kind: AtomKind::Symmetric,
                    ..
                }
            ),
            SeedAxiom::GeneralLinear => matches!(expr, GroupExpr::GL { q, .. } if *q != p),
            SeedAxiom::Metacyclic => matches!(
                expr,
                GroupExpr::Atom {
                    kind: AtomKind::Dihedral | AtomKind::Quaternion8 | AtomKind::Cyclic,
                    ..
                }
            ),
            SeedAxiom::OrderP3 => order == (p as u128).pow(3),
            SeedAxiom::Order32 => p == 2 && order == 32,
            SeedAxiom::ElementaryAbelianByCyclic => {
                is_elementary_abelian_by_cyclic(group, p, self.eval.limits())?
            }
            SeedAxiom::Registered => match self.enumerable(expr)? {
                Some(fp) => self
                    .registry
                    .matching(p, &fp)
                    .any(|e| e.status == Status::Good && e.is_seed()),
                None => false,
            },
        })
    }

    /// First good registry entry with the fingerprint of `expr`.
    fn registered(&mut self, expr: &GroupExpr) -> Result<Option<RegistryEntry>> {
        let Some(fp) = self.enumerable(expr)? else {
            return Ok(None);
        };
        if !self.registry.knows(self.prime, &fp, expr, self.eval)? {
            return Ok(None);
        }
        Ok(self
            .registry
            .matching(self.prime, &fp)
            .find(|e| e.status == Status::Good)
            .cloned())
    }

    /// Rebuilds the derivation recorded in the registry for `entry`.
    pub fn expand(&self, entry: &RegistryEntry) -> Result<DerivationTree> {
        self.expand_bounded(entry, 64)
    }

    fn expand_bounded(&self, entry: &RegistryEntry, budget: usize) -> Result<DerivationTree> {
        if budget == 0 {
            return Err(Error::Registry(format!(
                "derivation of {:?} does not terminate",
                entry.name
            )));
        }
        if entry.status != Status::Good {
            return Err(Error::Registry(format!("{:?} is not good", entry.name)));
        }
        let rule = Rule::from_label(&entry.rule).ok_or_else(|| {
            Error::Registry(format!(
                "{:?} has unknown rule {:?}",
                entry.name, entry.rule
            ))
        })?;
        let children = entry
            .parents
            .iter()
            .map(|name| {
                let parent = self.registry.get(entry.prime, name).ok_or_else(|| {
                    Error::Registry(format!("missing parent {name:?} of {:?}", entry.name))
                })?;
                self.expand_bounded(parent, budget - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivationTree {
            expr: entry.parsed_expr()?,
            name: Some(entry.name.clone()),
            order: entry.order,
            rule,
            children,
        })
    }

    fn search(&mut self, expr: &GroupExpr, depth: usize) -> Result<Option<DerivationTree>> {
        if depth == 0 {
            return Ok(None);
        }
        let p = self.prime;
        let group = self.eval.evaluate(expr)?;
        let order = group.order();

        if let Some(axiom) = self.seed_axiom(expr, &group)? {
            return Ok(Some(DerivationTree::leaf(expr, order, axiom)));
        }
        if let Some(entry) = self.registered(expr)? {
            if entry.parsed_expr()?.as_ref() == Some(expr) {
                return Ok(Some(self.expand(&entry)?));
            }
            return Ok(Some(DerivationTree {
                expr: Some(expr.clone()),
                name: Some(entry.name.clone()),
                order,
                rule: Rule::Seed(SeedAxiom::Registered),
                children: Vec::new(),
            }));
        }

        let node = |rule, children| DerivationTree {
            expr: Some(expr.clone()),
            name: None,
            order,
            rule,
            children,
        };
        match expr {
            GroupExpr::Prod(a, b) => {
                if let Some(ta) = self.search(a, depth - 1)? {
                    if let Some(tb) = self.search(b, depth - 1)? {
                        return Ok(Some(node(Rule::Product, vec![ta, tb])));
                    }
                }
            }
            GroupExpr::Wr(base, n) if *n == p => {
                if let Some(t) = self.search(base, depth - 1)? {
                    return Ok(Some(node(Rule::Wreath, vec![t])));
                }
            }
            GroupExpr::Cent {
                inner, order: k, ..
            } if is_power_of(*k as u128, p) => {
                if let Some(t) = self.search(inner, depth - 1)? {
                    return Ok(Some(node(Rule::Centralizer, vec![t])));
                }
            }
            _ => {}
        }

        if !is_power_of(order, p) && order <= self.eval.limits().max_order {
            let sylow = GroupExpr::syl(p, expr.clone());
            if let Some(t) = self.search(&sylow, depth - 1)? {
                return Ok(Some(node(Rule::Sylow, vec![t])));
            }
        }

        if let Some(fp) = self.enumerable(expr)? {
            let products: Vec<RegistryEntry> = self
                .registry
                .good_entries(p)
                .filter(|e| matches!(e.parsed_expr(), Ok(Some(GroupExpr::Prod(..)))))
                .cloned()
                .collect();
            for entry in products {
                let Some(GroupExpr::Prod(x, y)) = entry.parsed_expr()? else {
                    continue;
                };
                for (mine, other) in [(&x, &y), (&y, &x)] {
                    if self.enumerable(mine)?.as_ref() != Some(&fp) {
                        continue;
                    }
                    if let Some(t) = self.search(other, depth - 1)? {
                        let whole = self.expand(&entry)?;
                        return Ok(Some(node(Rule::Factor, vec![whole, t])));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Checks each node's rule against its children and the registry.
    pub fn replay(&mut self, tree: &DerivationTree) -> Result<()> {
        let p = self.prime;
        let Some(expr) = &tree.expr else {
            // registry seed without a construction
            let entry = tree
                .name
                .as_ref()
                .and_then(|n| self.registry.get(p, n))
                .ok_or_else(|| replay_error(tree, "no expression and no registry entry"))?;
            if entry.status != Status::Good || !entry.is_seed() || !tree.children.is_empty() {
                return Err(replay_error(tree, "registry entry is not a good seed"));
            }
            return Ok(());
        };
        let group = self.eval.evaluate(expr)?;
        if group.order() != tree.order {
            return Err(replay_error(tree, format!("order is {}", group.order())));
        }
        if let Some(fp) = self.enumerable(expr)? {
            if self.registry.status_of(p, &fp) == Some(Status::Bad) {
                return Err(replay_error(tree, "fingerprint is registered bad"));
            }
        }
        let child_expr = |i: usize| tree.children.get(i).and_then(|c| c.expr.as_ref());
        let ok = match tree.rule {
            Rule::Seed(SeedAxiom::Registered) if tree.name.is_some() => {
                let entry = tree
                    .name
                    .as_ref()
                    .and_then(|n| self.registry.get(p, n))
                    .cloned()
                    .ok_or_else(|| replay_error(tree, "registry entry not found"))?;
                let same = self.enumerable(expr)?.as_ref() == Some(&entry.fingerprint);
                if same && entry.status == Status::Good && !entry.is_seed() {
                    let stored = self.expand(&entry)?;
                    self.replay(&stored)?;
                }
                tree.children.is_empty() && same && entry.status == Status::Good
            }
            Rule::Seed(axiom) => {
                tree.children.is_empty() && self.check_axiom(axiom, expr, &group)?
            }
            Rule::Product => {
                tree.children.len() == 2
                    && matches!(expr, GroupExpr::Prod(a, b)
                        if Some(a.as_ref()) == child_expr(0) && Some(b.as_ref()) == child_expr(1))
                    && tree.order == tree.children[0].order * tree.children[1].order
            }
            Rule::Wreath => {
                tree.children.len() == 1
                    && matches!(expr, GroupExpr::Wr(b, n) if *n == p && Some(b.as_ref()) == child_expr(0))
                    && Some(tree.order)
                        == tree.children[0]
                            .order
                            .checked_pow(p as u32)
                            .and_then(|o| o.checked_mul(p as u128))
            }
            Rule::Centralizer => {
                let shape_ok = tree.children.len() == 1
                    && matches!(expr, GroupExpr::Cent { inner, order: k, .. }
                        if is_power_of(*k as u128, p) && Some(inner.as_ref()) == child_expr(0));
                shape_ok && {
                    let g = self.eval.centralized_element(expr)?.expect("cent node");
                    let ambient = self.eval.evaluate(child_expr(0).unwrap())?;
                    ambient.contains(&g)?
                        && group.generators().iter().all(|x| x.commutes_with(&g))
                        && ambient.centralizer(self.eval.limits(), &[g])?.order() == tree.order
                }
            }
            Rule::Sylow => {
                tree.children.len() == 1
                    && child_expr(0) == Some(&GroupExpr::syl(p, expr.clone()))
                    && tree.children[0].order == p_part(tree.order, p)
            }
            Rule::Factor => {
                tree.children.len() == 2 && {
                    let fp = self.eval.fingerprint(expr)?;
                    match (child_expr(0), child_expr(1)) {
                        (Some(GroupExpr::Prod(x, y)), Some(h2)) => {
                            let (x, y) = (x.as_ref().clone(), y.as_ref().clone());
                            (&y == h2 && self.eval.fingerprint(&x)? == fp)
                                || (&x == h2 && self.eval.fingerprint(&y)? == fp)
                        }
                        _ => false,
                    }
                }
            }
        };
        if !ok {
            return Err(replay_error(tree, "premises do not match the rule"));
        }
        tree.children.iter().try_for_each(|c| self.replay(c))
    }
}

impl Registry {
    /// Adds every node of `tree` that is not yet registered, children first,
    /// and returns the name standing for the root.
    pub fn record(
        &mut self,
        tree: &DerivationTree,
        prime: u64,
        eval: &mut Evaluator,
    ) -> Result<String> {
        let parents = tree
            .children
            .iter()
            .map(|c| self.record(c, prime, eval))
            .collect::<Result<Vec<_>>>()?;
        let Some(expr) = &tree.expr else {
            return tree
                .name
                .clone()
                .ok_or_else(|| Error::Registry("node without expression or name".into()));
        };
        let fingerprint = eval.fingerprint(expr)?;
        if self.knows(prime, &fingerprint, expr, eval)? {
            if let Some(e) = self
                .matching(prime, &fingerprint)
                .find(|e| e.status == Status::Good)
            {
                return Ok(e.name.clone());
            }
        }
        let name = expr.to_string();
        self.insert(RegistryEntry {
            name: name.clone(),
            expr: Some(name.clone()),
            prime,
            order: tree.order,
            fingerprint,
            status: Status::Good,
            rule: tree.rule.label(),
            parents,
        })?;
        Ok(name)
    }
}
