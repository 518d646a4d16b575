// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Ledger of groups with their goodness status at a fixed prime.
//!
//! A group is *good* at `p` when its Morava E-theory is even and free at
//! every height. Entries are keyed by `(prime, fingerprint)`: two groups with
//! equal fingerprints are treated as the same group. Fingerprints are not a
//! complete isomorphism invariant, so this can merge non-isomorphic groups;
//! [`Registry::set_paranoid`] additionally compares the permutation degree and
//! orbit lengths of both representatives before merging.
//!
//! Persistence is one JSON object per line with the fields `name`, `expr`,
//! `prime`, `order`, `fingerprint`, `status`, `rule`, `parents` in that order.

mod certify;
mod explore;
mod seeds;

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dsl::{self, Evaluator, GroupExpr};
use crate::{Error, Fingerprint, Result};

pub use certify::{certify, replay, Certifier, DerivationTree, Rule, SeedAxiom, DEFAULT_DEPTH};
pub use explore::explore;
pub use seeds::{is_elementary_abelian_by_cyclic, seed_defaults};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Good,
    Bad,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Good => "good",
            Status::Bad => "bad",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegistryEntry {
    pub name: String,
    /// Canonical construction expression, when the group has one.
    pub expr: Option<String>,
    pub prime: u64,
    pub order: u128,
    pub fingerprint: Fingerprint,
    pub status: Status,
    /// `seed:<axiom>`, a closure rule name, or a `citation:<label>` for bad entries.
    pub rule: String,
    pub parents: Vec<String>,
}

impl RegistryEntry {
    pub fn parsed_expr(&self) -> Result<Option<GroupExpr>> {
        self.expr.as_deref().map(dsl::parse).transpose()
    }

    pub fn is_seed(&self) -> bool {
        self.rule.starts_with("seed:")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Registry {
    entries: Vec<RegistryEntry>,
    by_name: HashMap<(u64, String), usize>,
    by_fingerprint: HashMap<(u64, Fingerprint), Vec<usize>>,
    paranoid: bool,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = RegistryEntry>) -> Result<Self> {
        let mut reg = Self::new();
        for e in entries {
            reg.insert(e)?;
        }
        Ok(reg)
    }

    pub fn set_paranoid(&mut self, on: bool) {
        self.paranoid = on;
    }

    pub fn paranoid(&self) -> bool {
        self.paranoid
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, prime: u64, name: &str) -> Option<&RegistryEntry> {
        self.by_name
            .get(&(prime, name.to_string()))
            .map(|&i| &self.entries[i])
    }

    /// Entries at `prime` whose fingerprint equals `fp`.
    pub fn matching(&self, prime: u64, fp: &Fingerprint) -> impl Iterator<Item = &RegistryEntry> {
        self.by_fingerprint
            .get(&(prime, fp.clone()))
            .into_iter()
            .flatten()
            .map(|&i| &self.entries[i])
    }

    pub fn status_of(&self, prime: u64, fp: &Fingerprint) -> Option<Status> {
        let mut status = None;
        for e in self.matching(prime, fp) {
            match e.status {
                Status::Bad => return Some(Status::Bad),
                Status::Good => status = Some(Status::Good),
                Status::Unknown => {
                    status.get_or_insert(Status::Unknown);
                }
            }
        }
        status
    }

    pub fn good_entries(&self, prime: u64) -> impl Iterator<Item = &RegistryEntry> {
        self.entries
            .iter()
            .filter(move |e| e.prime == prime && e.status == Status::Good)
    }

    /// Adds an entry. Fails on a duplicate name or when an entry with the same
    /// fingerprint carries the opposite definite status.
    pub fn insert(&mut self, entry: RegistryEntry) -> Result<()> {
        let key = (entry.prime, entry.name.clone());
        if self.by_name.contains_key(&key) {
            return Err(Error::Registry(format!(
                "duplicate entry {:?} at p = {}",
                entry.name, entry.prime
            )));
        }
        for other in self.matching(entry.prime, &entry.fingerprint) {
            let clash = matches!(
                (other.status, entry.status),
                (Status::Good, Status::Bad) | (Status::Bad, Status::Good)
            );
            if clash {
                return Err(Error::Consistency(format!(
                    "{:?} ({}) and {:?} ({}) share a fingerprint",
                    other.name, other.status, entry.name, entry.status
                )));
            }
        }
        let idx = self.entries.len();
        self.by_name.insert(key, idx);
        self.by_fingerprint
            .entry((entry.prime, entry.fingerprint.clone()))
            .or_default()
            .push(idx);
        self.entries.push(entry);
        Ok(())
    }

    /// True if a group with this fingerprint is already registered; see
    /// [`Registry::known_entry`].
    pub(crate) fn knows(
        &self,
        prime: u64,
        fp: &Fingerprint,
        expr: &GroupExpr,
        eval: &mut Evaluator,
    ) -> Result<bool> {
        Ok(self.known_entry(prime, fp, expr, eval)?.is_some())
    }

    /// The registered entry that `expr` is deduplicated against: the first
    /// entry with this fingerprint or, in paranoid mode, the first whose
    /// representative also has the same degree and orbit lengths.
    pub(crate) fn known_entry(
        &self,
        prime: u64,
        fp: &Fingerprint,
        expr: &GroupExpr,
        eval: &mut Evaluator,
    ) -> Result<Option<&RegistryEntry>> {
        let mut matches = self.matching(prime, fp).peekable();
        if !self.paranoid {
            return Ok(matches.next());
        }
        let mine = eval.evaluate(expr)?;
        for e in matches {
            let Some(other) = e.parsed_expr()? else {
                return Ok(Some(e));
            };
            let other = eval.evaluate(&other)?;
            if other.degree() == mine.degree() && other.orbit_lengths() == mine.orbit_lengths() {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    pub fn write_to(&self, mut out: impl Write) -> Result<()> {
        for e in &self.entries {
            let line = serde_json::to_string(e).expect("entries serialize");
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("json is utf-8")
    }

    pub fn read_from(input: impl BufRead) -> Result<Self> {
        let mut reg = Self::new();
        for (n, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let entry: RegistryEntry = serde_json::from_str(&line).map_err(|e| Error::Format {
                line: n + 1,
                message: e.to_string(),
            })?;
            reg.insert(entry).map_err(|e| match e {
                Error::Consistency(m) => Error::Consistency(format!("line {}: {m}", n + 1)),
                Error::Registry(m) => Error::Format {
                    line: n + 1,
                    message: m,
                },
                e => e,
            })?;
        }
        Ok(reg)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let file = std::fs::File::create(path)?;
        let mut out = std::io::BufWriter::new(file);
        self.write_to(&mut out)?;
        out.flush()?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read_from(std::io::BufReader::new(file))
    }
}

impl FromStr for Registry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::read_from(s.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, quaternion8};
    use crate::Limits;

    fn entry(name: &str, fp: Fingerprint, status: Status) -> RegistryEntry {
        RegistryEntry {
            name: name.into(),
            expr: Some(name.into()),
            prime: 2,
            order: fp.order as u128,
            fingerprint: fp,
            status,
            rule: "seed:abelian".into(),
            parents: vec![],
        }
    }

    fn fp_c2() -> Fingerprint {
        cyclic(2).unwrap().fingerprint(&Limits::default()).unwrap()
    }

    #[test]
    fn round_trip() {
        let q = quaternion8().fingerprint(&Limits::default()).unwrap();
        let reg = Registry::from_entries([
            entry("c(2)", fp_c2(), Status::Good),
            entry("q8", q, Status::Unknown),
        ])
        .unwrap();
        let text = reg.to_text();
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with(
            r#"{"name":"c(2)","expr":"c(2)","prime":2,"order":2,"fingerprint":{"order":2,"#
        ));
        let back: Registry = text.parse().unwrap();
        assert_eq!(back, reg);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn empty_file() {
        assert!("".parse::<Registry>().unwrap().is_empty());
        assert!("\n  \n".parse::<Registry>().unwrap().is_empty());
    }

    #[test]
    fn contradictory_statuses() {
        let text = Registry::from_entries([entry("c(2)", fp_c2(), Status::Good)])
            .unwrap()
            .to_text()
            + &Registry::from_entries([entry("other", fp_c2(), Status::Bad)])
                .unwrap()
                .to_text();
        let err = text.parse::<Registry>().unwrap_err();
        assert!(
            matches!(err, Error::Consistency(ref m) if m.starts_with("line 2")),
            "{err}"
        );
    }

    #[test]
    fn malformed_lines() {
        let good = Registry::from_entries([entry("c(2)", fp_c2(), Status::Good)])
            .unwrap()
            .to_text();
        let extra = good.replacen("\"parents\"", "\"colour\":1,\"parents\"", 1);
        assert!(matches!(
            format!("{good}{extra}").parse::<Registry>(),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            format!("\n{good}{{not json").parse::<Registry>(),
            Err(Error::Format { line: 3, .. })
        ));
        assert!(matches!(
            format!("{good}{good}").parse::<Registry>(),
            Err(Error::Format { line: 2, .. })
        ));
    }
}
