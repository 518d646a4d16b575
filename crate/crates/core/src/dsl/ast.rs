// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::constructors::AtomKind;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Atom {
        kind: AtomKind,
        params: Vec<u64>,
    },
    Prod(Box<GroupExpr>, Box<GroupExpr>),
    /// Wreath product with the cyclic group of the given order.
    Wr(Box<GroupExpr>, u64),
    GL {
        n: u64,
        q: u64,
    },
    Syl {
        p: u64,
        inner: Box<GroupExpr>,
    },
    /// Centralizer of the lexicographically least class representative of
    /// elements of order `order` (whose centralizer has order `czorder`, if given).
    Cent {
        inner: Box<GroupExpr>,
        order: u64,
        czorder: Option<u64>,
    },
    Ingest(String),
}

impl GroupExpr {
    pub fn cyclic(n: u64) -> Self {
        GroupExpr::Atom {
            kind: AtomKind::Cyclic,
            params: vec![n],
        }
    }

    pub fn symmetric(n: u64) -> Self {
        GroupExpr::Atom {
            kind: AtomKind::Symmetric,
            params: vec![n],
        }
    }

    pub fn prod(a: GroupExpr, b: GroupExpr) -> Self {
        GroupExpr::Prod(Box::new(a), Box::new(b))
    }

    pub fn wr(base: GroupExpr, n: u64) -> Self {
        GroupExpr::Wr(Box::new(base), n)
    }

    pub fn cent(inner: GroupExpr, order: u64, czorder: Option<u64>) -> Self {
        GroupExpr::Cent {
            inner: Box::new(inner),
            order,
            czorder,
        }
    }

    pub fn syl(p: u64, inner: GroupExpr) -> Self {
        GroupExpr::Syl {
            p,
            inner: Box::new(inner),
        }
    }
}

fn write_quoted(f: &mut fmt::Formatter<'_>, s: &str) -> fmt::Result {
    f.write_str("\"")?;
    for c in s.chars() {
        match c {
            '"' => f.write_str("\\\"")?,
            '\\' => f.write_str("\\\\")?,
            c => write!(f, "{c}")?,
        }
    }
    f.write_str("\"")
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom { kind, params } => {
                let name = match kind {
                    AtomKind::Cyclic => "c",
                    AtomKind::Symmetric => "s",
                    AtomKind::Dihedral => "d",
                    AtomKind::Quaternion8 => return f.write_str("q8"),
                    AtomKind::Abelian => "ab",
                };
                let list: Vec<String> = params.iter().map(u64::to_string).collect();
                write!(f, "{name}({})", list.join(","))
            }
            GroupExpr::Prod(a, b) => write!(f, "prod({a},{b})"),
            GroupExpr::Wr(base, n) => write!(f, "wr({base},c({n}))"),
            GroupExpr::GL { n, q } => write!(f, "gl({n},{q})"),
            GroupExpr::Syl { p, inner } => write!(f, "syl({p},{inner})"),
            GroupExpr::Cent {
                inner,
                order,
                czorder,
            } => {
                write!(f, "cent({inner},order={order}")?;
                if let Some(cz) = czorder {
                    write!(f, ",czorder={cz}")?;
                }
                f.write_str(")")
            }
            GroupExpr::Ingest(path) => {
                f.write_str("ingest(")?;
                write_quoted(f, path)?;
                f.write_str(")")
            }
        }
    }
}
