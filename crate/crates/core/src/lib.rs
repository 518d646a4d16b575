// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Permutation-group engine for commuting prime-power tuples.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`], [`chain`], [`group`], [`classes`], [`fingerprint`]: permutation
//!   arithmetic, deterministic Schreier–Sims, and the desk-scale enumeration
//!   algorithms (conjugacy classes, centralizers, Sylow subgroups).
//! * [`constructors`]: the named groups (cyclic, symmetric, dihedral, Q8,
//!   abelian, direct and wreath products, `GL_n(F_q)`).
//! * [`chromatic`]: conjugacy classes of commuting p-power tuples, the loop
//!   decomposition into centralizers, HKR ranks and the transchromatic rank
//!   identity.
//! * [`dsl`]: the group-construction expression language.
//! * [`registry`]: the good-group ledger and its closure-rule inference.
//!
//! All multiplication is left-to-right: `a.compose(&b)` maps `i` to `b(a(i))`.
//!
//! ```
//! use chromgroup::chromatic::hkr_rank;
//! use chromgroup::dsl::{parse, Evaluator};
//! use chromgroup::Limits;
//!
//! let g = Evaluator::default().evaluate(&parse("wr(gl(2,3),c(2))")?)?;
//! assert_eq!(g.order(), 4608);
//! let s3 = Evaluator::default().evaluate(&parse("s(3)")?)?;
//! assert_eq!(hkr_rank(&s3, 2, 2, &Limits::default())?, 4);
//! # Ok::<(), chromgroup::Error>(())
//! ```

pub mod arith;
pub mod chain;
pub mod chromatic;
pub mod classes;
pub mod constructors;
pub mod dsl;
pub mod error;
pub mod fingerprint;
pub mod genfile;
pub mod group;
pub mod perm;
pub mod registry;
pub mod report;
mod table;

pub use chromatic::{LoopDecomposition, PTuple, TranschromaticReport};
pub use classes::ConjClassTable;
pub use error::{Error, Result};
pub use fingerprint::Fingerprint;
pub use group::PermGroup;
pub use perm::Permutation;

/// Environment variable overriding [`Limits::max_order`].
pub const MAX_ORDER_ENV: &str = "CHROMGROUP_MAX_ORDER";

/// Size bounds for the brute-force paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order for which elements are enumerated.
    pub max_order: u128,
    /// Largest tuple length accepted by the commuting-tuple enumeration.
    pub max_height: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ORDER: u128 = 1 << 21;
    pub const DEFAULT_MAX_HEIGHT: usize = 4;

    /// Defaults, with `max_order` taken from [`MAX_ORDER_ENV`] when it is set
    /// to a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(v) = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u128>().ok())
            .filter(|&v| v > 0)
        {
            limits.max_order = v;
        }
        limits
    }

    pub fn with_max_order(mut self, max_order: u128) -> Self {
        self.max_order = max_order;
        self
    }

    pub(crate) fn check_order(&self, order: u128) -> Result<()> {
        if order > self.max_order {
            Err(Error::DeskScaleExceeded {
                order,
                limit: self.max_order,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_height(&self, h: usize) -> Result<()> {
        if h > self.max_height {
            Err(Error::HeightExceeded {
                height: h,
                limit: self.max_height,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: Self::DEFAULT_MAX_ORDER,
            max_height: Self::DEFAULT_MAX_HEIGHT,
        }
    }
}
