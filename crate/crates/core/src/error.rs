// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("group order overflows 128 bits")]
    OrderOverflow,

    #[error("desk-scale exceeded: group order {order} is above the enumeration limit {limit}")]
    DeskScaleExceeded { order: u128, limit: u128 },

    #[error("height {height} exceeds the configured limit {limit}")]
    HeightExceeded { height: usize, limit: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("element is not in the group: {0}")]
    NotInGroup(String),

    #[error("invalid parameters for {kind}: {reason}")]
    InvalidParams { kind: &'static str, reason: String },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("no class representative of order {order}{}", czorder.map(|c| format!(" with centralizer order {c}")).unwrap_or_default())]
    NoSuchClass { order: u64, czorder: Option<u128> },

    #[error("consistency violation: {0}")]
    Consistency(String),

    #[error("registry: {0}")]
    Registry(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by a size bound rather than bad input.
    pub fn is_threshold(&self) -> bool {
        matches!(
            self,
            Error::DeskScaleExceeded { .. } | Error::HeightExceeded { .. } | Error::OrderOverflow
        )
    }
}
