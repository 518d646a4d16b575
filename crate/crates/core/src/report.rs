// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Serializable report records shared with the command-line front end.

use serde::{Deserialize, Serialize};

use crate::registry::RegistryEntry;

/// Version of the JSON payloads emitted with `--json`.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRank {
    pub tuple_rep: Vec<String>,
    pub centralizer_order: u128,
    pub rank_t: u64,
}

/// Outcome of checking the transchromatic rank identity for one `(G, p, n, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranschromaticReport {
    pub schema_version: u32,
    pub group: String,
    pub p: u64,
    pub n: usize,
    pub t: usize,
    pub lhs: u64,
    pub per_component: Vec<ComponentRank>,
    pub rhs: u64,
    pub pass: bool,
}

/// `order`: the order of an evaluated expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderReport {
    pub schema_version: u32,
    pub expr: String,
    pub order: u128,
}

/// `rank`: the number of conjugacy classes of commuting p-power n-tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankReport {
    pub schema_version: u32,
    pub expr: String,
    pub p: u64,
    pub n: usize,
    pub rank: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopRow {
    pub tuple_rep: Vec<String>,
    pub centralizer_order: u128,
    pub orbit_size: u64,
}

/// `loops`: one row per conjugacy class of commuting p-power h-tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopsReport {
    pub schema_version: u32,
    pub expr: String,
    pub p: u64,
    pub h: usize,
    pub raw_count: u64,
    pub components: Vec<LoopRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentralizerRow {
    pub rep: String,
    pub class_size: u64,
    pub centralizer_order: u128,
    pub sylow_order: u128,
}

/// `centralizer`: every class of elements of the requested order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentralizerReport {
    pub schema_version: u32,
    pub expr: String,
    pub p: u64,
    pub elt_order: u64,
    pub rows: Vec<CentralizerRow>,
}

/// One node of a serialized derivation; leaves have no children.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationNode {
    pub expr: Option<String>,
    pub name: Option<String>,
    pub order: u128,
    pub rule: String,
    pub children: Vec<DerivationNode>,
}

/// `certify`: `status` is `good` with a derivation, or `unknown`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertifyReport {
    pub schema_version: u32,
    pub expr: String,
    pub p: u64,
    pub status: String,
    pub derivation: Option<DerivationNode>,
}

/// `explore`: the entries added by this run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExploreReport {
    pub schema_version: u32,
    pub p: u64,
    pub bound: u128,
    pub depth: usize,
    pub registry_size: usize,
    pub added: Vec<RegistryEntry>,
}

/// `registry list` and `registry show`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegistryReport {
    pub schema_version: u32,
    pub entries: Vec<RegistryEntry>,
    pub derivation: Option<DerivationNode>,
}
