// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Group-construction expressions.
//!
//! ```text
//! expr := atom | "prod(" expr "," expr ")" | "wr(" expr "," cyc ")"
//!       | "syl(" int "," expr ")" | "cent(" expr ",order=" int ["," "czorder=" int] ")"
//!       | "ingest(" quoted-path ")"
//! atom := cyc | "s(" int ")" | "d(" int ")" | "q8" | "ab(" int {"," int} ")" | "gl(" int "," int ")"
//! cyc  := "c(" int ")"
//! ```
//!
//! Whitespace between tokens is ignored; [`GroupExpr`]'s `Display` prints the
//! canonical form (lowercase, no whitespace).

mod ast;
mod eval;
mod parser;

pub use ast::GroupExpr;
pub use eval::{class_reps_of_order, ClassRow, Evaluator};
pub use parser::parse;
