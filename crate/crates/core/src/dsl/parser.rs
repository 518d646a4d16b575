// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

use super::GroupExpr;
use crate::arith::is_prime;
use crate::constructors::AtomKind;
use crate::{Error, Result};

const MAX_DEPTH: usize = 200;

/// Parses an expression. Errors carry the byte offset of the offending token.
pub fn parse(text: &str) -> Result<GroupExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error_here("unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn error_at(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    fn error_here(&self, message: &str) -> Error {
        let found = match self.src.get(self.pos) {
            None => "end of input".to_string(),
            Some(&b) => format!("{:?}", b as char),
        };
        self.error_at(self.pos, format!("{message}, found {found}"))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error_here(&format!("expected {:?}", c as char)))
        }
    }

    fn peek_is(&mut self, c: u8) -> bool {
        self.skip_ws();
        self.src.get(self.pos) == Some(&c)
    }

    /// Lowercased identifier and its start offset.
    fn ident(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            return Err(self.error_here("expected a constructor name"));
        }
        while self
            .src
            .get(self.pos)
            .is_some_and(u8::is_ascii_alphanumeric)
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .to_ascii_lowercase();
        Ok((name, start))
    }

    fn int(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error_here("expected an integer parameter"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        digits
            .parse::<u64>()
            .map(|v| (v, start))
            .map_err(|_| self.error_at(start, format!("integer {digits} out of range")))
    }

    fn check(&self, ok: bool, offset: usize, message: impl Into<String>) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(self.error_at(offset, message))
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error_here("expression nested too deeply"));
        }
        let result = self.expr_inner();
        self.depth -= 1;
        result
    }

    fn expr_inner(&mut self) -> Result<GroupExpr> {
        let (name, start) = self.ident()?;
        if name == "q8" {
            return Ok(GroupExpr::Atom {
                kind: AtomKind::Quaternion8,
                params: Vec::new(),
            });
        }
        self.expect(b'(')?;
        let expr = match name.as_str() {
            "c" | "s" | "d" => {
                let (n, at) = self.int()?;
                let (kind, min) = match name.as_str() {
                    "c" => (AtomKind::Cyclic, 1),
                    "s" => (AtomKind::Symmetric, 1),
                    _ => (AtomKind::Dihedral, 3),
                };
                self.check(n >= min, at, format!("{name}() needs n >= {min}"))?;
                GroupExpr::Atom {
                    kind,
                    params: vec![n],
                }
            }
            "ab" => {
                let mut params = Vec::new();
                loop {
                    let (n, at) = self.int()?;
                    self.check(n >= 1, at, "ab() factors must be >= 1")?;
                    params.push(n);
                    if !self.peek_is(b',') {
                        break;
                    }
                    self.pos += 1;
                }
                GroupExpr::Atom {
                    kind: AtomKind::Abelian,
                    params,
                }
            }
            "gl" => {
                let (n, at) = self.int()?;
                self.check(n >= 1, at, "gl() needs n >= 1")?;
                self.expect(b',')?;
                let (q, at) = self.int()?;
                self.check(is_prime(q), at, format!("gl() field size {q} is not prime"))?;
                GroupExpr::GL { n, q }
            }
            "prod" => {
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                GroupExpr::prod(a, b)
            }
            "wr" => {
                let base = self.expr()?;
                self.expect(b',')?;
                let (top, at) = self.ident()?;
                self.check(top == "c", at, "wreath top must be c(n)")?;
                self.expect(b'(')?;
                let (n, at) = self.int()?;
                self.check(n >= 2, at, "wreath top needs n >= 2")?;
                self.expect(b')')?;
                GroupExpr::wr(base, n)
            }
            "syl" => {
                let (p, at) = self.int()?;
                self.check(is_prime(p), at, format!("syl() prime {p} is not prime"))?;
                self.expect(b',')?;
                GroupExpr::syl(p, self.expr()?)
            }
            "cent" => {
                let inner = self.expr()?;
                self.expect(b',')?;
                self.keyword("order")?;
                self.expect(b'=')?;
                let (order, at) = self.int()?;
                self.check(order >= 1, at, "order must be >= 1")?;
                let czorder = if self.peek_is(b',') {
                    self.pos += 1;
                    self.keyword("czorder")?;
                    self.expect(b'=')?;
                    let (cz, at) = self.int()?;
                    self.check(cz >= 1, at, "czorder must be >= 1")?;
                    Some(cz)
                } else {
                    None
                };
                GroupExpr::cent(inner, order, czorder)
            }
            "ingest" => GroupExpr::Ingest(self.quoted()?),
            _ => return Err(self.error_at(start, format!("unknown constructor {name:?}"))),
        };
        self.expect(b')').map_err(|e| match e {
            Error::Parse { offset, message } if self.src.get(offset) == Some(&b',') => {
                Error::Parse {
                    offset,
                    message: format!("too many parameters for {name}(): {message}"),
                }
            }
            e => e,
        })?;
        Ok(expr)
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let (name, at) = self.ident()?;
        self.check(
            name == word,
            at,
            format!("expected `{word}`, found `{name}`"),
        )
    }

    fn quoted(&mut self) -> Result<String> {
        self.skip_ws();
        if self.src.get(self.pos) != Some(&b'"') {
            return Err(self.error_here("expected a quoted path"));
        }
        let start = self.pos;
        self.pos += 1;
        let mut out = Vec::new();
        loop {
            match self.src.get(self.pos) {
                None => return Err(self.error_at(start, "unterminated string")),
                Some(b'"') => {
                    self.pos += 1;
                    break;
                }
                Some(b'\\') => {
                    match self.src.get(self.pos + 1) {
                        Some(&c @ (b'"' | b'\\')) => out.push(c),
                        _ => return Err(self.error_at(self.pos, "invalid escape")),
                    }
                    self.pos += 2;
                }
                Some(&c) => {
                    out.push(c);
                    self.pos += 1;
                }
            }
        }
        String::from_utf8(out).map_err(|_| self.error_at(start, "path is not UTF-8"))
    }
}
