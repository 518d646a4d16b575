// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Named groups as permutation groups.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::arith::{is_prime, primitive_root};
use crate::{Error, PermGroup, Permutation, Result};

/// Kinds accepted by [`atomic_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtomKind {
    Cyclic,
    Symmetric,
    Dihedral,
    Quaternion8,
    Abelian,
}

fn invalid(kind: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParams {
        kind,
        reason: reason.into(),
    }
}

fn cycle_on(degree: usize, points: impl Iterator<Item = u32>) -> Permutation {
    let cycle: Vec<u32> = points.collect();
    Permutation::from_cycles(degree, &[cycle]).expect("distinct in-range points")
}

fn nontrivial_or_identity(degree: usize, gens: Vec<Permutation>) -> Vec<Permutation> {
    let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
    if gens.is_empty() {
        vec![Permutation::identity(degree)]
    } else {
        gens
    }
}

pub fn cyclic(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("cyclic", "n must be at least 1"));
    }
    let n = n as usize;
    PermGroup::from_generators(n, vec![cycle_on(n, 0..n as u32)])
}

pub fn symmetric(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("symmetric", "n must be at least 1"));
    }
    let n = n as usize;
    let gens = if n < 3 {
        vec![cycle_on(n, 0..n as u32)]
    } else {
        vec![cycle_on(n, 0..2), cycle_on(n, 0..n as u32)]
    };
    PermGroup::from_generators(n, gens)
}

/// Symmetries of the regular `n`-gon, of order `2n`.
pub fn dihedral(n: u64) -> Result<PermGroup> {
    if n < 3 {
        return Err(invalid("dihedral", "n must be at least 3"));
    }
    let d = n as usize;
    let reflection = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
    PermGroup::from_generators(d, vec![cycle_on(d, 0..n as u32), reflection])
}

/// Regular representation of the quaternion group on its 8 elements.
pub fn quaternion8() -> PermGroup {
    // point = 4 * sign + unit, units 1, i, j, k
    const UNIT_MUL: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = |x: u32, y: u32| {
        let (s, u) = UNIT_MUL[(x % 4) as usize][(y % 4) as usize];
        ((x / 4 + y / 4 + s) % 2) * 4 + u
    };
    let right = |g: u32| Permutation::from_images((0..8).map(|x| mul(x, g)).collect()).unwrap();
    PermGroup::from_generators(8, vec![right(1), right(2)]).unwrap()
}

/// `C_{n_1} × … × C_{n_k}` acting regularly on each factor (degree `Σ n_i`).
pub fn abelian(invariants: &[u64]) -> Result<PermGroup> {
    if invariants.contains(&0) {
        return Err(invalid("abelian", "every factor must be at least 1"));
    }
    if invariants.is_empty() {
        return Ok(PermGroup::trivial(1));
    }
    let degree: usize = invariants.iter().map(|&n| n as usize).sum();
    let mut gens = Vec::new();
    let mut offset = 0u32;
    for &n in invariants {
        gens.push(cycle_on(degree, offset..offset + n as u32));
        offset += n as u32;
    }
    PermGroup::from_generators(degree, nontrivial_or_identity(degree, gens))
}

pub fn atomic_group(kind: AtomKind, params: &[u64]) -> Result<PermGroup> {
    let one = |name: &'static str| match params {
        [n] => Ok(*n),
        _ => Err(invalid(
            name,
            format!("expected 1 parameter, got {}", params.len()),
        )),
    };
    match kind {
        AtomKind::Cyclic => cyclic(one("cyclic")?),
        AtomKind::Symmetric => symmetric(one("symmetric")?),
        AtomKind::Dihedral => dihedral(one("dihedral")?),
        AtomKind::Quaternion8 if params.is_empty() => Ok(quaternion8()),
        AtomKind::Quaternion8 => Err(invalid("quaternion8", "takes no parameters")),
        AtomKind::Abelian => abelian(params),
    }
}

/// `G × H` on `deg G + deg H` points.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let degree = g.degree() + h.degree();
    let gens = g
        .generators()
        .iter()
        .map(|x| x.shifted(0, degree))
        .chain(h.generators().iter().map(|y| y.shifted(g.degree(), degree)))
        .collect();
    PermGroup::from_generators(degree, nontrivial_or_identity(degree, gens))
        .expect("product of enumerable groups")
}

/// `G ≀ C_n`: `n` copies of each generator of `G` on consecutive blocks plus
/// the cyclic block permutation.
pub fn wreath_cyclic(g: &PermGroup, n: u64) -> Result<PermGroup> {
    if n < 2 {
        return Err(invalid("wreath", "n must be at least 2"));
    }
    let d = g.degree();
    let degree = d * n as usize;
    let mut gens = Vec::new();
    for x in g.generators() {
        for block in 0..n as usize {
            gens.push(x.shifted(block * d, degree));
        }
    }
    let top = Permutation::from_images((0..degree).map(|i| ((i + d) % degree) as u32).collect())?;
    gens.push(top);
    PermGroup::from_generators(degree, nontrivial_or_identity(degree, gens))
}

/// Residue modulo a prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: u64,
}

impl FieldElement {
    pub fn new(value: u64, modulus: u64) -> Self {
        FieldElement {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(FieldElement::new(
                crate::arith::pow_mod(self.value, self.modulus - 2, self.modulus),
                self.modulus,
            ))
        }
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        FieldElement::new(self.value + rhs.value, self.modulus)
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        FieldElement::new(self.value * rhs.value, self.modulus)
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        FieldElement::new(self.modulus - self.value, self.modulus)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Square matrix over `F_q`, acting on row vectors from the right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    n: usize,
    q: u64,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn identity(n: usize, q: u64) -> Self {
        let mut entries = vec![FieldElement::new(0, q); n * n];
        for i in 0..n {
            entries[i * n + i] = FieldElement::new(1, q);
        }
        Matrix { n, q, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.n + j] = FieldElement::new(v, self.q);
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> FieldElement {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = FieldElement::new(1, self.q);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return FieldElement::new(0, self.q);
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let pv = a[col * n + col];
            det = det * pv;
            let inv = pv.inverse().unwrap();
            for r in col + 1..n {
                let factor = a[r * n + col] * inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = a[r * n + j] + -(factor * a[col * n + j]);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    fn act(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|j| {
                (0..self.n)
                    .map(|i| v[i] * self.get(i, j).value())
                    .sum::<u64>()
                    % self.q
            })
            .collect()
    }
}

fn vector_index(v: &[u64], q: u64) -> usize {
    v.iter().rev().fold(0u64, |acc, &x| acc * q + x) as usize
}

/// Permutation group induced by `mats` on the given invariant vector set.
fn matrix_action(q: u64, mats: &[Matrix], points: &[Vec<u64>]) -> Result<PermGroup> {
    let degree = points.len();
    let mut slot = std::collections::HashMap::new();
    for (k, v) in points.iter().enumerate() {
        slot.insert(vector_index(v, q), k as u32);
    }
    let gens = mats
        .iter()
        .map(|m| {
            Permutation::from_images(
                points
                    .iter()
                    .map(|v| slot[&vector_index(&m.act(v), q)])
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(degree, nontrivial_or_identity(degree, gens))
}

fn nonzero_vectors(n: usize, q: u64) -> Vec<Vec<u64>> {
    let total = q.pow(n as u32);
    (1..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let x = code % q;
                    code /= q;
                    x
                })
                .collect()
        })
        .collect()
}

fn check_field(kind: &'static str, n: u64, q: u64) -> Result<()> {
    if n < 1 {
        return Err(invalid(kind, "n must be at least 1"));
    }
    if !is_prime(q) {
        return Err(invalid(kind, format!("q = {q} must be prime")));
    }
    match q.checked_pow(n as u32) {
        Some(v) if v <= 1 << 24 => Ok(()),
        _ => Err(invalid(kind, format!("{q}^{n} points is too many"))),
    }
}

/// `GL_n(F_q)` on the `q^n - 1` nonzero row vectors, generated by
/// `diag(ω, 1, …, 1)` and the elementary transvections `I + E_{i,i+1}`,
/// `I + E_{i+1,i}`.
pub fn general_linear(n: u64, q: u64) -> Result<PermGroup> {
    check_field("general_linear", n, q)?;
    let n = n as usize;
    let mut mats = Vec::new();
    let mut diag = Matrix::identity(n, q);
    diag.set(0, 0, primitive_root(q));
    mats.push(diag);
    for i in 0..n.saturating_sub(1) {
        let mut up = Matrix::identity(n, q);
        up.set(i, i + 1, 1);
        let mut down = Matrix::identity(n, q);
        down.set(i + 1, i, 1);
        mats.push(up);
        mats.push(down);
    }
    matrix_action(q, &mats, &nonzero_vectors(n, q))
}

/// Upper unitriangular matrices in `GL_n(F_q)`, acting on the orbits of the
/// first `n - 1` standard basis vectors (faithful, degree `q + … + q^{n-1}`).
pub fn unipotent_radical(n: u64, q: u64) -> Result<PermGroup> {
    check_field("unipotent_radical", n, q)?;
    let n = n as usize;
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let mats: Vec<Matrix> = (0..n - 1)
        .map(|i| {
            let mut m = Matrix::identity(n, q);
            m.set(i, i + 1, 1);
            m
        })
        .collect();
    let points: Vec<Vec<u64>> = nonzero_vectors(n, q)
        .into_iter()
        .filter(|v| {
            let lead = v.iter().position(|&x| x != 0).unwrap();
            lead < n - 1 && v[lead] == 1
        })
        .collect();
    matrix_action(q, &mats, &points)
}

/// `∏_{i<n} (q^n - q^i)`.
pub fn general_linear_order(n: u32, q: u64) -> u128 {
    let qn = (q as u128).pow(n);
    (0..n).map(|i| qn - (q as u128).pow(i)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Limits;

    #[test]
    fn atoms() {
        let c4 = cyclic(4).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.generators().len(), 1);
        assert_eq!(c4.generators()[0].to_string(), "(0 1 2 3)");
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert_eq!(abelian(&[]).unwrap().order(), 1);
        assert_eq!(abelian(&[2, 4, 1]).unwrap().order(), 8);
        assert_eq!(abelian(&[2, 4]).unwrap().degree(), 6);
        assert!(cyclic(0).is_err());
        assert!(dihedral(2).is_err());
        assert!(abelian(&[3, 0]).is_err());
        assert!(atomic_group(AtomKind::Quaternion8, &[1]).is_err());
        assert!(atomic_group(AtomKind::Cyclic, &[1, 2]).is_err());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q8 = quaternion8();
        let els = q8.closure_elements(&Limits::default()).unwrap();
        assert_eq!(els.len(), 8);
        assert_eq!(els.iter().filter(|g| g.order() == 2).count(), 1);
        assert_eq!(els.iter().filter(|g| g.order() == 4).count(), 6);
    }

    #[test]
    fn products() {
        let v = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap());
        assert_eq!(v.order(), 4);
        assert_eq!(v.fingerprint(&Limits::default()).unwrap().exponent, 2);
        assert_eq!(
            direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap()).order(),
            12
        );
    }

    #[test]
    fn wreath_of_c2_is_dihedral() {
        let lim = Limits::default();
        let w = wreath_cyclic(&cyclic(2).unwrap(), 2).unwrap();
        assert_eq!(w.order(), 8);
        let fw = w.fingerprint(&lim).unwrap();
        assert_eq!(fw.element_order_histogram, vec![(1, 1), (2, 5), (4, 2)]);
        assert_eq!(fw, dihedral(4).unwrap().fingerprint(&lim).unwrap());
        let t = wreath_cyclic(&PermGroup::trivial(1), 3).unwrap();
        assert_eq!(
            t.fingerprint(&lim).unwrap(),
            cyclic(3).unwrap().fingerprint(&lim).unwrap()
        );
        assert!(wreath_cyclic(&cyclic(2).unwrap(), 1).is_err());
    }

    #[test]
    fn general_linear_orders() {
        assert_eq!(general_linear(1, 3).unwrap().order(), 2);
        let gl23 = general_linear(2, 3).unwrap();
        assert_eq!(gl23.degree(), 8);
        assert_eq!(gl23.order(), 48);
        assert_eq!(general_linear(1, 2).unwrap().order(), 1);
        for (n, q) in [(2u32, 2u64), (2, 5), (3, 2), (3, 3), (4, 2)] {
            assert_eq!(
                general_linear(n as u64, q).unwrap().order(),
                general_linear_order(n, q),
                "GL_{n}({q})"
            );
        }
        assert!(general_linear(2, 4).is_err());
        assert!(general_linear(0, 3).is_err());
    }

    #[test]
    fn gl22_is_s3() {
        let lim = Limits::default();
        assert_eq!(
            general_linear(2, 2).unwrap().fingerprint(&lim).unwrap(),
            symmetric(3).unwrap().fingerprint(&lim).unwrap()
        );
    }

    #[test]
    fn unipotent_orders() {
        assert_eq!(unipotent_radical(3, 3).unwrap().order(), 27);
        let u = unipotent_radical(4, 3).unwrap();
        assert_eq!(u.degree(), 39);
        assert_eq!(u.order(), 729);
        assert_eq!(unipotent_radical(4, 2).unwrap().order(), 64);
    }

    #[test]
    fn closure_agrees_with_formulas() {
        let lim = Limits::default();
        let gl23 = general_linear(2, 3).unwrap();
        assert_eq!(gl23.closure_elements(&lim).unwrap().len(), 48);
        let w = wreath_cyclic(&symmetric(3).unwrap(), 2).unwrap();
        assert_eq!(w.order(), 72);
        assert_eq!(w.closure_elements(&lim).unwrap().len(), 72);
    }

    #[test]
    fn determinants() {
        let mut m = Matrix::identity(2, 3);
        m.set(0, 1, 2);
        m.set(1, 0, 1);
        // 1*1 - 2*1 = -1 = 2 mod 3
        assert_eq!(m.determinant().value(), 2);
        m.set(1, 1, 2);
        // 1*2 - 2*1 = 0
        assert!(!m.is_invertible());
    }
}
