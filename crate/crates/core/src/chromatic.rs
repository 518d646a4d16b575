// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Commuting p-power tuples up to simultaneous conjugation.
//!
//! A continuous homomorphism `Z_p^h → G` into a finite group is the same as an
//! `h`-tuple of pairwise commuting elements of p-power order (the images of
//! the topological generators); continuity is automatic. The conjugacy
//! classes of such tuples index the components of the p-adic loop space
//! `L^h BG ≃ ⊔ BC(im α)`, and their number is the HKR rank of height-`h`
//! Morava E-theory of `BG` for good `G`.

use std::cmp::Ordering;
use std::fmt;

use crate::arith::{is_power_of, require_prime};
use crate::classes::orbits;
use crate::report::{ComponentRank, TranschromaticReport as Report};
use crate::table::ElementTable;
use crate::{Error, Limits, PermGroup, Permutation, Result};

pub use crate::report::TranschromaticReport;

/// An `h`-tuple of pairwise commuting p-power-order elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PTuple {
    prime: u64,
    entries: Vec<Permutation>,
}

impl PTuple {
    /// Validates the tuple against `group`.
    pub fn new(group: &PermGroup, prime: u64, entries: Vec<Permutation>) -> Result<Self> {
        require_prime(prime)?;
        for (i, e) in entries.iter().enumerate() {
            if !group.contains(e)? {
                return Err(Error::NotInGroup(e.to_string()));
            }
            if !is_power_of(e.order() as u128, prime) {
                return Err(Error::InvalidParams {
                    kind: "p-tuple",
                    reason: format!(
                        "{e} has order {} which is not a power of {prime}",
                        e.order()
                    ),
                });
            }
            if let Some(f) = entries[..i].iter().find(|f| !f.commutes_with(e)) {
                return Err(Error::InvalidParams {
                    kind: "p-tuple",
                    reason: format!("{f} and {e} do not commute"),
                });
            }
        }
        Ok(PTuple { prime, entries })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn height(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Permutation] {
        &self.entries
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for PTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(", "))
    }
}

impl fmt::Debug for PTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One component `BC(im α)` of the loop space.
#[derive(Debug, Clone)]
pub struct LoopComponent {
    /// Lexicographically least tuple of the class.
    pub tuple: PTuple,
    pub centralizer: PermGroup,
    /// Number of raw tuples in the class.
    pub orbit_size: u64,
}

#[derive(Debug, Clone)]
pub struct LoopDecomposition {
    pub prime: u64,
    pub height: usize,
    pub group: PermGroup,
    pub components: Vec<LoopComponent>,
    /// Total number of commuting p-power `h`-tuples.
    pub raw_count: u64,
}

/// Raw tuples (flattened, stride `h`, lexicographic) with their class data.
struct TupleOrbits {
    table: std::sync::Arc<ElementTable>,
    height: usize,
    flat: Vec<u32>,
    reps: Vec<u32>,
    sizes: Vec<u64>,
}

impl TupleOrbits {
    fn tuple(&self, k: usize) -> &[u32] {
        &self.flat[k * self.height..(k + 1) * self.height]
    }

    fn raw_count(&self) -> u64 {
        // the empty tuple is the only 0-tuple
        self.flat.len().checked_div(self.height).unwrap_or(1) as u64
    }

    fn rep_elements(&self, class: usize) -> Vec<Permutation> {
        self.tuple(self.reps[class] as usize)
            .iter()
            .map(|&i| self.table.elements[i as usize].clone())
            .collect()
    }
}

/// Elements of p-power order (identity included), in lexicographic order.
pub fn p_power_elements(group: &PermGroup, p: u64, limits: &Limits) -> Result<Vec<Permutation>> {
    require_prime(p)?;
    let table = group.table(limits)?;
    Ok(table
        .elements
        .iter()
        .filter(|g| is_power_of(g.order() as u128, p))
        .cloned()
        .collect())
}

fn p_power_indices(table: &ElementTable, p: u64) -> Vec<u32> {
    (0..table.len() as u32)
        .filter(|&i| is_power_of(table.elements[i as usize].order() as u128, p))
        .collect()
}

/// Depth-first enumeration: entry `k+1` ranges over the p-elements that
/// commute with entries `1..=k`. Output is in lexicographic order.
fn enumerate_tuples(table: &ElementTable, candidates: &[u32], h: usize) -> Vec<u32> {
    fn go(
        table: &ElementTable,
        cands: &[u32],
        h: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<u32>,
    ) {
        if prefix.len() == h {
            out.extend_from_slice(prefix);
            return;
        }
        let last_level = prefix.len() + 1 == h;
        for &c in cands {
            prefix.push(c);
            if last_level {
                out.extend_from_slice(prefix);
            } else {
                let g = &table.elements[c as usize];
                let next: Vec<u32> = cands
                    .iter()
                    .copied()
                    .filter(|&x| table.elements[x as usize].commutes_with(g))
                    .collect();
                go(table, &next, h, prefix, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if h > 0 {
        go(table, candidates, h, &mut Vec::with_capacity(h), &mut out);
    }
    out
}

fn find_tuple(flat: &[u32], h: usize, key: &[u32]) -> Option<usize> {
    let n = flat.len() / h;
    let (mut lo, mut hi) = (0, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match flat[mid * h..(mid + 1) * h].cmp(key) {
            Ordering::Less => lo = mid + 1,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return Some(mid),
        }
    }
    None
}

fn tuple_orbits(group: &PermGroup, p: u64, h: usize, limits: &Limits) -> Result<TupleOrbits> {
    require_prime(p)?;
    limits.check_height(h)?;
    let table = group.table(limits)?;
    if h == 0 {
        return Ok(TupleOrbits {
            table,
            height: 0,
            flat: Vec::new(),
            reps: vec![0],
            sizes: vec![1],
        });
    }
    let pidx = p_power_indices(&table, p);
    let flat = enumerate_tuples(&table, &pidx, h);
    let n = flat.len() / h;
    let actions: Vec<Vec<u32>> = group
        .generators()
        .iter()
        .filter(|s| !s.is_identity())
        .map(|s| {
            let conj = table.conjugation_action(s);
            let mut image = vec![0u32; h];
            (0..n)
                .map(|k| {
                    for (slot, &e) in image.iter_mut().zip(&flat[k * h..(k + 1) * h]) {
                        *slot = conj[e as usize];
                    }
                    find_tuple(&flat, h, &image).expect("conjugation preserves commuting p-tuples")
                        as u32
                })
                .collect()
        })
        .collect();
    let (_, reps, sizes) = orbits(n, &actions);
    Ok(TupleOrbits {
        table,
        height: h,
        flat,
        reps,
        sizes,
    })
}

/// All commuting p-power `h`-tuples, in lexicographic order.
pub fn commuting_tuples(
    group: &PermGroup,
    p: u64,
    h: usize,
    limits: &Limits,
) -> Result<Vec<Vec<Permutation>>> {
    require_prime(p)?;
    limits.check_height(h)?;
    let table = group.table(limits)?;
    if h == 0 {
        return Ok(vec![Vec::new()]);
    }
    let flat = enumerate_tuples(&table, &p_power_indices(&table, p), h);
    Ok(flat
        .chunks(h)
        .map(|t| {
            t.iter()
                .map(|&i| table.elements[i as usize].clone())
                .collect()
        })
        .collect())
}

/// One component per conjugacy class of commuting p-power `h`-tuples, with
/// the centralizer of the class representative.
pub fn commuting_tuple_classes(
    group: &PermGroup,
    p: u64,
    h: usize,
    limits: &Limits,
) -> Result<LoopDecomposition> {
    let orbits = tuple_orbits(group, p, h, limits)?;
    let components = (0..orbits.reps.len())
        .map(|c| {
            let entries = orbits.rep_elements(c);
            let centralizer = group.centralizer(limits, &entries)?;
            Ok(LoopComponent {
                tuple: PTuple { prime: p, entries },
                centralizer,
                orbit_size: orbits.sizes[c],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LoopDecomposition {
        prime: p,
        height: h,
        group: group.clone(),
        components,
        raw_count: orbits.raw_count(),
    })
}

/// Number of conjugacy classes of commuting p-power `h`-tuples.
pub fn hkr_rank(group: &PermGroup, p: u64, h: usize, limits: &Limits) -> Result<u64> {
    Ok(tuple_orbits(group, p, h, limits)?.reps.len() as u64)
}

/// `C_G(im α)`.
pub fn tuple_centralizer(group: &PermGroup, tuple: &PTuple, limits: &Limits) -> Result<PermGroup> {
    group.centralizer(limits, tuple.entries())
}

/// Checks `N_n(G) = Σ_{[α]} N_t(C_G(im α))`, the sum running over classes of
/// commuting p-power `(n-t)`-tuples.
pub fn verify_transchromatic_identity(
    label: &str,
    group: &PermGroup,
    p: u64,
    n: usize,
    t: usize,
    limits: &Limits,
) -> Result<Report> {
    if t > n {
        return Err(Error::InvalidParams {
            kind: "verify",
            reason: format!("t = {t} exceeds n = {n}"),
        });
    }
    limits.check_height(n)?;
    let lhs = hkr_rank(group, p, n, limits)?;
    let split = commuting_tuple_classes(group, p, n - t, limits)?;
    let per_component = split
        .components
        .iter()
        .map(|c| {
            Ok(ComponentRank {
                tuple_rep: c.tuple.to_strings(),
                centralizer_order: c.centralizer.order(),
                rank_t: hkr_rank(&c.centralizer, p, t, limits)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = per_component.iter().map(|c| c.rank_t).sum();
    Ok(Report {
        schema_version: crate::report::SCHEMA_VERSION,
        group: label.to_string(),
        p,
        n,
        t,
        lhs,
        per_component,
        rhs,
        pass: lhs == rhs,
    })
}
