// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Axioms: classes of groups known to be good, and the known bad group.

use log::info;

use super::{RegistryEntry, Status};
use crate::arith::{is_power_of, is_prime};
use crate::constructors::unipotent_radical;
use crate::dsl::{parse, Evaluator};
use crate::{Limits, PermGroup, Permutation, Result};

/// Largest order for which the unipotent radical of `GL_4(F_p)` is enumerated
/// when seeding.
const BAD_SEED_MAX_ORDER: u128 = 20_000;

/// Largest order for which the elementary-abelian-by-cyclic test is run.
pub(crate) const SPLIT_TEST_MAX_ORDER: u128 = 4096;

pub(crate) const UNIPOTENT_NAME: &str = "unipotent-radical-gl4";
pub(crate) const UNIPOTENT_CITATION: &str = "citation:kriz-unipotent-radical";

/// Representatives of the seed classes at `p`, plus the bad unipotent radical
/// of `GL_4(F_p)` for odd `p` when it is small enough to fingerprint.
pub fn seed_defaults(p: u64, limits: &Limits) -> Result<Vec<RegistryEntry>> {
    crate::arith::require_prime(p)?;
    let q = (3..)
        .find(|&q| is_prime(q) && q != p)
        .expect("primes are infinite");
    let seeds: Vec<(String, &str)> = vec![
        (format!("c({p})"), "seed:abelian"),
        (format!("ab({p},{p})"), "seed:abelian"),
        ("s(3)".into(), "seed:symmetric"),
        ("s(4)".into(), "seed:symmetric"),
        (format!("gl(2,{q})"), "seed:general-linear"),
        ("d(4)".into(), "seed:metacyclic"),
        ("q8".into(), "seed:metacyclic"),
    ];
    let mut eval = Evaluator::new(*limits);
    let mut out: Vec<RegistryEntry> = Vec::new();
    for (text, rule) in seeds {
        let expr = parse(&text)?;
        let group = eval.evaluate(&expr)?;
        let fingerprint = eval.fingerprint(&expr)?;
        if out.iter().any(|e| e.fingerprint == fingerprint) {
            continue;
        }
        out.push(RegistryEntry {
            name: text.clone(),
            expr: Some(text),
            prime: p,
            order: group.order(),
            fingerprint,
            status: Status::Good,
            rule: rule.into(),
            parents: Vec::new(),
        });
    }
    if p > 2 {
        let order = (p as u128).pow(6);
        if order <= BAD_SEED_MAX_ORDER.min(limits.max_order) {
            let u = unipotent_radical(4, p)?;
            out.push(RegistryEntry {
                name: UNIPOTENT_NAME.into(),
                expr: None,
                prime: p,
                order: u.order(),
                fingerprint: u.fingerprint(limits)?,
                status: Status::Bad,
                rule: UNIPOTENT_CITATION.into(),
                parents: Vec::new(),
            });
        } else {
            info!("skipping the GL_4(F_{p}) unipotent radical: order {order} is too large to fingerprint");
        }
    }
    Ok(out)
}

/// Greedily extends `base` by the candidates that are not yet contained.
fn grow(
    degree: usize,
    base: Vec<Permutation>,
    candidates: impl IntoIterator<Item = Permutation>,
) -> Result<(PermGroup, Vec<Permutation>)> {
    let mut gens = base;
    let mut group = if gens.is_empty() {
        PermGroup::trivial(degree)
    } else {
        PermGroup::from_generators(degree, gens.clone())?
    };
    let mut added = Vec::new();
    for c in candidates {
        if !group.chain().contains(&c) {
            gens.push(c.clone());
            added.push(c);
            group = PermGroup::from_generators(degree, gens.clone())?;
        }
    }
    Ok((group, added))
}

/// Whether the p-group `group` is a split extension `E ⋊ C_p` with `E`
/// elementary abelian: some maximal subgroup is elementary abelian and an
/// element of order `p` lies outside it.
///
/// Maximal subgroups are enumerated as preimages of hyperplanes of the
/// Frattini quotient.
pub fn is_elementary_abelian_by_cyclic(group: &PermGroup, p: u64, limits: &Limits) -> Result<bool> {
    let order = group.order();
    if order == 1 || !is_power_of(order, p) {
        return Ok(false);
    }
    let degree = group.degree();
    let elements = group.elements(limits)?;

    // Frattini subgroup of a p-group: generated by p-th powers and commutators.
    let powers = elements
        .iter()
        .map(|g| g.pow(p))
        .filter(|g| !g.is_identity());
    let gens = group.generators();
    let comms = gens.iter().enumerate().flat_map(|(i, a)| {
        gens[i + 1..]
            .iter()
            .map(move |b| a.inverse().mul(&b.inverse()).mul(a).mul(b))
    });
    let (frattini, _) = grow(
        degree,
        Vec::new(),
        powers.chain(comms).filter(|g| !g.is_identity()),
    )?;
    let frattini = group.normal_closure(frattini.generators())?;
    let phi_gens: Vec<Permutation> = frattini
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();

    let (_, basis) = grow(degree, phi_gens.clone(), elements.iter().cloned())?;
    let r = basis.len();
    let outside_order_p: Vec<&Permutation> = elements.iter().filter(|g| g.order() == p).collect();

    // functionals f with first nonzero coordinate 1, up to scalar
    let total = (p as u128).pow(r as u32);
    for code in 1..total {
        let mut f = Vec::with_capacity(r);
        let mut c = code;
        for _ in 0..r {
            f.push((c % p as u128) as u64);
            c /= p as u128;
        }
        let lead = f.iter().position(|&x| x != 0).unwrap();
        if f[lead] != 1 {
            continue;
        }
        let mut mgens = phi_gens.clone();
        for i in (0..r).filter(|&i| i != lead) {
            let g = basis[i].mul(&basis[lead].pow((p - f[i]) % p));
            if !g.is_identity() {
                mgens.push(g);
            }
        }
        let elementary = mgens.iter().all(|g| g.order() == p)
            && mgens
                .iter()
                .enumerate()
                .all(|(i, a)| mgens[i + 1..].iter().all(|b| a.commutes_with(b)));
        if !elementary {
            continue;
        }
        let maximal = if mgens.is_empty() {
            PermGroup::trivial(degree)
        } else {
            PermGroup::from_generators(degree, mgens)?
        };
        debug_assert_eq!(maximal.order() * p as u128, order);
        if outside_order_p.iter().any(|g| !maximal.chain().contains(g)) {
            return Ok(true);
        }
    }
    Ok(false)
}
