// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;

use log::info;

use super::{Registry, RegistryEntry, Status};
use crate::arith::is_power_of;
use crate::dsl::{class_reps_of_order, Evaluator, GroupExpr};
use crate::{Error, Result};

struct Candidate {
    expr: GroupExpr,
    order: u128,
    rule: &'static str,
    parents: Vec<String>,
}

/// Breadth-first forward closure from the good seed entries at `prime`.
///
/// Step 1 starts from the seeds; each later step starts from the groups the
/// previous step produced or rediscovered. For every member `G` of the
/// frontier it forms `G ≀ C_p`, `G × H` for every `H` seen so far in this run
/// (seeds included), and `C_G(g)` for a representative `g` of every
/// nontrivial p-power class of `G` and of `G ≀ C_p`. Candidates of order at
/// most `order_bound` with a new fingerprint are registered as good.
/// Candidates too large to enumerate are skipped with a logged notice.
///
/// The walk depends only on the seeds and the bounds, so a second run with
/// the same arguments rediscovers everything and adds nothing.
pub fn explore(
    registry: &mut Registry,
    prime: u64,
    order_bound: u128,
    depth: usize,
    eval: &mut Evaluator,
) -> Result<Vec<RegistryEntry>> {
    crate::arith::require_prime(prime)?;
    let mut added = Vec::new();
    let mut frontier: Vec<RegistryEntry> = registry
        .good_entries(prime)
        .filter(|e| e.expr.is_some() && e.is_seed())
        .cloned()
        .collect();
    let mut seen: HashSet<String> = frontier.iter().map(|e| e.name.clone()).collect();
    let mut partners = frontier.clone();
    for step in 0..depth {
        let mut next = Vec::new();
        let mut new_count = 0;
        for entry in &frontier {
            let Some(expr) = entry.parsed_expr()? else {
                continue;
            };
            for outcome in step_entry(registry, entry, &expr, &partners, prime, order_bound, eval)?
            {
                let e = match outcome {
                    Outcome::New(e) => {
                        new_count += 1;
                        added.push(e.clone());
                        e
                    }
                    Outcome::Known(e) => e,
                    Outcome::Skipped => continue,
                };
                if e.expr.is_some() && seen.insert(e.name.clone()) {
                    next.push(e);
                }
            }
        }
        info!(
            "explore step {}: {new_count} new entries, {} in the next frontier",
            step + 1,
            next.len()
        );
        if next.is_empty() {
            break;
        }
        partners.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(added)
}

enum Outcome {
    New(RegistryEntry),
    /// Already registered under this good entry.
    Known(RegistryEntry),
    Skipped,
}

fn step_entry(
    registry: &mut Registry,
    entry: &RegistryEntry,
    expr: &GroupExpr,
    partners: &[RegistryEntry],
    prime: u64,
    bound: u128,
    eval: &mut Evaluator,
) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    let order = entry.order;
    let mut centralize = vec![(expr.clone(), entry.clone())];

    let wreath_order = order
        .checked_pow(prime as u32)
        .and_then(|o| o.checked_mul(prime as u128));
    if let Some(w) = wreath_order.filter(|&w| w <= bound) {
        let cand = Candidate {
            expr: GroupExpr::wr(expr.clone(), prime),
            order: w,
            rule: "wreath",
            parents: vec![entry.name.clone()],
        };
        let outcome = consider(registry, cand, prime, eval)?;
        if let Outcome::New(e) | Outcome::Known(e) = &outcome {
            if let Some(x) = e.parsed_expr()? {
                centralize.push((x, e.clone()));
            }
        }
        out.push(outcome);
    }
    for h in partners {
        let Some(hexpr) = h.parsed_expr()? else {
            continue;
        };
        if order.checked_mul(h.order).is_some_and(|o| o <= bound) {
            let cand = Candidate {
                expr: GroupExpr::prod(expr.clone(), hexpr),
                order: order * h.order,
                rule: "product",
                parents: vec![entry.name.clone(), h.name.clone()],
            };
            out.push(consider(registry, cand, prime, eval)?);
        }
    }
    for (gexpr, parent) in centralize {
        if parent.order > eval.limits().max_order {
            info!(
                "skipping centralizers of {gexpr}: order {} above the enumeration limit",
                parent.order
            );
            continue;
        }
        let group = eval.evaluate(&gexpr)?;
        let classes = group.conjugacy_classes(eval.limits())?;
        let mut orders: Vec<u64> = classes
            .reps
            .iter()
            .map(|r| r.order())
            .filter(|&k| k > 1 && is_power_of(k as u128, prime))
            .collect();
        orders.sort_unstable();
        orders.dedup();
        for k in orders {
            for row in class_reps_of_order(&group, k, eval.limits())? {
                if row.centralizer_order > bound {
                    continue;
                }
                let cand = Candidate {
                    expr: GroupExpr::cent(gexpr.clone(), k, Some(row.centralizer_order as u64)),
                    order: row.centralizer_order,
                    rule: "centralizer",
                    parents: vec![parent.name.clone()],
                };
                out.push(consider(registry, cand, prime, eval)?);
            }
        }
    }
    Ok(out)
}

fn consider(
    registry: &mut Registry,
    cand: Candidate,
    prime: u64,
    eval: &mut Evaluator,
) -> Result<Outcome> {
    if cand.order > eval.limits().max_order {
        info!(
            "skipping {}: order {} above the enumeration limit",
            cand.expr, cand.order
        );
        return Ok(Outcome::Skipped);
    }
    let fingerprint = match eval.fingerprint(&cand.expr) {
        Ok(f) => f,
        Err(e) if e.is_threshold() => {
            info!("skipping {}: {e}", cand.expr);
            return Ok(Outcome::Skipped);
        }
        Err(e) => return Err(e),
    };
    if registry.status_of(prime, &fingerprint) == Some(Status::Bad) {
        return Err(Error::Consistency(format!(
            "{} is derived good but its fingerprint is registered bad",
            cand.expr
        )));
    }
    if let Some(known) = registry.known_entry(prime, &fingerprint, &cand.expr, eval)? {
        return Ok(Outcome::Known(known.clone()));
    }
    let name = cand.expr.to_string();
    if registry.get(prime, &name).is_some() {
        // same expression already registered (paranoid mode kept both fingerprints apart)
        return Ok(Outcome::Skipped);
    }
    let entry = RegistryEntry {
        name: name.clone(),
        expr: Some(name),
        prime,
        order: cand.order,
        fingerprint,
        status: Status::Good,
        rule: cand.rule.into(),
        parents: cand.parents,
    };
    registry.insert(entry.clone())?;
    Ok(Outcome::New(entry))
}
