// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! `chromgroup`: ranks, loop decompositions, centralizer searches and the
//! good-group registry from the command line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chromgroup::chromatic::{commuting_tuple_classes, hkr_rank, verify_transchromatic_identity};
use chromgroup::dsl::{class_reps_of_order, parse, Evaluator, GroupExpr};
use chromgroup::registry::{self, seed_defaults, Certifier, Registry, Status};
use chromgroup::report::*;
use chromgroup::{Error, Limits, MAX_ORDER_ENV};
use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "chromgroup",
    version,
    about = "Finite permutation groups, HKR ranks and good-group certification"
)]
struct Cli {
    /// Emit a JSON object instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order that may be enumerated element by element.
    #[arg(long, global = true, env = MAX_ORDER_ENV)]
    max_order: Option<u128>,
    /// Registry file (JSON lines) used by certify, explore and registry.
    #[arg(long, global = true, value_name = "PATH")]
    registry: Option<PathBuf>,
    /// Log progress notices to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order of a group expression.
    Order { expr: String },
    /// Number of conjugacy classes of commuting p-power n-tuples.
    Rank {
        expr: String,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        n: usize,
    },
    /// Conjugacy classes of commuting p-power h-tuples with their centralizers.
    #[command(disable_help_flag = true)]
    Loops {
        expr: String,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        h: usize,
        #[arg(long, action = clap::ArgAction::Help)]
        help: Option<bool>,
    },
    /// Classes of elements of a given order, their centralizers and Sylow orders.
    Centralizer {
        expr: String,
        #[arg(short)]
        p: u64,
        #[arg(long)]
        elt_order: u64,
    },
    /// Check the transchromatic rank identity; exits 1 if the two sides differ.
    Verify {
        expr: String,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        t: usize,
    },
    /// Search for a derivation of goodness at p.
    Certify {
        expr: String,
        #[arg(short)]
        p: u64,
        /// Rule search depth.
        #[arg(long, default_value_t = registry::DEFAULT_DEPTH)]
        depth: usize,
        /// Add the derivation to the registry file.
        #[arg(long, requires = "registry")]
        record: bool,
    },
    /// Grow the registry by wreaths, products and centralizers.
    Explore {
        #[arg(short)]
        p: u64,
        #[arg(long)]
        bound: u128,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        /// Also compare degree and orbit lengths before merging equal fingerprints.
        #[arg(long)]
        paranoid: bool,
    },
    /// Inspect the registry.
    #[command(subcommand)]
    Registry(RegistryCommand),
}

#[derive(Subcommand)]
enum RegistryCommand {
    /// One line per entry.
    List {
        #[arg(short)]
        p: Option<u64>,
    },
    /// One entry with its derivation.
    Show {
        name: String,
        #[arg(short)]
        p: Option<u64>,
    },
}

enum Failure {
    /// Verification or consistency failure.
    Check(String),
    Usage(String),
    Threshold(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_threshold() {
            Failure::Threshold(e.to_string())
        } else if matches!(e, Error::Consistency(_)) {
            Failure::Check(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::new()
        .filter_level(if cli.verbose {
            log::LevelFilter::Info
        } else {
            log::LevelFilter::Warn
        })
        .parse_default_env()
        .init();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Threshold(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        );
    } else {
        print!("{}", human());
    }
}

fn load_registry(
    path: Option<&Path>,
    p: Option<u64>,
    limits: &Limits,
) -> Result<Registry, Failure> {
    match path {
        Some(path) if path.exists() => Ok(Registry::load(path)?),
        _ => match p {
            Some(p) => Ok(Registry::from_entries(seed_defaults(p, limits)?)?),
            None => Ok(Registry::new()),
        },
    }
}

fn run(cli: &Cli) -> Outcome {
    let limits = match cli.max_order {
        Some(m) => Limits::default().with_max_order(m),
        None => Limits::default(),
    };
    let mut eval = Evaluator::new(limits);
    let expr_of = |text: &str| -> Result<GroupExpr, Failure> { Ok(parse(text)?) };
    match &cli.command {
        Command::Order { expr } => {
            let e = expr_of(expr)?;
            let g = eval.evaluate(&e)?;
            let r = OrderReport {
                schema_version: SCHEMA_VERSION,
                expr: e.to_string(),
                order: g.order(),
            };
            emit(cli.json, &r, || format!("{}\n", r.order));
        }
        Command::Rank { expr, p, n } => {
            let e = expr_of(expr)?;
            let g = eval.evaluate(&e)?;
            let rank = hkr_rank(&g, *p, *n, &limits)?;
            let r = RankReport {
                schema_version: SCHEMA_VERSION,
                expr: e.to_string(),
                p: *p,
                n: *n,
                rank,
            };
            emit(cli.json, &r, || format!("{rank}\n"));
        }
        Command::Loops { expr, p, h, .. } => {
            let e = expr_of(expr)?;
            let g = eval.evaluate(&e)?;
            let d = commuting_tuple_classes(&g, *p, *h, &limits)?;
            let mut components: Vec<LoopRow> = d
                .components
                .iter()
                .map(|c| LoopRow {
                    tuple_rep: c.tuple.to_strings(),
                    centralizer_order: c.centralizer.order(),
                    orbit_size: c.orbit_size,
                })
                .collect();
            components.sort_by_key(|c| c.centralizer_order);
            let r = LoopsReport {
                schema_version: SCHEMA_VERSION,
                expr: e.to_string(),
                p: *p,
                h: *h,
                raw_count: d.raw_count,
                components,
            };
            emit(cli.json, &r, || {
                let mut out = format!(
                    "{} classes of {} commuting {}-power {}-tuples\n",
                    r.components.len(),
                    r.raw_count,
                    r.p,
                    r.h
                );
                out.push_str(&format!("{:>12} {:>10}  tuple\n", "|C(im a)|", "orbit"));
                for c in &r.components {
                    let tuple = if c.tuple_rep.is_empty() {
                        "()".to_string()
                    } else {
                        c.tuple_rep.join(", ")
                    };
                    out.push_str(&format!(
                        "{:>12} {:>10}  {tuple}\n",
                        c.centralizer_order, c.orbit_size
                    ));
                }
                out
            });
        }
        Command::Centralizer { expr, p, elt_order } => {
            let e = expr_of(expr)?;
            chromgroup::arith::require_prime(*p)?;
            let g = eval.evaluate(&e)?;
            let mut rows = Vec::new();
            for row in class_reps_of_order(&g, *elt_order, &limits)? {
                let c = g.centralizer(&limits, std::slice::from_ref(&row.rep))?;
                rows.push(CentralizerRow {
                    rep: row.rep.to_string(),
                    class_size: row.class_size,
                    centralizer_order: row.centralizer_order,
                    sylow_order: c.sylow_subgroup(&limits, *p)?.order(),
                });
            }
            // reps arrive in lex order, so a stable sort keeps it as the tie-break
            rows.sort_by_key(|r| r.centralizer_order);
            let r = CentralizerReport {
                schema_version: SCHEMA_VERSION,
                expr: e.to_string(),
                p: *p,
                elt_order: *elt_order,
                rows,
            };
            emit(cli.json, &r, || {
                let mut out = format!(
                    "{:>12} {:>10} {:>10}  rep\n",
                    "|C(g)|",
                    format!("|Syl_{}|", r.p),
                    "class"
                );
                for row in &r.rows {
                    out.push_str(&format!(
                        "{:>12} {:>10} {:>10}  {}\n",
                        row.centralizer_order, row.sylow_order, row.class_size, row.rep
                    ));
                }
                out
            });
        }
        Command::Verify { expr, p, n, t } => {
            let e = expr_of(expr)?;
            let g = eval.evaluate(&e)?;
            let r = verify_transchromatic_identity(&e.to_string(), &g, *p, *n, *t, &limits)?;
            emit(cli.json, &r, || {
                let mut out = format!(
                    "{}: lhs = {}, rhs = {} over {} classes of {}-tuples\n",
                    if r.pass { "pass" } else { "FAIL" },
                    r.lhs,
                    r.rhs,
                    r.per_component.len(),
                    r.n - r.t
                );
                for c in &r.per_component {
                    out.push_str(&format!(
                        "{:>8} {:>12}  {}\n",
                        c.rank_t,
                        c.centralizer_order,
                        if c.tuple_rep.is_empty() {
                            "()".to_string()
                        } else {
                            c.tuple_rep.join(", ")
                        }
                    ));
                }
                out
            });
            if !r.pass {
                return Err(Failure::Check(format!(
                    "identity fails: lhs {} != rhs {}",
                    r.lhs, r.rhs
                )));
            }
        }
        Command::Certify {
            expr,
            p,
            depth,
            record,
        } => {
            let e = expr_of(expr)?;
            let mut reg = load_registry(cli.registry.as_deref(), Some(*p), &limits)?;
            let tree = Certifier::new(&reg, &mut eval, *p)
                .with_depth(*depth)
                .certify(&e)?;
            let r = CertifyReport {
                schema_version: SCHEMA_VERSION,
                expr: e.to_string(),
                p: *p,
                status: if tree.is_some() { "good" } else { "unknown" }.into(),
                derivation: tree.as_ref().map(|t| t.to_node()),
            };
            emit(cli.json, &r, || match &tree {
                Some(t) => format!("good at p = {p}\n{}", t.render()),
                None => format!("unknown at p = {p} (no derivation within depth {depth})\n"),
            });
            if let (true, Some(t), Some(path)) = (*record, &tree, &cli.registry) {
                reg.record(t, *p, &mut eval)?;
                reg.save(path)?;
            }
        }
        Command::Explore {
            p,
            bound,
            depth,
            paranoid,
        } => {
            let mut reg = load_registry(cli.registry.as_deref(), Some(*p), &limits)?;
            if !reg.entries().iter().any(|e| e.prime == *p) {
                for entry in seed_defaults(*p, &limits)? {
                    reg.insert(entry)?;
                }
            }
            reg.set_paranoid(*paranoid);
            let added = registry::explore(&mut reg, *p, *bound, *depth, &mut eval)?;
            if let Some(path) = &cli.registry {
                reg.save(path)?;
            }
            let r = ExploreReport {
                schema_version: SCHEMA_VERSION,
                p: *p,
                bound: *bound,
                depth: *depth,
                registry_size: reg.len(),
                added,
            };
            emit(cli.json, &r, || {
                let mut out = format!(
                    "{} new entries ({} in registry)\n",
                    r.added.len(),
                    r.registry_size
                );
                for e in &r.added {
                    out.push_str(&format!("{:>8} {:<12} {}\n", e.order, e.rule, e.name));
                }
                out
            });
        }
        Command::Registry(sub) => {
            let reg = load_registry(cli.registry.as_deref(), None, &limits)?;
            match sub {
                RegistryCommand::List { p } => {
                    let entries: Vec<_> = reg
                        .entries()
                        .iter()
                        .filter(|e| p.is_none_or(|p| e.prime == p))
                        .cloned()
                        .collect();
                    let r = RegistryReport {
                        schema_version: SCHEMA_VERSION,
                        entries,
                        derivation: None,
                    };
                    emit(cli.json, &r, || {
                        let mut out = String::new();
                        for e in &r.entries {
                            out.push_str(&format!(
                                "p={} {:<7} {:>8} {:<32} {}\n",
                                e.prime, e.status, e.order, e.rule, e.name
                            ));
                        }
                        out
                    });
                }
                RegistryCommand::Show { name, p } => {
                    let entry = reg
                        .entries()
                        .iter()
                        .find(|e| &e.name == name && p.is_none_or(|p| e.prime == p))
                        .cloned()
                        .ok_or_else(|| Failure::Usage(format!("no registry entry named {name}")))?;
                    let tree = match entry.status {
                        Status::Good => {
                            Some(Certifier::new(&reg, &mut eval, entry.prime).expand(&entry)?)
                        }
                        _ => None,
                    };
                    let tree_text = tree.as_ref().map(|t| t.render()).unwrap_or_default();
                    let derivation = tree.map(|t| t.to_node());
                    let r = RegistryReport {
                        schema_version: SCHEMA_VERSION,
                        entries: vec![entry],
                        derivation,
                    };
                    emit(cli.json, &r, || {
                        let e = &r.entries[0];
                        let fp =
                            serde_json::to_string(&e.fingerprint).expect("fingerprints serialize");
                        format!(
                            "name: {}\nexpr: {}\nprime: {}\norder: {}\nstatus: {}\nrule: {}\nparents: {}\nfingerprint: {fp}\n{tree_text}",
                            e.name,
                            e.expr.as_deref().unwrap_or("-"),
                            e.prime,
                            e.order,
                            e.status,
                            e.rule,
                            e.parents.join(", "),
                        )
                    });
                }
            }
        }
    }
    Ok(())
}
