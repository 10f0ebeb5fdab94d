//! `overcrank` — counts, worked tables, series expansion and identity
//! verification on the command line.
//!
//! Every subcommand writes byte-deterministic output: JSON objects keep
//! their keys in a fixed order, integers print in full decimal, tables have
//! a fixed row order, and nothing depends on time, locale, or thread count.
//!
//! Exit codes: 0 on success (and on `verify` only when every identity
//! holds), 1 when a verification finds a mismatch, 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Number, Value};

use overcrank::{
    count_statistic, crank, crank1, crank2, kappa_stat, lambda_stat, overpartitions_of, registry,
    verify_spec, IdentitySpec, LaurentPoly, SeriesName, Statistic, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "overcrank",
    version,
    about = "Crank statistics of overpartitions: exact counts, tables, q-series, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tally a statistic over all objects of size n.
    Counts {
        /// Size of the counted objects.
        #[arg(long)]
        n: u32,
        /// One of: crank, rank, crank1, crank2, m2crank, m2rank, rank_over.
        #[arg(long, value_parser = parse_stat)]
        stat: Statistic,
        #[arg(long, value_enum, default_value = "json")]
        format: CountFormat,
    },
    /// Reproduce one of the three worked example tables as TSV.
    Table {
        /// 1 = crank1 of overpartitions of 3, 2 = its non-overlined-subpartition
        /// cranks, 3 = crank2 of overpartitions of 4.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        paper: u8,
    },
    /// Print the coefficients of a generating function or mock theta series.
    Series {
        /// One of: C, Cbar, Cbar2, M2, N2, chi0, phi, psi, X, chi.
        #[arg(long, value_parser = parse_series)]
        name: SeriesName,
        /// Truncation order: coefficients of q^0 through q^order.
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: SeriesFormat,
    },
    /// Check registered identities, printing one JSON report line per identity.
    Verify {
        /// Identity id to check (see `verify --all` output for the list).
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        /// Check every registered identity, in registry order.
        #[arg(long)]
        all: bool,
        /// Truncation order; defaults to each identity's registered order.
        #[arg(long)]
        order: Option<usize>,
        /// Worker threads; the output order is the same regardless.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFormat {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesFormat {
    Json,
    Text,
}

fn parse_stat(s: &str) -> Result<Statistic, String> {
    s.parse().map_err(|e: overcrank::Error| e.to_string())
}

fn parse_series(s: &str) -> Result<SeriesName, String> {
    s.parse().map_err(|e: overcrank::Error| e.to_string())
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Counts { n, stat, format } => cmd_counts(n, stat, format),
        Command::Table { paper } => cmd_table(paper),
        Command::Series {
            name,
            order,
            format,
        } => cmd_series(name, order, format),
        Command::Verify {
            id,
            all,
            order,
            jobs,
        } => cmd_verify(id, all, order, jobs),
    }
}

/// Exact decimal JSON number; `arbitrary_precision` keeps every digit.
fn big_number(c: &BigInt) -> Number {
    serde_json::from_str(&c.to_string()).expect("decimal integer is a JSON number")
}

/// A Laurent polynomial as `[[exponent, coefficient], ...]`, ascending.
fn poly_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.pairs()
            .iter()
            .map(|(e, c)| json!([e, big_number(c)]))
            .collect(),
    )
}

/// A Laurent polynomial as `[(e,c),(e,c)]` text, ascending; `[]` when zero.
fn poly_text(p: &LaurentPoly) -> String {
    let body = p
        .pairs()
        .iter()
        .map(|(e, c)| format!("({e},{c})"))
        .collect::<Vec<_>>()
        .join(",");
    format!("[{body}]")
}

fn cmd_counts(n: u32, stat: Statistic, format: CountFormat) -> ExitCode {
    let table = count_statistic(n, stat);
    match format {
        CountFormat::Json => {
            let mut obj = Map::new();
            for (m, c) in &table.counts {
                obj.insert(m.to_string(), Value::Number(big_number(c)));
            }
            println!("{}", Value::Object(obj));
        }
        CountFormat::Tsv => {
            for (m, c) in &table.counts {
                println!("{m}\t{c}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_table(paper: u8) -> ExitCode {
    match paper {
        1 => {
            // First residual crank of the overpartitions of 3. The lambda
            // column is only filled when the plain subpartition is empty,
            // because that is the only case where crank1 falls back to it.
            println!("overpartition\tpi1\tlambda(pi1)\tpi2\tcrank(pi2)\tcrank1");
            for o in overpartitions_of(3) {
                let (p1, p2) = (o.overlined(), o.plain());
                let lambda = if p2.is_empty() {
                    lambda_stat(p1).to_string()
                } else {
                    String::new()
                };
                let crank_cell = if p2.is_empty() {
                    String::new()
                } else {
                    crank(p2).to_string()
                };
                println!("{o}\t{p1}\t{lambda}\t{p2}\t{crank_cell}\t{}", crank1(&o));
            }
        }
        2 => {
            // Cranks of the non-overlined subpartitions, with 2~+1 left out:
            // its lone plain 1 makes the raw crank misleading, and the
            // footer states how its weight is redistributed instead.
            println!("overpartition\tcrank(pi2)");
            for o in overpartitions_of(3) {
                if o.to_string() == "2~+1" {
                    continue;
                }
                let c = if o.plain().is_empty() {
                    0
                } else {
                    crank(o.plain())
                };
                println!("{o}\t{c}");
            }
            println!("# adjustment: 2~+1 contributes -1 to m=0 and +1 to m=-1 and m=+1");
        }
        3 => {
            // Second residual crank of the overpartitions of 4. Here pi2 is
            // the even plain subpartition (odd plain parts never influence
            // crank2 and are not shown), and its crank is taken after
            // halving each part.
            println!("overpartition\tpi1\tkappa(pi1)\tpi2\tcrank(pi2/2)\tcrank2");
            for o in overpartitions_of(4) {
                let t = o.to_triple();
                let kappa = if t.overlined.is_empty() {
                    String::new()
                } else {
                    kappa_stat(&t.overlined).to_string()
                };
                let crank_cell = if t.plain_even.is_empty() {
                    String::new()
                } else {
                    crank(&t.plain_even.halve()).to_string()
                };
                println!(
                    "{o}\t{}\t{kappa}\t{}\t{crank_cell}\t{}",
                    t.overlined,
                    t.plain_even,
                    crank2(&o)
                );
            }
        }
        _ => unreachable!("range-checked by clap"),
    }
    ExitCode::SUCCESS
}

fn cmd_series(name: SeriesName, order: usize, format: SeriesFormat) -> ExitCode {
    let series = name.expand(order);
    match format {
        SeriesFormat::Text => {
            for n in 0..=order {
                println!("q^{n}\t{}", poly_text(series.coeff(n)));
            }
        }
        SeriesFormat::Json => {
            let coefficients: Vec<Value> =
                (0..=order).map(|n| poly_json(series.coeff(n))).collect();
            println!(
                "{}",
                json!({
                    "name": name.name(),
                    "order": order,
                    "coefficients": coefficients,
                })
            );
        }
    }
    ExitCode::SUCCESS
}

fn report_json(r: &VerificationReport) -> Value {
    let first_mismatch = match &r.first_mismatch {
        None => Value::Null,
        Some(m) => json!({
            "n": m.n,
            "lhs": poly_json(&m.lhs),
            "rhs": poly_json(&m.rhs),
        }),
    };
    json!({
        "id": r.id,
        "order": r.order,
        "holds": r.holds,
        "first_mismatch": first_mismatch,
    })
}

fn cmd_verify(id: Option<String>, all: bool, order: Option<usize>, jobs: usize) -> ExitCode {
    let specs: Vec<IdentitySpec> = if all {
        registry()
    } else {
        let wanted = id.expect("clap requires --id unless --all");
        match registry().into_iter().find(|s| s.id == wanted) {
            Some(spec) => vec![spec],
            None => {
                eprintln!("error: unknown identity id '{wanted}'");
                return ExitCode::from(2);
            }
        }
    };
    if jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }

    let run = |spec: &IdentitySpec| verify_spec(spec, order.unwrap_or(spec.default_order));
    // Collected in registry order whatever the thread count, so the output
    // bytes never depend on scheduling.
    let reports: Vec<VerificationReport> = if jobs == 1 {
        specs.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| specs.par_iter().map(run).collect())
    };

    let mut all_hold = true;
    for report in &reports {
        println!("{}", report_json(report));
        all_hold &= report.holds;
    }
    if all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
