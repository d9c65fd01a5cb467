//! Command-line surface: tableau enumeration, projector construction,
//! verification suites, and the construction benchmark.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
//! 3 resource refusal (expansion above the configured cap).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use birdtrack::algebra::AlgebraElement;
use birdtrack::projectors::{self, Method};
use birdtrack::symbolic::{SymbolicOperator, DEFAULT_EXPANSION_CAP};
use birdtrack::tableau::YoungTableau;
use birdtrack::verify::{Suite, VerificationReport};

/// Environment variable overriding the expansion cap (a degree).
const CAP_ENV: &str = "BIRDTRACK_EXPANSION_CAP";
/// Largest box count the tableaux listing accepts.
const MAX_ENUMERATION: usize = 10;

#[derive(Parser)]
#[command(
    name = "birdtrack",
    about = "Young and Hermitian Young projection operators for SU(N) tensor products",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all standard Young tableaux with a given number of boxes.
    Tableaux(TableauxArgs),
    /// Construct a projection operator for a tableau.
    Projector(ProjectorArgs),
    /// Run verification suites over all tableaux of a given size.
    Verify(VerifyArgs),
    /// Compare construction cost and expression size across methods.
    Bench(BenchArgs),
}

#[derive(Args)]
struct TableauxArgs {
    /// Number of boxes (1 ..= 10).
    #[arg(long)]
    n: usize,
    /// Print only the number of tableaux.
    #[arg(long)]
    count: bool,
    /// Emit one structured JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ProjectorArgs {
    /// Tableau rows, e.g. "1,2,4/3,5".
    #[arg(short, long)]
    tableau: String,
    /// Construction method: young, ks, short-ks, lexical, mold.
    #[arg(short, long, default_value = "mold")]
    method: String,
    /// Output form: symbolic, expanded, both.
    #[arg(short, long, default_value = "symbolic")]
    output: String,
    /// Expand (and normalize) even above the expansion cap.
    #[arg(long)]
    force: bool,
    /// Emit one structured JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of boxes.
    #[arg(long)]
    n: usize,
    /// Comma-separated suite names, or "all".
    #[arg(long, default_value = "all")]
    suites: String,
    /// Emit one structured JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Tableau rows, e.g. "1,2,4,7/3,6/5,8/9".
    #[arg(short, long)]
    tableau: String,
    /// Comma-separated methods to benchmark (default: all).
    #[arg(short, long, default_value = "young,ks,short-ks,lexical,mold")]
    method: String,
    /// Pass "-o expanded" to also count expanded terms.
    #[arg(short, long)]
    output: Option<String>,
    /// Expand even above the expansion cap.
    #[arg(long)]
    force: bool,
    /// Emit one structured JSON document instead of text.
    #[arg(long)]
    json: bool,
}

enum CliError {
    Usage(String),
    Refused(String),
    Verification,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Usage(_) => 2,
            CliError::Refused(_) => 3,
        }
    }
}

fn expansion_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_EXPANSION_CAP)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Tableaux(args) => cmd_tableaux(args),
        Command::Projector(args) => cmd_projector(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match &err {
                CliError::Usage(message) => eprintln!("error: {message}"),
                CliError::Refused(message) => eprintln!("refused: {message}"),
                CliError::Verification => {}
            }
            ExitCode::from(err.exit_code())
        }
    }
}

#[derive(Serialize)]
struct TableauxDoc {
    n: usize,
    count: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    tableaux: Vec<String>,
}

fn cmd_tableaux(args: TableauxArgs) -> Result<(), CliError> {
    if args.n == 0 || args.n > MAX_ENUMERATION {
        return Err(CliError::Usage(format!(
            "--n must be between 1 and {MAX_ENUMERATION}, got {}",
            args.n
        )));
    }
    let tableaux = YoungTableau::enumerate(args.n);
    if args.json {
        let doc = TableauxDoc {
            n: args.n,
            count: tableaux.len(),
            tableaux: if args.count {
                Vec::new()
            } else {
                tableaux.iter().map(|t| t.to_string()).collect()
            },
        };
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return Ok(());
    }
    if args.count {
        println!("{}", tableaux.len());
        return Ok(());
    }
    for t in tableaux {
        println!("{t}");
    }
    Ok(())
}

fn parse_tableau(text: &str) -> Result<YoungTableau, CliError> {
    YoungTableau::parse(text).map_err(|e| CliError::Usage(e.to_string()))
}

/// Builds the symbolic operator. Above the cap the MOLD prefactor is left
/// unnormalized unless forced, since normalizing needs a full expansion.
/// Returns the operator and whether its prefactor is normalized.
fn build_symbolic(
    tab: &YoungTableau,
    method: Method,
    cap: usize,
    force: bool,
) -> Result<(SymbolicOperator, bool), CliError> {
    let usage = |e: projectors::ProjectorError| CliError::Usage(e.to_string());
    match method {
        Method::Young => Ok((projectors::young(tab), true)),
        Method::Ks => Ok((projectors::ks(tab), true)),
        Method::ShortKs => Ok((projectors::short_ks(tab), true)),
        Method::Lexical => Ok((projectors::lexical(tab).map_err(usage)?, true)),
        Method::Mold => {
            if tab.size() <= cap || force || tab.mold() == 0 {
                Ok((projectors::mold(tab).map_err(usage)?, true))
            } else {
                Ok((projectors::mold_barred(tab).map_err(usage)?, false))
            }
        }
    }
}

fn expand_for_output(
    op: &SymbolicOperator,
    cap: usize,
    force: bool,
) -> Result<AlgebraElement, CliError> {
    if force {
        op.expand().map_err(|e| CliError::Usage(e.to_string()))
    } else {
        op.expand_guarded(cap).map_err(|e| match e {
            birdtrack::symbolic::SymbolicError::ExpansionRefused { .. } => {
                CliError::Refused(format!("{e}; pass --force or raise {CAP_ENV}"))
            }
            other => CliError::Usage(other.to_string()),
        })
    }
}

#[derive(Serialize)]
struct ProjectorDoc {
    tableau: String,
    method: String,
    degree: usize,
    normalized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    symbolic_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    symbolic: Option<SymbolicOperator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expanded_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    term_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expanded: Option<AlgebraElement>,
}

fn cmd_projector(args: ProjectorArgs) -> Result<(), CliError> {
    let tab = parse_tableau(&args.tableau)?;
    let method = Method::parse(&args.method).map_err(|e| CliError::Usage(e.to_string()))?;
    let (want_symbolic, want_expanded) = match args.output.as_str() {
        "symbolic" => (true, false),
        "expanded" => (false, true),
        "both" => (true, true),
        other => {
            return Err(CliError::Usage(format!(
                "--output must be symbolic, expanded or both, got {other:?}"
            )))
        }
    };
    let cap = expansion_cap();
    let (op, normalized) = build_symbolic(&tab, method, cap, args.force)?;
    let expanded = if want_expanded {
        Some(expand_for_output(&op, cap, args.force)?)
    } else {
        None
    };
    if args.json {
        let doc = ProjectorDoc {
            tableau: tab.to_string(),
            method: method.name().to_owned(),
            degree: tab.size(),
            normalized,
            symbolic_text: want_symbolic.then(|| op.to_string()),
            symbolic: want_symbolic.then(|| op.clone()),
            expanded_text: expanded.as_ref().map(|e| e.to_string()),
            term_count: expanded.as_ref().map(|e| e.term_count()),
            expanded,
        };
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return Ok(());
    }
    if want_symbolic {
        if want_expanded {
            println!("symbolic: {op}");
        } else {
            println!("{op}");
        }
        if !normalized {
            eprintln!(
                "note: prefactor not normalized (degree {} above cap {cap}); pass --force to normalize",
                tab.size()
            );
        }
    }
    if let Some(element) = &expanded {
        if want_symbolic {
            println!("expanded: {element}");
        } else {
            println!("{element}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyDoc {
    n: usize,
    suites: Vec<String>,
    reports: Vec<VerificationReport>,
    passed: bool,
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".to_owned()));
    }
    let suites: Vec<Suite> = if args.suites.trim() == "all" {
        Suite::ALL.to_vec()
    } else {
        args.suites
            .split(',')
            .map(|name| Suite::parse(name.trim()).map_err(|e| CliError::Usage(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let mut reports = Vec::new();
    for suite in &suites {
        reports.extend(suite.run(args.n));
    }
    let passed = reports.iter().all(|r| r.passed);
    if args.json {
        let doc = VerifyDoc {
            n: args.n,
            suites: suites.iter().map(|s| s.name().to_owned()).collect(),
            reports,
            passed,
        };
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        for report in &reports {
            println!("{report}");
        }
        let failed = reports.iter().filter(|r| !r.passed).count();
        println!(
            "{} checks, {} passed, {} failed",
            reports.len(),
            reports.len() - failed,
            failed
        );
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

#[derive(Serialize)]
struct BenchRow {
    method: String,
    construct_us: u128,
    /// Young-projector units in the unexpanded chain (chain methods only).
    #[serde(skip_serializing_if = "Option::is_none")]
    young_units: Option<usize>,
    /// Chain length after wedged-ancestor cancellation (ks only).
    #[serde(skip_serializing_if = "Option::is_none")]
    normalized_units: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normalize_us: Option<u128>,
    set_factors: usize,
    palindrome: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    term_count: Option<usize>,
}

#[derive(Serialize)]
struct BenchDoc {
    tableau: String,
    degree: usize,
    mold: usize,
    rows: Vec<BenchRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ks_over_mold_speedup: Option<f64>,
}

/// Warm up, then report the fastest of several runs.
fn time<T>(mut f: impl FnMut() -> T) -> (T, Duration) {
    const WARMUP: usize = 3;
    const SAMPLES: usize = 10;
    for _ in 0..WARMUP {
        std::hint::black_box(f());
    }
    let mut best = Duration::MAX;
    for _ in 0..SAMPLES - 1 {
        let start = Instant::now();
        std::hint::black_box(f());
        best = best.min(start.elapsed());
    }
    let start = Instant::now();
    let value = f();
    best = best.min(start.elapsed());
    (value, best)
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let tab = parse_tableau(&args.tableau)?;
    let methods: Vec<Method> = args
        .method
        .split(',')
        .map(|name| Method::parse(name.trim()).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    let want_terms = match args.output.as_deref() {
        None => false,
        Some("expanded") => true,
        Some(other) => {
            return Err(CliError::Usage(format!(
                "--output for bench must be \"expanded\", got {other:?}"
            )))
        }
    };
    let cap = expansion_cap();
    if want_terms && tab.size() > cap && !args.force {
        return Err(CliError::Refused(format!(
            "term counts need expansion at degree {} above the cap {cap}; pass --force or raise {CAP_ENV}",
            tab.size()
        )));
    }
    let mut rows = Vec::new();
    let mut ks_total: Option<Duration> = None;
    let mut mold_construct: Option<Duration> = None;
    for method in &methods {
        let row = match method {
            Method::Young => {
                let (op, took) = time(|| projectors::young(&tab));
                bench_row(*method, op, took, Some(1), None, None, want_terms)?
            }
            Method::Ks => {
                // full symbolic construction: the chain plus its operator form
                let ((chain, op), took) = time(|| {
                    let chain = projectors::ks_chain(&tab);
                    let op = chain.to_symbolic();
                    (chain, op)
                });
                let (normalized, normalize_took) = time(|| {
                    let cancelled = chain.cancel_wedged();
                    let _ = cancelled.to_symbolic();
                    cancelled
                });
                ks_total = Some(took + normalize_took);
                bench_row(
                    *method,
                    op,
                    took,
                    Some(chain.proper_unit_count().max(1)),
                    Some(normalized.unit_count()),
                    Some(normalize_took),
                    want_terms,
                )?
            }
            Method::ShortKs => {
                let (chain, took) = time(|| projectors::short_ks_chain(&tab));
                bench_row(
                    *method,
                    chain.to_symbolic(),
                    took,
                    Some(chain.unit_count()),
                    None,
                    None,
                    want_terms,
                )?
            }
            Method::Lexical => {
                if !tab.is_lexically_ordered() {
                    continue; // lexical construction does not apply
                }
                let (op, took) = time(|| projectors::lexical(&tab).expect("ordered"));
                bench_row(*method, op, took, None, None, None, want_terms)?
            }
            Method::Mold => {
                let (op, took) = time(|| projectors::mold_barred(&tab).expect("valid tableau"));
                mold_construct = Some(took);
                bench_row(*method, op, took, None, None, None, want_terms)?
            }
        };
        rows.push(row);
    }
    let speedup = match (ks_total, mold_construct) {
        (Some(ks), Some(mold)) if mold.as_nanos() > 0 => {
            Some(ks.as_nanos() as f64 / mold.as_nanos() as f64)
        }
        _ => None,
    };
    let doc = BenchDoc {
        tableau: tab.to_string(),
        degree: tab.size(),
        mold: tab.mold(),
        rows,
        ks_over_mold_speedup: speedup,
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return Ok(());
    }
    println!(
        "tableau {} (degree {}, mold {})",
        doc.tableau, doc.degree, doc.mold
    );
    println!(
        "{:<10} {:>12} {:>12} {:>12} {:>12} {:>11} {:>10}",
        "method", "construct", "young-units", "cancelled", "set-factors", "palindrome", "terms"
    );
    for row in &doc.rows {
        println!(
            "{:<10} {:>10}us {:>12} {:>12} {:>12} {:>11} {:>10}",
            row.method,
            row.construct_us,
            row.young_units.map_or_else(|| "-".into(), |v: usize| v.to_string()),
            row.normalized_units
                .map_or_else(|| "-".into(), |v: usize| v.to_string()),
            row.set_factors,
            row.palindrome,
            row.term_count.map_or_else(|| "-".into(), |v: usize| v.to_string()),
        );
    }
    if let Some(speedup) = doc.ks_over_mold_speedup {
        println!("mold construction speedup over ks+cancel: {speedup:.1}x");
    }
    Ok(())
}

fn bench_row(
    method: Method,
    op: SymbolicOperator,
    construct: Duration,
    young_units: Option<usize>,
    normalized_units: Option<usize>,
    normalize: Option<Duration>,
    want_terms: bool,
) -> Result<BenchRow, CliError> {
    let term_count = if want_terms {
        Some(
            op.expand()
                .map_err(|e| CliError::Usage(e.to_string()))?
                .term_count(),
        )
    } else {
        None
    };
    Ok(BenchRow {
        method: method.name().to_owned(),
        construct_us: construct.as_micros(),
        young_units,
        normalized_units,
        normalize_us: normalize.map(|d| d.as_micros()),
        set_factors: op.set_count(),
        palindrome: op.is_palindrome(),
        term_count,
    })
}
