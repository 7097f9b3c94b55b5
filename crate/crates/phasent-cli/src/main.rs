//! Command-line front end for the phase-space entropy toolkit: state entropy
//! evaluation, delta-train eigenfamily surveys, constrained minimization,
//! localization bounds, and a one-shot reproduction table.
//!
//! Output is a JSON envelope (sorted keys, reals at 12 significant digits) or
//! a plot-ready CSV of the results table. Exit codes: 0 success, 2 usage or
//! parse error, 3 domain error, 4 failed check in `reproduce`.

mod report;
mod spec;

use clap::{Args, Parser, Subcommand, ValueEnum};
use phasent::bounds::{c_d_bracket, k_dq_bracket, oscillator_entropy_closed, EULER_GAMMA};
use phasent::combcalc::{comb_entropy_phase, Regularizer};
use phasent::eigensearch::{best_known, survey};
use phasent::gridwave::{entropy_k, entropy_phase, entropy_x, Eigenvalue, GridSpec, SubspaceSpec};
use phasent::literal::format_comb;
use phasent::optimize::{minimize_entropy, random_start, MinimizeOptions};
use phasent::states::{gaussian, hermite_state, HermiteSpec};
use report::{cell, envelope, print_csv, print_json, real};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "phasent", version, about = "Phase-space entropy of 1D quantum states")]
struct Cli {
    /// Output encoding; json carries the full envelope, csv only the results table
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Position, momentum, and total entropy of a state on a grid
    #[command(after_help = "CSV columns: s_x,s_k,s_total,norm")]
    Entropy(EntropyArgs),
    /// Delta-train eigenfamily members sorted by entropy
    #[command(after_help = "CSV columns: q,p,series_count,entropy,comb")]
    Survey(SurveyArgs),
    /// Gradient descent on the entropy within a symmetry subspace
    #[command(after_help = "CSV columns: iteration,s_total (the accepted trajectory)")]
    Minimize(MinimizeArgs),
    /// Closed-form localization brackets and constants
    #[command(
        after_help = "CSV columns: cd: d,lower,upper,width; k: d,q,lower,upper,width; \
                      oscillator: n,value"
    )]
    Bounds(BoundsArgs),
    /// Recompute the named constants and check each against its reference
    #[command(after_help = "CSV columns: name,method,expected,computed,deviation,tolerance,pass")]
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct EntropyArgs {
    /// gaussian:<width> | hermite:<n> | psi0 | comb:<literal> | best:<subspace>
    state: String,
    /// Grid size (even, at least 8)
    #[arg(long)]
    n: usize,
    /// Regularization scale for delta-train states
    #[arg(long, default_value_t = 0.1)]
    a: f64,
}

#[derive(Args)]
struct SurveyArgs {
    /// even-zero | even-half | odd-half
    family: String,
    /// Transform eigenvalue of the family: +1 | -1 | +i | -i
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Largest seed index q
    #[arg(long, default_value_t = 10)]
    qmax: u32,
    /// Largest seed index p
    #[arg(long, default_value_t = 10)]
    pmax: u32,
}

#[derive(Args)]
struct MinimizeArgs {
    /// unconstrained | antisymmetric | eigen:{+1,-1,+i,-i}
    subspace: String,
    /// Grid size (even, at least 8)
    #[arg(long)]
    n: usize,
    /// Seed for the random start used when --start is omitted
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Starting state, in the grammar of `entropy`
    #[arg(long)]
    start: Option<String>,
    /// Regularization scale for delta-train starts
    #[arg(long, default_value_t = 0.1)]
    a: f64,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(subcommand)]
    kind: BoundsKind,
}

#[derive(Subcommand)]
enum BoundsKind {
    /// Entropy bracket for d antisymmetrized dimensions
    Cd {
        #[arg(long)]
        d: u32,
    },
    /// Restricted-norm bracket at dual exponent q
    K {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: f64,
    },
    /// Closed-form oscillator level entropy (levels 0 and 1)
    Oscillator {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct ReproduceArgs {
    /// Evaluate grid rows at n = 4096 instead of 65536
    #[arg(long)]
    fast: bool,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    std::process::exit(code);
}

fn exit_code(e: &phasent::Error) -> i32 {
    match e {
        phasent::Error::InvalidSpec(_)
        | phasent::Error::InvalidGrid(_)
        | phasent::Error::InvalidExponent { .. } => 2,
        _ => 3,
    }
}

fn run(cli: &Cli) -> phasent::Result<i32> {
    match &cli.command {
        Command::Entropy(args) => cmd_entropy(args, cli.format),
        Command::Survey(args) => cmd_survey(args, cli.format),
        Command::Minimize(args) => cmd_minimize(args, cli.format),
        Command::Bounds(args) => cmd_bounds(args, cli.format),
        Command::Reproduce(args) => cmd_reproduce(args, cli.format),
    }
}

fn cmd_entropy(args: &EntropyArgs, format: Format) -> phasent::Result<i32> {
    let state = spec::build_state(&spec::parse_state(&args.state)?, args.n, args.a)?;
    let s_x = entropy_x(&state)?;
    let s_k = entropy_k(&state)?;
    let norm = state.norm();
    match format {
        Format::Json => print_json(&envelope(
            "entropy",
            json!({"a": real(args.a), "n": args.n, "state": args.state}),
            json!({
                "norm": real(norm),
                "s_k": real(s_k),
                "s_total": real(s_x + s_k),
                "s_x": real(s_x),
            }),
        )),
        Format::Csv => print_csv(
            &["s_x", "s_k", "s_total", "norm"],
            vec![vec![cell(s_x), cell(s_k), cell(s_x + s_k), cell(norm)]],
        ),
    }
    Ok(0)
}

fn cmd_survey(args: &SurveyArgs, format: Format) -> phasent::Result<i32> {
    let family = spec::parse_family(&args.family)?;
    let lambda = spec::parse_eigenvalue(&args.lambda)?;
    if lambda != family.target() {
        return Err(phasent::Error::InvalidSpec(format!(
            "family {} projects onto eigenvalue {}, not {}",
            family.label(),
            family.target().label(),
            lambda.label()
        )));
    }
    let rows = survey(family, args.qmax, args.pmax)?;
    match format {
        Format::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "comb": format_comb(&r.comb.to_comb()),
                        "entropy": real(r.entropy),
                        "p": r.p,
                        "q": r.q,
                        "series_count": r.series_count,
                    })
                })
                .collect();
            print_json(&envelope(
                "survey",
                json!({
                    "family": family.label(),
                    "lambda": lambda.label(),
                    "pmax": args.pmax,
                    "qmax": args.qmax,
                }),
                json!({ "rows": json_rows }),
            ));
        }
        Format::Csv => print_csv(
            &["q", "p", "series_count", "entropy", "comb"],
            rows.iter()
                .map(|r| {
                    vec![
                        r.q.to_string(),
                        r.p.to_string(),
                        r.series_count.to_string(),
                        cell(r.entropy),
                        format_comb(&r.comb.to_comb()),
                    ]
                })
                .collect(),
        ),
    }
    Ok(0)
}

fn cmd_minimize(args: &MinimizeArgs, format: Format) -> phasent::Result<i32> {
    let sub: SubspaceSpec = args.subspace.parse()?;
    let grid = GridSpec::new(args.n)?;
    let start = match &args.start {
        Some(text) => spec::build_state(&spec::parse_state(text)?, args.n, args.a)?,
        None => random_start(grid, sub, args.seed)?,
    };
    let opts = MinimizeOptions {
        seed: args.seed,
        ..MinimizeOptions::default()
    };
    let report = minimize_entropy(&start, sub, &opts)?;
    match format {
        Format::Json => print_json(&envelope(
            "minimize",
            json!({
                "n": args.n,
                "seed": args.seed,
                "start": args.start,
                "subspace": sub.label(),
            }),
            json!({
                "converged": report.converged,
                "iterations": report.iterations,
                "s_k": real(report.s_k),
                "s_total": real(report.s_total),
                "s_x": real(report.s_x),
                "trajectory": report.trajectory.iter().map(|&s| real(s)).collect::<Vec<_>>(),
            }),
        )),
        Format::Csv => print_csv(
            &["iteration", "s_total"],
            report
                .trajectory
                .iter()
                .enumerate()
                .map(|(i, &s)| vec![i.to_string(), cell(s)])
                .collect(),
        ),
    }
    Ok(0)
}

fn cmd_bounds(args: &BoundsArgs, format: Format) -> phasent::Result<i32> {
    match args.kind {
        BoundsKind::Cd { d } => {
            let b = c_d_bracket(d)?;
            match format {
                Format::Json => print_json(&envelope(
                    "bounds",
                    json!({"d": d, "kind": "cd"}),
                    json!({
                        "lower": real(b.lower),
                        "upper": real(b.upper),
                        "width": real(b.width()),
                    }),
                )),
                Format::Csv => print_csv(
                    &["d", "lower", "upper", "width"],
                    vec![vec![d.to_string(), cell(b.lower), cell(b.upper), cell(b.width())]],
                ),
            }
        }
        BoundsKind::K { d, q } => {
            let b = k_dq_bracket(d, q)?;
            match format {
                Format::Json => print_json(&envelope(
                    "bounds",
                    json!({"d": d, "kind": "k", "q": real(q)}),
                    json!({
                        "lower": real(b.lower),
                        "upper": real(b.upper),
                        "width": real(b.width()),
                    }),
                )),
                Format::Csv => print_csv(
                    &["d", "q", "lower", "upper", "width"],
                    vec![vec![
                        d.to_string(),
                        cell(q),
                        cell(b.lower),
                        cell(b.upper),
                        cell(b.width()),
                    ]],
                ),
            }
        }
        BoundsKind::Oscillator { n } => {
            let v = oscillator_entropy_closed(n)?;
            match format {
                Format::Json => print_json(&envelope(
                    "bounds",
                    json!({"kind": "oscillator", "n": n}),
                    json!({ "value": real(v) }),
                )),
                Format::Csv => {
                    print_csv(&["n", "value"], vec![vec![n.to_string(), cell(v)]])
                }
            }
        }
    }
    Ok(0)
}

struct CheckRow {
    name: &'static str,
    method: &'static str,
    expected: f64,
    computed: f64,
    tolerance: f64,
}

fn cmd_reproduce(args: &ReproduceArgs, format: Format) -> phasent::Result<i32> {
    const GRID_TOL: f64 = 2e-4;
    const COMB_TOL: f64 = 1e-9;
    let n = if args.fast { 4096 } else { 65536 };
    let grid = GridSpec::new(n)?;
    let reg = Regularizer::gaussian();
    let half = 1.0 - 2f64.ln();
    let comb_entropy = |sub| comb_entropy_phase(&best_known(sub), &reg);
    let level_entropy = |m| entropy_phase(&hermite_state(HermiteSpec::new(m)?, grid)?);
    let rows = vec![
        CheckRow {
            name: "gaussian ground",
            method: "grid",
            expected: half,
            computed: entropy_phase(&gaussian(1.0, grid)?)?,
            tolerance: GRID_TOL,
        },
        CheckRow {
            name: "alternating train",
            method: "comb",
            expected: 2.0 * half,
            computed: comb_entropy(SubspaceSpec::Antisymmetric)?,
            tolerance: COMB_TOL,
        },
        CheckRow {
            name: "oscillator level 1",
            method: "grid",
            expected: -1.0 + 2f64.ln() + 2.0 * EULER_GAMMA,
            computed: level_entropy(1)?,
            tolerance: GRID_TOL,
        },
        CheckRow {
            name: "two-train minimizer",
            method: "comb",
            expected: 2.0 + 2f64.sqrt() * (2f64.sqrt() - 1.0).ln(),
            computed: comb_entropy(SubspaceSpec::FourierEigen(Eigenvalue::MinusOne))?,
            tolerance: COMB_TOL,
        },
        CheckRow {
            name: "three-train minimizer",
            method: "comb",
            expected: 2.0 - (2.0 / 3f64.sqrt()) * (3f64.sqrt() + 1.0).ln(),
            computed: comb_entropy(SubspaceSpec::FourierEigen(Eigenvalue::PlusI))?,
            tolerance: COMB_TOL,
        },
        CheckRow {
            name: "oscillator level 2",
            method: "grid",
            expected: 1.15934,
            computed: level_entropy(2)?,
            tolerance: GRID_TOL,
        },
        CheckRow {
            name: "oscillator level 3",
            method: "grid",
            expected: 1.38155,
            computed: level_entropy(3)?,
            tolerance: GRID_TOL,
        },
    ];
    let all_pass = rows
        .iter()
        .all(|r| (r.computed - r.expected).abs() <= r.tolerance);
    match format {
        Format::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "computed": real(r.computed),
                        "deviation": real((r.computed - r.expected).abs()),
                        "expected": real(r.expected),
                        "method": r.method,
                        "name": r.name,
                        "pass": (r.computed - r.expected).abs() <= r.tolerance,
                        "tolerance": real(r.tolerance),
                    })
                })
                .collect();
            print_json(&envelope(
                "reproduce",
                json!({"fast": args.fast, "grid_n": n}),
                json!({"all_pass": all_pass, "rows": json_rows}),
            ));
        }
        Format::Csv => print_csv(
            &["name", "method", "expected", "computed", "deviation", "tolerance", "pass"],
            rows.iter()
                .map(|r| {
                    vec![
                        r.name.to_string(),
                        r.method.to_string(),
                        cell(r.expected),
                        cell(r.computed),
                        cell((r.computed - r.expected).abs()),
                        cell(r.tolerance),
                        ((r.computed - r.expected).abs() <= r.tolerance).to_string(),
                    ]
                })
                .collect(),
        ),
    }
    Ok(if all_pass { 0 } else { 4 })
}
