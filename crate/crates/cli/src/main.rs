//! Command-line front end: bound reports, verification suites, and the
//! old-versus-new comparison table.
//!
//! Exit codes are fixed so CI can consume runs directly:
//! 0 success, 1 parse/argument error, 2 datum validation failure,
//! 3 enumeration cap exceeded.

use clap::{Args, Parser, Subcommand};
use parabound_core::bounds::{self, best_prime_power, compute_report, render_text};
use parabound_core::datum::{datum_gcd, validate_datum, ModuliContext, ParabolicDatum};
use parabound_core::flag::check_flag_superadditivity;
use parabound_core::flaglab::{self, FlagLabError};
use parabound_core::isotropy::verify_isotropy;
use parabound_core::linalg::is_prime;
use parabound_core::rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use std::fmt::Write as _;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_PARSE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "parabound",
    about = "Exact bounds on the essential dimension of parabolic bundle moduli stacks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full bound report for a context and parabolic datum.
    Bounds(BoundsArgs),
    /// Run the exhaustive verification suites.
    Verify(VerifyArgs),
    /// Emit a CSV comparison of the quadratic bound against the legacy
    /// quartic bound over a (g, r) grid (empty datum, degree 0).
    Table(TableArgs),
}

#[derive(Args)]
struct BoundsArgs {
    /// Path to a JSON file holding {"context": {...}, "datum": {...}}.
    #[arg(long, conflicts_with = "json", required_unless_present = "json")]
    input: Option<String>,
    /// Inline JSON with the same shape as --input.
    #[arg(long)]
    json: Option<String>,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["json", "text"])]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: vstable, degbound, isotropy, fg, flags, or all.
    #[arg(long, default_value = "all",
          value_parser = ["vstable", "degbound", "isotropy", "fg", "flags", "all"])]
    suite: String,
    /// Ambient dimension for the flag laboratories (with --q selects a
    /// single (r, q) pair; default runs the built-in pair set).
    #[arg(long)]
    r: Option<usize>,
    /// Field size (prime) for the flag laboratories.
    #[arg(long)]
    q: Option<u64>,
    /// Largest rank for the recursion grid suite.
    #[arg(long, default_value_t = 20)]
    rmax: u64,
}

#[derive(Args)]
struct TableArgs {
    /// Genus range, inclusive, as A..B.
    #[arg(long = "g-range")]
    g_range: String,
    /// Rank range, inclusive, as A..B.
    #[arg(long = "r-range")]
    r_range: String,
}

/// Top-level input document for `bounds`.
#[derive(Deserialize)]
struct InputDoc {
    context: ModuliContext,
    #[serde(default)]
    datum: ParabolicDatum,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(EXIT_PARSE);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
    };
    let code = match cli.command {
        Command::Bounds(args) => cmd_bounds(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Table(args) => cmd_table(&args),
    };
    ExitCode::from(code)
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

fn cmd_bounds(args: &BoundsArgs) -> u8 {
    let raw = match (&args.input, &args.json) {
        (Some(path), None) => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: cannot read {path}: {e}");
                return EXIT_PARSE;
            }
        },
        (None, Some(inline)) => inline.clone(),
        _ => unreachable!("clap enforces exactly one input source"),
    };

    let doc: InputDoc = match serde_json::from_str(&raw) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: malformed input JSON: {e}");
            return EXIT_PARSE;
        }
    };

    let violations = validate_datum(&doc.datum, &doc.context);
    if !violations.is_empty() {
        eprintln!("invalid datum:");
        for v in &violations {
            eprintln!("  - {v}");
        }
        return EXIT_VALIDATION;
    }

    let report = compute_report(&doc.context, &doc.datum);
    match args.format.as_str() {
        "json" => {
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            println!("{json}");
        }
        _ => print!("{}", render_text(&report)),
    }
    EXIT_OK
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

/// (r, q) pairs exercised when no explicit pair is requested.
const DEFAULT_LAB_PAIRS: [(usize, u64); 6] = [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (4, 3)];

const SUPERADDITIVITY_SAMPLES: u64 = 10_000;
const RNG_SEED: u64 = 0x7061_7261;

fn lab_pairs(args: &VerifyArgs) -> Result<Vec<(usize, u64)>, String> {
    match (args.r, args.q) {
        (None, None) => Ok(DEFAULT_LAB_PAIRS.to_vec()),
        (r, q) => {
            let r = r.unwrap_or(3);
            let q = q.unwrap_or(2);
            if r < 2 {
                return Err(format!("--r must be at least 2, got {r}"));
            }
            if !is_prime(q) {
                return Err(format!("--q must be prime, got {q}"));
            }
            Ok(vec![(r, q)])
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let pairs = match lab_pairs(args) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };

    let mut failures = 0u64;
    let run_lab = |name: &str,
                   result: Result<flaglab::LabVerdict, FlagLabError>,
                   failures: &mut u64|
     -> Option<u8> {
        match result {
            Ok(verdict) => {
                println!(
                    "{}: {} ({} subspaces, {} checks)",
                    verdict.label,
                    if verdict.passed() { "pass" } else { "FAIL" },
                    verdict.subspaces,
                    verdict.checks
                );
                for v in &verdict.violations {
                    println!("  violation: {v}");
                }
                if !verdict.passed() {
                    *failures += 1;
                }
                None
            }
            Err(FlagLabError::CapExceeded { count, cap }) => {
                eprintln!("error: {name}: {count} subspaces exceeds cap {cap}");
                Some(EXIT_CAP)
            }
            Err(e) => {
                eprintln!("error: {name}: {e}");
                Some(EXIT_PARSE)
            }
        }
    };

    if matches!(args.suite.as_str(), "vstable" | "all") {
        for &(r, q) in &pairs {
            if let Some(code) = run_lab("vstable", flaglab::verify_vstable(r, q), &mut failures) {
                return code;
            }
        }
    }
    if matches!(args.suite.as_str(), "degbound" | "all") {
        for &(r, q) in &pairs {
            if let Some(code) = run_lab("degbound", flaglab::verify_degbound(r, q), &mut failures) {
                return code;
            }
        }
    }
    if matches!(args.suite.as_str(), "isotropy" | "all") {
        let verdict = verify_isotropy(12, 6);
        for line in &verdict.lines {
            println!(
                "isotropy(|G|={},N={}): pass ({} instances, {} equalities, max slack {})",
                line.group_order,
                line.n,
                line.instances,
                line.equality_instances,
                rat::render(&line.max_slack)
            );
        }
        println!(
            "isotropy: {} ({} instances total)",
            if verdict.passed() { "pass" } else { "FAIL" },
            verdict.total_instances()
        );
        for v in &verdict.violations {
            println!("  violation: {v}");
        }
        if !verdict.passed() {
            failures += 1;
        }
    }
    if matches!(args.suite.as_str(), "fg" | "all") {
        failures += run_fg_suite(args.rmax);
    }
    if matches!(args.suite.as_str(), "flags" | "all") {
        failures += run_flags_suite();
    }

    if failures == 0 {
        EXIT_OK
    } else {
        eprintln!("{failures} suite(s) reported violations");
        EXIT_PARSE
    }
}

fn run_fg_suite(rmax: u64) -> u64 {
    let defects: Vec<_> = [(0i64, 1i64), (1, 2), (1, 1), (3, 2), (2, 1), (3, 1), (6, 1)]
        .iter()
        .map(|&(n, d)| rat::frac(n, d))
        .collect();
    let mut checked = 0u64;
    let mut violations = 0u64;
    for g in 0..=6u64 {
        for m in &defects {
            for r in 0..=rmax {
                let f = bounds::f_value(g, m, r);
                checked += 2;
                if f != bounds::f_closed_form(g, m, r) {
                    println!("  violation: F != closed form at g={g} M={} r={r}", rat::render(m));
                    violations += 1;
                }
                if f != bounds::g_value(g, m, r) {
                    println!("  violation: F != G at g={g} M={} r={r}", rat::render(m));
                    violations += 1;
                }
            }
        }
    }
    println!(
        "fg(rmax={rmax}): {} ({checked} identities checked)",
        if violations == 0 { "pass" } else { "FAIL" }
    );
    u64::from(violations > 0)
}

fn run_flags_suite() -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED);
    let mut violations = 0u64;
    for _ in 0..SUPERADDITIVITY_SAMPLES {
        let len = rng.gen_range(1..=6usize);
        let k_parts: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=8u64)).collect();
        let s_parts: Vec<u64> = k_parts.iter().map(|&k| rng.gen_range(0..=k)).collect();
        let t_parts: Vec<u64> = k_parts.iter().zip(&s_parts).map(|(&k, &s)| k - s).collect();
        if !check_flag_superadditivity(&s_parts, &t_parts).expect("equal lengths") {
            println!("  violation: superadditivity fails for s={s_parts:?} t={t_parts:?}");
            violations += 1;
        }
    }
    println!(
        "flags(samples={SUPERADDITIVITY_SAMPLES}): {}",
        if violations == 0 { "pass" } else { "FAIL" }
    );
    u64::from(violations > 0)
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn parse_range(range: &str) -> Result<(u64, u64), String> {
    let (a, b) = range
        .split_once("..")
        .ok_or_else(|| format!("range `{range}` is not of the form A..B"))?;
    let lo: u64 = a.trim().parse().map_err(|_| format!("bad range bound `{a}`"))?;
    let hi: u64 = b.trim().parse().map_err(|_| format!("bad range bound `{b}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn cmd_table(args: &TableArgs) -> u8 {
    let ranges = parse_range(&args.g_range).and_then(|g| Ok((g, parse_range(&args.r_range)?)));
    let ((g_lo, g_hi), (r_lo, r_hi)) = match ranges {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    if g_lo < 2 {
        eprintln!("error: table requires g >= 2, got {g_lo}");
        return EXIT_PARSE;
    }
    if r_lo < 1 {
        eprintln!("error: table requires r >= 1, got {r_lo}");
        return EXIT_PARSE;
    }
    if g_hi > 1000 || r_hi > 1000 {
        eprintln!("error: table ranges are capped at 1000");
        return EXIT_PARSE;
    }

    let mut out = String::from("g,r,new_upper,legacy_upper,lower,margin\n");
    let empty = ParabolicDatum::empty();
    for g in g_lo..=g_hi {
        for r in r_lo..=r_hi {
            let new_upper = (r * r * g) as i64;
            let legacy = bounds::legacy_upper(g, r).expect("r >= 1");
            let ctx = ModuliContext::new(g, r, 0);
            let lower = best_prime_power(datum_gcd(&empty, &ctx).max(1))
                .map(|pp| {
                    let r = r as i64;
                    (r * r - 1) * (g as i64 - 1) + pp.value as i64 - 1 + g as i64
                })
                .map(|v| v.to_string())
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{g},{r},{new_upper},{legacy},{lower},{}",
                legacy - new_upper
            );
        }
    }
    print!("{out}");
    EXIT_OK
}
