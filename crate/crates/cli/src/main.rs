use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use cuspsig::deformation::{bmy_check, full_report};
use cuspsig::document::{parse_cusp_list, parse_scenario, report_to_json};
use cuspsig::enumeration::{enumerate_admissible, SearchBudget};
use cuspsig::signature::{torus_signature_at, torus_signature_function};
use cuspsig::{CuspDescriptor, Rational, Verdict};

const ADMISSIBLE: u8 = 0;
const OBSTRUCTED: u8 = 1;
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "cuspsig",
    version,
    about = "Signature obstructions for deformations of plane curve cusps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print μ, M̄, M and N² of the cusp x^p = y^q.
    Invariants { p: u32, q: u32 },
    /// Print the Tristram–Levine signature function of the (p,q) torus knot.
    Signature {
        p: u32,
        q: u32,
        /// Evaluate at x (rational "a/b") instead of printing the whole function.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Check a JSON scenario file; exit 0 if admissible, 1 if obstructed.
    Check { path: PathBuf },
    /// List generic-fiber configurations not obstructed for the (p,q) cusp.
    Enumerate {
        p: u32,
        q: u32,
        #[arg(long, default_value_t = 0)]
        max_genus: u32,
        #[arg(long, default_value_t = 0)]
        max_double_points: u32,
        /// Print only the number of configurations.
        #[arg(long)]
        count: bool,
        /// Do not require the genus formula.
        #[arg(long)]
        no_genus_formula: bool,
    },
    /// M-number bound for a parametric curve of bidegree (p,q).
    Bmy {
        p: u32,
        q: u32,
        /// Cusps as "p,q" pairs.
        #[arg(long, num_args = 0..)]
        cusps: Vec<String>,
        /// JSON file holding a list of [p, q] pairs.
        #[arg(long, conflicts_with = "cusps")]
        cusps_file: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        double_points: u32,
    },
}

fn parse_pair(s: &str) -> anyhow::Result<CuspDescriptor> {
    let Some((p, q)) = s.split_once(',') else {
        bail!("expected a cusp as \"p,q\", got {s:?}");
    };
    let p = p
        .parse()
        .with_context(|| format!("bad exponent in {s:?}"))?;
    let q = q
        .parse()
        .with_context(|| format!("bad exponent in {s:?}"))?;
    Ok(CuspDescriptor::new(p, q)?)
}

fn verdict_code(v: Verdict) -> u8 {
    if v.holds() {
        ADMISSIBLE
    } else {
        OBSTRUCTED
    }
}

fn invariants(p: u32, q: u32) -> anyhow::Result<(String, u8)> {
    let c = CuspDescriptor::new(p, q)?;
    let m = c.m_number();
    let m_bar = c.m_bar_number();
    let mut out = String::new();
    writeln!(out, "cusp {c}")?;
    writeln!(out, "mu = {}", c.milnor_number())?;
    writeln!(out, "m_bar = {m_bar}")?;
    writeln!(out, "m = {m}")?;
    writeln!(out, "n_squared = {}", Rational::from_integer(m_bar) - m)?;
    Ok((out, ADMISSIBLE))
}

fn signature(p: u32, q: u32, at: Option<&str>) -> anyhow::Result<(String, u8)> {
    let c = CuspDescriptor::new(p, q)?;
    let mut out = String::new();
    match at {
        Some(x) => {
            let x: Rational = x.parse()?;
            writeln!(out, "{}", torus_signature_at(&c, x)?)?;
        }
        None => {
            let f = torus_signature_function(&c);
            for (a, b, v) in f.intervals() {
                writeln!(out, "({a},{b}): {v}")?;
            }
            writeln!(out, "integral: {}", f.integral())?;
        }
    }
    Ok((out, ADMISSIBLE))
}

fn check(path: &PathBuf) -> anyhow::Result<(String, u8)> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let scenario = parse_scenario(&text)
        .with_context(|| format!("invalid scenario file {}", path.display()))?;
    let report = full_report(&scenario);
    let code = if report.is_admissible() {
        ADMISSIBLE
    } else {
        OBSTRUCTED
    };
    Ok((report_to_json(&report) + "\n", code))
}

fn enumerate(
    p: u32,
    q: u32,
    budget: (u32, u32),
    count: bool,
    no_genus_formula: bool,
) -> anyhow::Result<(String, u8)> {
    let mut b = SearchBudget::new(CuspDescriptor::new(p, q)?, budget.0, budget.1);
    if no_genus_formula {
        b = b.without_genus_formula();
    }
    let results = enumerate_admissible(&b);
    let mut out = String::new();
    if count {
        writeln!(out, "{}", results.len())?;
    } else {
        for r in &results {
            let s = &r.scenario;
            let cusps: Vec<String> = s.cusps.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "cusps=[{}] genus={} double_points={}",
                cusps.join(" "),
                s.genus,
                s.double_points
            )?;
        }
    }
    Ok((out, ADMISSIBLE))
}

fn bmy(
    p: u32,
    q: u32,
    cusps: &[String],
    cusps_file: Option<&PathBuf>,
    double_points: u32,
) -> anyhow::Result<(String, u8)> {
    let cusps: Vec<CuspDescriptor> = match cusps_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            parse_cusp_list(&text)
                .with_context(|| format!("invalid cusp list {}", path.display()))?
        }
        None => cusps
            .iter()
            .map(|s| parse_pair(s))
            .collect::<anyhow::Result<_>>()?,
    };
    let check = bmy_check(p, q, &cusps, double_points)?;
    let mut out = String::new();
    writeln!(out, "left_side = {}", check.left_side)?;
    writeln!(out, "right_side = {}", check.right_side)?;
    writeln!(
        out,
        "verdict = {}",
        if check.verdict.holds() {
            "holds"
        } else {
            "fails"
        }
    )?;
    Ok((out, verdict_code(check.verdict)))
}

fn run(cli: Cli) -> anyhow::Result<(String, u8)> {
    match cli.command {
        Command::Invariants { p, q } => invariants(p, q),
        Command::Signature { p, q, at } => signature(p, q, at.as_deref()),
        Command::Check { path } => check(&path),
        Command::Enumerate {
            p,
            q,
            max_genus,
            max_double_points,
            count,
            no_genus_formula,
        } => enumerate(
            p,
            q,
            (max_genus, max_double_points),
            count,
            no_genus_formula,
        ),
        Command::Bmy {
            p,
            q,
            cusps,
            cusps_file,
            double_points,
        } => bmy(p, q, &cusps, cusps_file.as_ref(), double_points),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
