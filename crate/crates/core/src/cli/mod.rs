//! The `rpart` command line.
//!
//! Exit codes: 0 success, 1 failed check or runtime error, 2 usage error.

mod emit;
mod selftest;

use std::io::Write;

use clap::{Parser, Subcommand};

pub use emit::{emit, format_polynomial, Output};
pub use selftest::{random_set, run_selftest, SelftestOptions, SuiteOutcome, DEFAULT_SEED};

use crate::bernoulli::bernoulli_table;
use crate::denumerant::{count, count_range};
use crate::exactmath::DenominatorSet;
use crate::frobenius::{frobenius_number_with_limit, DEFAULT_SCAN_LIMIT};
use crate::polypart::{polypart, polypart_all, Method};
use crate::quasipoly::{
    average_zero_check_with, degree_drop_check_with, interpolate_quasipolynomial_with,
    InterpolationOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `--upto` accepted by `bernoulli`.
pub const MAX_BERNOULLI_INDEX: usize = 5_000;
/// Largest `t` accepted by `count`.
pub const MAX_COUNT_T: usize = 100_000_000;

const WARN_MAX_N: usize = 24;
const WARN_MAX_ELEMENT: u64 = 1_000_000;

fn parse_set(s: &str) -> Result<DenominatorSet, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    if s == "all" {
        return Ok(MethodChoice::All);
    }
    s.parse().map(MethodChoice::One)
}

fn bounded(max: usize) -> impl Fn(&str) -> Result<usize, String> + Clone {
    move |s| {
        let v: usize = s.parse().map_err(|e| format!("{e}"))?;
        if v > max {
            return Err(format!("{v} exceeds the limit {max}"));
        }
        Ok(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    All,
    One(Method),
}

#[derive(Parser, Debug, PartialEq, Eq)]
#[command(name = "rpart", version, about = "Restricted partition functions, exactly")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, PartialEq, Eq)]
pub enum Command {
    /// Bernoulli numbers B_0..B_K (B_1 = -1/2)
    Bernoulli {
        #[arg(long, value_parser = bounded(MAX_BERNOULLI_INDEX))]
        upto: usize,
        #[arg(long)]
        json: bool,
    },
    /// Polynomial part P_A(t)
    Ppart {
        #[arg(short = 'a', value_parser = parse_set)]
        a: DenominatorSet,
        /// compositions | powersums | series | pfrac | all
        #[arg(long, default_value = "all", value_parser = parse_method)]
        method: MethodChoice,
        #[arg(long)]
        json: bool,
    },
    /// Exact p_A(t) for one t or a table
    Count {
        #[arg(short = 'a', value_parser = parse_set)]
        a: DenominatorSet,
        #[arg(short = 't', conflicts_with = "upto", required_unless_present = "upto", value_parser = bounded(MAX_COUNT_T))]
        t: Option<usize>,
        #[arg(long, value_parser = bounded(MAX_COUNT_T))]
        upto: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Quasi-polynomial constituents of p_A modulo lcm(A)
    Quasi {
        #[arg(short = 'a', value_parser = parse_set)]
        a: DenominatorSet,
        #[arg(long)]
        json: bool,
        /// Skip the sample-count guard
        #[arg(long)]
        allow_expensive: bool,
    },
    /// Check the structure of Q_A = p_A - P_A
    Qcheck {
        #[arg(short = 'a', value_parser = parse_set)]
        a: DenominatorSet,
        #[arg(long)]
        allow_expensive: bool,
    },
    /// Frobenius number (largest t with p_A(t) = 0)
    Frobenius {
        #[arg(short = 'a', value_parser = parse_set)]
        a: DenominatorSet,
        #[arg(long)]
        gaps: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
        scan_limit: u64,
    },
    /// Randomized cross-checks of every method against the counting oracles
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, hide = true)]
        flip_b1: bool,
    },
}

/// Parses `argv` (including the program name). Help and version requests
/// come back as errors too; clap decides their exit code.
pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    CliConfig::try_parse_from(argv)
}

fn interpolation_options(allow_expensive: bool) -> InterpolationOptions {
    if allow_expensive {
        InterpolationOptions { sample_limit: None }
    } else {
        InterpolationOptions::default()
    }
}

fn warn_cost(a: &DenominatorSet, err: &mut dyn Write) {
    if a.len() > WARN_MAX_N || a.max() > WARN_MAX_ELEMENT {
        let _ = writeln!(
            err,
            "warning: {} elements, largest {}: this may take a long time",
            a.len(),
            a.max()
        );
    }
}

/// Executes a parsed command, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Box<dyn std::error::Error>> {
    match &config.command {
        Command::Bernoulli { upto, json } => {
            writeln!(out, "{}", emit(&Output::Bernoulli(&bernoulli_table(*upto)), *json))?;
            Ok(EXIT_OK)
        }
        Command::Ppart { a, method, json } => {
            warn_cost(a, err);
            match method {
                MethodChoice::One(m) => {
                    let r = polypart(a, *m);
                    let shown = Output::PolynomialPart {
                        a,
                        poly: &r.poly,
                        method: Some(*m),
                        methods_agree: None,
                    };
                    writeln!(out, "{}", emit(&shown, *json))?;
                    Ok(EXIT_OK)
                }
                MethodChoice::All => {
                    let cmp = polypart_all(a);
                    let agree = cmp.agree();
                    let shown = Output::PolynomialPart {
                        a,
                        poly: cmp.poly(),
                        method: None,
                        methods_agree: Some(agree),
                    };
                    writeln!(out, "{}", emit(&shown, *json))?;
                    if agree {
                        Ok(EXIT_OK)
                    } else {
                        for r in &cmp.results {
                            writeln!(err, "{}: {}", r.method, format_polynomial(&r.poly))?;
                        }
                        Ok(EXIT_FAILURE)
                    }
                }
            }
        }
        Command::Count { a, t, upto, json } => {
            let shown = match (t, upto) {
                (Some(t), _) => {
                    let c = count(a, *t);
                    writeln!(out, "{}", emit(&Output::Count { a, t: *t, count: &c }, *json))?;
                    return Ok(EXIT_OK);
                }
                (None, Some(upto)) => count_range(a, *upto),
                (None, None) => unreachable!("clap requires -t or --upto"),
            };
            writeln!(out, "{}", emit(&Output::CountTable(&shown), *json))?;
            Ok(EXIT_OK)
        }
        Command::Quasi {
            a,
            json,
            allow_expensive,
        } => {
            let quasi = interpolate_quasipolynomial_with(a, interpolation_options(*allow_expensive))?;
            writeln!(out, "{}", emit(&Output::Quasi(&quasi), *json))?;
            Ok(EXIT_OK)
        }
        Command::Qcheck { a, allow_expensive } => {
            let opts = interpolation_options(*allow_expensive);
            let mut code = EXIT_OK;
            match average_zero_check_with(a, opts) {
                Ok(r) if r.holds() => writeln!(
                    out,
                    "average-zero: pass ({} constant constituents, sum {})",
                    r.constants.len(),
                    r.sum
                )?,
                Ok(r) => {
                    code = EXIT_FAILURE;
                    writeln!(
                        out,
                        "average-zero: FAIL (all constant: {}, sum {})",
                        r.all_constant, r.sum
                    )?
                }
                Err(e) => {
                    code = EXIT_FAILURE;
                    writeln!(out, "average-zero: error: {e}")?
                }
            }
            match degree_drop_check_with(a, opts) {
                Ok(r) => {
                    let max = r.max_degree.map_or("-inf".to_string(), |d| d.to_string());
                    let bound = r.bound.map_or("-inf".to_string(), |b| b.to_string());
                    let verdict = if r.holds() { "pass" } else { "FAIL" };
                    if !r.holds() {
                        code = EXIT_FAILURE;
                    }
                    writeln!(out, "degree-drop: {verdict} (max degree {max}, bound {bound})")?
                }
                Err(e) => {
                    code = EXIT_FAILURE;
                    writeln!(out, "degree-drop: error: {e}")?
                }
            }
            if code != EXIT_OK {
                writeln!(err, "qcheck failed for A={a}")?;
            }
            Ok(code)
        }
        Command::Frobenius {
            a,
            gaps,
            json,
            scan_limit,
        } => {
            let result = frobenius_number_with_limit(a, *scan_limit)?;
            writeln!(out, "{}", emit(&Output::Frobenius { result: &result, gaps: *gaps }, *json))?;
            Ok(EXIT_OK)
        }
        Command::Selftest { seed, flip_b1 } => {
            let outcomes = run_selftest(SelftestOptions {
                seed: *seed,
                flip_b1: *flip_b1,
            });
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            Ok(if outcomes.iter().all(SuiteOutcome::ok) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
    }
}

/// Parses and runs in one step; what the binary calls.
pub fn main_with_args<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}
