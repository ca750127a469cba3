//! `asymptote` — exact asymptotes of rational polynomial functions.
//!
//! Subcommands:
//! * `compute` — the asymptote of one expression, by a chosen method.
//! * `verify` — run every method and cross-check on one expression.
//! * `fuzz` — a randomized cross-validation campaign.
//! * `bench` — timing and coefficient-growth comparison across degrees.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
//! 3 semantic error (zero denominator).

mod bench;
mod render;

use asymptote_core::asymptote::{asymptote_of, AsymptoteResult, Method};
use asymptote_core::format::Style;
use asymptote_core::oracle::{cross_validate, run_campaign, FuzzConfig};
use asymptote_core::parse::{parse_rational_function, ExprError};
use asymptote_core::rational_function::RationalFunction;
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_OK: i32 = 0;
const EXIT_VERIFICATION: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_SEMANTIC: i32 = 3;

#[derive(Parser)]
#[command(
    name = "asymptote",
    version,
    about = "Exact horizontal, oblique, and curvilinear asymptotes of rational functions",
    after_help = "Expressions look like \"(8x^3+7)/(x-4)\". Parenthesize the numerator and \
                  denominator whenever the input has more than one '/'; a bare polynomial is \
                  taken over the denominator 1."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the asymptote of a rational function expression
    Compute {
        /// Expression, e.g. "(5x^3+13x^2+3x+9)/(4x^2+5x+7)"
        expression: String,
        /// Algorithm to use
        #[arg(long, value_enum, default_value_t = MethodArg::Determinant)]
        method: MethodArg,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Show each coefficient matrix with its determinant and theta
        #[arg(long)]
        show_matrices: bool,
    },
    /// Run all methods and every cross-check on one expression
    Verify {
        /// Expression, e.g. "(8x^3+7)/(x-4)"
        expression: String,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Cross-validate randomly generated rational functions
    Fuzz {
        /// Number of random functions to check
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Maximum numerator degree
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        /// Coefficients are drawn from [-coeff-bound, coeff-bound]
        #[arg(long, default_value_t = 99)]
        coeff_bound: u64,
        /// Campaign seed; equal seeds reproduce equal reports
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also generate functions with equal numerator and denominator
        /// degrees (horizontal asymptotes)
        #[arg(long)]
        allow_equal_degrees: bool,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Compare method timings and coefficient growth across degrees
    Bench {
        /// Comma-separated numerator degrees, e.g. 4,8,16,32
        #[arg(long, required = true, value_delimiter = ',')]
        degrees: Vec<usize>,
        /// Coefficients are drawn from [-coeff-bound, coeff-bound]
        #[arg(long, default_value_t = 99)]
        coeff_bound: u64,
        /// Seed for the benchmark inputs
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Determinant,
    Recurrence,
    Division,
    /// Run all three and require agreement
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Latex,
    Json,
}

impl FormatArg {
    fn style(self) -> Style {
        match self {
            FormatArg::Text => Style::Text,
            FormatArg::Latex => Style::Latex,
            FormatArg::Json => Style::Json,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run_cli(cli));
}

fn run_cli(cli: Cli) -> i32 {
    match cli.command {
        Command::Compute {
            expression,
            method,
            format,
            show_matrices,
        } => compute(&expression, method, format, show_matrices),
        Command::Verify { expression, format } => verify(&expression, format),
        Command::Fuzz {
            trials,
            max_degree,
            coeff_bound,
            seed,
            allow_equal_degrees,
            format,
        } => fuzz(
            FuzzConfig {
                trials,
                max_degree,
                coeff_bound,
                seed,
                allow_equal_degrees,
            },
            format,
        ),
        Command::Bench {
            degrees,
            coeff_bound,
            seed,
            format,
        } => run_bench(&degrees, coeff_bound, seed, format),
    }
}

/// Parses the expression argument, mapping the two error classes onto their
/// exit codes and printing a caret diagnostic for syntax errors.
fn parse_expression(expression: &str) -> Result<RationalFunction, i32> {
    match parse_rational_function(expression) {
        Ok(rf) => Ok(rf),
        Err(ExprError::DenominatorZero { position }) => {
            eprintln!("error: denominator is the zero polynomial (at char {position})");
            Err(EXIT_SEMANTIC)
        }
        Err(ExprError::Parse(e)) => {
            eprintln!("error: {e}");
            if !expression.contains('\n') && expression.chars().count() <= 200 {
                eprintln!("  {expression}");
                eprintln!("  {}^", " ".repeat(e.position));
            }
            Err(EXIT_PARSE)
        }
    }
}

fn compute(expression: &str, method: MethodArg, format: FormatArg, show_matrices: bool) -> i32 {
    let rf = match parse_expression(expression) {
        Ok(rf) => rf,
        Err(code) => return code,
    };
    let (result, label) = match method {
        MethodArg::All => {
            let results: Vec<AsymptoteResult> = Method::all()
                .iter()
                .map(|&m| asymptote_of(&rf, m))
                .collect();
            let agree = results
                .windows(2)
                .all(|w| w[0].asymptote == w[1].asymptote && w[0].remainder == w[1].remainder);
            if !agree {
                eprintln!("error: methods disagree on {expression}");
                for r in &results {
                    eprintln!("  {}: {} remainder {}", r.method, r.asymptote, r.remainder);
                }
                return EXIT_VERIFICATION;
            }
            // agreement established; report the determinant run, which
            // carries the full traces
            (
                results.into_iter().next().expect("three methods ran"),
                "all".to_string(),
            )
        }
        MethodArg::Determinant => (asymptote_of(&rf, Method::Determinant), "determinant".into()),
        MethodArg::Recurrence => (asymptote_of(&rf, Method::Recurrence), "recurrence".into()),
        MethodArg::Division => (asymptote_of(&rf, Method::Division), "division".into()),
    };
    match format {
        FormatArg::Json => {
            println!(
                "{}",
                render::compute_json(expression, &rf, &result, &label, show_matrices)
            );
        }
        _ => {
            print!(
                "{}",
                render::compute_text(&rf, &result, &label, format.style(), show_matrices)
            );
        }
    }
    EXIT_OK
}

fn verify(expression: &str, format: FormatArg) -> i32 {
    let rf = match parse_expression(expression) {
        Ok(rf) => rf,
        Err(code) => return code,
    };
    let report = cross_validate(&rf);
    match format {
        FormatArg::Json => println!("{}", render::verify_json(expression, &report)),
        _ => print!("{}", render::verify_text(&report, format.style())),
    }
    if report.pass() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

fn fuzz(config: FuzzConfig, format: FormatArg) -> i32 {
    let report = match run_campaign(&config) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    match format {
        FormatArg::Json => println!("{}", render::fuzz_json(&config, &report)),
        _ => print!("{}", render::fuzz_text(&config, &report)),
    }
    if report.pass() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

fn run_bench(degrees: &[usize], coeff_bound: u64, seed: u64, format: FormatArg) -> i32 {
    match bench::run(degrees, coeff_bound, seed) {
        Ok(rows) => {
            match format {
                FormatArg::Json => println!("{}", bench::to_json(&rows)),
                _ => print!("{}", bench::to_text(&rows)),
            }
            EXIT_OK
        }
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_VERIFICATION
        }
    }
}
