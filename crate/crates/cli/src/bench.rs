//! The `bench` subcommand: per-degree timing of the three methods on one
//! shared random input, plus the peak coefficient bit-length as a measure of
//! how much exact arithmetic has to carry.

use asymptote_core::asymptote::{asymptote_of, AsymptoteResult, Method};
use asymptote_core::oracle::{random_polynomial, trial_rng};
use asymptote_core::rational::Rational;
use asymptote_core::rational_function::RationalFunction;
use serde_json::{json, Value};
use std::fmt::Write;
use std::time::Instant;

pub struct BenchRow {
    pub degree: usize,
    pub method: Method,
    pub micros_per_call: f64,
    pub peak_bits: u64,
}

/// Repetitions per timing: enough for stable numbers at small degrees
/// without letting big ones run for minutes.
fn reps_for(degree: usize) -> u32 {
    match degree {
        0..=8 => 200,
        9..=16 => 50,
        17..=32 => 10,
        _ => 3,
    }
}

/// Largest coefficient (in bits) anywhere in the result: traces, asymptote,
/// and remainder.
fn peak_bits(result: &AsymptoteResult) -> u64 {
    result
        .traces
        .iter()
        .flat_map(|t| {
            [
                t.theta.bit_length(),
                t.theta_prime.bit_length(),
                t.det_value.bit_length(),
            ]
        })
        .chain(result.asymptote.coeffs().iter().map(Rational::bit_length))
        .chain(result.remainder.coeffs().iter().map(Rational::bit_length))
        .max()
        .unwrap_or(0)
}

/// Benchmarks each degree with a numerator of that degree over a denominator
/// of half that degree (so the gap grows with the input). The three methods
/// are cross-checked before timing; a disagreement aborts the benchmark,
/// since timing wrong answers helps no one.
pub fn run(degrees: &[usize], coeff_bound: u64, seed: u64) -> Result<Vec<BenchRow>, String> {
    let mut rows = Vec::new();
    for &degree in degrees {
        let mut rng = trial_rng(seed, degree as u64);
        let numerator = random_polynomial(&mut rng, degree, coeff_bound);
        let denominator = random_polynomial(&mut rng, degree / 2, coeff_bound);
        let rf = RationalFunction::new(numerator, denominator)
            .expect("random polynomials have nonzero leading coefficients");
        let reference = asymptote_of(&rf, Method::Division);
        for method in Method::all() {
            let result = asymptote_of(&rf, method);
            if result.asymptote != reference.asymptote || result.remainder != reference.remainder {
                return Err(format!(
                    "methods disagree at degree {degree}: {} gave {}, division gave {}",
                    method, result.asymptote, reference.asymptote
                ));
            }
            let reps = reps_for(degree);
            let start = Instant::now();
            for _ in 0..reps {
                std::hint::black_box(asymptote_of(std::hint::black_box(&rf), method));
            }
            let micros_per_call = start.elapsed().as_secs_f64() * 1e6 / f64::from(reps);
            rows.push(BenchRow {
                degree,
                method,
                micros_per_call,
                peak_bits: peak_bits(&result),
            });
        }
    }
    Ok(rows)
}

pub fn to_text(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>6}  {:<11}  {:>12}  {:>9}",
        "degree", "method", "us/call", "peak bits"
    );
    for row in rows {
        let _ = writeln!(
            out,
            "{:>6}  {:<11}  {:>12.1}  {:>9}",
            row.degree,
            row.method.to_string(),
            row.micros_per_call,
            row.peak_bits
        );
    }
    out
}

pub fn to_json(rows: &[BenchRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                json!({
                    "degree": row.degree,
                    "method": row.method.to_string(),
                    "micros_per_call": row.micros_per_call,
                    "peak_bits": row.peak_bits,
                })
            })
            .collect(),
    )
}
