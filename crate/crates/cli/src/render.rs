//! Output rendering for the CLI: text and LaTeX as labeled lines, JSON as a
//! single document on stdout.

use asymptote_core::asymptote::{AsymptoteResult, ThetaTrace};
use asymptote_core::format::{
    format_matrix, format_polynomial, format_rational, matrix_to_json, polynomial_to_json,
    rational_to_json, Style,
};
use asymptote_core::matrix::CoefficientMatrix;
use asymptote_core::oracle::{CampaignReport, CheckFailure, CrossReport, FuzzConfig};
use asymptote_core::rational_function::RationalFunction;
use serde_json::{json, Value};
use std::fmt::Write;

/// The traces to display for a result. The division route computes none, so
/// when the caller wants them anyway (to show matrices), they are derived
/// after the fact; and recurrence traces get their matrices built on demand.
fn display_traces(rf: &RationalFunction, result: &AsymptoteResult, want: bool) -> Vec<ThetaTrace> {
    if !want || result.proper_fraction {
        return result.traces.clone();
    }
    let mut traces = if result.traces.is_empty() {
        asymptote_core::asymptote::asymptote_of(rf, asymptote_core::asymptote::Method::Determinant)
            .traces
    } else {
        result.traces.clone()
    };
    for t in &mut traces {
        if t.matrix.is_none() {
            t.matrix = Some(
                CoefficientMatrix::build(rf, t.alpha)
                    .expect("trace alphas never exceed the degree gap"),
            );
        }
    }
    traces
}

pub fn compute_text(
    rf: &RationalFunction,
    result: &AsymptoteResult,
    method_label: &str,
    style: Style,
    show_matrices: bool,
) -> String {
    let mut out = String::new();
    if result.proper_fraction {
        let _ = writeln!(
            out,
            "proper fraction: deg a < deg b, the asymptote is y = 0"
        );
    }
    let _ = writeln!(
        out,
        "asymptote: {}",
        format_polynomial(&result.asymptote, style)
    );
    let _ = writeln!(
        out,
        "remainder: {}",
        format_polynomial(&result.remainder, style)
    );
    let _ = writeln!(out, "method: {method_label}");
    if show_matrices {
        for t in display_traces(rf, result, true) {
            let _ = writeln!(
                out,
                "theta_{} = {}  (theta' = {}, det M_{} = {})",
                t.alpha,
                format_rational(&t.theta, style),
                format_rational(&t.theta_prime, style),
                t.alpha,
                format_rational(&t.det_value, style),
            );
            let matrix = t.matrix.as_ref().expect("display traces carry matrices");
            let _ = writeln!(out, "{}", format_matrix(matrix, style));
        }
    }
    out
}

pub fn compute_json(
    expression: &str,
    rf: &RationalFunction,
    result: &AsymptoteResult,
    method_label: &str,
    show_matrices: bool,
) -> Value {
    let traces: Vec<Value> = display_traces(rf, result, show_matrices)
        .iter()
        .map(|t| {
            let mut v = json!({
                "alpha": t.alpha,
                "det": rational_to_json(&t.det_value),
                "theta_prime": rational_to_json(&t.theta_prime),
                "theta": rational_to_json(&t.theta),
            });
            if show_matrices {
                if let Some(m) = &t.matrix {
                    v["matrix"] = matrix_to_json(m);
                }
            }
            v
        })
        .collect();
    json!({
        "input": expression,
        "canonical": rf.to_string(),
        "k": rf.degree_gap(),
        "proper_fraction": result.proper_fraction,
        "method": method_label,
        "asymptote": polynomial_to_json(&result.asymptote),
        "remainder": polynomial_to_json(&result.remainder),
        "traces": traces,
    })
}

fn failure_lines(out: &mut String, failures: &[CheckFailure]) {
    for f in failures {
        let _ = writeln!(out, "  [{}] {}", f.kind, f.detail);
    }
}

pub fn verify_text(report: &CrossReport, style: Style) -> String {
    let mut out = String::new();
    if report.pass() {
        let _ = writeln!(
            out,
            "all methods agree: {}",
            format_polynomial(&report.asymptote, style)
        );
        let _ = writeln!(
            out,
            "remainder: {}",
            format_polynomial(&report.remainder, style)
        );
        let _ = writeln!(out, "matrices cross-checked: {}", report.matrices_checked);
        let _ = writeln!(out, "cancellation indices checked: {}", report.lemma_checks);
    } else {
        let _ = writeln!(out, "verification failed: {}", report.input);
        failure_lines(&mut out, &report.failures);
    }
    out
}

pub fn verify_json(expression: &str, report: &CrossReport) -> Value {
    json!({
        "input": expression,
        "canonical": report.input,
        "pass": report.pass(),
        "asymptote": polynomial_to_json(&report.asymptote),
        "remainder": polynomial_to_json(&report.remainder),
        "matrices_checked": report.matrices_checked,
        "lemma_checks": report.lemma_checks,
        "failures": report.failures.iter().map(CheckFailure::to_json).collect::<Vec<_>>(),
    })
}

pub fn fuzz_text(config: &FuzzConfig, report: &CampaignReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "campaign: {} trials, max degree {}, coefficients in [-{}, {}], seed {}{}",
        config.trials,
        config.max_degree,
        config.coeff_bound,
        config.coeff_bound,
        config.seed,
        if config.allow_equal_degrees {
            ", equal degrees allowed"
        } else {
            ""
        },
    );
    let _ = writeln!(
        out,
        "checked: {} matrices, {} cancellation indices",
        report.matrices_checked, report.lemma_checks
    );
    let verdict = if report.pass() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "result: {verdict} ({} failures) in {:.2}s",
        report.failures.len(),
        report.elapsed.as_secs_f64()
    );
    failure_lines(&mut out, &report.failures);
    out
}

pub fn fuzz_json(config: &FuzzConfig, report: &CampaignReport) -> Value {
    let mut v = report.to_json();
    v["config"] = json!({
        "trials": config.trials,
        "max_degree": config.max_degree,
        "coeff_bound": config.coeff_bound,
        "seed": config.seed,
        "allow_equal_degrees": config.allow_equal_degrees,
    });
    v
}
