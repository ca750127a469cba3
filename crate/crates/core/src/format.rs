//! Rendering of rationals, polynomials, and matrices as plain text, LaTeX,
//! or JSON.
//!
//! The text form is the canonical one: it is what `Display` produces and it
//! round-trips through [`crate::parse::parse_polynomial`] exactly. Fractional
//! coefficients on variable terms are parenthesized — `(5/4)x+27/16` — so
//! the printed string has only one reading.

use crate::matrix::CoefficientMatrix;
use crate::poly::Polynomial;
use crate::rational::Rational;
use serde_json::{json, Value};
use std::fmt;

/// Output style for the formatting entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
    Json,
}

/// JSON form of a rational: numerator and denominator as decimal strings,
/// so arbitrary-precision values survive consumers that only have f64.
pub fn rational_to_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

/// JSON form of a polynomial: coefficients listed lowest degree first. The
/// zero polynomial has an empty coefficient list.
pub fn polynomial_to_json(p: &Polynomial) -> Value {
    json!({ "coefficients": p.coeffs().iter().map(rational_to_json).collect::<Vec<_>>() })
}

fn rational_to_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
    }
}

pub fn format_rational(r: &Rational, style: Style) -> String {
    match style {
        Style::Text => r.to_string(),
        Style::Latex => rational_to_latex(r),
        Style::Json => rational_to_json(r).to_string(),
    }
}

/// One term's variable part: `""`, `"x"`, or `"x^d"`. LaTeX braces the
/// exponent once it has more than one digit.
fn power(d: usize, style: Style) -> String {
    match (d, style) {
        (0, _) => String::new(),
        (1, _) => "x".into(),
        (d, Style::Latex) if d >= 10 => format!("x^{{{d}}}"),
        (d, _) => format!("x^{d}"),
    }
}

fn polynomial_to_text(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for d in (0..p.coeffs().len()).rev() {
        let c = p.coeff(d);
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if d == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                if mag.is_integer() {
                    out.push_str(&mag.to_string());
                } else {
                    out.push_str(&format!("({})", mag));
                }
            }
            out.push_str(&power(d, Style::Text));
        }
    }
    out
}

fn polynomial_to_latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for d in (0..p.coeffs().len()).rev() {
        let c = p.coeff(d);
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if d == 0 {
            out.push_str(&rational_to_latex(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&rational_to_latex(&mag));
            }
            out.push_str(&power(d, Style::Latex));
        }
    }
    out
}

pub fn format_polynomial(p: &Polynomial, style: Style) -> String {
    match style {
        Style::Text => polynomial_to_text(p),
        Style::Latex => polynomial_to_latex(p),
        Style::Json => polynomial_to_json(p).to_string(),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&polynomial_to_text(self))
    }
}

/// JSON form of a matrix: an array of row arrays of rationals.
pub fn matrix_to_json(m: &CoefficientMatrix) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(rational_to_json).collect()))
            .collect(),
    )
}

pub fn format_matrix(m: &CoefficientMatrix, style: Style) -> String {
    match style {
        Style::Json => matrix_to_json(m).to_string(),
        Style::Latex => {
            let body = m
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(rational_to_latex)
                        .collect::<Vec<_>>()
                        .join(" & ")
                })
                .collect::<Vec<_>>()
                .join(" \\\\ ");
            format!("\\begin{{vmatrix}} {body} \\end{{vmatrix}}")
        }
        Style::Text => {
            let cells: Vec<Vec<String>> = m
                .rows()
                .iter()
                .map(|row| row.iter().map(Rational::to_string).collect())
                .collect();
            let widths: Vec<usize> = (0..m.size())
                .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
                .collect();
            cells
                .iter()
                .map(|row| {
                    let line = row
                        .iter()
                        .zip(&widths)
                        .map(|(cell, &w)| format!("{cell:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ");
                    format!("[ {line} ]")
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}
