//! Rational functions `a(x)/b(x)` and their degree bookkeeping.
//!
//! The coefficient conventions used throughout the asymptote machinery live
//! here: `n` is the numerator degree, `k = deg a − deg b` the degree gap, and
//! the indexed accessors [`RationalFunction::a`] / [`RationalFunction::b`]
//! return exact zeros outside the stored coefficient ranges so that formulas
//! can be transcribed with their natural index arithmetic.

use crate::poly::{Degree, Polynomial};
use crate::rational::Rational;
use std::fmt;

/// Error for a rational function whose denominator is the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroDenominator;

impl fmt::Display for ZeroDenominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("denominator is the zero polynomial")
    }
}

impl std::error::Error for ZeroDenominator {}

/// A quotient of polynomials. The denominator is never the zero polynomial;
/// the numerator may be anything, including zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, ZeroDenominator> {
        if denominator.is_zero() {
            return Err(ZeroDenominator);
        }
        Ok(RationalFunction {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn numerator_degree(&self) -> Degree {
        self.numerator.degree()
    }

    /// Denominator degree; always finite by the construction invariant.
    pub fn denominator_degree(&self) -> usize {
        self.denominator
            .degree()
            .finite()
            .expect("denominator is nonzero by construction")
    }

    /// The degree gap `k = deg a − deg b`, or `None` when the numerator is
    /// the zero polynomial. Negative gaps are proper fractions; `k ≥ 0` is
    /// the regime where a degree-k asymptote exists.
    pub fn degree_gap(&self) -> Option<i64> {
        let n = self.numerator.degree().finite()?;
        Some(n as i64 - self.denominator_degree() as i64)
    }

    /// Numerator coefficient `a_r`, with `a_r = 0` outside `0 ≤ r ≤ deg a`.
    pub fn a(&self, r: i64) -> Rational {
        if r < 0 {
            Rational::zero()
        } else {
            self.numerator.coeff(r as usize)
        }
    }

    /// Denominator coefficient `b_m`, with `b_m = 0` outside `0 ≤ m ≤ deg b`.
    pub fn b(&self, m: i64) -> Rational {
        if m < 0 {
            Rational::zero()
        } else {
            self.denominator.coeff(m as usize)
        }
    }

    /// Leading denominator coefficient; nonzero by construction.
    pub fn denominator_leading(&self) -> &Rational {
        self.denominator
            .leading()
            .expect("denominator is nonzero by construction")
    }
}

impl fmt::Display for RationalFunction {
    /// `(numerator)/(denominator)` — the parenthesized form the expression
    /// parser accepts back unambiguously.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}
