//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored lowest degree first, with the invariant that the
//! highest stored coefficient is nonzero; the zero polynomial stores nothing.
//! That makes degree a structural property and keeps equality exact.

use crate::rational::{DivisionByZero, Rational};
use std::ops::{Add, Mul, Neg, Sub};

/// Degree of a polynomial. The zero polynomial gets a dedicated value that
/// compares below every finite degree, so degree bounds like
/// `deg r < deg b` hold verbatim even when the remainder vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    /// Degree of the zero polynomial.
    NegInf,
    /// Degree of a nonzero polynomial.
    Of(usize),
}

impl Degree {
    /// The finite degree, or `None` for the zero polynomial.
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Of(d) => Some(d),
        }
    }
}

/// A univariate polynomial; `coeffs[d]` is the coefficient of `x^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients listed lowest degree first,
    /// normalizing away high-degree zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c·x^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Polynomial::new(coeffs)
    }

    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// Coefficients lowest degree first; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            len => Degree::Of(len - 1),
        }
    }

    /// Coefficient of `x^d` — exactly zero beyond the stored range, so
    /// callers can index freely without bounds bookkeeping.
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Euclidean division: returns `(q, r)` with `self = q·divisor + r` and
    /// `deg r < deg divisor`. Fails only when `divisor` is the zero
    /// polynomial.
    pub fn div_rem(
        &self,
        divisor: &Polynomial,
    ) -> Result<(Polynomial, Polynomial), DivisionByZero> {
        let lead = divisor.leading().ok_or(DivisionByZero)?;
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        // Peel off the leading term of the running remainder until its
        // degree drops below the divisor's.
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / lead;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] = &rem[i - d + j] - &(&q * b);
            }
            quot[i - d] = q;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|d| &self.coeff(d) + &rhs.coeff(d)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|d| &self.coeff(d) - &rhs.coeff(d)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
