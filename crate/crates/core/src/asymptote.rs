//! Asymptote computation by three routes: signed determinants, a
//! determinant-free recurrence, and Euclidean division.
//!
//! For f(x) = a(x)/b(x) with degree gap k ≥ 0, the asymptote is
//!
//! ```text
//! g(x) = Σ_{α=0}^{k} θ_α · x^{k−α},    θ_α = (−1)^α · det(M_α) / b_{n−k}^{α+1}
//! ```
//!
//! where `M_α` is the coefficient matrix from [`crate::matrix`]. The scaled
//! values θ'_α = (−1)^α·det(M_α) = θ_α·b_{n−k}^{α+1} are integers whenever
//! the input coefficients are, and satisfy the recurrence
//!
//! ```text
//! θ'_0 = a_n
//! θ'_j = a_{n−j}·b_{n−k}^j − Σ_{m=0}^{j−1} b_{n−k−(j−m)} · b_{n−k}^{j−1−m} · θ'_m
//! ```
//!
//! which computes all of them in O(k²) coefficient operations with no
//! determinant in sight. Both routes must agree with each other and with
//! plain polynomial division — that agreement is this crate's central
//! invariant, enforced by [`crate::oracle`].

use crate::matrix::{CoefficientMatrix, MatrixError};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::rational_function::RationalFunction;
use std::fmt;

/// Which algorithm produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Signed determinants of the coefficient matrices `M_α`.
    Determinant,
    /// The O(k²) recurrence on the scaled coefficients θ'.
    Recurrence,
    /// Euclidean polynomial division; the independent oracle.
    Division,
}

impl Method {
    /// All methods, in the order results are cross-compared and printed.
    pub fn all() -> [Method; 3] {
        [Method::Determinant, Method::Recurrence, Method::Division]
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Determinant => "determinant",
            Method::Recurrence => "recurrence",
            Method::Division => "division",
        })
    }
}

/// One asymptote coefficient with the intermediate values that produced it:
/// θ_α is the coefficient of x^{k−α} in the asymptote, θ'_α the scaled
/// integer-friendly form, and `det_value` the determinant det(M_α) before
/// the (−1)^α sign. `matrix` is populated by the determinant route only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaTrace {
    pub alpha: usize,
    pub theta: Rational,
    pub theta_prime: Rational,
    pub det_value: Rational,
    pub matrix: Option<CoefficientMatrix>,
}

/// The asymptote of a rational function, with enough context to audit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoteResult {
    /// The asymptote polynomial g; degree k for k ≥ 0, zero for proper
    /// fractions.
    pub asymptote: Polynomial,
    /// Exact remainder r = a − g·b, so that f = g + r/b.
    pub remainder: Polynomial,
    pub method: Method,
    /// Per-α traces, empty for the division route and for proper fractions.
    pub traces: Vec<ThetaTrace>,
    /// True when deg a < deg b: f already tends to 0, the horizontal
    /// asymptote is y = 0, and no coefficient machinery applies.
    pub proper_fraction: bool,
}

/// θ_α (and its trace) by the determinant formula. Fails only when `alpha`
/// exceeds the degree gap.
pub fn theta_det(rf: &RationalFunction, alpha: usize) -> Result<ThetaTrace, MatrixError> {
    let matrix = CoefficientMatrix::build(rf, alpha)?;
    let det_value = matrix
        .det_hessenberg()
        .expect("built coefficient matrices are upper Hessenberg");
    let theta_prime = if alpha % 2 == 1 {
        -&det_value
    } else {
        det_value.clone()
    };
    let theta = &theta_prime / &rf.denominator_leading().pow(alpha as u32 + 1);
    Ok(ThetaTrace {
        alpha,
        theta,
        theta_prime,
        det_value,
        matrix: Some(matrix),
    })
}

/// All θ_0..θ_k by the recurrence, cheapest route first. Panics if the
/// degree gap is negative or undefined; [`asymptote_of`] screens that case
/// out before calling.
pub fn theta_recurrence_all(rf: &RationalFunction) -> Vec<ThetaTrace> {
    let k = rf
        .degree_gap()
        .filter(|&k| k >= 0)
        .expect("theta recurrence requires degree gap k >= 0");
    let n = rf
        .numerator_degree()
        .finite()
        .expect("gap exists, so the numerator is nonzero") as i64;
    let b_lead = rf.denominator_leading();
    let mut traces: Vec<ThetaTrace> = Vec::with_capacity(k as usize + 1);
    for j in 0..=k {
        let theta_prime = if j == 0 {
            rf.a(n)
        } else {
            let mut sum = Rational::zero();
            for (m, prev) in traces.iter().enumerate() {
                let m = m as i64;
                let band = rf.b(n - k - (j - m));
                if band.is_zero() {
                    continue;
                }
                let term = &(&band * &b_lead.pow((j - 1 - m) as u32)) * &prev.theta_prime;
                sum = &sum + &term;
            }
            &(&rf.a(n - j) * &b_lead.pow(j as u32)) - &sum
        };
        let theta = &theta_prime / &b_lead.pow(j as u32 + 1);
        // θ' = (−1)^α·det(M_α), so the determinant this trace implies is
        // recovered by undoing the sign.
        let det_value = if j % 2 == 1 {
            -&theta_prime
        } else {
            theta_prime.clone()
        };
        traces.push(ThetaTrace {
            alpha: j as usize,
            theta,
            theta_prime,
            det_value,
            matrix: None,
        });
    }
    traces
}

/// Computes the asymptote of `rf` by the requested method. Total on every
/// input: proper fractions (deg a < deg b, including a zero numerator) yield
/// g = 0 with the numerator itself as remainder.
pub fn asymptote_of(rf: &RationalFunction, method: Method) -> AsymptoteResult {
    let k = match rf.degree_gap() {
        Some(k) if k >= 0 => k as usize,
        _ => {
            return AsymptoteResult {
                asymptote: Polynomial::zero(),
                remainder: rf.numerator().clone(),
                method,
                traces: Vec::new(),
                proper_fraction: true,
            }
        }
    };
    match method {
        Method::Division => {
            let (q, r) = rf
                .numerator()
                .div_rem(rf.denominator())
                .expect("denominator is nonzero by construction");
            AsymptoteResult {
                asymptote: q,
                remainder: r,
                method,
                traces: Vec::new(),
                proper_fraction: false,
            }
        }
        Method::Determinant => {
            let traces = (0..=k)
                .map(|alpha| theta_det(rf, alpha).expect("alpha ranges over 0..=k"))
                .collect();
            assemble(rf, k, traces, method)
        }
        Method::Recurrence => assemble(rf, k, theta_recurrence_all(rf), method),
    }
}

/// Lays the θ coefficients into g(x) = Σ θ_α·x^{k−α} and forms the exact
/// remainder a − g·b.
fn assemble(
    rf: &RationalFunction,
    k: usize,
    traces: Vec<ThetaTrace>,
    method: Method,
) -> AsymptoteResult {
    let mut coeffs = vec![Rational::zero(); k + 1];
    for t in &traces {
        coeffs[k - t.alpha] = t.theta.clone();
    }
    let asymptote = Polynomial::new(coeffs);
    let remainder = rf.numerator() - &(&asymptote * rf.denominator());
    AsymptoteResult {
        asymptote,
        remainder,
        method,
        traces,
        proper_fraction: false,
    }
}

/// Error for a cancellation check at an index outside 1..=k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiOutOfRange {
    pub phi: usize,
    pub gap: Option<i64>,
}

impl fmt::Display for PhiOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gap {
            Some(k) => write!(f, "phi = {} is outside 1..={k}", self.phi),
            None => write!(f, "phi = {} is undefined: the numerator is zero", self.phi),
        }
    }
}

impl std::error::Error for PhiOutOfRange {}

/// The telescoped difference whose collapse drives the whole construction:
///
/// ```text
/// E_φ(x) = b_{n−k}^φ·a(x) − b(x) · Σ_{α=0}^{φ−1} b_{n−k}^{φ−1−α}·θ'_α·x^{k−α}
/// ```
///
/// Subtracting the partial asymptote built from θ'_0..θ'_{φ−1} kills every
/// numerator term above degree n−φ, and the coefficient landing at degree
/// n−φ is exactly θ'_φ. [`check_lemma21`] verifies both facts.
pub fn lemma21_expression(rf: &RationalFunction, phi: usize) -> Result<Polynomial, PhiOutOfRange> {
    let gap = rf.degree_gap();
    let k = match gap {
        Some(k) if k >= 0 && phi >= 1 && (phi as i64) <= k => k as usize,
        _ => return Err(PhiOutOfRange { phi, gap }),
    };
    let b_lead = rf.denominator_leading();
    let traces = theta_recurrence_all(rf);
    let lhs = rf.numerator().scale(&b_lead.pow(phi as u32));
    let mut partial = vec![Rational::zero(); k + 1];
    for (alpha, trace) in traces.iter().take(phi).enumerate() {
        partial[k - alpha] = &b_lead.pow((phi - 1 - alpha) as u32) * &trace.theta_prime;
    }
    let partial = Polynomial::new(partial);
    Ok(&lhs - &(rf.denominator() * &partial))
}

/// Outcome of one cancellation check at index φ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma21Report {
    pub phi: usize,
    /// Degrees above n−φ where the expression failed to vanish. Empty in a
    /// passing report.
    pub violations: Vec<usize>,
    /// The coefficient actually found at degree n−φ.
    pub surviving: Rational,
    /// What that coefficient must equal: θ'_φ.
    pub expected: Rational,
    pub pass: bool,
}

/// Checks the cancellation property at index φ: every coefficient of
/// [`lemma21_expression`] above degree n−φ is exactly zero, and the
/// coefficient at degree n−φ equals θ'_φ.
pub fn check_lemma21(rf: &RationalFunction, phi: usize) -> Result<Lemma21Report, PhiOutOfRange> {
    let expr = lemma21_expression(rf, phi)?;
    let n = rf
        .numerator_degree()
        .finite()
        .expect("lemma21_expression verified the numerator is nonzero");
    let traces = theta_recurrence_all(rf);
    let expected = traces[phi].theta_prime.clone();
    let surviving = expr.coeff(n - phi);
    let violations: Vec<usize> = (n - phi + 1..=n)
        .filter(|&d| !expr.coeff(d).is_zero())
        .collect();
    let pass = violations.is_empty() && surviving == expected;
    Ok(Lemma21Report {
        phi,
        violations,
        surviving,
        expected,
        pass,
    })
}
