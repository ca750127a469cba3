//! Independent verification: residuals, cross-method agreement, and
//! randomized campaigns.
//!
//! Nothing here trusts the code under test. The division route knows nothing
//! about coefficient matrices; the determinant route is checked against a
//! second determinant algorithm; the recurrence is checked against the
//! determinants it claims to equal; and the cancellation identity is checked
//! coefficient-by-coefficient on the exact expression. A disagreement
//! anywhere is a [`CheckFailure`] naming the offending input, which is all a
//! regression hunt needs to reproduce it.
//!
//! Campaigns are deterministic: trial i draws from stream i of a counter-mode
//! generator seeded by the campaign seed, so reports are identical whether
//! trials run serially or in parallel.

use crate::asymptote::{asymptote_of, check_lemma21, Method};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::rational_function::RationalFunction;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fmt;
use std::time::{Duration, Instant};

/// The difference f − g as a rational function over f's denominator:
/// (a − g·b)/b, exactly. For the true asymptote its numerator has degree
/// strictly below deg b, which is precisely why f − g → 0 at ±∞; for a wrong
/// g the numerator degree reaches deg b or above and the difference diverges
/// or tends to a nonzero constant.
pub fn residual(rf: &RationalFunction, g: &Polynomial) -> RationalFunction {
    let numerator = rf.numerator() - &(g * rf.denominator());
    RationalFunction::new(numerator, rf.denominator().clone())
        .expect("denominator is unchanged, hence nonzero")
}

/// One row of a residual-decay table: the residual evaluated exactly at a
/// sample point, or `None` where the denominator vanishes (a pole).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecayRow {
    pub x: Rational,
    pub value: Option<Rational>,
}

/// Evaluates f − g exactly at each sample point. With the true asymptote the
/// values shrink toward zero as the points grow; no floating point, no
/// tolerance — callers can inspect the exact rationals.
pub fn residual_decay_table(
    rf: &RationalFunction,
    g: &Polynomial,
    points: &[Rational],
) -> Vec<DecayRow> {
    let r = residual(rf, g);
    points
        .iter()
        .map(|x| {
            let den = r.denominator().eval(x);
            let value = if den.is_zero() {
                None
            } else {
                Some(&r.numerator().eval(x) / &den)
            };
            DecayRow {
                x: x.clone(),
                value,
            }
        })
        .collect()
}

/// Default sample points for decay tables: powers of ten from 10 to 10^6.
pub fn default_decay_points() -> Vec<Rational> {
    (1..=6)
        .map(|e| Rational::from_integer(10i64.pow(e)))
        .collect()
}

/// Which cross-check a failure came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// Determinant, recurrence, and division disagreed on the result.
    MethodEquivalence,
    /// The two determinant algorithms disagreed on some `M_α`.
    DeterminantOracle,
    /// The cancellation identity failed at some φ.
    CancellationIdentity,
    /// The recurrence's θ'_α differed from (−1)^α·det(M_α).
    RecurrenceMatchesDeterminants,
    /// A remainder's degree reached the denominator's.
    RemainderBound,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::MethodEquivalence => "method-equivalence",
            CheckKind::DeterminantOracle => "determinant-oracle",
            CheckKind::CancellationIdentity => "cancellation-identity",
            CheckKind::RecurrenceMatchesDeterminants => "recurrence-vs-determinant",
            CheckKind::RemainderBound => "remainder-bound",
        })
    }
}

/// One failed check, with the input that provoked it (as a string the CLI
/// and the parser both accept) and a human-readable account of the mismatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub kind: CheckKind,
    pub input: String,
    pub detail: String,
}

impl CheckFailure {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.to_string(),
            "input": self.input,
            "detail": self.detail,
        })
    }
}

/// Everything cross-validation established about one rational function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossReport {
    /// The input, printed in re-parseable form.
    pub input: String,
    /// The agreed asymptote (the division route's, if methods disagree).
    pub asymptote: Polynomial,
    pub remainder: Polynomial,
    /// Matrices whose two determinant evaluations were compared.
    pub matrices_checked: usize,
    /// Cancellation-identity indices φ checked.
    pub lemma_checks: usize,
    pub failures: Vec<CheckFailure>,
}

impl CrossReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every check this crate knows on a single rational function:
/// all three methods agree, both determinant algorithms agree on every `M_α`,
/// the recurrence reproduces the signed determinants, the cancellation
/// identity holds for every φ in 1..=k, and the remainder degree is below
/// the denominator degree.
pub fn cross_validate(rf: &RationalFunction) -> CrossReport {
    let input = rf.to_string();
    let mut failures = Vec::new();

    let det = asymptote_of(rf, Method::Determinant);
    let rec = asymptote_of(rf, Method::Recurrence);
    let div = asymptote_of(rf, Method::Division);

    for other in [&det, &rec] {
        if other.asymptote != div.asymptote || other.remainder != div.remainder {
            failures.push(CheckFailure {
                kind: CheckKind::MethodEquivalence,
                input: input.clone(),
                detail: format!(
                    "{} gave g = {}, r = {}; division gave g = {}, r = {}",
                    other.method, other.asymptote, other.remainder, div.asymptote, div.remainder
                ),
            });
        }
    }

    if !(div.remainder.degree() < rf.denominator().degree()) {
        failures.push(CheckFailure {
            kind: CheckKind::RemainderBound,
            input: input.clone(),
            detail: format!(
                "remainder {} does not drop below the denominator degree {}",
                div.remainder,
                rf.denominator_degree()
            ),
        });
    }

    let mut matrices_checked = 0;
    let mut lemma_checks = 0;
    if let Some(k) = rf.degree_gap().filter(|&k| k >= 0) {
        let k = k as usize;
        for (alpha, trace) in det.traces.iter().enumerate() {
            let matrix = trace
                .matrix
                .as_ref()
                .expect("determinant traces carry matrices");
            let by_elimination = matrix.det_fraction_free();
            matrices_checked += 1;
            if by_elimination != trace.det_value {
                failures.push(CheckFailure {
                    kind: CheckKind::DeterminantOracle,
                    input: input.clone(),
                    detail: format!(
                        "det(M_{alpha}): Hessenberg recurrence gave {}, elimination gave {}",
                        trace.det_value, by_elimination
                    ),
                });
            }
            if rec.traces[alpha].theta_prime != trace.theta_prime {
                failures.push(CheckFailure {
                    kind: CheckKind::RecurrenceMatchesDeterminants,
                    input: input.clone(),
                    detail: format!(
                        "theta'_{alpha}: recurrence gave {}, signed determinant gave {}",
                        rec.traces[alpha].theta_prime, trace.theta_prime
                    ),
                });
            }
        }
        for phi in 1..=k {
            let report = check_lemma21(rf, phi).expect("phi ranges over 1..=k");
            lemma_checks += 1;
            if !report.pass {
                failures.push(CheckFailure {
                    kind: CheckKind::CancellationIdentity,
                    input: input.clone(),
                    detail: format!(
                        "phi = {phi}: surviving coefficient {} (expected {}), nonzero at degrees {:?}",
                        report.surviving, report.expected, report.violations
                    ),
                });
            }
        }
    }

    CrossReport {
        input,
        asymptote: div.asymptote,
        remainder: div.remainder,
        matrices_checked,
        lemma_checks,
        failures,
    }
}

/// Configuration of a randomized campaign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    /// Number of random rational functions to generate and cross-validate.
    pub trials: u64,
    /// Maximum numerator degree, inclusive.
    pub max_degree: usize,
    /// Coefficients are drawn uniformly from [−coeff_bound, coeff_bound].
    pub coeff_bound: u64,
    /// Campaign seed; equal seeds give equal reports.
    pub seed: u64,
    /// When set, the denominator degree may equal the numerator's (k = 0,
    /// horizontal asymptotes); by default it is kept strictly smaller.
    pub allow_equal_degrees: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            trials: 1000,
            max_degree: 8,
            coeff_bound: 99,
            seed: 42,
            allow_equal_degrees: false,
        }
    }
}

/// Rejected campaign configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfigError {
    ZeroTrials,
    ZeroMaxDegree,
    ZeroCoeffBound,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigError::ZeroTrials => "trials must be at least 1",
            ConfigError::ZeroMaxDegree => "max degree must be at least 1",
            ConfigError::ZeroCoeffBound => "coefficient bound must be at least 1",
        })
    }
}

impl std::error::Error for ConfigError {}

/// Outcome of a campaign. Equal configurations produce equal reports —
/// including failure order — regardless of how trials were scheduled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignReport {
    pub trials_run: u64,
    pub matrices_checked: u64,
    pub lemma_checks: u64,
    pub failures: Vec<CheckFailure>,
    /// Wall-clock time; excluded from JSON so reports stay reproducible.
    pub elapsed: Duration,
}

impl CampaignReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// JSON form of the report. Deliberately omits `elapsed`: two runs of
    /// the same campaign must serialize identically.
    pub fn to_json(&self) -> Value {
        json!({
            "trials": self.trials_run,
            "matrices_checked": self.matrices_checked,
            "lemma_checks": self.lemma_checks,
            "failures": self.failures.iter().map(CheckFailure::to_json).collect::<Vec<_>>(),
        })
    }
}

/// The generator for trial `index` of a campaign: one stream per trial, so
/// trials are independent of scheduling order.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A random polynomial of exactly the given degree with integer coefficients
/// in [−bound, bound] and a nonzero leading coefficient.
pub fn random_polynomial(rng: &mut impl Rng, degree: usize, bound: u64) -> Polynomial {
    let b = bound as i64;
    let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-b..=b)).collect();
    while coeffs[degree] == 0 {
        coeffs[degree] = rng.gen_range(-b..=b);
    }
    Polynomial::from_ints(&coeffs)
}

/// A random rational function with numerator degree in 0..=max_degree (at
/// least 1 when equal degrees are disallowed, so a smaller denominator
/// degree exists) and denominator degree from 0 up to the numerator's.
pub fn random_rational_function(
    rng: &mut impl Rng,
    max_degree: usize,
    bound: u64,
    allow_equal_degrees: bool,
) -> RationalFunction {
    let min_num = if allow_equal_degrees { 0 } else { 1 };
    let n = rng.gen_range(min_num..=max_degree);
    let max_den = if allow_equal_degrees { n } else { n - 1 };
    let d = rng.gen_range(0..=max_den);
    RationalFunction::new(
        random_polynomial(rng, n, bound),
        random_polynomial(rng, d, bound),
    )
    .expect("a nonzero leading coefficient makes the denominator nonzero")
}

/// Runs `config.trials` random cross-validations, in parallel. Failures are
/// reported in trial order.
pub fn run_campaign(config: &FuzzConfig) -> Result<CampaignReport, ConfigError> {
    if config.trials == 0 {
        return Err(ConfigError::ZeroTrials);
    }
    if config.max_degree == 0 {
        return Err(ConfigError::ZeroMaxDegree);
    }
    if config.coeff_bound == 0 {
        return Err(ConfigError::ZeroCoeffBound);
    }
    let start = Instant::now();
    let reports: Vec<CrossReport> = (0..config.trials)
        .into_par_iter()
        .map(|index| {
            let mut rng = trial_rng(config.seed, index);
            let rf = random_rational_function(
                &mut rng,
                config.max_degree,
                config.coeff_bound,
                config.allow_equal_degrees,
            );
            cross_validate(&rf)
        })
        .collect();
    let mut failures = Vec::new();
    let mut matrices_checked = 0u64;
    let mut lemma_checks = 0u64;
    for report in reports {
        matrices_checked += report.matrices_checked as u64;
        lemma_checks += report.lemma_checks as u64;
        failures.extend(report.failures);
    }
    Ok(CampaignReport {
        trials_run: config.trials,
        matrices_checked,
        lemma_checks,
        failures,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(num), Polynomial::from_ints(den)).unwrap()
    }

    #[test]
    fn residual_of_the_true_asymptote_is_proper() {
        // (8x^3+7)/(x−4) minus 8x^2+32x+128 leaves 519/(x−4)
        let f = rf(&[7, 0, 0, 8], &[-4, 1]);
        let g = Polynomial::from_ints(&[128, 32, 8]);
        let r = residual(&f, &g);
        assert_eq!(r.numerator(), &Polynomial::from_ints(&[519]));
        assert!(r.numerator().degree() < f.denominator().degree());
    }

    #[test]
    fn residual_of_a_wrong_asymptote_is_not_proper() {
        // dropping the constant term of the true asymptote leaves a
        // numerator of full denominator degree
        let f = rf(&[9, 3, 13, 5], &[7, 5, 4]);
        let wrong = Polynomial::new(vec![Rational::zero(), rat(5, 4)]);
        let r = residual(&f, &wrong);
        assert_eq!(r.numerator().degree(), f.denominator().degree());
    }

    #[test]
    fn decay_table_shrinks_along_powers_of_ten() {
        let f = rf(&[7, 0, 0, 8], &[-4, 1]);
        let g = Polynomial::from_ints(&[128, 32, 8]);
        let rows = residual_decay_table(&f, &g, &default_decay_points());
        // exact values 519/(x−4) at 10, 100, 1000
        assert_eq!(rows[0].value, Some(rat(519, 6)));
        assert_eq!(rows[1].value, Some(rat(519, 96)));
        assert_eq!(rows[2].value, Some(rat(519, 996)));
        for pair in rows.windows(2) {
            let (a, b) = (
                pair[0].value.as_ref().unwrap(),
                pair[1].value.as_ref().unwrap(),
            );
            assert!(b.abs() < a.abs(), "decay from {a} to {b}");
        }
    }

    #[test]
    fn decay_table_marks_poles() {
        let f = rf(&[1, 0, 1], &[-10, 1]); // pole at x = 10
        let rows = residual_decay_table(&f, &Polynomial::zero(), &default_decay_points());
        assert_eq!(rows[0].value, None);
        assert!(rows[1].value.is_some());
    }

    #[test]
    fn cross_validate_passes_the_worked_examples() {
        for f in [
            rf(&[7, 0, 0, 8], &[-4, 1]),
            rf(&[9, 3, 13, 5], &[7, 5, 4]),
            rf(&[-9, 3, 0, -2, 1], &[-5, 0, 2]),
            rf(&[1, 0, 3], &[1, 0, 1]),
            rf(&[1, 3], &[0, 0, 1]), // proper fraction
            rf(&[0], &[1, 1]),       // zero numerator
        ] {
            let report = cross_validate(&f);
            assert!(report.pass(), "{}: {:?}", report.input, report.failures);
        }
    }

    #[test]
    fn cross_validate_counts_its_checks() {
        let f = rf(&[7, 0, 0, 8], &[-4, 1]); // k = 2
        let report = cross_validate(&f);
        assert_eq!(report.matrices_checked, 3);
        assert_eq!(report.lemma_checks, 2);
        let proper = cross_validate(&rf(&[1, 3], &[0, 0, 1]));
        assert_eq!(proper.matrices_checked, 0);
        assert_eq!(proper.lemma_checks, 0);
    }

    #[test]
    fn campaign_rejects_degenerate_configs() {
        let config = FuzzConfig {
            trials: 0,
            ..FuzzConfig::default()
        };
        assert_eq!(run_campaign(&config), Err(ConfigError::ZeroTrials));
        let config = FuzzConfig {
            max_degree: 0,
            ..FuzzConfig::default()
        };
        assert_eq!(run_campaign(&config), Err(ConfigError::ZeroMaxDegree));
        let config = FuzzConfig {
            coeff_bound: 0,
            ..FuzzConfig::default()
        };
        assert_eq!(run_campaign(&config), Err(ConfigError::ZeroCoeffBound));
    }

    #[test]
    fn small_campaign_is_clean_and_reproducible() {
        let config = FuzzConfig {
            trials: 64,
            max_degree: 6,
            ..FuzzConfig::default()
        };
        let first = run_campaign(&config).unwrap();
        assert!(first.pass(), "failures: {:?}", first.failures);
        assert_eq!(first.trials_run, 64);
        let second = run_campaign(&config).unwrap();
        assert_eq!(first.to_json(), second.to_json());
    }

    #[test]
    fn different_seeds_draw_different_functions() {
        let mut a = trial_rng(1, 0);
        let mut b = trial_rng(2, 0);
        let fa = random_rational_function(&mut a, 8, 99, true);
        let fb = random_rational_function(&mut b, 8, 99, true);
        assert_ne!(fa.to_string(), fb.to_string());
    }

    #[test]
    fn trial_streams_are_independent_of_order() {
        let draw = |index: u64| {
            let mut rng = trial_rng(7, index);
            random_rational_function(&mut rng, 8, 99, true).to_string()
        };
        let forward: Vec<String> = (0..8).map(draw).collect();
        let backward: Vec<String> = (0..8).rev().map(draw).collect();
        let reversed: Vec<String> = backward.into_iter().rev().collect();
        assert_eq!(forward, reversed);
    }

    #[test]
    fn random_polynomials_respect_their_contract() {
        let mut rng = trial_rng(3, 0);
        for _ in 0..100 {
            let p = random_polynomial(&mut rng, 5, 9);
            assert_eq!(p.degree(), crate::poly::Degree::Of(5));
            assert!(p
                .coeffs()
                .iter()
                .all(|c| { c.is_integer() && c.abs() <= rat(9, 1) }));
        }
    }

    #[test]
    fn strict_degree_gap_when_equal_degrees_disallowed() {
        let mut rng = trial_rng(4, 0);
        for _ in 0..100 {
            let f = random_rational_function(&mut rng, 6, 99, false);
            assert!(f.degree_gap().unwrap() >= 1);
        }
    }

    #[test]
    fn campaign_json_has_the_documented_shape() {
        let config = FuzzConfig {
            trials: 4,
            ..FuzzConfig::default()
        };
        let report = run_campaign(&config).unwrap();
        let v = report.to_json();
        assert_eq!(v["trials"], 4);
        assert!(v["failures"].as_array().unwrap().is_empty());
        assert!(v.get("elapsed").is_none());
        assert!(v["lemma_checks"].as_u64().is_some());
    }
}
