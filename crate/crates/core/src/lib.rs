//! Exact computation of horizontal, oblique, and curvilinear asymptotes of
//! rational polynomial functions.
//!
//! Given f(x) = a(x)/b(x) with deg a − deg b = k ≥ 0, the asymptote is the
//! unique degree-k polynomial g(x) with f(x) − g(x) → 0 as x → ±∞. Its
//! coefficients are computed three independent ways:
//!
//! * a closed-form signed-determinant formula over banded coefficient
//!   matrices ([`asymptote::theta_det`]),
//! * an O(k²) recurrence that avoids determinants entirely
//!   ([`asymptote::theta_recurrence_all`]),
//! * classical Euclidean polynomial division ([`poly::Polynomial::div_rem`]),
//!   kept as an independent oracle.
//!
//! All arithmetic is exact over arbitrary-precision rationals; nothing in
//! this crate rounds.

pub mod asymptote;
pub mod format;
pub mod matrix;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod rational_function;

pub use asymptote::{asymptote_of, AsymptoteResult, Method, ThetaTrace};
pub use format::Style;
pub use matrix::CoefficientMatrix;
pub use oracle::{cross_validate, run_campaign, CampaignReport, FuzzConfig};
pub use parse::{parse_polynomial, parse_rational_function, ParseError};
pub use poly::{Degree, Polynomial};
pub use rational::Rational;
pub use rational_function::RationalFunction;
