//! Coefficient matrices for the determinant form of the asymptote formula,
//! with two independent exact determinant algorithms.
//!
//! For f(x) = a(x)/b(x) with numerator degree n and degree gap k, the matrix
//! `M_α` (for 0 ≤ α ≤ k) is the (α+1)×(α+1) matrix whose first row lists the
//! leading numerator coefficients and whose remaining rows carry a shifted
//! band of denominator coefficients:
//!
//! ```text
//! row 0:      a_n  a_{n−1}  …  a_{n−α}
//! row i ≥ 1:  entry (i, j) = b_{n−k−(j−i+1)}  for j ≥ i−1, else 0
//! ```
//!
//! with `b_m = 0` whenever m is outside 0..=n−k. Every `M_α` is upper
//! Hessenberg (one nonzero subdiagonal), with the constant value `b_{n−k}`
//! down that subdiagonal — the structure both determinant routes exploit is
//! checked, not assumed.

use crate::rational::Rational;
use crate::rational_function::RationalFunction;
use std::fmt;

/// Errors from matrix construction and structure-sensitive algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// `M_α` only exists for 0 ≤ α ≤ k; `gap` is `None` when the numerator
    /// is zero (no leading coefficient to head the first row).
    AlphaExceedsGap { alpha: usize, gap: Option<i64> },
    /// A matrix built from explicit rows must be square and non-empty.
    NotSquare { rows: usize, row: usize, len: usize },
    /// A structural zero required below the subdiagonal was nonzero.
    NotUpperHessenberg { row: usize, col: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::AlphaExceedsGap {
                alpha,
                gap: Some(k),
            } => {
                write!(f, "matrix index {alpha} exceeds the degree gap {k}")
            }
            MatrixError::AlphaExceedsGap { alpha, gap: None } => {
                write!(
                    f,
                    "matrix index {alpha} is undefined: the numerator is zero"
                )
            }
            MatrixError::NotSquare { rows, row, len } => {
                write!(f, "row {row} has {len} entries in a {rows}-row matrix")
            }
            MatrixError::NotUpperHessenberg { row, col } => {
                write!(f, "entry ({row}, {col}) below the subdiagonal is nonzero")
            }
        }
    }
}

impl std::error::Error for MatrixError {}

/// A square matrix of exact rationals, square-ness enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMatrix {
    rows: Vec<Vec<Rational>>,
}

impl CoefficientMatrix {
    /// Builds `M_alpha` for a rational function. Fails when `alpha` exceeds
    /// the degree gap (or the numerator is zero, leaving no gap at all).
    pub fn build(rf: &RationalFunction, alpha: usize) -> Result<Self, MatrixError> {
        let gap = rf.degree_gap();
        let k = match gap {
            Some(k) if (alpha as i64) <= k => k,
            _ => return Err(MatrixError::AlphaExceedsGap { alpha, gap }),
        };
        let n = rf
            .numerator_degree()
            .finite()
            .expect("gap exists, so the numerator is nonzero") as i64;
        let size = alpha + 1;
        let mut rows = Vec::with_capacity(size);
        rows.push((0..size).map(|j| rf.a(n - j as i64)).collect());
        for i in 1..size {
            rows.push(
                (0..size)
                    .map(|j| {
                        if j + 1 >= i {
                            rf.b(n - k - (j as i64 - i as i64 + 1))
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect(),
            );
        }
        Ok(CoefficientMatrix { rows })
    }

    /// Wraps explicit rows, checking the matrix is square and non-empty.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::NotSquare {
                rows: 0,
                row: 0,
                len: 0,
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::NotSquare {
                    rows: n,
                    row: i,
                    len: row.len(),
                });
            }
        }
        Ok(CoefficientMatrix { rows })
    }

    /// Matrix dimension; `M_α` has size α+1.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// The α index this matrix has when built by [`CoefficientMatrix::build`].
    pub fn alpha(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting. Works on any square matrix; returns zero for singular ones.
    /// This is the general-purpose oracle the structured route is checked
    /// against.
    pub fn det_fraction_free(&self) -> Rational {
        let n = self.size();
        let mut m = self.rows.clone();
        let mut sign_flip = false;
        let mut prev_pivot = Rational::one();
        for c in 0..n {
            if m[c][c].is_zero() {
                match (c + 1..n).find(|&r| !m[r][c].is_zero()) {
                    Some(r) => {
                        m.swap(c, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Rational::zero(),
                }
            }
            for r in c + 1..n {
                for j in c + 1..n {
                    let num = &(&m[r][j] * &m[c][c]) - &(&m[r][c] * &m[c][j]);
                    m[r][j] = &num / &prev_pivot;
                }
                m[r][c] = Rational::zero();
            }
            prev_pivot = m[c][c].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign_flip {
            -&det
        } else {
            det
        }
    }

    /// Exact determinant via the upper-Hessenberg recurrence on leading
    /// principal minors (expanding each along its last column):
    ///
    /// ```text
    /// d_0 = 1
    /// d_i = h_{i−1,i−1}·d_{i−1}
    ///       + Σ_{r<i−1} (−1)^{i−1−r} · h_{r,i−1} · (Π_{s=r+1}^{i−1} h_{s,s−1}) · d_r
    /// ```
    ///
    /// runs in O(n²) products instead of elimination's O(n³). Fails when the
    /// matrix has a nonzero entry below the subdiagonal, since the recurrence
    /// is only valid on genuine Hessenberg structure.
    pub fn det_hessenberg(&self) -> Result<Rational, MatrixError> {
        let n = self.size();
        for i in 0..n {
            for j in 0..i.saturating_sub(1) {
                if !self.rows[i][j].is_zero() {
                    return Err(MatrixError::NotUpperHessenberg { row: i, col: j });
                }
            }
        }
        let mut minors = Vec::with_capacity(n + 1);
        minors.push(Rational::one());
        for i in 1..=n {
            let mut acc = &self.rows[i - 1][i - 1] * &minors[i - 1];
            let mut subdiag = Rational::one();
            for r in (0..i - 1).rev() {
                subdiag = &subdiag * &self.rows[r + 1][r];
                let term = &(&self.rows[r][i - 1] * &subdiag) * &minors[r];
                if (i - 1 - r) % 2 == 1 {
                    acc = &acc - &term;
                } else {
                    acc = &acc + &term;
                }
            }
            minors.push(acc);
        }
        Ok(minors.pop().expect("n ≥ 1 minors computed"))
    }
}
