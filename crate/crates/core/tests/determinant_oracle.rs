//! The two production determinant routes, checked against textbook cofactor
//! expansion. Cofactor expansion is O(n!) and useless in production, which
//! is exactly what makes it a good oracle: it shares no code and no idea
//! with either route under test.

use asymptote_core::matrix::CoefficientMatrix;
use asymptote_core::rational::Rational;
use proptest::prelude::*;

fn det_cofactor(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][j] * &det_cofactor(&minor);
        if j % 2 == 1 {
            acc = &acc - &term;
        } else {
            acc = &acc + &term;
        }
    }
    acc
}

/// A random square matrix, kept small because the oracle is factorial-time.
fn square_matrix(max_size: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1..=max_size).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-20i64..=20, n), n).prop_map(|rows| {
            rows.into_iter()
                .map(|row| row.into_iter().map(Rational::from_integer).collect())
                .collect()
        })
    })
}

/// A random upper-Hessenberg matrix: zero below the first subdiagonal.
fn hessenberg_matrix(max_size: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    square_matrix(max_size).prop_map(|mut rows| {
        for (i, row) in rows.iter_mut().enumerate() {
            for cell in &mut row[..i.saturating_sub(1)] {
                *cell = Rational::zero();
            }
        }
        rows
    })
}

proptest! {
    #[test]
    fn fraction_free_matches_cofactor_expansion(rows in square_matrix(5)) {
        let expected = det_cofactor(&rows);
        let m = CoefficientMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(m.det_fraction_free(), expected);
    }

    #[test]
    fn hessenberg_matches_cofactor_expansion(rows in hessenberg_matrix(6)) {
        let expected = det_cofactor(&rows);
        let m = CoefficientMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(m.det_hessenberg().unwrap(), expected.clone());
        prop_assert_eq!(m.det_fraction_free(), expected);
    }
}

#[test]
fn cofactor_oracle_is_itself_sane() {
    let rows = vec![
        vec![Rational::from_integer(5), Rational::from_integer(13)],
        vec![Rational::from_integer(4), Rational::from_integer(5)],
    ];
    assert_eq!(det_cofactor(&rows), Rational::from_integer(-27));
    let identity: Vec<Vec<Rational>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    assert_eq!(det_cofactor(&identity), Rational::one());
}
