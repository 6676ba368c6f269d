//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! The elimination is generic over the entry ring. Machine integers report
//! overflow instead of wrapping, so [`exact_rank`] can start with `i64` and
//! retry with arbitrary precision only when needed.

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

/// Integer-like scalar usable for fraction-free elimination.
///
/// `checked_*` return `None` on overflow; for arbitrary-precision types they
/// never fail. Division is only ever called when it is exact.
pub trait ExactInt: Clone + PartialEq + Zero + One + CheckedMul + CheckedSub + CheckedDiv {}

impl<T> ExactInt for T where T: Clone + PartialEq + Zero + One + CheckedMul + CheckedSub + CheckedDiv {}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct IntMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: ExactInt> IntMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn map<U: ExactInt>(&self, f: impl Fn(&T) -> U) -> IntMatrix<U> {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Rank, or `None` if an intermediate value overflowed `T`.
    pub fn rank(&self) -> Option<usize> {
        bareiss_rank(self.rows, self.cols, self.data.clone())
    }
}

fn bareiss_rank<T: ExactInt>(rows: usize, cols: usize, mut m: Vec<T>) -> Option<usize> {
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot_row != rank {
            for c in 0..cols {
                m.swap(pivot_row * cols + c, rank * cols + c);
            }
        }
        let pivot = m[rank * cols + col].clone();
        for r in rank + 1..rows {
            let lead = m[r * cols + col].clone();
            for c in col + 1..cols {
                let a = pivot.checked_mul(&m[r * cols + c])?;
                let b = lead.checked_mul(&m[rank * cols + c])?;
                m[r * cols + c] = a.checked_sub(&b)?.checked_div(&prev)?;
            }
            m[r * cols + col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Rank over `ℚ` of an integer matrix, exact for any entries.
pub fn exact_rank(m: &IntMatrix<i64>) -> usize {
    match m.rank() {
        Some(r) => r,
        None => m.map(|&v| BigInt::from(v)).rank().expect("arbitrary precision cannot overflow"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    // Gaussian elimination over Q, as an independent reference.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
            m.swap(p, rank);
            for r in rank + 1..m.len() {
                let f = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let d = &f * &m[rank][k];
                    m[r][k] -= d;
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        let id = IntMatrix::from_rows(vec![vec![1i64, 0], vec![0, 1]]);
        assert_eq!(exact_rank(&id), 2);
        let dep = IntMatrix::from_rows(vec![vec![1i64, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(exact_rank(&dep), 2);
        assert_eq!(exact_rank(&IntMatrix::<i64>::zeros(3, 4)), 0);
        assert_eq!(exact_rank(&IntMatrix::<i64>::zeros(0, 4)), 0);
        // first column zero forces a skipped column
        let skip = IntMatrix::from_rows(vec![vec![0i64, 1, 1], vec![0, 1, 2], vec![0, 2, 3]]);
        assert_eq!(exact_rank(&skip), 2);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 2;
        let m = IntMatrix::from_rows(vec![vec![big, 3, 1], vec![5, big, 7], vec![11, 13, big]]);
        assert_eq!(m.rank(), None);
        assert_eq!(exact_rank(&m), 3);
        assert_eq!(m.map(|&v| v as i128).rank(), None);
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(
            rows in 0usize..7,
            cols in 0usize..7,
            seed in prop::collection::vec(-3i64..4, 49),
        ) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|r| (0..cols).map(|c| seed[r * 7 + c]).collect())
                .collect();
            let m = if rows == 0 { IntMatrix::zeros(0, cols) } else { IntMatrix::from_rows(data.clone()) };
            prop_assert_eq!(exact_rank(&m), rational_rank(&data));
            prop_assert_eq!(m.map(|&v| BigInt::from(v)).rank(), Some(rational_rank(&data)));
        }
    }
}
