//! Dense matrices and exact rank computations.
//!
//! Two routes: fraction-free (Bareiss) elimination over arbitrary-precision
//! integers for ranks over the rationals, and ordinary row reduction through
//! a [`FieldOps`] structure for prime fields. The two agree on integer
//! matrices interpreted over `Q`, which the tests exploit.

use num_traits::Zero;

use crate::field::FieldOps;
use crate::Integer;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

pub type IntMatrix = Matrix<i64>;

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| 0)
    }

    /// Matrix product, for `d . d = 0` style sanity checks.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Rank over the rationals via fraction-free Gaussian elimination on the
/// integer matrix. All intermediate entries are minors of the input, so the
/// divisions below are exact; arbitrary precision keeps them overflow-free.
pub fn rank_fraction_free(m: &IntMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Integer>> = (0..rows)
        .map(|r| (0..cols).map(|c| Integer::from(*m.get(r, c))).collect())
        .collect();

    let mut rank = 0usize;
    let mut prev = Integer::from(1);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot_row = match (rank..rows).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &pivot * &a[r][c] - &a[r][col] * &a[rank][c];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                a[r][c] = num / &prev;
            }
            a[r][col] = Integer::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix mapped into an arbitrary field.
pub fn rank_over<F: FieldOps>(field: &F, m: &IntMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<F::Elem>> = (0..rows)
        .map(|r| (0..cols).map(|c| field.from_i64(*m.get(r, c))).collect())
        .collect();

    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot_row = match (rank..rows).find(|&r| !field.is_zero(&a[r][col])) {
            Some(r) => r,
            None => continue,
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            if field.is_zero(&a[r][col]) {
                continue;
            }
            let factor = field.div(&a[r][col], &pivot);
            for c in col..cols {
                let sub = field.mul(&factor, &a[rank][c]);
                a[r][c] = field.sub(&a[r][c], &sub);
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn m(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix::from_fn(rows, cols, |r, c| entries[r * cols + c])
    }

    #[test]
    fn rank_of_identity_and_singular() {
        let id = m(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(rank_fraction_free(&id), 3);
        let sing = m(3, 3, &[1, 2, 3, 2, 4, 6, 1, 1, 1]);
        assert_eq!(rank_fraction_free(&sing), 2);
        let zero = IntMatrix::zeros(2, 5);
        assert_eq!(rank_fraction_free(&zero), 0);
    }

    #[test]
    fn field_routes_agree_over_q() {
        let mat = m(3, 4, &[2, -1, 0, 3, 4, -2, 1, 6, 0, 0, 1, 0]);
        assert_eq!(rank_fraction_free(&mat), rank_over(&Rationals, &mat));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // Rows sum to 0 mod 2 but not over Q.
        let mat = m(2, 2, &[1, 1, 1, -1]);
        assert_eq!(rank_fraction_free(&mat), 2);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(rank_over(&f2, &mat), 1);
    }
}
