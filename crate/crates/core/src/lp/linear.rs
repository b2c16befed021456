use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolve {
    Unique(Vec<Rational>),
    Singular,
}

/// Solves `matrix · x = rhs` for a square matrix by Gaussian elimination,
/// pivoting on the first nonzero entry of each column.
///
/// # Panics
/// When `matrix` is not square or `rhs` has the wrong length.
pub fn solve_linear_system(matrix: &[Vec<Rational>], rhs: &[Rational]) -> LinearSolve {
    let n = matrix.len();
    assert_eq!(rhs.len(), n, "rhs length must equal the row count");
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !aug[r][col].is_zero()) else {
            return LinearSolve::Singular;
        };
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col][col..].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            let pivot_row = aug[col].clone();
            for (v, p) in aug[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *v -= &factor * p;
            }
        }
    }
    LinearSolve::Unique(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Incrementally maintained row space of a set of vectors, kept in reduced
/// row echelon form.
#[derive(Debug, Clone)]
pub struct RowSpace {
    dim: usize,
    // (pivot column, normalized row); pivot entry is 1 and every other
    // stored row is zero in that column.
    basis: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.dim
    }

    fn reduce(&self, row: &[Rational]) -> Vec<Rational> {
        assert_eq!(
            row.len(),
            self.dim,
            "row width must equal the space dimension"
        );
        let mut r = row.to_vec();
        for (pc, b) in &self.basis {
            if r[*pc].is_zero() {
                continue;
            }
            let factor = r[*pc].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, row: &[Rational]) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }

    /// Adds `row`; returns `false` (and leaves the space unchanged) when it
    /// was already spanned.
    pub fn insert(&mut self, row: &[Rational]) -> bool {
        let mut r = self.reduce(row);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pc].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        debug_assert!(r[pc].is_one());
        for (_, b) in self.basis.iter_mut() {
            if b[pc].is_zero() {
                continue;
            }
            let factor = b[pc].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        self.basis.push((pc, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect()
    }

    #[test]
    fn identity_returns_rhs() {
        let rhs = vec![ratio(2, 3), rat(-1)];
        assert_eq!(
            solve_linear_system(&m(&[&[1, 0], &[0, 1]]), &rhs),
            LinearSolve::Unique(rhs)
        );
    }

    #[test]
    fn rank_deficient_is_singular() {
        assert_eq!(
            solve_linear_system(&m(&[&[1, 1], &[2, 2]]), &[rat(1), rat(5)]),
            LinearSolve::Singular
        );
    }

    #[test]
    fn owen_point_as_intersection() {
        // efficiency, x1 = 25, x1 + x2 = 51
        let sol = solve_linear_system(
            &m(&[&[1, 1, 1], &[1, 0, 0], &[1, 1, 0]]),
            &[rat(64), rat(25), rat(51)],
        );
        assert_eq!(sol, LinearSolve::Unique(vec![rat(25), rat(26), rat(13)]));
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let sol = solve_linear_system(&m(&[&[0, 1], &[1, 0]]), &[rat(3), rat(4)]);
        assert_eq!(sol, LinearSolve::Unique(vec![rat(4), rat(3)]));
    }

    #[test]
    fn row_space_tracks_rank_and_membership() {
        let mut space = RowSpace::new(3);
        assert!(space.insert(&[rat(1), rat(1), rat(1)]));
        assert!(space.insert(&[rat(1), rat(0), rat(0)]));
        assert!(!space.insert(&[rat(0), rat(2), rat(2)]));
        assert!(space.contains(&[rat(3), rat(-1), rat(-1)]));
        assert!(!space.contains(&[rat(0), rat(1), rat(0)]));
        assert_eq!(space.rank(), 2);
        assert!(space.insert(&[rat(0), rat(1), rat(0)]));
        assert!(space.is_full());
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn solves_back_to_generating_vector(
            entries in proptest::collection::vec(-6i64..=6, 9),
            dens in proptest::collection::vec(1i64..=4, 9),
            v in proptest::collection::vec(-20i64..=20, 3),
        ) {
            let mat: Vec<Vec<Rational>> = (0..3)
                .map(|r| (0..3).map(|c| ratio(entries[3 * r + c], dens[3 * r + c])).collect())
                .collect();
            let v: Vec<Rational> = v.into_iter().map(|x| ratio(x, 3)).collect();
            let rhs: Vec<Rational> = mat
                .iter()
                .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
                .collect();
            let mut space = RowSpace::new(3);
            for row in &mat {
                space.insert(row);
            }
            match solve_linear_system(&mat, &rhs) {
                LinearSolve::Unique(x) => {
                    prop_assert!(space.is_full());
                    prop_assert_eq!(x, v);
                }
                LinearSolve::Singular => prop_assert!(!space.is_full()),
            }
        }
    }
}
