//! Dense rational matrices with exact elimination.
//!
//! Determinants, ranks and null-space bases are computed by rational
//! Gaussian elimination with a fixed pivot order, so results are
//! reproducible bit for bit across runs and thread counts.

use crate::error::{Error, Result};
use crate::exact::rational::Rational;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum::<Rational>()
            })
            .collect())
    }

    /// Exact determinant by rational Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            // first nonzero entry on or below the diagonal
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &p;
                for c in col..n {
                    let sub = &factor * &a[(col, c)];
                    a[(r, c)] -= sub;
                }
            }
        }
        Ok(det)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(pr) = (r..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(pr, r);
            let p = a[(r, col)].clone();
            for c in col..a.cols {
                let v = &a[(r, c)] / &p;
                a[(r, c)] = v;
            }
            for i in 0..a.rows {
                if i == r || a[(i, col)].is_zero() {
                    continue;
                }
                let factor = a[(i, col)].clone();
                for c in col..a.cols {
                    let sub = &factor * &a[(r, c)];
                    a[(i, c)] -= sub;
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    /// Basis of the right null space `{v : M v = 0}`.
    ///
    /// The basis choice is deterministic: reduced row echelon form with each
    /// free variable set to a unit vector, in increasing column order. A
    /// full-column-rank matrix yields an empty basis.
    pub fn null_space_basis(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -rref[(row, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};
    use num::Zero;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn det_identity() {
        assert_eq!(Matrix::identity(3).det().unwrap(), rat_int(1));
    }

    #[test]
    fn det_two_by_two() {
        // rows (t_i, t_i^2) for t = 1, 2
        assert_eq!(m(&[&[1, 1], &[2, 4]]).det().unwrap(), rat_int(2));
    }

    #[test]
    fn det_moment_matrix_matches_difference_product() {
        // columns (t, t^2, t^3, 1) for distinct t: determinant is
        // (-1)^d * prod_{i<j} (t_j - t_i) with the ones row at the bottom.
        let ts = [1i64, 2, 4, 7];
        let d = 3usize;
        let mut rows = Vec::new();
        for p in 1..=d {
            rows.push(
                ts.iter()
                    .map(|&t| rat_int(t.pow(p as u32)))
                    .collect::<Vec<_>>(),
            );
        }
        rows.push(vec![rat_int(1); ts.len()]);
        let mat = Matrix::from_rows(&rows).unwrap();

        let mut prod = rat_int(1);
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                prod *= rat_int(ts[j] - ts[i]);
            }
        }
        let expected = if d % 2 == 1 { -prod } else { prod };
        assert_eq!(mat.det().unwrap(), expected);
        assert!(!mat.det().unwrap().is_zero());
    }

    #[test]
    fn det_rejects_non_square() {
        assert!(matches!(
            m(&[&[1, 2, 3], &[4, 5, 6]]).det(),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn det_singular_is_zero() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), rat_int(0));
    }

    #[test]
    fn null_space_of_full_rank_square_is_empty() {
        assert!(m(&[&[1, 0], &[0, 1]]).null_space_basis().is_empty());
    }

    #[test]
    fn null_space_simple() {
        let mat = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let basis = mat.null_space_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![rat_int(-1), rat_int(-1), rat_int(1)]);
        for v in &basis {
            assert!(mat.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn null_space_vectors_are_independent() {
        let mat = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 1, 1, 1]]);
        // rank 2, nullity 2
        let basis = mat.null_space_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(mat.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
        let stacked = Matrix::from_rows(&basis).unwrap();
        assert_eq!(stacked.rank(), basis.len());
    }

    #[test]
    fn rational_entries_stay_exact() {
        let mat =
            Matrix::from_rows(&[vec![rat(1, 3), rat(1, 7)], vec![rat(2, 5), rat(3, 11)]]).unwrap();
        // det = 1/3 * 3/11 - 1/7 * 2/5 = 1/11 - 2/35 = 13/385
        assert_eq!(mat.det().unwrap(), rat(13, 385));
    }
}
