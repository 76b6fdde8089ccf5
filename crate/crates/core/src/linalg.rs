//! Dense matrices and Gaussian elimination over an exact [`Field`].

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Row-major entries; panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product, rows computed under `exec`.
    pub fn mul(&self, rhs: &Matrix<F>, exec: Exec) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let rows: Vec<Vec<F>> = exec.map((0..self.rows).collect(), |i| {
            (0..rhs.cols)
                .map(|j| {
                    let mut acc = F::zero();
                    for k in 0..self.cols {
                        let (a, b) = (self.get(i, k), rhs.get(k, j));
                        if !a.is_zero() && !b.is_zero() {
                            acc = acc + a.clone() * b.clone();
                        }
                    }
                    acc
                })
                .collect()
        });
        Matrix::from_vec(self.rows, rhs.cols, rows.into_iter().flatten().collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows, "dimension mismatch in vector product");
        (0..self.cols)
            .map(|j| {
                let mut acc = F::zero();
                for (i, vi) in v.iter().enumerate() {
                    let m = self.get(i, j);
                    if !vi.is_zero() && !m.is_zero() {
                        acc = acc + vi.clone() * m.clone();
                    }
                }
                acc
            })
            .collect()
    }
}

/// Reduces `rows` to reduced row echelon form in place and returns the pivot
/// columns. The pivot in each column is the first nonzero entry at or below
/// the current row.
pub fn row_reduce<F: Field>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    row_reduce(&mut rows).len()
}

/// A basis of `{x : A x = 0}` where `rows` are the rows of `A`.
pub fn nullspace<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let pivots = row_reduce(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

/// Inverse by Gauss-Jordan elimination on `[A | I]`.
pub fn invert<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::Singular);
    }
    let mut aug: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_vec(n, n, aug.into_iter().flat_map(|row| row.into_iter().skip(n)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn m(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect())
    }

    #[test]
    fn inverse_of_small_matrix() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = invert(&a).unwrap();
        assert_eq!(inv, m(&[&[4, -1], &[-7, 2]]));
        assert!(a.mul(&inv, Exec::Sequential).is_identity());
    }

    #[test]
    fn singular_is_reported() {
        assert_eq!(invert(&m(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).to_rows();
        assert_eq!(rank(rows.clone()), 2);
        let ns = nullspace(rows.clone(), 3);
        assert_eq!(ns.len(), 1);
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let x = Matrix::from_vec(3, 1, ns[0].clone());
        assert!(a.mul(&x, Exec::Sequential).to_rows().iter().all(|row| row[0] == r(0)));
    }

    #[test]
    fn row_vector_product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.vec_mul(&[r(1), r(1)]), vec![r(4), r(6)]);
    }
}
