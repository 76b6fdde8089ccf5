//! The weighted incidence matrix of the parenthesis-reversal relation and its
//! inverse, indexed by Dyck paths in canonical order.
//!
//! `M[a][b]` is the product of `-w(t)` over the tiles of the nested tiling of
//! `a/b` (zero when there is none), with tile weight `w(t) = [h]/[h+1]`. The
//! inverse sums `prod w(t)` over all cover-inclusive tilings of `a/b`. A third
//! construction runs the wedge-removal recursion from the 1x1 matrix at N = 0.

mod basis;
pub mod export;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::dyck::{enumerate_paths, DyckPath, LocalShape};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::qfield::RatQ;
use crate::tilings::{enumerate_cover_inclusive, nested_tiling};

pub use basis::{change_basis, change_basis_with, CoeffVector, Direction};
pub use export::{latex_entry, to_csv, to_json, to_latex};

/// Largest N for the nested-tiling and recursive builders.
pub const MATRIX_CAP: usize = 6;
/// Largest N for builders that enumerate every cover-inclusive tiling.
pub const COVER_INCLUSIVE_CAP: usize = 5;

/// A square matrix whose rows and columns are the Dyck paths of size N in
/// canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct PathMatrix<F> {
    n: usize,
    order: Vec<DyckPath>,
    entries: Matrix<F>,
}

pub type QMatrix = PathMatrix<RatQ>;

impl<F: Field> PathMatrix<F> {
    fn from_entries(n: usize, order: Vec<DyckPath>, entries: Matrix<F>) -> Self {
        Self { n, order, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[DyckPath] {
        &self.order
    }

    pub fn entries(&self) -> &Matrix<F> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, p: &DyckPath) -> Option<usize> {
        self.order.binary_search(p).ok()
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        self.entries.get(i, j)
    }

    pub fn entry(&self, a: &DyckPath, b: &DyckPath) -> Option<&F> {
        Some(self.entries.get(self.index_of(a)?, self.index_of(b)?))
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| self.get(i, i).is_one() && (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn mul(&self, rhs: &Self, exec: Exec) -> Self {
        assert_eq!(self.order, rhs.order, "matrices over different path sets");
        Self::from_entries(self.n, self.order.clone(), self.entries.mul(&rhs.entries, exec))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> PathMatrix<G> {
        PathMatrix::from_entries(self.n, self.order.clone(), self.entries.map(f))
    }
}

impl QMatrix {
    /// Substitutes `q = 1` entrywise.
    pub fn at_one(&self) -> Result<PathMatrix<BigRational>> {
        let mut data = Vec::with_capacity(self.dim() * self.dim());
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                data.push(self.get(i, j).at_one()?);
            }
        }
        Ok(PathMatrix::from_entries(self.n, self.order.clone(), Matrix::from_vec(self.dim(), self.dim(), data)))
    }
}

/// `w(t) = [h]/[h+1]` for a tile of height `h`.
pub fn tile_weight(h: i64) -> Result<RatQ> {
    if h < 1 {
        return Err(Error::InvalidTileHeight(h));
    }
    RatQ::q_ratio(h, h + 1)
}

/// `h/(h+1)`, the tile weight at `q = 1`.
pub fn tile_weight_at_one(h: i64) -> Result<BigRational> {
    if h < 1 {
        return Err(Error::InvalidTileHeight(h));
    }
    Ok(BigRational::new(BigInt::from(h), BigInt::from(h + 1)))
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

fn weights<F: Field>(n: usize, weight: &(impl Fn(i64) -> Result<F> + Sync)) -> Result<Vec<F>> {
    (0..=n as i64 + 1).map(|h| if h == 0 { Ok(F::zero()) } else { weight(h) }).collect()
}

fn fill<F: Field>(
    n: usize,
    exec: Exec,
    entry: impl Fn(&DyckPath, &DyckPath) -> Result<F> + Sync,
) -> Result<PathMatrix<F>> {
    let order = enumerate_paths(n)?;
    let d = order.len();
    let cells: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
    let values = exec.map(cells, |(i, j)| entry(&order[i], &order[j]));
    let data = values.into_iter().collect::<Result<Vec<F>>>()?;
    Ok(PathMatrix::from_entries(n, order, Matrix::from_vec(d, d, data)))
}

/// The incidence matrix with an arbitrary tile weight, from nested tilings.
pub fn build_m_with<F: Field>(n: usize, weight: impl Fn(i64) -> Result<F> + Sync, exec: Exec) -> Result<PathMatrix<F>> {
    check_cap(n, MATRIX_CAP)?;
    let w = weights(n, &weight)?;
    fill(n, exec, |a, b| {
        Ok(match nested_tiling(a, b)? {
            None => F::zero(),
            Some(t) => t.tiles().iter().fold(F::one(), |acc, tile| acc * -w[tile.height() as usize].clone()),
        })
    })
}

/// The inverse with an arbitrary tile weight, summed over cover-inclusive
/// tilings.
pub fn build_minv_tilings_with<F: Field>(
    n: usize,
    weight: impl Fn(i64) -> Result<F> + Sync,
    exec: Exec,
) -> Result<PathMatrix<F>> {
    check_cap(n, COVER_INCLUSIVE_CAP)?;
    let w = weights(n, &weight)?;
    fill(n, exec, |a, b| {
        let mut sum = F::zero();
        for t in enumerate_cover_inclusive(a, b)? {
            sum = sum + t.tiles().iter().fold(F::one(), |acc, tile| acc * w[tile.height() as usize].clone());
        }
        Ok(sum)
    })
}

pub fn build_m(n: usize, exec: Exec) -> Result<QMatrix> {
    build_m_with(n, tile_weight, exec)
}

pub fn build_minv_tilings(n: usize, exec: Exec) -> Result<QMatrix> {
    build_minv_tilings_with(n, tile_weight, exec)
}

/// Builds the matrix size by size from the 1x1 identity at N = 0. For each
/// column path `b` and every up-wedge `j` of `b`, the entry at `(a, b)` is
/// zero when `a` has a slope at `j`, the smaller entry at the wedge-removed
/// pair when `a` has an up-wedge, and that entry times `-f(a(j) + 1)` when
/// `a` has a down-wedge. All admissible `j` must agree.
pub fn build_m_recursive_with<F: Field>(
    n: usize,
    f: impl Fn(i64) -> Result<F> + Sync,
    exec: Exec,
) -> Result<PathMatrix<F>> {
    check_cap(n, MATRIX_CAP)?;
    let fs = weights(n, &f)?;
    let mut prev: PathMatrix<F> = PathMatrix::from_entries(0, vec![DyckPath::empty()], Matrix::identity(1));
    for k in 1..=n {
        let index: HashMap<&DyckPath, usize> = prev.order.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let hat = |p: &DyckPath, j: usize| -> Result<usize> { Ok(index[&p.remove_wedge(j)?]) };
        let prev_ref = &prev;
        let next = fill(k, exec, |a, b| {
            let mut value: Option<F> = None;
            for j in b.wedges(LocalShape::UpWedge) {
                let bh = hat(b, j)?;
                let v = match a.local_shape(j)? {
                    LocalShape::UpSlope | LocalShape::DownSlope => F::zero(),
                    LocalShape::UpWedge => prev_ref.get(hat(a, j)?, bh).clone(),
                    LocalShape::DownWedge => {
                        -fs[a.height(j) as usize + 1].clone() * prev_ref.get(hat(a, j)?, bh).clone()
                    }
                };
                match &value {
                    None => value = Some(v),
                    Some(u) if *u == v => {}
                    Some(_) => return Err(Error::InconsistentRecursion { alpha: a.to_string(), beta: b.to_string() }),
                }
            }
            Ok(value.expect("every nonempty Dyck path has a peak"))
        })?;
        prev = next;
    }
    Ok(prev)
}

pub fn build_m_recursive(n: usize, exec: Exec) -> Result<QMatrix> {
    build_m_recursive_with(n, tile_weight, exec)
}

/// Inverse by exact Gauss-Jordan elimination.
pub fn invert_by_elimination<F: Field>(m: &PathMatrix<F>) -> Result<PathMatrix<F>> {
    Ok(PathMatrix::from_entries(m.n, m.order.clone(), linalg::invert(&m.entries)?))
}

/// True iff the nested-tiling matrix times the cover-inclusive matrix is the
/// identity, exactly.
pub fn verify_inverse(n: usize, exec: Exec) -> Result<bool> {
    let m = build_m(n, exec)?;
    let minv = build_minv_tilings(n, exec)?;
    Ok(m.mul(&minv, exec).entries.is_identity())
}
