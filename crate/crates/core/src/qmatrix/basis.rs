use std::collections::BTreeMap;

use super::{build_m, build_minv_tilings, QMatrix};
use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::qfield::RatQ;

/// Coefficients over the Dyck paths of size N; missing keys are zero.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CoeffVector {
    n: usize,
    coeffs: BTreeMap<DyckPath, RatQ>,
}

/// `UFromZ` multiplies a row vector by the incidence matrix, `ZFromU` by its
/// inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    UFromZ,
    ZFromU,
}

impl CoeffVector {
    pub fn new(n: usize) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn unit(p: DyckPath) -> Self {
        let mut v = Self::new(p.n());
        v.coeffs.insert(p, RatQ::from_integer(1));
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, p: DyckPath, c: RatQ) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::LengthMismatch(p.len_steps(), 2 * self.n));
        }
        if c.is_zero() {
            self.coeffs.remove(&p);
        } else {
            self.coeffs.insert(p, c);
        }
        Ok(())
    }

    pub fn get(&self, p: &DyckPath) -> RatQ {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&DyckPath, &RatQ)> {
        self.coeffs.iter()
    }

    pub fn to_dense(&self, order: &[DyckPath]) -> Vec<RatQ> {
        order.iter().map(|p| self.get(p)).collect()
    }

    pub fn from_dense(n: usize, order: &[DyckPath], values: Vec<RatQ>) -> Self {
        let coeffs = order.iter().cloned().zip(values).filter(|(_, c)| !c.is_zero()).collect();
        Self { n, coeffs }
    }
}

/// `v * m` for a prebuilt matrix `m` of the right size.
pub fn change_basis_with(v: &CoeffVector, m: &QMatrix) -> Result<CoeffVector> {
    if v.n != m.n() {
        return Err(Error::LengthMismatch(2 * v.n, 2 * m.n()));
    }
    let out = m.entries().vec_mul(&v.to_dense(m.order()));
    Ok(CoeffVector::from_dense(v.n, m.order(), out))
}

pub fn change_basis(v: &CoeffVector, direction: Direction, exec: Exec) -> Result<CoeffVector> {
    let m = match direction {
        Direction::UFromZ => build_m(v.n, exec)?,
        Direction::ZFromU => build_minv_tilings(v.n, exec)?,
    };
    change_basis_with(v, &m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_pick_rows() {
        let m = build_m(3, Exec::Sequential).unwrap();
        for (i, p) in m.order().iter().enumerate() {
            let out = change_basis_with(&CoeffVector::unit(p.clone()), &m).unwrap();
            assert_eq!(out.to_dense(m.order()), m.entries().row(i).to_vec());
        }
    }

    #[test]
    fn top_path_is_fixed_for_two() {
        let top = DyckPath::new(vec![0, 1, 2, 1, 0]).unwrap();
        let v = CoeffVector::unit(top);
        assert_eq!(change_basis(&v, Direction::UFromZ, Exec::Sequential).unwrap(), v);
    }

    #[test]
    fn size_mismatch() {
        let m = build_m(2, Exec::Sequential).unwrap();
        let v = CoeffVector::unit(DyckPath::new(vec![0, 1, 0]).unwrap());
        assert!(change_basis_with(&v, &m).is_err());
        let mut w = CoeffVector::new(2);
        assert!(w.set(DyckPath::new(vec![0, 1, 0]).unwrap(), RatQ::from_integer(1)).is_err());
    }
}
