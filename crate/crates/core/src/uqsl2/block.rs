use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{act, is_highest_weight, pi_hat, Generator, TensorVec};
use crate::dyck::{enumerate_paths, DyckPath, LocalShape};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{nullspace, rank};
use crate::qfield::{LaurentPoly, RatQ};

/// Largest N for the basis and kernel checks.
pub const BLOCK_CAP: usize = 5;

/// The conformal-block vector of a Dyck path together with the unnormalized
/// vectors of every prefix of the path.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockVector {
    path: DyckPath,
    prefixes: Vec<TensorVec>,
    vec: TensorVec,
    normalization: RatQ,
}

impl BlockVector {
    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    /// `u^(k)` for `k = 0..=2N`; `u^(k)` has `k` factors and K-weight `a(k)`.
    pub fn prefixes(&self) -> &[TensorVec] {
        &self.prefixes
    }

    /// The normalized vector `[2]^N c_a u^(2N)`.
    pub fn vec(&self) -> &TensorVec {
        &self.vec
    }

    /// `[2]^N c_a`.
    pub fn normalization(&self) -> &RatQ {
        &self.normalization
    }

    /// Every prefix is a highest-weight vector of the weight given by the
    /// path height there.
    pub fn prefixes_are_highest_weight(&self) -> bool {
        self.prefixes.iter().enumerate().all(|(k, u)| is_highest_weight(u, self.path.height(k) as i64))
    }
}

/// `prod over up-wedges 1/[a(i)+1]` times `prod over down-wedges [a(i)+1]`.
pub fn c_alpha(alpha: &DyckPath) -> RatQ {
    let mut c = RatQ::one();
    for j in 1..alpha.len_steps() {
        let h = alpha.height(j) as i64 + 1;
        match alpha.local_shape(j).unwrap() {
            LocalShape::UpWedge => c = c / RatQ::q_integer(h).unwrap(),
            LocalShape::DownWedge => c = c * RatQ::q_integer(h).unwrap(),
            _ => {}
        }
    }
    c
}

/// Builds `u^(k)` step by step: an up-step puts `e_0` in a new leftmost
/// factor; a down-step from height `a` gives
/// `(e_1 (x) u - q^a / [a] e_0 (x) F u) / (q - q^-1)`.
///
/// The recursion runs on `w^(k) = u^(k) / s_k` with the scalar `s_k` split
/// off, so every coefficient of `w^(k)` stays a Laurent polynomial.
pub fn build_u(alpha: &DyckPath) -> Result<BlockVector> {
    let e0 = TensorVec::basis("0")?;
    let e1 = TensorVec::basis("1")?;
    let diff = RatQ::from_poly(LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1));
    let mut w = TensorVec::scalar(RatQ::one());
    let mut s = RatQ::one();
    let mut prefixes = vec![w.clone()];
    for k in 0..alpha.len_steps() {
        let a = alpha.height(k) as i64;
        if alpha.height(k + 1) > alpha.height(k) {
            w = e0.tensor(&w);
        } else {
            let qa = RatQ::q_integer(a)?;
            let fw = e0.tensor(&act(Generator::F, &w)).scale(&RatQ::q_pow(a));
            w = e1.tensor(&w).scale(&qa).sub(&fw);
            s = s.checked_div(&(&diff * &qa))?;
        }
        prefixes.push(w.scale(&s));
    }
    let two = RatQ::q_integer(2)?;
    let normalization = (0..alpha.n()).fold(c_alpha(alpha), |acc, _| acc * two.clone());
    let vec = w.scale(&(&normalization * &s));
    Ok(BlockVector { path: alpha.clone(), prefixes, vec, normalization })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProjectionCase {
    Slope,
    UpWedge,
    /// Carries the predicted factor `-[a(j)+1]/[a(j)+2]`.
    DownWedge(RatQ),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionCheck {
    pub j: usize,
    pub case: ProjectionCase,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionReport {
    pub path: DyckPath,
    pub checks: Vec<ProjectionCheck>,
}

impl ProjectionReport {
    pub fn failures(&self) -> impl Iterator<Item = &ProjectionCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Compares the projection of the block vector at every interior column
/// against zero at slopes, the smaller block vector at up-wedges and
/// `-[a(j)+1]/[a(j)+2]` times it at down-wedges.
pub fn verify_projections(alpha: &DyckPath) -> Result<ProjectionReport> {
    let u = build_u(alpha)?;
    let mut checks = Vec::new();
    for j in 1..alpha.len_steps() {
        let got = pi_hat(u.vec(), j)?;
        let shape = alpha.local_shape(j)?;
        let (case, expected) = match shape {
            LocalShape::UpSlope | LocalShape::DownSlope => (ProjectionCase::Slope, TensorVec::zero(got.n())),
            LocalShape::UpWedge => (ProjectionCase::UpWedge, build_u(&alpha.remove_wedge(j)?)?.vec),
            LocalShape::DownWedge => {
                let h = alpha.height(j) as i64;
                let factor = -RatQ::q_ratio(h + 1, h + 2)?;
                let smaller = build_u(&alpha.remove_wedge(j)?)?.vec.scale(&factor);
                (ProjectionCase::DownWedge(factor), smaller)
            }
        };
        checks.push(ProjectionCheck { j, case, ok: got == expected });
    }
    Ok(ProjectionReport { path: alpha.clone(), checks })
}

fn weight_zero_monomials(factors: usize) -> Vec<u64> {
    (0..1u64 << factors).filter(|m| 2 * m.count_ones() as usize == factors).collect()
}

/// Rank over Q(q) of the block vectors of all Dyck paths of size `n`.
pub fn basis_rank(n: usize, exec: Exec) -> Result<usize> {
    if n > BLOCK_CAP {
        return Err(Error::CapExceeded { n, cap: BLOCK_CAP });
    }
    let paths = enumerate_paths(n)?;
    let vecs = exec.map(paths, |p| build_u(&p).map(|b| b.vec));
    let columns = weight_zero_monomials(2 * n);
    let rows = vecs
        .into_iter()
        .map(|v| v.map(|v| columns.iter().map(|&m| v.coeff(m)).collect()))
        .collect::<Result<Vec<Vec<RatQ>>>>()?;
    Ok(rank(rows))
}

/// Dimension of the weight-zero highest-weight space of `M2^(x)2n` and the
/// rank of all projections jointly restricted to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomogeneousKernel {
    pub h0_dim: usize,
    pub joint_rank: usize,
}

impl HomogeneousKernel {
    /// Only the zero vector is killed by every projection.
    pub fn is_trivial(&self) -> bool {
        self.joint_rank == self.h0_dim
    }
}

/// Computes the highest-weight space as the kernel of `E` on weight-zero
/// vectors, then the joint kernel of every projection on it.
pub fn homogeneous_kernel(n: usize) -> Result<HomogeneousKernel> {
    if n > BLOCK_CAP {
        return Err(Error::CapExceeded { n, cap: BLOCK_CAP });
    }
    let factors = 2 * n;
    let cols = weight_zero_monomials(factors);
    let images: Vec<TensorVec> =
        cols.iter().map(|&m| act(Generator::E, &TensorVec::monomial(factors, m, RatQ::one()))).collect();
    let targets: Vec<u64> = {
        let mut t: Vec<u64> = images.iter().flat_map(|v| v.terms().map(|(b, _)| b)).collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    let e_rows: Vec<Vec<RatQ>> = targets.iter().map(|&r| images.iter().map(|v| v.coeff(r)).collect()).collect();
    let kernel = if e_rows.is_empty() {
        (0..cols.len())
            .map(|i| (0..cols.len()).map(|k| if i == k { RatQ::one() } else { RatQ::zero() }).collect())
            .collect()
    } else {
        nullspace(e_rows, cols.len())
    };
    let h0: Vec<TensorVec> = kernel
        .iter()
        .map(|coeffs| {
            let mut v = TensorVec::zero(factors);
            for (&m, c) in cols.iter().zip(coeffs) {
                v.add_term(m, c.clone());
            }
            v
        })
        .collect();

    // rows of the stacked map are indexed by (j, output monomial)
    let mut rows: BTreeMap<(usize, u64), Vec<RatQ>> = BTreeMap::new();
    for (k, v) in h0.iter().enumerate() {
        for j in 1..factors {
            for (m, c) in pi_hat(v, j)?.terms() {
                rows.entry((j, m)).or_insert_with(|| vec![RatQ::zero(); h0.len()])[k] = c.clone();
            }
        }
    }
    let joint_rank = rank(rows.into_values().collect());
    Ok(HomogeneousKernel { h0_dim: h0.len(), joint_rank })
}
