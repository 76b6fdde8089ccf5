//! U_q(sl2) acting on tensor powers of its two-dimensional irreducible M2.
//!
//! A monomial of `n` tensor factors is a bitstring: bit `p - 1` is factor
//! `p` counted from the RIGHT, and bit value `b` selects `e_b`. So for
//! `e_1 (x) e_0` the left factor is bit 1 and the monomial is `0b10`.
//!
//! On one factor `K e_0 = q e_0`, `K e_1 = q^-1 e_1`, `E e_1 = e_0`,
//! `F e_0 = e_1`. On tensor products the generators act through the
//! coproduct `E -> E (x) K + 1 (x) E`, `F -> F (x) 1 + K^-1 (x) F`,
//! `K -> K (x) K`, so `E` at a factor picks up `K` from every factor to its
//! right and `F` picks up `K^-1` from every factor to its left.

mod block;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qfield::{ratq_to_json, LaurentPoly, RatQ};

pub use block::{
    basis_rank, build_u, c_alpha, homogeneous_kernel, verify_projections, BlockVector, HomogeneousKernel,
    ProjectionCase, ProjectionCheck, ProjectionReport, BLOCK_CAP,
};

/// Largest number of tensor factors a [`TensorVec`] can hold.
pub const MAX_FACTORS: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

/// A vector in `M2^(x)n` over Q(q), stored sparsely; no stored coefficient is
/// zero.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVec {
    n: usize,
    coeffs: BTreeMap<u64, RatQ>,
}

/// `+1` for `e_0`, `-1` for `e_1`: the K-weight of one factor.
fn weight_of_bit(m: u64, i: usize) -> i64 {
    if m >> i & 1 == 0 {
        1
    } else {
        -1
    }
}

/// K-weight of the bits `lo..hi`.
fn weight_of_range(m: u64, lo: usize, hi: usize) -> i64 {
    (lo..hi).map(|i| weight_of_bit(m, i)).sum()
}

impl TensorVec {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_FACTORS, "at most {MAX_FACTORS} tensor factors");
        Self { n, coeffs: BTreeMap::new() }
    }

    /// The scalar `c` in `M2^(x)0`.
    pub fn scalar(c: RatQ) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(n: usize, bits: u64, c: RatQ) -> Self {
        let mut v = Self::zero(n);
        assert!(bits >> n == 0, "bits beyond the last factor");
        v.add_term(bits, c);
        v
    }

    /// Parses factors written leftmost first, e.g. `"10"` is `e_1 (x) e_0`.
    pub fn basis(factors: &str) -> Result<Self> {
        let mut bits = 0u64;
        for (i, ch) in factors.chars().enumerate() {
            bits = bits << 1
                | match ch {
                    '0' => 0,
                    '1' => 1,
                    other => return Err(Error::Parse { index: i, reason: format!("expected 0 or 1, got {other:?}") }),
                };
        }
        Ok(Self::monomial(factors.len(), bits, RatQ::one()))
    }

    /// The singlet `(e_1 (x) e_0 - q e_0 (x) e_1) / (q - q^-1)`.
    pub fn singlet() -> Self {
        let d = RatQ::one() / RatQ::from_poly(LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1));
        let mut v = Self::zero(2);
        v.add_term(0b10, d.clone());
        v.add_term(0b01, -d.mul_q_pow(1));
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, bits: u64) -> RatQ {
        self.coeffs.get(&bits).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending bitstring order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &RatQ)> {
        self.coeffs.iter().map(|(&b, c)| (b, c))
    }

    /// `bits` written leftmost factor first.
    pub fn bitstring(&self, bits: u64) -> String {
        (0..self.n).rev().map(|i| if bits >> i & 1 == 0 { '0' } else { '1' }).collect()
    }

    pub fn add_term(&mut self, bits: u64, c: RatQ) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(bits) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &TensorVec) -> TensorVec {
        assert_eq!(self.n, other.n, "adding vectors with different numbers of factors");
        let mut out = self.clone();
        for (&b, c) in &other.coeffs {
            out.add_term(b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorVec) -> TensorVec {
        self.add(&other.scale(&-RatQ::one()))
    }

    pub fn scale(&self, c: &RatQ) -> TensorVec {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, coeffs: self.coeffs.iter().map(|(&b, x)| (b, x * c)).collect() }
    }

    /// `self (x) other`, with `self` on the left.
    pub fn tensor(&self, other: &TensorVec) -> TensorVec {
        let mut out = Self::zero(self.n + other.n);
        for (&a, x) in &self.coeffs {
            for (&b, y) in &other.coeffs {
                out.add_term(a << other.n | b, x * y);
            }
        }
        out
    }

    /// Weight of every monomial if they all share one, i.e. the exponent `s`
    /// with `K v = q^s v`.
    pub fn weight(&self) -> Option<i64> {
        let mut ws = self.coeffs.keys().map(|&m| weight_of_range(m, 0, self.n));
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.coeffs.iter().map(|(&b, c)| json!([self.bitstring(b), ratq_to_json(c)])).collect();
        json!({ "n": self.n, "order": "leftmost factor first; factor 1 is the rightmost", "terms": terms })
    }
}

impl fmt::Display for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&b, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{}  {}", self.bitstring(b), c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorVec(n={}, {{", self.n)?;
        for (k, (&b, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", self.bitstring(b), c)?;
        }
        write!(f, "}})")
    }
}

/// Action of a generator through the iterated coproduct.
pub fn act(g: Generator, v: &TensorVec) -> TensorVec {
    let n = v.n;
    let mut out = TensorVec::zero(n);
    for (&m, c) in &v.coeffs {
        match g {
            Generator::K => out.add_term(m, c.mul_q_pow(weight_of_range(m, 0, n))),
            Generator::KInv => out.add_term(m, c.mul_q_pow(-weight_of_range(m, 0, n))),
            Generator::E => {
                for i in (0..n).filter(|&i| m >> i & 1 == 1) {
                    out.add_term(m & !(1 << i), c.mul_q_pow(weight_of_range(m, 0, i)));
                }
            }
            Generator::F => {
                for i in (0..n).filter(|&i| m >> i & 1 == 0) {
                    out.add_term(m | 1 << i, c.mul_q_pow(-weight_of_range(m, i + 1, n)));
                }
            }
        }
    }
    out
}

/// `E v = 0` and `K v = q^s v`.
pub fn is_highest_weight(v: &TensorVec, s: i64) -> bool {
    act(Generator::E, v).is_zero() && act(Generator::K, v) == v.scale(&RatQ::q_pow(s))
}

/// Values of the projection `M2 (x) M2 -> C` on `e_a (x) e_b`.
fn pi_hat_pair(a: u64, b: u64) -> RatQ {
    let two = RatQ::q_integer(2).unwrap();
    match (a, b) {
        (0, 1) => RatQ::from_poly(LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1)) / two,
        (1, 0) => RatQ::from_poly(LaurentPoly::one() - LaurentPoly::q_pow(-2)) / two,
        _ => RatQ::zero(),
    }
}

/// Contracts factors `j` and `j + 1` (counted from the right) with the
/// singlet projection, leaving `n - 2` factors.
pub fn pi_hat(v: &TensorVec, j: usize) -> Result<TensorVec> {
    if j == 0 || j + 1 > v.n {
        return Err(Error::ColumnOutOfRange { j, max: v.n.saturating_sub(1) });
    }
    // pi_hat(e_1 (x) e_0) = -q^-1 pi_hat(e_0 (x) e_1); sum first, scale once
    let mut out = TensorVec::zero(v.n - 2);
    let low_mask = (1u64 << (j - 1)) - 1;
    for (&m, c) in &v.coeffs {
        let left = m >> j & 1;
        let right = m >> (j - 1) & 1;
        let rest = (m & low_mask) | (m >> (j + 1)) << (j - 1);
        match (left, right) {
            (0, 1) => out.add_term(rest, c.clone()),
            (1, 0) => out.add_term(rest, -c.mul_q_pow(-1)),
            _ => {}
        }
    }
    Ok(out.scale(&pi_hat_pair(0, 1)))
}
