use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{q_integer, LaurentPoly};
use super::upoly;
use crate::error::{Error, Result};

/// An element of the field Q(q), kept in canonical form.
///
/// Canonical form: `den` is an ordinary polynomial (lowest exponent 0) with
/// primitive integer coefficients and a positive constant term, `num` carries
/// any power of `q`, and `num` and `den` are coprime. Two `RatQ` values are
/// equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Applies `op` to `a` and `b` (`b` is ignored for `Neg`).
pub fn field_arith(a: &RatQ, b: &RatQ, op: FieldOp) -> Result<RatQ> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
        FieldOp::Neg => -a,
    })
}

impl RatQ {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_integer(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(e))
    }

    /// `[n]` as a field element.
    pub fn q_integer(n: i64) -> Result<Self> {
        Ok(Self::from_poly(q_integer(n)?))
    }

    /// `[a] / [b]`.
    pub fn q_ratio(a: i64, b: i64) -> Result<Self> {
        Self::new(q_integer(a)?, q_integer(b)?)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Multiplication by `q^k`; cheap, stays canonical.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        Self { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Substitutes `q = 1`.
    pub fn at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }

    /// Re-canonicalizes; the identity on values built through this API.
    pub fn canonicalized(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    /// True when `self` is already in canonical form.
    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalized()
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = cancel(num, den);
        Self::normalized(num, den)
    }

    /// Moves powers of `q` into `num` and makes `den` primitive with positive
    /// constant term. `num` and `den` must already be coprime.
    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        let (nlow, mut n) = num.into_dense();
        let (dlow, mut d) = den.into_dense();
        let mut f = upoly::content_inverse(&d);
        if d[0].is_negative() {
            f = -f;
        }
        if !f.is_one() {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c *= &f;
            }
        }
        Self { num: LaurentPoly::from_dense(nlow - dlow, n), den: LaurentPoly::from_dense(0, d) }
    }
}

/// Divides `a` and `b` by their polynomial gcd.
fn cancel(a: LaurentPoly, b: LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if a.is_monomial() || b.is_monomial() {
        return (a, b);
    }
    let (alow, x) = a.into_dense();
    let (blow, y) = b.into_dense();
    let g = upoly::gcd(&x, &y);
    if g.len() == 1 {
        return (LaurentPoly::from_dense(alow, x), LaurentPoly::from_dense(blow, y));
    }
    let x = upoly::div_rem(&x, &g).0;
    let y = upoly::div_rem(&y, &g).0;
    (LaurentPoly::from_dense(alow, x), LaurentPoly::from_dense(blow, y))
}

impl Zero for RatQ {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatQ {
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
}

impl Default for RatQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatQ {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add<&RatQ> for &RatQ {
    type Output = RatQ;
    fn add(self, rhs: &RatQ) -> RatQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatQ::from_poly(&self.num + &rhs.num);
            }
            return RatQ::canonical(&self.num + &rhs.num, self.den.clone());
        }
        // a/b + c/d = (a d' + c b') / (b d') with b = g b', d = g d'; only g
        // can share a factor with the new numerator
        let (b1, d1) = cancel(self.den.clone(), rhs.den.clone());
        let g = if b1 == self.den { LaurentPoly::one() } else { exact_quotient(&self.den, &b1) };
        let num = &self.num * &d1 + &rhs.num * &b1;
        if num.is_zero() {
            return RatQ::zero();
        }
        let (num, g) = cancel(num, g);
        RatQ::normalized(num, &(&b1 * &d1) * &g)
    }
}

fn exact_quotient(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (alow, x) = a.clone().into_dense();
    let (blow, y) = b.clone().into_dense();
    LaurentPoly::from_dense(alow - blow, upoly::div_rem(&x, &y).0)
}

impl Neg for &RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        RatQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        RatQ { num: -self.num, den: self.den }
    }
}

impl Sub<&RatQ> for &RatQ {
    type Output = RatQ;
    fn sub(self, rhs: &RatQ) -> RatQ {
        self + &(-rhs)
    }
}

impl Mul<&RatQ> for &RatQ {
    type Output = RatQ;
    fn mul(self, rhs: &RatQ) -> RatQ {
        if self.is_zero() || rhs.is_zero() {
            return RatQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatQ::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel: the factors left over are coprime already
        let (a, d) = cancel(self.num.clone(), rhs.den.clone());
        let (c, b) = cancel(rhs.num.clone(), self.den.clone());
        RatQ::normalized(&a * &c, &b * &d)
    }
}

impl Div<&RatQ> for &RatQ {
    type Output = RatQ;
    /// Panics on division by zero; use [`RatQ::checked_div`] to get an error.
    fn div(self, rhs: &RatQ) -> RatQ {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RatQ {
            type Output = RatQ;
            fn $m(self, rhs: RatQ) -> RatQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatQ> for RatQ {
            type Output = RatQ;
            fn $m(self, rhs: &RatQ) -> RatQ {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatQ> for &RatQ {
            type Output = RatQ;
            fn $m(self, rhs: RatQ) -> RatQ {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&RatQ> for RatQ {
    fn add_assign(&mut self, rhs: &RatQ) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.is_monomial() {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQ({self})")
    }
}
