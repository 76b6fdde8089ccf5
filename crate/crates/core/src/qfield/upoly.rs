//! Dense univariate polynomials over Q, little-endian coefficient vectors.
//! Only what canonicalization of `RatQ` needs: remainder, exact quotient and gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn make_monic(p: &mut [BigRational]) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            for c in p.iter_mut() {
                *c /= &lead;
            }
        }
    }
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub(crate) fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lead = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / lead;
        if c.is_zero() {
            continue;
        }
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                rem[i + k] -= &c * bk;
            }
        }
        quot[i] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Scales a rational polynomial to a primitive integer one.
fn primitive_integer(p: &[BigRational]) -> Vec<BigInt> {
    let f = content_inverse(p);
    p.iter().map(|c| (c * &f).to_integer()).collect()
}

fn make_primitive(p: &mut [BigInt]) {
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_one() && !g.is_zero() {
        for c in p.iter_mut() {
            *c /= &g;
        }
    }
}

/// Pseudo-remainder of `a` by `b` over Z, trailing zeros trimmed.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.to_vec();
    while rem.len() > db {
        let top = rem.pop().unwrap();
        if !top.is_zero() {
            let shift = rem.len() - db;
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (k, bk) in b[..db].iter().enumerate() {
                rem[shift + k] -= &top * bk;
            }
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        make_primitive(&mut rem);
    }
    rem
}

/// Monic gcd; both inputs nonzero. Runs the primitive remainder sequence
/// over Z, which keeps coefficients small.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (x, y) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let (mut x, mut y) = (primitive_integer(x), primitive_integer(y));
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigRational::one()];
        }
        let r = pseudo_rem(&x, &y);
        x = std::mem::replace(&mut y, r);
    }
    let mut out: Vec<BigRational> = x.into_iter().map(BigRational::from_integer).collect();
    make_monic(&mut out);
    out
}

/// `(lcm of denominators) / (gcd of numerators)`: multiplying `p` by this
/// yields a primitive integer polynomial.
pub(crate) fn content_inverse(p: &[BigRational]) -> BigRational {
    let mut l = BigInt::one();
    let mut g = BigInt::zero();
    for c in p.iter().filter(|c| !c.is_zero()) {
        l = l.lcm(c.denom());
        g = g.gcd(c.numer());
    }
    BigRational::new(l, g.abs())
}
