//! Gamma and Gauss hypergeometric functions on the real line.

use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

const MAX_TERMS: usize = 100_000;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// `1 / Gamma(x)`, which is zero at the poles of Gamma.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        0.0
    } else {
        1.0 / gamma(x)
    }
}

/// `Gamma(x)`, an error at nonpositive integers.
pub fn gamma_checked(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Domain(format!("Gamma has a pole at {x}")));
    }
    Ok(gamma(x))
}

/// Power series of 2F1(a, b; c; z), summed until the terms stop mattering.
pub fn hyp2f1_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(Error::Domain(format!("2F1 with c = {c}")));
    }
    if z.is_nan() || z.abs() >= 1.0 {
        return Err(Error::Domain(format!("2F1 series needs |z| < 1, got {z}")));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let k = k as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        if term.abs() <= f64::EPSILON * 1e-2 * sum.abs() {
            small += 1;
            if small == 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence(MAX_TERMS))
}

/// 2F1(a, b; c; 1 - eps) through the connection formula around z = 1,
/// taking `eps = 1 - z` directly so that small `eps` keeps full precision.
/// Needs `c - a - b` to be a non-integer.
pub fn hyp2f1_near_one(a: f64, b: f64, c: f64, eps: f64) -> Result<f64> {
    let s = c - a - b;
    if s.fract() == 0.0 {
        return Err(Error::Domain(format!("2F1 connection formula needs c - a - b non-integer, got {s}")));
    }
    let gc = gamma_checked(c)?;
    let mut total = 0.0;
    let w1 = gc * gamma_checked(s)? * rgamma(c - a) * rgamma(c - b);
    if w1 != 0.0 {
        total += w1 * hyp2f1_series(a, b, 1.0 - s, eps)?;
    }
    let w2 = gc * gamma_checked(-s)? * rgamma(a) * rgamma(b);
    if w2 != 0.0 {
        total += w2 * eps.powf(s) * hyp2f1_series(c - a, c - b, 1.0 + s, eps)?;
    }
    Ok(total)
}

/// 2F1(a, b; c; z) for `0 <= z < 1`: the power series up to `z = 1/2`, the
/// connection formula around 1 beyond.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!("2F1 evaluated at z = {z}, outside [0, 1)")));
    }
    if z <= 0.5 {
        hyp2f1_series(a, b, c, z)
    } else {
        hyp2f1_near_one(a, b, c, 1.0 - z)
    }
}
