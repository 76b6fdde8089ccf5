use std::f64::consts::PI;

use num_complex::Complex64;

use super::ratq::RatQ;
use crate::error::{Error, Result};

/// Absolute threshold on `|den(q)|` below which evaluation is a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Numeric specialization point `q = exp(i 4 pi / kappa)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QNumeric {
    kappa: f64,
    q_value: Complex64,
}

impl QNumeric {
    pub fn new(kappa: f64) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(Error::InvalidKappa(kappa));
        }
        Ok(Self { kappa, q_value: Complex64::from_polar(1.0, Self::angle_of(kappa)) })
    }

    fn angle_of(kappa: f64) -> f64 {
        4.0 * PI / kappa
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn q_value(&self) -> Complex64 {
        self.q_value
    }

    /// Argument of `q` on the unit circle.
    pub fn angle(&self) -> f64 {
        Self::angle_of(self.kappa)
    }
}

/// Complex value of `f` at `q = exp(i 4 pi / kappa)`.
pub fn eval_at_kappa(f: &RatQ, ctx: &QNumeric) -> Result<Complex64> {
    let theta = ctx.angle();
    let den = f.den().eval_unit(theta);
    if den.norm() < POLE_TOLERANCE {
        return Err(Error::Pole { kappa: ctx.kappa, magnitude: den.norm() });
    }
    Ok(f.num().eval_unit(theta) / den)
}
