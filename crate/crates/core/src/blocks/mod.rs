//! Two-point conformal blocks in closed form, the two second-order ODEs they
//! satisfy, and their limits as `z -> 1`.
//!
//! Blocks are labelled by a local shape of a Dyck path at height `lambda`:
//! a slope steps the weight label by two (`lambda -> lambda +- 2`), a wedge
//! returns to `lambda`. Normalization: `C+_lambda = 1` for every `lambda`,
//! which fixes
//! `C-_lambda = Gamma((4 - k + 4l)/k) Gamma(4/k) / (Gamma(4l/k) Gamma((8 - k)/k))`.
//! Other choices of `C+` rescale each block by a constant.

pub mod special;

use std::f64::consts::PI;

use nalgebra::{Matrix4, Vector4};

use crate::dyck::{DyckPath, LocalShape};
use crate::error::{Error, Result};
use crate::exec::Exec;
use special::{gamma_checked, hyp2f1, hyp2f1_near_one, rgamma};

/// Default finite-difference step, a power of two so that `z +- k * step`
/// are exact for the grid points.
pub const ODE_STEP: f64 = 1.0 / 8192.0;

pub const GRID_KAPPAS: [f64; 4] = [2.5, 3.7, 5.3, 6.9];
pub const GRID_LAMBDAS: [u32; 4] = [0, 1, 2, 3];
pub const GRID_Z: [f64; 4] = [0.2, 0.4, 0.6, 0.8];
pub const SHAPES: [LocalShape; 4] =
    [LocalShape::UpWedge, LocalShape::DownWedge, LocalShape::UpSlope, LocalShape::DownSlope];

/// `h(l) = (l^2 + 2l)/k - l/2`.
pub fn conformal_weight(lambda: i64, kappa: f64) -> f64 {
    let l = lambda as f64;
    (l * l + 2.0 * l) / kappa - l / 2.0
}

/// `c = (3k - 8)(6 - k) / (2k)`.
pub fn central_charge(kappa: f64) -> f64 {
    (3.0 * kappa - 8.0) * (6.0 - kappa) / (2.0 * kappa)
}

/// `C-_lambda` under `C+ = 1`; zero at `lambda = 0`.
pub fn c_minus(lambda: i64, kappa: f64) -> Result<f64> {
    let l = lambda as f64;
    Ok(gamma_checked((4.0 - kappa + 4.0 * l) / kappa)?
        * gamma_checked(4.0 / kappa)?
        * rgamma(4.0 * l / kappa)
        * rgamma((8.0 - kappa) / kappa))
}

/// Smallest `lambda` for which a block of this shape exists.
pub fn min_lambda(shape: LocalShape) -> u32 {
    match shape {
        LocalShape::UpWedge | LocalShape::UpSlope => 0,
        LocalShape::DownWedge => 1,
        LocalShape::DownSlope => 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockContext {
    kappa: f64,
    lambda: u32,
    shape: LocalShape,
    /// Constant in front of the closed form.
    prefactor: f64,
}

impl BlockContext {
    pub fn new(kappa: f64, lambda: u32, shape: LocalShape) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 0.0 && kappa < 8.0) {
            return Err(Error::InvalidKappa(kappa));
        }
        if lambda < min_lambda(shape) {
            return Err(Error::Domain(format!("{shape:?} block needs lambda >= {}", min_lambda(shape))));
        }
        let l = lambda as i64;
        let prefactor = match shape {
            LocalShape::UpSlope => 1.0,
            LocalShape::DownSlope => c_minus(l, kappa)? * c_minus(l - 1, kappa)?,
            LocalShape::UpWedge => c_minus(l + 1, kappa)?,
            LocalShape::DownWedge => c_minus(l, kappa)?,
        };
        if !prefactor.is_finite() {
            return Err(Error::Domain(format!("kappa = {kappa} hits a Gamma pole")));
        }
        let ctx = Self { kappa, lambda, shape, prefactor };
        if shape.is_wedge() {
            let (a, b, c) = ctx.hyp_params();
            if (c - a - b).fract() == 0.0 || (c <= 0.0 && c.fract() == 0.0) {
                return Err(Error::Domain(format!("kappa = {kappa} makes the hypergeometric parameters degenerate")));
            }
        }
        Ok(ctx)
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn shape(&self) -> LocalShape {
        self.shape
    }

    pub fn prefactor(&self) -> f64 {
        self.prefactor
    }

    /// Labels `(sigma0, sigma2)` entering the ODEs.
    pub fn sigmas(&self) -> (i64, i64) {
        let l = self.lambda as i64;
        match self.shape {
            LocalShape::UpSlope => (l, l + 2),
            LocalShape::DownSlope => (l, l - 2),
            _ => (l, l),
        }
    }

    fn h(&self, l: i64) -> f64 {
        conformal_weight(l, self.kappa)
    }

    /// Hypergeometric parameters of a wedge block.
    fn hyp_params(&self) -> (f64, f64, f64) {
        let (k, l) = (self.kappa, self.lambda as f64);
        let a = (k - 4.0) / k;
        match self.shape {
            LocalShape::UpWedge => (a, 4.0 * l / k, (4.0 * l + 4.0) / k),
            _ => (a, (2.0 * k - 8.0 - 4.0 * l) / k, (2.0 * k - 4.0 * l - 4.0) / k),
        }
    }

    /// Power of `z` in front of the block.
    fn z_power(&self) -> f64 {
        let (k, l) = (self.kappa, self.lambda as i64);
        let h = self.h(1);
        match self.shape {
            LocalShape::UpSlope => self.h(l + 1) - self.h(l) - h,
            LocalShape::DownSlope => self.h(l - 1) - self.h(l) - h,
            LocalShape::UpWedge => 2.0 * l as f64 / k,
            LocalShape::DownWedge => (k - 2.0 * l as f64 - 4.0) / k,
        }
    }

    /// Power of `1 - z` in front of the block.
    fn one_minus_z_power(&self) -> f64 {
        if self.shape.is_slope() {
            2.0 / self.kappa
        } else {
            (self.kappa - 6.0) / self.kappa
        }
    }
}

/// The block function at `0 < z < 1`.
pub fn block_g(ctx: &BlockContext, z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain(format!("block evaluated at z = {z}, outside (0, 1)")));
    }
    let outer = ctx.prefactor * z.powf(ctx.z_power()) * (1.0 - z).powf(ctx.one_minus_z_power());
    if ctx.shape.is_slope() {
        return Ok(outer);
    }
    let (a, b, c) = ctx.hyp_params();
    Ok(outer * hyp2f1(a, b, c, z)?)
}

/// `(1 - z)^((6 - k)/k) g(z)` at `z = 1 - eps` for a wedge block, with the
/// powers of `1 - z` cancelled analytically.
pub fn wedge_profile(ctx: &BlockContext, eps: f64) -> Result<f64> {
    if !ctx.shape.is_wedge() {
        return Err(Error::Domain("only wedge blocks have a finite limit at z = 1".into()));
    }
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::Domain(format!("eps = {eps} outside (0, 1/2)")));
    }
    let (a, b, c) = ctx.hyp_params();
    Ok(ctx.prefactor * (1.0 - eps).powf(ctx.z_power()) * hyp2f1_near_one(a, b, c, eps)?)
}

/// Coefficients `(c2, c1, c0)` of `c2 g'' + c1 g' + c0 g = 0` for both ODEs.
pub fn ode_coefficients(ctx: &BlockContext, z: f64) -> [[f64; 3]; 2] {
    let k = ctx.kappa;
    let h = ctx.h(1);
    let (s0, s2) = ctx.sigmas();
    let (h0, h2) = (ctx.h(s0), ctx.h(s2));
    let zz = z * z * (z - 1.0) * (z - 1.0);
    let first =
        [k * zz, 8.0 * z * (z - 1.0) * (z - 0.5), 4.0 * (z * (z - 2.0) * h - z * (z - 1.0) * h2 + (z - 1.0) * h0)];
    let d = h2 - h0 - 2.0 * h;
    let second = [
        k * zz,
        -2.0 * z * (z - 1.0) * (k * (d - 1.0) * (z - 1.0) + 2.0 * (z - 2.0)),
        (k * d * (d - 1.0) + 4.0 * d - 4.0 * h0) * (z - 1.0) * (z - 1.0) - 4.0 * h,
    ];
    [first, second]
}

/// Residuals of both ODEs for an arbitrary function `g`, with `g'` and `g''`
/// from five-point central differences.
pub fn ode_residual_of(ctx: &BlockContext, z: f64, step: f64, g: impl Fn(f64) -> Result<f64>) -> Result<(f64, f64)> {
    if !(step > 0.0 && z - 2.0 * step > 0.0 && z + 2.0 * step < 1.0) {
        return Err(Error::Domain(format!("stencil around z = {z} with step {step} leaves (0, 1)")));
    }
    let f = [g(z - 2.0 * step)?, g(z - step)?, g(z)?, g(z + step)?, g(z + 2.0 * step)?];
    let d1 = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * step);
    let d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * step * step);
    let [a, b] = ode_coefficients(ctx, z);
    Ok((a[0] * d2 + a[1] * d1 + a[2] * f[2], b[0] * d2 + b[1] * d1 + b[2] * f[2]))
}

pub fn ode_residual(ctx: &BlockContext, z: f64, step: f64) -> Result<(f64, f64)> {
    ode_residual_of(ctx, z, step, |x| block_g(ctx, x))
}

/// `[n]` at `q = exp(i 4 pi / k)`, written as a ratio of sines.
fn sine_q_integer(n: f64, kappa: f64) -> f64 {
    let theta = 4.0 * PI / kappa;
    (n * theta).sin() / theta.sin()
}

fn sine_ratio(num: f64, den: f64, kappa: f64) -> Result<f64> {
    let d = sine_q_integer(den, kappa);
    if d.abs() < crate::qfield::POLE_TOLERANCE {
        return Err(Error::Pole { kappa, magnitude: d.abs() });
    }
    Ok(sine_q_integer(num, kappa) / d)
}

/// Predicted `z -> 1` limit of `(1 - z)^((6 - k)/k) g`: 1 for the up-wedge,
/// `-[l]/[l+1]` for the down-wedge.
pub fn expected_wedge_limit(ctx: &BlockContext) -> Result<f64> {
    match ctx.shape {
        LocalShape::UpWedge => Ok(1.0),
        LocalShape::DownWedge => Ok(-sine_ratio(ctx.lambda as f64, ctx.lambda as f64 + 1.0, ctx.kappa)?),
        _ => Err(Error::Domain("only wedge blocks have a finite limit at z = 1".into())),
    }
}

/// Limit of `(1 - z)^((6 - k)/k) g(z)` as `z -> 1`, extrapolated from
/// `eps = 1 - z = 1e-3 .. 1e-6`. Near `z = 1` the profile behaves as
/// `L + a eps^p + b eps + c eps^(1+p)` with `p = (8 - k)/k`, so the four
/// samples determine `L` up to `O(eps^2)`.
pub fn wedge_asymptotic(ctx: &BlockContext) -> Result<f64> {
    let fit = |ks: [i32; 4]| -> Result<f64> {
        let p = (8.0 - ctx.kappa) / ctx.kappa;
        let base = 10f64.powi(-ks[0]);
        let mut m = Matrix4::zeros();
        let mut rhs = Vector4::zeros();
        for (r, &k) in ks.iter().enumerate() {
            let eps = 10f64.powi(-k);
            let t = eps / base;
            m[(r, 0)] = 1.0;
            m[(r, 1)] = t.powf(p);
            m[(r, 2)] = t;
            m[(r, 3)] = t.powf(1.0 + p);
            rhs[r] = wedge_profile(ctx, eps)?;
        }
        let sol = m.lu().solve(&rhs).ok_or(Error::Singular)?;
        Ok(sol[0])
    };
    let p = (8.0 - ctx.kappa) / ctx.kappa;
    if (p - p.round()).abs() < 1e-9 {
        return Err(Error::Domain(format!("kappa = {} gives an integer exponent; log terms appear", ctx.kappa)));
    }
    let fine = fit([3, 4, 5, 6])?;
    let coarse = fit([2, 3, 4, 5])?;
    if !fine.is_finite() || (fine - coarse).abs() > 1e-3 * fine.abs().max(1.0) {
        return Err(Error::Domain(format!("extrapolation unstable: {fine} vs {coarse}")));
    }
    Ok(fine)
}

/// Coefficient of the smaller function in the `z -> 1` asymptotics at column
/// `j`: 0 at slopes, 1 at up-wedges, `-[a(j)+1]/[a(j)+2]` at down-wedges.
pub fn uasy_coefficient(alpha: &DyckPath, j: usize, kappa: f64) -> Result<f64> {
    if !(kappa.is_finite() && kappa > 0.0) {
        return Err(Error::InvalidKappa(kappa));
    }
    Ok(match alpha.local_shape(j)? {
        LocalShape::UpSlope | LocalShape::DownSlope => 0.0,
        LocalShape::UpWedge => 1.0,
        LocalShape::DownWedge => {
            let h = alpha.height(j) as f64;
            -sine_ratio(h + 1.0, h + 2.0, kappa)?
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualRow {
    pub kappa: f64,
    pub lambda: u32,
    pub shape: LocalShape,
    pub z: f64,
    pub ode1: f64,
    pub ode2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticRow {
    pub kappa: f64,
    pub lambda: u32,
    pub shape: LocalShape,
    pub limit: f64,
    pub expected: f64,
}

impl AsymptoticRow {
    pub fn error(&self) -> f64 {
        (self.limit - self.expected).abs()
    }
}

fn contexts(kappas: &[f64], lambdas: &[u32], shapes: &[LocalShape]) -> Vec<(f64, u32, LocalShape)> {
    let mut out = Vec::new();
    for &k in kappas {
        for &l in lambdas {
            for &s in shapes {
                if l >= min_lambda(s) {
                    out.push((k, l, s));
                }
            }
        }
    }
    out
}

/// ODE residuals over every admissible `(kappa, lambda, shape, z)`.
pub fn residual_grid(
    kappas: &[f64],
    lambdas: &[u32],
    shapes: &[LocalShape],
    zs: &[f64],
    step: f64,
    exec: Exec,
) -> Result<Vec<ResidualRow>> {
    let jobs: Vec<(f64, u32, LocalShape, f64)> = contexts(kappas, lambdas, shapes)
        .into_iter()
        .flat_map(|(k, l, s)| zs.iter().map(move |&z| (k, l, s, z)))
        .collect();
    exec.map(jobs, |(kappa, lambda, shape, z)| {
        let ctx = BlockContext::new(kappa, lambda, shape)?;
        let (ode1, ode2) = ode_residual(&ctx, z, step)?;
        Ok(ResidualRow { kappa, lambda, shape, z, ode1, ode2 })
    })
    .into_iter()
    .collect()
}

/// Extrapolated wedge limits over every admissible `(kappa, lambda, shape)`.
pub fn asymptotic_grid(kappas: &[f64], lambdas: &[u32], exec: Exec) -> Result<Vec<AsymptoticRow>> {
    let jobs = contexts(kappas, lambdas, &[LocalShape::UpWedge, LocalShape::DownWedge]);
    exec.map(jobs, |(kappa, lambda, shape)| {
        let ctx = BlockContext::new(kappa, lambda, shape)?;
        Ok(AsymptoticRow {
            kappa,
            lambda,
            shape,
            limit: wedge_asymptotic(&ctx)?,
            expected: expected_wedge_limit(&ctx)?,
        })
    })
    .into_iter()
    .collect()
}
