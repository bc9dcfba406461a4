//! Quadrature engine: adaptive Gauss–Kronrod on finite intervals, semi-infinite
//! truncation, contour rotation for Fresnel-type integrals and iterated 2D integration.

mod fresnel;
mod gk;
mod oscillatory;
mod twod;

pub use fresnel::{
    integrate_fresnel, integrate_fresnel_with, rotation_plan, FresnelOptions, RotationPlan,
};
pub use gk::{integrate_finite, integrate_finite_with};
pub use oscillatory::{fourier_cos_direct, fresnel_direct, wynn_epsilon};
pub use twod::{integrate_2d, integrate_2d_fresnel};

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::{Error, Result};

/// Value, error estimate and cost of one quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub err_est: f64,
    pub n_evals: usize,
}

/// Evaluation budget per quadrature call.
///
/// Read once from `NGWP_MAX_EVALS`; defaults to two million.
pub fn max_evals() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("NGWP_MAX_EVALS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n: &usize| n >= 15)
            .unwrap_or(2_000_000)
    })
}

/// ∫₀^∞ f, truncated at the first octave point R = 2^k past which the probed
/// tail |f(x)|·x stays below tol/10 over the next two octaves.
pub fn integrate_semi_infinite<F>(f: F, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    let r = decay_cutoff(&f, tol)?;
    integrate_finite(&f, 0.0, r, tol)
}

/// Smallest octave point beyond which `f` is negligible at tolerance `tol`.
pub fn decay_cutoff<F>(f: &F, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Complex64,
{
    let thresh = tol / 10.0;
    let small = |x: f64| {
        let v = f(x);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return false;
        }
        v.norm() * x < thresh
    };
    for k in 0..=40 {
        let r = 2f64.powi(k);
        let quiet = [1.0, 1.25, 1.5, 1.75, 2.0, 3.0, 4.0]
            .iter()
            .all(|&m| small(m * r));
        if quiet {
            return Ok(r);
        }
    }
    Err(Error::Divergence(
        "integrand shows no decay up to 2^40".into(),
    ))
}
