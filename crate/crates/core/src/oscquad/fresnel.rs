use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use super::{integrate_finite, QuadResult};
use crate::{Error, Result};

/// Rotation angle of the contour z = e^{iθ}s and the truncation radius on the ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationPlan {
    pub angle: f64,
    pub truncation_radius: f64,
}

/// Caller-side knowledge about the analytic factor f.
#[derive(Debug, Clone, Default)]
pub struct FresnelOptions {
    /// Exponential growth rate c with |f(e^{iθ}s)| ≲ e^{c s} on the rotated ray.
    pub growth: f64,
    /// Known singularities of f; none may lie in the closed sector swept by the rotation.
    pub poles: Vec<Complex64>,
    /// Override of the default angle -sign(τ)·π/4.
    pub angle: Option<f64>,
}

/// Angle and truncation radius for ∫₀^∞ f(z) e^{-iτz²} dz.
///
/// R solves κR² - cR = ln(1/tol) + 10 with κ = |τ|·sin(2|θ|) the Gaussian rate on the ray.
pub fn rotation_plan(freq: f64, tol: f64, opts: &FresnelOptions) -> Result<RotationPlan> {
    if freq == 0.0 || !freq.is_finite() {
        return Err(Error::Domain(format!("Fresnel frequency must be finite and nonzero, got {freq}")));
    }
    let angle = opts.angle.unwrap_or(-freq.signum() * FRAC_PI_4);
    if angle == 0.0 || angle.abs() > FRAC_PI_4 || angle.signum() == freq.signum() {
        return Err(Error::RotationInvalid(format!(
            "angle {angle} does not damp e^(-i {freq} z^2)"
        )));
    }
    for &p in &opts.poles {
        let arg = p.arg();
        let inside = if angle < 0.0 { arg >= angle && arg <= 0.0 } else { arg <= angle && arg >= 0.0 };
        if p.norm() > 0.0 && inside {
            return Err(Error::RotationInvalid(format!("singularity {p} inside the rotation sector")));
        }
    }
    let kappa = freq.abs() * (2.0 * angle.abs()).sin();
    let l = (1.0 / tol).ln() + 10.0;
    let c = opts.growth.max(0.0);
    let r = (c + (c * c + 4.0 * kappa * l).sqrt()) / (2.0 * kappa);
    Ok(RotationPlan { angle, truncation_radius: r })
}

/// ∫₀^∞ f(z) e^{-iτz²} dz by rotating onto z = e^{iθ}s, θ = -sign(τ)π/4.
///
/// f must be analytic in the sector between the real axis and the ray.
pub fn integrate_fresnel<F>(f: F, freq: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(Complex64) -> Complex64,
{
    integrate_fresnel_with(f, freq, tol, &FresnelOptions::default())
}

pub fn integrate_fresnel_with<F>(f: F, freq: f64, tol: f64, opts: &FresnelOptions) -> Result<QuadResult>
where
    F: Fn(Complex64) -> Complex64,
{
    let plan = rotation_plan(freq, tol, opts)?;
    let e = Complex64::from_polar(1.0, plan.angle);
    let k = Complex64::new(0.0, -freq) * e * e;
    let q = integrate_finite(|s| f(e * s) * (k * s * s).exp(), 0.0, plan.truncation_radius, tol)?;
    Ok(QuadResult { value: q.value * e, ..q })
}
