use std::cell::RefCell;
use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use super::fresnel::{rotation_plan, FresnelOptions};
use super::{decay_cutoff, integrate_finite, integrate_semi_infinite, QuadResult};
use crate::{Error, Result};

/// ∫₀^∞∫₀^∞ f(z₁,z₂) dz₂ dz₁ by iterated semi-infinite quadrature
/// (outer tolerance tol, inner tol/10).
pub fn integrate_2d<F>(f: F, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> Complex64,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let evals = RefCell::new(0usize);
    let inner = |z1: f64| -> Complex64 {
        if failure.borrow().is_some() {
            return Complex64::new(0.0, 0.0);
        }
        match integrate_semi_infinite(|z2| f(z1, z2), tol / 10.0) {
            Ok(q) => {
                *evals.borrow_mut() += q.n_evals;
                q.value
            }
            Err(e) => {
                *failure.borrow_mut() = Some(e.context(&format!("inner integral at z1 = {z1}")));
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let r = decay_cutoff(&inner, tol);
    if let Some(e) = failure.borrow_mut().take() {
        return Err(e);
    }
    let q = integrate_finite(&inner, 0.0, r?, tol)?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(QuadResult { n_evals: evals.into_inner(), ..q })
}

/// ∫₀^∞∫₀^∞ f(z₁,z₂) e^{-iτ₁z₁² - iτ₂z₂²} dz₁dz₂ with both variables rotated together
/// onto z_j = e^{iθ}s_j, θ = -sign(τ)π/4.
///
/// Rotating jointly keeps z₁ ± z₂ on the ray, so kernels singular only where z₁ ± z₂ is
/// imaginary stay regular; rotating one variable at a time does not.
/// `growth` bounds |f| ≲ e^{c₁s₁ + c₂s₂} on the rotated rays.
pub fn integrate_2d_fresnel<F>(f: F, tau1: f64, tau2: f64, growth: (f64, f64), tol: f64) -> Result<QuadResult>
where
    F: Fn(Complex64, Complex64) -> Complex64,
{
    if tau1 == 0.0 || tau2 == 0.0 || tau1.signum() != tau2.signum() {
        return Err(Error::Domain(format!(
            "joint rotation needs frequencies of one sign, got {tau1} and {tau2}"
        )));
    }
    let opts = |c: f64| FresnelOptions { growth: c, ..Default::default() };
    let p1 = rotation_plan(tau1, tol, &opts(growth.0))?;
    let p2 = rotation_plan(tau2, tol / 10.0, &opts(growth.1))?;
    let theta = -tau1.signum() * FRAC_PI_4;
    let e = Complex64::from_polar(1.0, theta);
    let k1 = Complex64::new(0.0, -tau1) * e * e;
    let k2 = Complex64::new(0.0, -tau2) * e * e;

    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let evals = RefCell::new(0usize);
    let inner = |s1: f64| -> Complex64 {
        if failure.borrow().is_some() {
            return Complex64::new(0.0, 0.0);
        }
        let z1 = e * s1;
        let w1 = (k1 * s1 * s1).exp();
        match integrate_finite(|s2| f(z1, e * s2) * (k2 * s2 * s2).exp(), 0.0, p2.truncation_radius, tol / 10.0) {
            Ok(q) => {
                *evals.borrow_mut() += q.n_evals;
                q.value * w1
            }
            Err(err) => {
                *failure.borrow_mut() = Some(err.context(&format!("inner integral at s1 = {s1}")));
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let q = integrate_finite(&inner, 0.0, p1.truncation_radius, tol)?;
    if let Some(err) = failure.into_inner() {
        return Err(err);
    }
    Ok(QuadResult { value: q.value * e * e, err_est: q.err_est, n_evals: evals.into_inner() })
}
