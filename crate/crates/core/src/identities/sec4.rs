//! Two-particle wave function built from the single-particle kernel.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::{quad_tol, resolve_constant, timed, TwoParticleParams, PHASES};
use crate::oscquad::{
    integrate_2d_fresnel, integrate_fresnel, integrate_fresnel_with, integrate_semi_infinite, FresnelOptions,
    QuadResult,
};
use crate::report::{params, VerificationReport};
use crate::{c64, Error, Result};

/// (π/β') cosh(πw₁/2β') cosh(πw₂/2β') / (cosh(πw₁/β') + cosh(πw₂/β')).
pub fn cosh_ratio(w1: Complex64, w2: Complex64, beta: f64) -> Complex64 {
    let u1 = PI * w1 / (2.0 * beta);
    let u2 = PI * w2 / (2.0 * beta);
    // cosh 2u₁ + cosh 2u₂ = 2 cosh(u₁+u₂) cosh(u₁-u₂); work with log cosh to avoid overflow
    let lc = |x: Complex64| {
        let x = if x.re < 0.0 { -x } else { x };
        x + ((1.0 + (-2.0 * x).exp()) / 2.0).ln()
    };
    PI / (2.0 * beta) * (lc(u1) + lc(u2) - lc(u1 + u2) - lc(u1 - u2)).exp()
}

/// ∫₀^∞ cos(w₁z) cos(w₂z) / cosh(β'z) dz against [`cosh_ratio`].
pub fn eq43_check(w1: Complex64, w2: f64, beta: f64, tol: f64) -> Result<VerificationReport> {
    if !(beta > 0.0) || w1.im.abs() >= beta {
        return Err(Error::Domain(format!("cosh-ratio transform needs β' > 0 and |Im w₁| < β' (w₁ = {w1}, β' = {beta})")));
    }
    timed(|| {
        let lhs = integrate_semi_infinite(|z| (w1 * z).cos() * (w2 * z).cos() / (beta * z).cosh(), quad_tol(tol))?.value;
        let rhs = cosh_ratio(w1, c64(w2, 0.0), beta);
        Ok(VerificationReport::compare(
            "eq4.3",
            params([("w1", w1), ("w2", c64(w2, 0.0)), ("beta_prime", c64(beta, 0.0))]),
            lhs,
            rhs,
            tol,
        ))
    })
}

/// ∫₀^∞ cos(az) cos(bz) e^{-ηz²} dz; Re η = 0 goes through the rotated contour.
pub fn eq44_lhs(a: f64, b: f64, eta: Complex64, tol: f64) -> Result<QuadResult> {
    if eta.re > 0.0 {
        integrate_semi_infinite(|z| c64((a * z).cos() * (b * z).cos(), 0.0) * (-eta * z * z).exp(), tol)
    } else if eta.re == 0.0 && eta.im != 0.0 {
        integrate_fresnel(|z| (a * z).cos() * (b * z).cos(), eta.im, tol)
    } else {
        Err(Error::Domain(format!("Gaussian transform needs Re η ≥ 0 and η ≠ 0, got {eta}")))
    }
}

pub fn eq44_rhs(a: f64, b: f64, eta: Complex64) -> Complex64 {
    0.25 * (PI / eta).sqrt() * ((-(a - b) * (a - b) / (4.0 * eta)).exp() + (-(a + b) * (a + b) / (4.0 * eta)).exp())
}

pub fn eq44_check(a: f64, b: f64, eta: Complex64, tol: f64) -> Result<VerificationReport> {
    timed(|| {
        let lhs = eq44_lhs(a, b, eta, quad_tol(tol))?.value;
        let rhs = eq44_rhs(a, b, eta);
        Ok(VerificationReport::compare(
            "eq4.4",
            params([("a", c64(a, 0.0)), ("b", c64(b, 0.0)), ("eta", eta)]),
            lhs,
            rhs,
            tol,
        ))
    })
}

/// ∫₀^∞∫₀^∞ cos(z₁w₁) cos(z₂w₂) e^{-iτ₁z₁² - iτ₂z₂²} K(z₁,z₂) dz₁dz₂, τ_j = ħt/(2m_j),
/// K the cosh ratio with β', both variables rotated together.
pub fn thm41_lhs(p: &TwoParticleParams, tol: f64) -> Result<QuadResult> {
    let (t1, t2) = p.taus();
    let (w1, w2, beta) = (p.w1, p.w2, p.beta_prime);
    integrate_2d_fresnel(
        |z1, z2| (w1 * z1).cos() * (w2 * z2).cos() * cosh_ratio(z1, z2, beta),
        t1,
        t2,
        (w1.abs() / 2f64.sqrt(), w2.abs() / 2f64.sqrt()),
        tol,
    )
}

/// I(X) = ¼ π√(m₁m₂)/(ħt) · e(w₁,w₂,τ₁,τ₂) ∫₀^∞ e^{iz²(m₁+m₂)/(2ħt)} cos(Xz/(ħt)) / cosh(β'z) dz.
pub fn thm41_i(p: &TwoParticleParams, x: f64, tol: f64) -> Result<Complex64> {
    let (t1, t2) = p.taus();
    let ht = p.hbar_t;
    let i = Complex64::i();
    let e = (-(p.w1 * p.w1 / (4.0 * i * t1) + p.w2 * p.w2 / (4.0 * i * t2))).exp();
    let beta = p.beta_prime;
    let opts = FresnelOptions {
        growth: ((x.abs() / ht - beta) / 2f64.sqrt()).max(0.0),
        poles: vec![c64(0.0, FRAC_PI_2 / beta), c64(0.0, -FRAC_PI_2 / beta)],
        angle: None,
    };
    let q = integrate_fresnel_with(
        |z| (x * z / ht).cos() / (beta * z).cosh(),
        -(p.m1 + p.m2) / (2.0 * ht),
        tol,
        &opts,
    )?;
    Ok(0.25 * PI * (p.m1 * p.m2).sqrt() / ht * e * q.value)
}

/// I(w₁m₁ + w₂m₂) + I(w₁m₁ - w₂m₂), as stated (no overall constant).
pub fn thm41_rhs(p: &TwoParticleParams, tol: f64) -> Result<Complex64> {
    let a = p.w1 * p.m1;
    let b = p.w2 * p.m2;
    Ok(thm41_i(p, a + b, tol)? + thm41_i(p, a - b, tol)?)
}

pub fn thm41_params_map(p: &TwoParticleParams) -> crate::report::Params {
    params([
        ("w1", p.w1),
        ("w2", p.w2),
        ("m1", p.m1),
        ("m2", p.m2),
        ("hbar_t", p.hbar_t),
        ("beta_prime", p.beta_prime),
    ])
}

/// Stated form with the overall constant resolved over {1, 1/i, i, -1}.
pub fn thm41_check(p: &TwoParticleParams, tol: f64) -> Result<VerificationReport> {
    timed(|| {
        let lhs = thm41_lhs(p, tol * 1e-2)?.value;
        let raw = thm41_rhs(p, quad_tol(tol))?;
        let candidates: Vec<(&str, Complex64)> = PHASES.iter().map(|&(l, ph)| (l, ph * raw)).collect();
        Ok(resolve_constant("thm4.1", thm41_params_map(p), lhs, &candidates, tol))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosh_ratio_transform() {
        let r = eq43_check(c64(0.0, 0.0), 0.0, 1.0, 1e-9).unwrap();
        assert!(r.passed && (r.rhs.unwrap().re - FRAC_PI_2).abs() < 1e-14);
        assert!(eq43_check(c64(1.0, 0.0), 2.0, 1.0, 1e-9).unwrap().passed);
        assert!(eq43_check(c64(0.0, 0.3), 1.0, 1.0, 1e-8).unwrap().passed);
        assert!(eq43_check(c64(0.0, 1.2), 1.0, 1.0, 1e-8).is_err());
    }

    #[test]
    fn gaussian_transform() {
        let sp = PI.sqrt();
        let r = eq44_check(0.0, 0.0, c64(1.0, 0.0), 1e-8).unwrap();
        assert!(r.passed && (r.rhs.unwrap().re - 0.5 * sp).abs() < 1e-15);
        let r = eq44_check(1.0, 1.0, c64(1.0, 0.0), 1e-8).unwrap();
        assert!(r.passed && (r.rhs.unwrap().re - 0.25 * sp * (1.0 + (-1f64).exp())).abs() < 1e-15);
        assert!(eq44_check(1.0, 2.0, c64(1.0, 1.0), 1e-8).unwrap().passed);
    }

    #[test]
    fn gaussian_transform_on_imaginary_axis() {
        assert!(eq44_check(1.0, 0.5, c64(0.0, 1.0), 1e-7).unwrap().passed);
    }

    #[test]
    fn rhs_parity_and_collapse() {
        let p = TwoParticleParams::new(0.4, 0.7, 1.0, 2.0, 1.0, 1.0).unwrap();
        let q = TwoParticleParams { w2: -0.7, ..p };
        let a = thm41_rhs(&p, 1e-10).unwrap();
        let b = thm41_rhs(&q, 1e-10).unwrap();
        assert!((a - b).norm() < 1e-12);
        assert!((thm41_i(&p, 0.3, 1e-10).unwrap() - thm41_i(&p, -0.3, 1e-10).unwrap()).norm() < 1e-13);
        let s = TwoParticleParams::new(0.5, 0.5, 1.0, 1.0, 1.0, 1.0).unwrap();
        let collapsed = thm41_i(&s, 1.0, 1e-10).unwrap() + thm41_i(&s, 0.0, 1e-10).unwrap();
        assert!((thm41_rhs(&s, 1e-10).unwrap() - collapsed).norm() < 1e-14);
    }

    #[test]
    fn lhs_swap_symmetry() {
        let p = TwoParticleParams::new(0.4, 0.7, 1.0, 2.0, 1.0, 1.0).unwrap();
        let q = TwoParticleParams { w1: 0.7, w2: 0.4, m1: 2.0, m2: 1.0, ..p };
        let a = thm41_lhs(&p, 1e-10).unwrap().value;
        let b = thm41_lhs(&q, 1e-10).unwrap().value;
        assert!((a - b).norm() < 1e-9);
    }

    #[test]
    fn constant_resolves_to_one_over_i() {
        for p in [
            TwoParticleParams::new(0.4, 0.7, 1.0, 2.0, 1.0, 1.0).unwrap(),
            TwoParticleParams::new(0.5, 0.5, 1.0, 1.0, 1.0, 1.0).unwrap(),
        ] {
            let r = thm41_check(&p, 1e-5).unwrap();
            assert!(r.passed);
            assert_eq!(r.resolved_constant.as_deref(), Some("1/i"));
        }
    }

    #[test]
    fn kernel_only_at_origin() {
        // w1 = w2 = 0: the Gaussian prefactor is 1 and I(0) carries the whole value
        let p = TwoParticleParams::new(0.0, 0.0, 1.0, 1.0, 1.0, 1.0).unwrap();
        let lhs = thm41_lhs(&p, 1e-9).unwrap().value;
        let rhs = 2.0 * thm41_i(&p, 0.0, 1e-10).unwrap();
        assert!((lhs - rhs / Complex64::i()).norm() < 1e-7);
    }
}
