use num_complex::Complex64;

use super::gamma::{gamma, rgamma};
use super::{finite, is_nonpositive_integer};
use crate::{Error, Result};

const EPS: f64 = f64::EPSILON;

/// Below this modulus the Kummer-M combination is used for non-integer b.
const KUMMER_RADIUS: f64 = 8.0;
/// First radius tried for the asymptotic expansion.
const ASYMPTOTIC_RADIUS: f64 = 40.0;

/// Kummer's M(a, b, z) = ₁F₁(a; b; z) by its power series.
pub fn kummer_m(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(b) {
        return Err(Error::Domain(format!("M(a,b,z) undefined for b = {b}")));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..5000usize {
        let kf = k as f64;
        term *= (a + kf) / ((b + kf) * (kf + 1.0)) * z;
        sum += term;
        if term == Complex64::new(0.0, 0.0) {
            return Ok(sum);
        }
        if kf > z.norm() && term.norm() <= EPS * 0.1 * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::Divergence(format!("M({a},{b},{z}) series did not settle")))
}

/// U(a,b,z) ~ z^{-a} Σ (a)_k (a-b+1)_k / k! · (-z)^{-k}.
/// Returns `None` when the terms stop decreasing before reaching machine precision.
fn u_asymptotic(a: Complex64, b: Complex64, z: Complex64) -> Option<Complex64> {
    let c = a - b + 1.0;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut prev = f64::INFINITY;
    for k in 0..2000usize {
        let kf = k as f64;
        term *= (a + kf) * (c + kf) / ((kf + 1.0) * -z);
        let m = term.norm();
        sum += term;
        if m <= EPS * 0.5 * sum.norm() {
            return Some(z.powc(-a) * sum);
        }
        if m > prev && kf > (a.norm() + c.norm()) {
            return None;
        }
        prev = m;
    }
    None
}

/// Terminating case: a = -n gives z^n Σ_{k≤n} (-n)_k (a-b+1)_k / k! · (-z)^{-k}.
fn u_polynomial(n: usize, b: Complex64, z: Complex64) -> Complex64 {
    let a = Complex64::new(-(n as f64), 0.0);
    let c = a - b + 1.0;
    // coefficients of z^{n-k}
    let mut coef = Complex64::new(1.0, 0.0);
    let mut sum = z.powu(n as u32);
    for k in 0..n {
        let kf = k as f64;
        coef *= -(a + kf) * (c + kf) / (kf + 1.0);
        sum += coef * z.powu((n - k - 1) as u32);
    }
    sum
}

/// One Taylor step of z w'' + (b - z) w' - a w = 0 from z0 by h.
fn ode_step(
    a: Complex64,
    b: Complex64,
    z0: Complex64,
    w: Complex64,
    dw: Complex64,
    h: Complex64,
) -> Result<(Complex64, Complex64)> {
    let mut c0 = w;
    let mut c1 = dw;
    let mut hk = Complex64::new(1.0, 0.0);
    let mut val = c0 + c1 * h;
    let mut der = c1;
    let mut small = 0;
    for k in 0..400usize {
        let kf = k as f64;
        let c2 = (-(kf + 1.0) * (b - z0 + kf) * c1 + (a + kf) * c0) / (z0 * (kf + 2.0) * (kf + 1.0));
        hk *= h;
        let tv = c2 * hk * h;
        let td = c2 * hk * (kf + 2.0);
        val += tv;
        der += td;
        if tv.norm() <= EPS * 0.1 * val.norm() && td.norm() <= EPS * 0.1 * der.norm() {
            small += 1;
            if small >= 3 {
                return Ok((val, der));
            }
        } else {
            small = 0;
        }
        c0 = c1;
        c1 = c2;
    }
    Err(Error::Divergence(format!("Taylor step of U from {z0} did not converge")))
}

/// Integrates the Kummer ODE from an asymptotic start value towards z.
///
/// Start at radius R on the ray arg = clamp(arg z, ±π/2), march radially in to |z|,
/// then along the circle |z| to arg z. Along both legs the solution growing like e^z
/// shrinks, so U stays the dominant solution and the marching is stable.
fn u_ode(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    let r_target = z.norm();
    let phi_target = z.arg();
    let phi0 = phi_target.clamp(-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2);

    let mut radius = ASYMPTOTIC_RADIUS.max(r_target);
    let (mut w, mut dw) = loop {
        let z0 = Complex64::from_polar(radius, phi0);
        let w = u_asymptotic(a, b, z0);
        let dw = u_asymptotic(a + 1.0, b + 1.0, z0).map(|u| -a * u);
        if let (Some(w), Some(dw)) = (w, dw) {
            break (w, dw);
        }
        radius *= 2.0;
        if radius > 5000.0 {
            return Err(Error::Divergence(format!(
                "asymptotic start value for U({a},{b},·) not reached"
            )));
        }
    };

    let mut r = radius;
    while r > r_target {
        let step = (0.5 * r).min(2.0).min(r - r_target);
        let z0 = Complex64::from_polar(r, phi0);
        let z1 = Complex64::from_polar(r - step, phi0);
        (w, dw) = ode_step(a, b, z0, w, dw, z1 - z0)?;
        r -= step;
    }

    let arc = phi_target - phi0;
    if arc != 0.0 {
        let max_chord = (0.5 * r_target).min(2.0);
        let n = ((arc.abs() * r_target) / max_chord).ceil().max(1.0) as usize;
        let dphi = arc / n as f64;
        for i in 0..n {
            let z0 = Complex64::from_polar(r_target, phi0 + dphi * i as f64);
            let z1 = if i + 1 == n {
                z
            } else {
                Complex64::from_polar(r_target, phi0 + dphi * (i + 1) as f64)
            };
            (w, dw) = ode_step(a, b, z0, w, dw, z1 - z0)?;
        }
    }
    Ok(w)
}

/// Tricomi's confluent hypergeometric function U(a, b, z), principal branch.
///
/// Non-positive-integer b is mapped through U(a,b,z) = z^{1-b} U(a-b+1, 2-b, z).
pub fn tricomi_u(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    if !(finite(a) && finite(b) && finite(z)) {
        return Err(Error::Domain("non-finite argument to U".into()));
    }
    if is_nonpositive_integer(a) {
        return Ok(u_polynomial((-a.re) as usize, b, z));
    }
    let c = a - b + 1.0;
    if is_nonpositive_integer(c) {
        // U(a,b,z) = z^{1-b} U(c, 2-b, z) with c = -n terminating
        if z == Complex64::new(0.0, 0.0) {
            return Err(Error::Domain("U at z = 0 with Re b ≥ 1".into()));
        }
        return Ok(z.powc(1.0 - b) * u_polynomial((-c.re) as usize, 2.0 - b, z));
    }
    if is_nonpositive_integer(b) {
        if z == Complex64::new(0.0, 0.0) {
            return Ok(gamma(1.0 - b) * rgamma(c));
        }
        return Ok(z.powc(1.0 - b) * tricomi_u(c, 2.0 - b, z)?);
    }
    if z == Complex64::new(0.0, 0.0) {
        if b.re < 1.0 {
            return Ok(gamma(1.0 - b) * rgamma(c));
        }
        return Err(Error::Domain(format!("U(a,{b},0) is infinite for Re b ≥ 1")));
    }
    if z.norm() >= ASYMPTOTIC_RADIUS {
        if let Some(u) = u_asymptotic(a, b, z) {
            return Ok(u);
        }
    }
    let b_near_integer = b.im.abs() < 0.05 && (b.re - b.re.round()).abs() < 0.05;
    let mut out = None;
    if z.norm() < KUMMER_RADIUS && !b_near_integer {
        let t1 = gamma(1.0 - b) * rgamma(c) * kummer_m(a, b, z)?;
        let t2 = gamma(b - 1.0) * rgamma(a) * z.powc(1.0 - b) * kummer_m(c, 2.0 - b, z)?;
        let sum = t1 + t2;
        // the two terms grow like e^z while U does not; give up on heavy cancellation
        if t1.norm() + t2.norm() <= 1e3 * sum.norm() {
            out = Some(sum);
        }
    }
    let out = match out {
        Some(u) => u,
        None => u_ode(a, b, z)?,
    };
    if finite(out) {
        Ok(out)
    } else {
        Err(Error::Domain(format!("U({a},{b},{z}) overflowed")))
    }
}
