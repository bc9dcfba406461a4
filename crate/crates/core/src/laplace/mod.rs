//! Numerical Laplace transform, fixed-Talbot inversion and the registry of
//! transform pairs the series derivations rely on.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;

use crate::oscquad::{integrate_semi_infinite, QuadResult};
use crate::report::{params, Params, VerificationReport};
use crate::specfun::{g_closed, pcf_d};
use crate::{Error, Result};

/// Default number of Talbot nodes.
pub const DEFAULT_NODES: usize = 32;

/// L_f(p) = ∫₀^∞ e^{-pt} f(t) dt.
///
/// Computed in the variable t = u², which removes t^{-1/2} endpoint singularities.
pub fn laplace_forward<F>(f: F, p: Complex64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    integrate_semi_infinite(
        |u| {
            if u == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let t = u * u;
            2.0 * u * (-p * t).exp() * f(t)
        },
        tol,
    )
}

/// Fixed-Talbot inversion with the default shift.
pub fn talbot_invert<L>(image: L, t: f64, n_nodes: usize) -> Result<Complex64>
where
    L: Fn(Complex64) -> Complex64,
{
    talbot_invert_with(image, t, n_nodes, None)
}

/// Fixed-Talbot inversion on p(θ) = rθ(cot θ + i), θ ∈ (-π, π).
///
/// The default shift is r = min(2M/5, 8)/t. The usual r = 2M/(5t) amplifies rounding
/// like e^{2M/5}, so refining past about 20 nodes would stop helping in double precision.
/// The sum runs over both halves of the contour so complex-valued f is recovered.
pub fn talbot_invert_with<L>(image: L, t: f64, n_nodes: usize, shift: Option<f64>) -> Result<Complex64>
where
    L: Fn(Complex64) -> Complex64,
{
    if !(t > 0.0) {
        return Err(Error::Domain(format!("Talbot inversion needs t > 0, got {t}")));
    }
    if n_nodes < 2 {
        return Err(Error::Domain("Talbot inversion needs at least 2 nodes".into()));
    }
    let m = n_nodes as f64;
    let r = shift.unwrap_or((0.4 * m).min(8.0) / t);
    let mut sum = Complex64::new(0.0, 0.0);
    let k_max = n_nodes as i64 - 1;
    for k in -k_max..=k_max {
        let (p, ds) = if k == 0 {
            (Complex64::new(r, 0.0), Complex64::new(1.0, 0.0))
        } else {
            let th = k as f64 * PI / m;
            let cot = th.cos() / th.sin();
            let p = Complex64::new(r * th * cot, r * th);
            let sigma = th + (th * cot - 1.0) * cot;
            (p, Complex64::new(1.0, sigma))
        };
        let fp = image(p);
        if !(fp.re.is_finite() && fp.im.is_finite()) {
            return Err(Error::ContourFailure(format!(
                "image not finite at p = {p}; try a larger shift"
            )));
        }
        sum += (p * t).exp() * fp * ds;
    }
    Ok(sum * (r / (2.0 * m)))
}

type TimeFn = Box<dyn Fn(f64) -> Result<Complex64> + Send + Sync>;
type ImageFn = Box<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;

/// A time function and its Laplace image.
pub struct TransformPair {
    pub id: String,
    pub time_fn: TimeFn,
    pub image_fn: ImageFn,
    /// Where the image is analytic, e.g. "Re p > 0".
    pub domain_note: String,
    pub params: Params,
}

/// Identifiers of the registered pairs.
pub const PAIR_IDS: [&str; 3] = ["eq2.12", "eq2.13", "eq3.4"];

/// t^{-1/2} e^{-α²/(4t)} ⟷ √π p^{-1/2} e^{-α√p}, Re α ≥ 0.
pub fn pair_eq2_12(alpha: f64) -> TransformPair {
    TransformPair {
        id: "eq2.12".into(),
        time_fn: Box::new(move |t| Ok(Complex64::new(t.powf(-0.5) * (-alpha * alpha / (4.0 * t)).exp(), 0.0))),
        image_fn: Box::new(move |p| Ok(PI.sqrt() * p.powf(-0.5) * (-alpha * p.sqrt()).exp())),
        domain_note: "Re p > 0".into(),
        params: params([("alpha", alpha)]),
    }
}

/// t^{-1/2} ∫₀^∞ sin(α₁λ) e^{-(α₁+α₂)²/(4t)} dα₁ = √π·g(α₂,λ,t)
/// ⟷ λ√π p^{-1/2} e^{-α₂√p} / (p + λ²).
pub fn pair_eq2_13(alpha2: f64, lambda: f64) -> TransformPair {
    let a2 = Complex64::new(alpha2, 0.0);
    let la = Complex64::new(lambda, 0.0);
    TransformPair {
        id: "eq2.13".into(),
        time_fn: Box::new(move |t| Ok(PI.sqrt() * g_closed(a2, la, t)?)),
        image_fn: Box::new(move |p| {
            Ok(lambda * PI.sqrt() * p.powf(-0.5) * (-alpha2 * p.sqrt()).exp() / (p + lambda * lambda))
        }),
        domain_note: "Re p > max(0, -Re λ²)".into(),
        params: params([("alpha2", alpha2), ("lambda", lambda)]),
    }
}

/// t^{-v/2-1/2} e^{-α/(8t)} D_v(√(α/(2t))) ⟷ 2^{v/2} √π p^{v/2-1/2} e^{-√(αp)}.
pub fn pair_eq3_4(v: f64, alpha: f64) -> TransformPair {
    let vc = Complex64::new(v, 0.0);
    TransformPair {
        id: "eq3.4".into(),
        time_fn: Box::new(move |t| {
            let d = pcf_d(vc, Complex64::new((alpha / (2.0 * t)).sqrt(), 0.0))?;
            Ok(t.powf(-0.5 * v - 0.5) * (-alpha / (8.0 * t)).exp() * d)
        }),
        image_fn: Box::new(move |p| {
            Ok(2f64.powf(0.5 * v) * PI.sqrt() * p.powc(0.5 * vc - 0.5) * (-(alpha * p).sqrt()).exp())
        }),
        domain_note: "Re p > 0".into(),
        params: params([("v", v), ("alpha", alpha)]),
    }
}

/// Forward check at each p and Talbot round trip at each t; the report carries the
/// sample with the largest relative discrepancy (numerical side as lhs).
pub fn verify_pair(pair: &TransformPair, p_samples: &[Complex64], t_samples: &[f64], tol: f64) -> VerificationReport {
    let start = Instant::now();
    let mut worst: Option<(f64, Complex64, Complex64, String)> = None;
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    let mut consider = |num: Complex64, exact: Complex64, label: String| {
        let scale = num.norm().max(exact.norm());
        let rel = if scale > 0.0 { (num - exact).norm() / scale } else { 0.0 };
        if worst.as_ref().map_or(true, |w| rel > w.0) {
            worst = Some((rel, num, exact, label));
        }
    };
    let quad_tol = (tol * 1e-3).min(1e-10);
    for &p in p_samples {
        if p.re <= 0.0 {
            notes.push(format!("p = {p} outside {}; skipped", pair.domain_note));
            continue;
        }
        let f = |t: f64| (pair.time_fn)(t).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
        match (laplace_forward(f, p, quad_tol), (pair.image_fn)(p)) {
            (Ok(q), Ok(img)) => consider(q.value, img, format!("forward at p = {p}")),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("forward at p = {p} failed: {e}")),
        }
    }
    for &t in t_samples {
        let img = |p: Complex64| (pair.image_fn)(p).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
        match (talbot_invert(img, t, DEFAULT_NODES), (pair.time_fn)(t)) {
            (Ok(v), Ok(f)) => consider(v, f, format!("round trip at t = {t}")),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("round trip at t = {t} failed: {e}")),
        }
    }
    let mut report = match worst {
        Some((_, num, exact, label)) => {
            let mut r = VerificationReport::compare(&pair.id, pair.params.clone(), num, exact, tol);
            r.notes.push(format!("worst sample: {label}"));
            r
        }
        None => VerificationReport::errored(
            &pair.id,
            pair.params.clone(),
            tol,
            &Error::Domain("no usable samples".into()),
        ),
    };
    report.notes.extend(notes);
    if !failures.is_empty() {
        report.passed = false;
        report.notes.extend(failures);
    }
    report.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_examples() {
        let q = laplace_forward(|_| Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), 1e-12).unwrap();
        assert!((q.value.re - 0.5).abs() < 1e-11);
        let pair = pair_eq2_12(1.0);
        let f = |t: f64| (pair.time_fn)(t).unwrap();
        let q = laplace_forward(f, Complex64::new(1.0, 0.0), 1e-12).unwrap();
        assert!((q.value.re - PI.sqrt() * (-1f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn talbot_examples() {
        let v = talbot_invert(|p| 1.0 / p, 3.0, DEFAULT_NODES).unwrap();
        assert!((v.re - 1.0).abs() < 1e-10 && v.im.abs() < 1e-10);
        let v = talbot_invert(|p| 1.0 / (p + 1.0), 2.0, DEFAULT_NODES).unwrap();
        assert!((v.re - (-2f64).exp()).abs() < 1e-11);
    }

    #[test]
    fn non_finite_image_is_contour_failure() {
        let r = talbot_invert(|_| Complex64::new(f64::NAN, 0.0), 1.0, 16);
        assert!(matches!(r, Err(Error::ContourFailure(_))));
    }

    #[test]
    fn out_of_domain_samples_are_skipped() {
        let pair = pair_eq2_12(1.0);
        let r = verify_pair(&pair, &[Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)], &[1.0], 1e-8);
        assert!(r.passed);
        assert!(r.notes.iter().any(|n| n.contains("skipped")));
    }
}
