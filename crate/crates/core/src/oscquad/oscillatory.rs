//! Direct summation of oscillatory integrals between phase zeros, accelerated by
//! Wynn's epsilon algorithm. Low accuracy; used as an independent oracle only.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{integrate_finite, QuadResult};
use crate::{Error, Result};

/// Wynn's epsilon algorithm on partial sums; returns the last even-column entry and
/// its distance to the previous even column as an error estimate.
pub fn wynn_epsilon(s: &[Complex64]) -> (Complex64, f64) {
    let n = s.len();
    if n == 0 {
        return (Complex64::new(0.0, 0.0), f64::INFINITY);
    }
    let mut prev = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut cur: Vec<Complex64> = s.to_vec();
    let mut best = *s.last().unwrap();
    let mut err = if n > 1 { (s[n - 1] - s[n - 2]).norm() } else { f64::INFINITY };
    let mut col = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d.norm() == 0.0 {
                return (best, err);
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        col += 1;
        prev = cur;
        cur = next;
        if col % 2 == 0 {
            let est = *cur.last().unwrap();
            if !(est.re.is_finite() && est.im.is_finite()) {
                break;
            }
            err = (est - best).norm();
            best = est;
        }
    }
    (best, err)
}

fn accelerate<P, G>(piece: P, breaks: G, tol: f64, max_pieces: usize) -> Result<QuadResult>
where
    P: Fn(f64, f64) -> Result<QuadResult>,
    G: Fn(usize) -> f64,
{
    let mut sums = Vec::new();
    let mut total = Complex64::new(0.0, 0.0);
    let mut evals = 0;
    let mut last: Option<Complex64> = None;
    for k in 0..max_pieces {
        let q = piece(breaks(k), breaks(k + 1))?;
        evals += q.n_evals;
        total += q.value;
        sums.push(total);
        if sums.len() >= 12 && sums.len() % 4 == 0 {
            let window = &sums[sums.len().saturating_sub(40)..];
            let (est, e) = wynn_epsilon(window);
            if let Some(prev) = last {
                let diff = (est - prev).norm().max(e.min((est - prev).norm() * 10.0));
                if diff <= tol * (1.0 + est.norm()) {
                    return Ok(QuadResult { value: est, err_est: diff, n_evals: evals });
                }
            }
            last = Some(est);
        }
    }
    Err(Error::Convergence {
        best: last.unwrap_or(total),
        err: f64::NAN,
        evals,
    })
}

/// ∫₀^∞ f(z) e^{-iτz²} dz summed over half-periods z_k = √(kπ/|τ|) of the phase.
pub fn fresnel_direct<F>(f: F, freq: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if freq == 0.0 {
        return Err(Error::Domain("fresnel_direct needs nonzero frequency".into()));
    }
    let g = |z: f64| f(z) * Complex64::new(0.0, -freq * z * z).exp();
    accelerate(
        |a, b| integrate_finite(&g, a, b, tol * 1e-2),
        |k| (k as f64 * PI / freq.abs()).sqrt(),
        tol,
        4000,
    )
}

/// ∫₀^∞ f(z) cos(ωz) dz summed between the zeros (k+½)π/ω of the cosine.
pub fn fourier_cos_direct<F>(f: F, omega: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if omega <= 0.0 {
        return Err(Error::Domain(format!("fourier_cos_direct needs ω > 0, got {omega}")));
    }
    let g = |z: f64| f(z) * (omega * z).cos();
    accelerate(
        |a, b| integrate_finite(&g, a, b, tol * 1e-2),
        |k| if k == 0 { 0.0 } else { (k as f64 - 0.5) * PI / omega },
        tol,
        4000,
    )
}
