use num_complex::Complex64;

use super::glaisher::chi;
use crate::{Error, Result};

/// Outcome of a truncated character series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    /// Number of odd indices summed (even indices carry χ = 0 and are skipped).
    pub n_terms: usize,
    /// Magnitude of the last term kept, or the tail error estimate for accelerated sums.
    pub last_term_mag: f64,
}

/// Σ_{n≥1} χ(n) f(n) for absolutely convergent series.
///
/// Stops once at least five odd terms are in and two consecutive terms satisfy
/// |term| < tol·(1 + |partial sum|).
pub fn character_sum<F>(mut f: F, tol: f64, max_terms: usize) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<Complex64>,
{
    let mut sum = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    for k in 0..max_terms {
        let n = 2 * k + 1;
        let term = f(n)? * chi(n) as f64;
        if !(term.re.is_finite() && term.im.is_finite()) {
            return Err(Error::Divergence(format!("non-finite term at n = {n}")));
        }
        sum += term;
        let mag = term.norm();
        if mag < tol * (1.0 + sum.norm()) {
            quiet += 1;
        } else {
            quiet = 0;
        }
        if k + 1 >= 5 && quiet >= 2 {
            return Ok(SeriesResult {
                value: sum,
                n_terms: k + 1,
                last_term_mag: mag,
            });
        }
    }
    Err(Error::Divergence(format!(
        "character series still above tolerance after {max_terms} terms (partial {sum})"
    )))
}

/// Σ_{j≥0} (-1)^j a_j from the first `a.len()` terms (Cohen, Rodriguez Villegas, Zagier).
///
/// Exact for sequences that are moments of a positive measure on [0,1]; converges like
/// 5.8^{-n} for smooth slowly decaying a_j.
pub fn alternating_crvz(a: &[Complex64]) -> Complex64 {
    let n = a.len() as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(n);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = Complex64::new(0.0, 0.0);
    for (k, &ak) in a.iter().enumerate() {
        let kf = k as f64;
        c = b - c;
        s += c * ak;
        b = b * (kf + n) * (kf - n) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Σ_{n≥1} χ(n) f(n) for conditionally convergent series with a smooth tail.
///
/// Odd n are summed directly while `rough(n)` holds (the part of the term that is
/// not smooth in n is still visible); the remaining alternating tail is summed by
/// [`alternating_crvz`]. The error estimate compares 30- and 40-term accelerations.
pub fn character_sum_accelerated<F, R>(mut f: F, rough: R, tol: f64) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<Complex64>,
    R: Fn(usize) -> bool,
{
    let mut head = Complex64::new(0.0, 0.0);
    let mut n = 1;
    while rough(n) {
        head += f(n)? * chi(n) as f64;
        n += 2;
        if n > 100_000 {
            return Err(Error::Divergence("rough part of the series never decays".into()));
        }
    }
    let sign = chi(n) as f64;
    let terms = (0..40)
        .map(|j| f(n + 2 * j).map(|t| t * sign))
        .collect::<Result<Vec<_>>>()?;
    let tail = alternating_crvz(&terms);
    let tail_coarse = alternating_crvz(&terms[..30]);
    let value = head + tail;
    let err = (tail - tail_coarse).norm();
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Divergence("non-finite accelerated sum".into()));
    }
    if err > tol * (1.0 + value.norm()) {
        return Err(Error::Divergence(format!(
            "accelerated tail not settled: estimate {err:e} above tolerance {tol:e}"
        )));
    }
    Ok(SeriesResult {
        value,
        n_terms: n / 2 + 40,
        last_term_mag: err,
    })
}
