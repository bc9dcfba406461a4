use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use super::{max_evals, QuadResult};
use crate::{Error, Result};

// Kronrod abscissae on [-1,1] (positive half, descending) and weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// 15-point Kronrod rule with the embedded 7-point Gauss error estimate
/// (QUADPACK's qk15 scaling).
fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Result<(Complex64, f64)> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut fv = [Complex64::new(0.0, 0.0); 15];
    fv[7] = f(c);
    for j in 0..7 {
        let dx = h * XGK[j];
        fv[j] = f(c - dx);
        fv[14 - j] = f(c + dx);
    }
    if fv.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::Domain(format!("non-finite integrand on [{a}, {b}]")));
    }
    let mut resk = fv[7] * WGK[7];
    let mut resg = fv[7] * WG[3];
    let mut resabs = fv[7].norm() * WGK[7];
    for j in 0..7 {
        let pair = fv[j] + fv[14 - j];
        resk += pair * WGK[j];
        resabs += (fv[j].norm() + fv[14 - j].norm()) * WGK[j];
        if j % 2 == 1 {
            resg += pair * WG[j / 2];
        }
    }
    let mean = resk * 0.5;
    let mut resasc = (fv[7] - mean).norm() * WGK[7];
    for j in 0..7 {
        resasc += ((fv[j] - mean).norm() + (fv[14 - j] - mean).norm()) * WGK[j];
    }
    let hl = h.abs();
    resasc *= hl;
    resabs *= hl;
    let mut err = ((resk - resg) * h).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    Ok((resk * h, err))
}

/// ∫_a^b f with global adaptive bisection; stops when the summed error estimate
/// is ≤ tol·(1 + |value|).
pub fn integrate_finite<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    integrate_finite_with(f, a, b, tol, max_evals())
}

/// [`integrate_finite`] with an explicit evaluation budget.
pub fn integrate_finite_with<F>(f: F, a: f64, b: f64, tol: f64, budget: usize) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("integrate_finite needs finite a < b, got [{a}, {b}]")));
    }
    let (v0, e0) = gk15(&f, a, b)?;
    let mut n_evals = 15;
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value: v0, err: e0 });
    let mut value = v0;
    let mut err = e0;
    loop {
        if err <= tol * (1.0 + value.norm()) {
            break;
        }
        if n_evals + 30 > budget {
            return Err(Error::Convergence { best: value, err, evals: n_evals });
        }
        let worst = heap.pop().expect("heap never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) || (worst.b - worst.a) < 1e-13 * (1.0 + mid.abs()) {
            // cannot split further: accept this panel's error as final
            heap.push(worst);
            return Err(Error::Convergence { best: value, err, evals: n_evals });
        }
        let (v1, e1) = gk15(&f, worst.a, mid)?;
        let (v2, e2) = gk15(&f, mid, worst.b)?;
        n_evals += 30;
        // re-sum to limit drift
        value += v1 + v2 - worst.value;
        err += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2 });
        if heap.len() % 64 == 0 {
            value = heap.iter().map(|p| p.value).sum();
            err = heap.iter().map(|p| p.err).sum();
        }
    }
    let value: Complex64 = heap.iter().map(|p| p.value).sum();
    let err: f64 = heap.iter().map(|p| p.err).sum();
    Ok(QuadResult { value, err_est: err, n_evals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn closed_form_examples() {
        let cases: [(Box<dyn Fn(f64) -> Complex64>, f64, Complex64); 3] = [
            (Box::new(|_| Complex64::new(1.0, 0.0)), 1.0, Complex64::new(1.0, 0.0)),
            (Box::new(|z: f64| Complex64::new(z.sin(), 0.0)), PI, Complex64::new(2.0, 0.0)),
            (
                Box::new(|z: f64| Complex64::new(0.0, z).exp()),
                1.0,
                Complex64::new(1f64.sin(), 1.0 - 1f64.cos()),
            ),
        ];
        for (f, b, exact) in cases {
            let q = integrate_finite(f, 0.0, b, 1e-12).unwrap();
            let err = (q.value - exact).norm();
            assert!(err <= 10.0 * q.err_est && err < 1e-13, "{err:e} {:e}", q.err_est);
        }
    }

    #[test]
    fn budget_exhaustion_reports_best_estimate() {
        let r = integrate_finite_with(|x: f64| Complex64::new((50.0 * x).sin() / x.sqrt(), 0.0), 0.0, 1.0, 1e-15, 60);
        match r {
            Err(Error::Convergence { evals, .. }) => assert!(evals <= 60),
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }
}
