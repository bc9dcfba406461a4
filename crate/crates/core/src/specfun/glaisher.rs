use std::f64::consts::PI;

use num_complex::Complex64;

use super::series::{character_sum, SeriesResult};
use crate::{Error, Result};

/// The primitive Dirichlet character modulo 4.
pub fn chi(n: usize) -> i32 {
    match n % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// Σ_{n≥1} χ(n) n e^{-n²x}, i.e. η³(4ix/π).
pub fn eta3_series(x: Complex64, tol: f64) -> Result<SeriesResult> {
    if x.re <= 0.0 {
        return Err(Error::Domain(format!("eta3 series needs Re x > 0, got {x}")));
    }
    let max_terms = (10.0 + (60.0 / x.re).sqrt()) as usize * 2;
    character_sum(|n| Ok(n as f64 * (-((n * n) as f64) * x).exp()), tol, max_terms)
}

/// The same series indexed over odd numbers: Σ_{k≥0} (-1)^k (2k+1) e^{-(2k+1)²x}.
pub fn eta3_odd_form(x: Complex64, tol: f64) -> Result<Complex64> {
    if x.re <= 0.0 {
        return Err(Error::Domain(format!("eta3 series needs Re x > 0, got {x}")));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut k = 0usize;
    loop {
        let m = (2 * k + 1) as f64;
        let term = m * (-m * m * x).exp();
        sum += if k % 2 == 0 { term } else { -term };
        if k >= 4 && term.norm() < tol * (1.0 + sum.norm()) {
            return Ok(sum);
        }
        k += 1;
    }
}

/// η³(4ix/π) for real x > 0 at full accuracy, using η³ at the inverted argument
/// f(x) = (π/(4x))^{3/2} f(π²/(16x)) below the fixed point x = π/4.
pub fn eta3_value(x: f64) -> f64 {
    let direct = |x: f64| {
        let mut sum = 0.0;
        let mut k = 0usize;
        loop {
            let m = (2 * k + 1) as f64;
            let term = m * (-m * m * x).exp();
            sum += if k % 2 == 0 { term } else { -term };
            if term < 1e-18 * sum.abs() || term == 0.0 {
                return sum;
            }
            k += 1;
        }
    };
    if x >= PI / 4.0 {
        direct(x)
    } else {
        (PI / (4.0 * x)).powf(1.5) * direct(PI * PI / (16.0 * x))
    }
}

/// A(b,c), B(b,c) with 2A² = √(b⁴+c²) + b² and 2B² = √(b⁴+c²) - b².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ABSplit {
    pub a_part: f64,
    pub b_part: f64,
}

pub fn ab_split(b: f64, c: f64) -> ABSplit {
    let b2 = b * b;
    let r = b2.hypot(c);
    let a_part = ((r + b2) / 2.0).sqrt();
    // |c|/(2A) avoids the cancellation in √((r - b²)/2)
    let b_part = if a_part > 0.0 { c.abs() / (2.0 * a_part) } else { 0.0 };
    ABSplit { a_part, b_part }
}

/// cosh(πA/2)cos(πB/2) / (cosh²(πA/2) - sin²(πB/2)) with A, B continued to complex z.
///
/// The ratio is even under (A,B) → (-A,-B), so only A² and AB = z/2 matter and the
/// branch of the square roots drops out.
pub fn glaisher_kernel(b: f64, z: Complex64) -> Result<Complex64> {
    let b2 = b * b;
    let r = (Complex64::new(b2 * b2, 0.0) + z * z).sqrt();
    let mut a = ((r + b2) / 2.0).sqrt();
    let mut bb = if a.norm() > 1e-150 {
        z / (2.0 * a)
    } else {
        a = Complex64::new(0.0, 0.0);
        ((r - b2) / 2.0).sqrt()
    };
    if a.re < 0.0 {
        a = -a;
        bb = -bb;
    }
    let u = 0.5 * PI * a;
    let w = 0.5 * PI * bb;
    let eps = 64.0 * f64::EPSILON;
    if u.re > 1.0 {
        let e2 = (-2.0 * u).exp();
        let cw2 = (2.0 * w).cos();
        let den = 1.0 + e2 * e2 + 2.0 * e2 * cw2;
        if den.norm() <= eps * (1.0 + (e2 * e2).norm() + (2.0 * e2 * cw2).norm()) {
            return Err(Error::Pole(format!("Glaisher kernel pole near z = {z}")));
        }
        Ok(2.0 * (-u).exp() * (1.0 + e2) * w.cos() / den)
    } else {
        let c2u = (2.0 * u).cosh();
        let c2w = (2.0 * w).cos();
        let den = c2u + c2w;
        if den.norm() <= eps * (c2u.norm() + c2w.norm()) {
            return Err(Error::Pole(format!("Glaisher kernel pole near z = {z}")));
        }
        Ok(2.0 * u.cosh() * w.cos() / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn chi_values() {
        assert_eq!(chi(1), 1);
        assert_eq!(chi(4), 0);
        assert_eq!(chi(7), -1);
        assert_eq!(chi(0), 0);
    }

    #[test]
    fn eta3_examples() {
        let s = eta3_series(c64(10.0, 0.0), 1e-12).unwrap();
        assert!((s.value.re - 4.539_992_976_248_485e-5).abs() < 1e-17);
        let s = eta3_series(c64(1.0, 0.0), 1e-14).unwrap();
        // e^{-1} - 3e^{-9} + 5e^{-25} - ...
        assert!((s.value.re - 0.367_509_211_828_622).abs() < 1e-15, "{}", s.value);
        assert!(s.last_term_mag <= 1e-14 * (1.0 + s.value.norm()));
    }

    #[test]
    fn eta3_inversion_matches_direct_sum() {
        for &x in &[0.05, 0.2, 0.5, 0.78] {
            let direct = eta3_odd_form(c64(x, 0.0), 1e-17).unwrap().re;
            assert!((eta3_value(x) - direct).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn ab_split_examples() {
        assert_eq!(ab_split(1.0, 0.0), ABSplit { a_part: 1.0, b_part: 0.0 });
        let s = ab_split(0.0, 2.0);
        assert!((s.a_part - 1.0).abs() < 1e-15 && (s.b_part - 1.0).abs() < 1e-15);
        let s = ab_split(1.0, 1.0);
        assert!((s.a_part.powi(2) - s.b_part.powi(2) - 1.0).abs() < 1e-14);
        assert!((2.0 * s.a_part * s.b_part - 1.0).abs() < 1e-14);
    }

    #[test]
    fn kernel_examples() {
        let k = glaisher_kernel(1.0, c64(0.0, 0.0)).unwrap();
        assert!((k.re - 1.0 / (PI / 2.0).cosh()).abs() < 1e-15);
        assert!((k.re - 0.398_536_815_338_387_4).abs() < 1e-15);
        let k = glaisher_kernel(0.0, c64(2.0, 0.0)).unwrap();
        assert!(k.norm() < 1e-15);
    }

    #[test]
    fn kernel_equals_its_partial_fraction_series() {
        // K(z) = (4/π) Σ χ(n) n c_n / (c_n² + z²), c_n = b² + n²
        let (b, z) = (0.5, c64(1.5, 0.0));
        let c = |n: usize| b * b + (n * n) as f64;
        let s = super::super::series::character_sum_accelerated(
            |n| Ok(c64(n as f64 * c(n) / (c(n) * c(n) + z.re * z.re), 0.0)),
            |n| n < 5,
            1e-14,
        )
        .unwrap();
        let k = glaisher_kernel(b, z).unwrap();
        assert!((k - 4.0 / PI * s.value).norm() < 1e-13, "{k} {}", s.value);
    }
}
