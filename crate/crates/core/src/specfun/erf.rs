use std::f64::consts::PI;

use num_complex::Complex64;

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// erf by its Maclaurin series; only used where cancellation is mild.
fn erf_taylor(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut term = z;
    let mut sum = z;
    for n in 1..2000 {
        term *= -z2 / n as f64;
        let t = term / (2 * n + 1) as f64;
        sum += t;
        if t.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    sum * FRAC_2_SQRT_PI
}

/// erfcx(z) = e^{z²} erfc(z) from the Laplace continued fraction, Re z > 0.
/// Modified Lentz evaluation of 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))).
fn erfcx_cf(z: Complex64) -> Complex64 {
    let tiny = 1e-300;
    let mut f = z;
    if f.norm() < tiny {
        f = Complex64::new(tiny, 0.0);
    }
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for k in 1..20_000 {
        let a = k as f64 / 2.0;
        d = z + a * d;
        if d.norm() < tiny {
            d = Complex64::new(tiny, 0.0);
        }
        c = z + a / c;
        if c.norm() < tiny {
            c = Complex64::new(tiny, 0.0);
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    1.0 / (PI.sqrt() * f)
}

/// Scaled complementary error function erfcx(z) = e^{z²}·erfc(z).
///
/// Stays finite where erfc itself would overflow or underflow (large Re z).
pub fn erfcx_complex(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        return 2.0 * (z * z).exp() - erfcx_complex(-z);
    }
    if z.re < 1.5 && z.norm() < 4.0 {
        (z * z).exp() * (1.0 - erf_taylor(z))
    } else {
        erfcx_cf(z)
    }
}

/// Complementary error function of complex argument.
pub fn erfc_complex(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        return 2.0 - erfc_complex(-z);
    }
    if z.re < 1.5 && z.norm() < 4.0 {
        1.0 - erf_taylor(z)
    } else {
        (-z * z).exp() * erfcx_cf(z)
    }
}
