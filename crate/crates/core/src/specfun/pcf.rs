use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::rgamma;
use super::hypergeometric::tricomi_u;
use crate::Result;

/// Physicists' Hermite polynomial H_n(z) by the three-term recurrence.
pub fn hermite(n: usize, z: Complex64) -> Complex64 {
    let mut h0 = Complex64::new(1.0, 0.0);
    if n == 0 {
        return h0;
    }
    let mut h1 = 2.0 * z;
    for k in 1..n {
        let h2 = 2.0 * z * h1 - 2.0 * k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// D_v(z) = 2^{v/2} e^{-z²/4} U(-v/2, 1/2, z²/2) for z in the closed right half-plane
/// (imaginary axis only from above), where √(z²/2) = z/√2 on the principal branch.
fn pcf_d_right(v: Complex64, z: Complex64) -> Result<Complex64> {
    let z2 = if z.re == 0.0 {
        // keep arg(z²) = +π on the upper imaginary axis
        Complex64::new(-z.im * z.im, 0.0)
    } else {
        z * z
    };
    let u = tricomi_u(-0.5 * v, Complex64::new(0.5, 0.0), 0.5 * z2)?;
    Ok(Complex64::new(2.0, 0.0).powc(0.5 * v) * (-0.25 * z2).exp() * u)
}

/// Parabolic cylinder function D_v(z) for complex order and argument.
///
/// The left half-plane is reached by the connection formula
/// D_v(z) = e^{∓iπv} D_v(-z) + √(2π)/Γ(-v) · e^{∓iπ(v+1)/2} D_{-v-1}(±iz),
/// sign chosen so both right-hand arguments land in the right half-plane.
pub fn pcf_d(v: Complex64, z: Complex64) -> Result<Complex64> {
    if z.re > 0.0 || (z.re == 0.0 && z.im >= 0.0) {
        return pcf_d_right(v, z);
    }
    let zeta = -z;
    let i = Complex64::i();
    let (s, arg2) = if zeta.im > 0.0 { (-1.0, -i * zeta) } else { (1.0, i * zeta) };
    let first = (s * i * PI * v).exp() * pcf_d_right(v, zeta)?;
    let rg = rgamma(-v);
    if rg == Complex64::new(0.0, 0.0) {
        return Ok(first);
    }
    let second = (2.0 * PI).sqrt()
        * rg
        * (s * i * PI * (v + 1.0) * 0.5).exp()
        * pcf_d_right(-v - 1.0, arg2)?;
    Ok(first + second)
}
