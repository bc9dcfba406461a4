use num_complex::Complex64;

use super::erf::erfcx_complex;
use crate::{Error, Result};

/// g(α₂, λ, t) = (tπ)^{-1/2} ∫₀^∞ sin(α₁λ) e^{-(α₁+α₂)²/(4t)} dα₁ in closed form.
///
/// Writing sin through exponentials and completing the square gives
/// g = e^{-α₂²/(4t)} [erfcx(ξ₊) - erfcx(ξ₋)] / (2i), ξ± = α₂/(2√t) ∓ iλ√t,
/// which avoids the overflow of the unscaled e^{μ²t} erfc(·) products.
pub fn g_closed(alpha2: Complex64, lambda: Complex64, t: f64) -> Result<Complex64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("g needs t > 0, got {t}")));
    }
    if lambda == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let st = t.sqrt();
    let i = Complex64::i();
    let base = alpha2 / (2.0 * st);
    let xi_p = base - i * lambda * st;
    let xi_m = base + i * lambda * st;
    let pref = (-alpha2 * alpha2 / (4.0 * t)).exp();
    let v = pref * (erfcx_complex(xi_p) - erfcx_complex(xi_m)) / (2.0 * i);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("g({alpha2}, {lambda}, {t}) overflowed")))
    }
}
