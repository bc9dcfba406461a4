//! Complex special functions used by the series sides of the identities.

mod erf;
mod gamma;
mod gfunc;
mod glaisher;
mod hypergeometric;
mod pcf;
mod series;

pub use erf::{erfc_complex, erfcx_complex};
pub use gamma::{gamma, ln_gamma, rgamma};
pub use gfunc::g_closed;
pub use glaisher::{
    ab_split, chi, eta3_odd_form, eta3_series, eta3_value, glaisher_kernel, ABSplit,
};
pub use hypergeometric::{kummer_m, tricomi_u};
pub use pcf::{hermite, pcf_d};
pub use series::{alternating_crvz, character_sum, character_sum_accelerated, SeriesResult};

use num_complex::Complex64;

/// True when `z` is (numerically exactly) a non-positive integer.
pub(crate) fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

pub(crate) fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
