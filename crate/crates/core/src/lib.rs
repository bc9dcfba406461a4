//! Numerics for non-Gaussian free-particle wave packets.
//!
//! The crate evaluates each wave function two ways: as an oscillatory Fourier
//! integral (contour-rotated quadrature) and as a character or parabolic-cylinder
//! series. [`identities`] compares the two and produces [`identities::VerificationReport`]s.
//!
//! Throughout, `tau` is the reduced time ħt/(2m).

pub mod error;
pub mod identities;
pub mod laplace;
pub mod oscquad;
pub mod report;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Shorthand for a complex number from its parts.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
