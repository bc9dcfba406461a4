//! Verification reports shared by the identity checks and the Laplace pair checks.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Complex number as `{"re": .., "im": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx { re: z.re, im: z.im }
    }
}

impl From<Cx> for Complex64 {
    fn from(z: Cx) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// A parameter value in a report: plain number, complex number or label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Real(f64),
    Complex(Cx),
    Text(String),
}

impl From<f64> for ParamValue {
    fn from(x: f64) -> Self {
        ParamValue::Real(x)
    }
}

impl From<Complex64> for ParamValue {
    fn from(z: Complex64) -> Self {
        if z.im == 0.0 {
            ParamValue::Real(z.re)
        } else {
            ParamValue::Complex(z.into())
        }
    }
}

impl From<&str> for ParamValue {
    fn from(s: &str) -> Self {
        ParamValue::Text(s.to_string())
    }
}

pub type Params = BTreeMap<String, ParamValue>;

/// Builds a [`Params`] map from `(name, value)` pairs.
pub fn params<I, V>(items: I) -> Params
where
    I: IntoIterator<Item = (&'static str, V)>,
    V: Into<ParamValue>,
{
    items.into_iter().map(|(k, v)| (k.to_string(), v.into())).collect()
}

/// Outcome of comparing two independent evaluations of one identity.
///
/// `passed` holds iff `abs_err ≤ tol·(1 + max(|lhs|, |rhs|))`. When one side could
/// not be evaluated, `lhs`/`rhs`/errors are `None` and `passed` is false.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(rename = "identity")]
    pub identity_id: String,
    pub params: Params,
    pub lhs: Option<Cx>,
    pub rhs: Option<Cx>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub tol: f64,
    pub passed: bool,
    pub runtime_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolved_constant: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Whether |lhs - rhs| passes at tolerance `tol` in the mixed absolute/relative sense.
pub fn agrees(lhs: Complex64, rhs: Complex64, tol: f64) -> bool {
    (lhs - rhs).norm() <= tol * (1.0 + lhs.norm().max(rhs.norm()))
}

impl VerificationReport {
    pub fn compare(id: &str, params: Params, lhs: Complex64, rhs: Complex64, tol: f64) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel_err = if scale > 0.0 { abs_err / scale } else { 0.0 };
        VerificationReport {
            identity_id: id.to_string(),
            params,
            lhs: Some(lhs.into()),
            rhs: Some(rhs.into()),
            abs_err: Some(abs_err),
            rel_err: Some(rel_err),
            tol,
            passed: abs_err <= tol * (1.0 + scale),
            runtime_ms: 0.0,
            resolved_constant: None,
            notes: Vec::new(),
        }
    }

    /// A failed report for a check whose evaluation raised an error.
    pub fn errored(id: &str, params: Params, tol: f64, err: &crate::Error) -> Self {
        VerificationReport {
            identity_id: id.to_string(),
            params,
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            tol,
            passed: false,
            runtime_ms: 0.0,
            resolved_constant: None,
            notes: vec![format!("evaluation failed: {err}")],
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Re-derives `passed` from the stored numbers; false for errored reports.
    pub fn consistent(&self) -> bool {
        match (self.lhs, self.rhs, self.abs_err) {
            (Some(l), Some(r), Some(e)) => {
                let scale = Complex64::from(l).norm().max(Complex64::from(r).norm());
                self.passed == (e <= self.tol * (1.0 + scale))
            }
            _ => !self.passed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn pass_rule_is_mixed_abs_rel() {
        let r = VerificationReport::compare("x", Params::new(), c64(100.0, 0.0), c64(100.0 + 5e-5, 0.0), 1e-6);
        assert!(r.passed && r.consistent());
        let r = VerificationReport::compare("x", Params::new(), c64(0.0, 0.0), c64(2e-6, 0.0), 1e-6);
        assert!(!r.passed && r.consistent());
        assert!(agrees(c64(0.0, 0.0), c64(0.0, 9e-7), 1e-6));
    }

    #[test]
    fn errored_reports_fail() {
        let r = VerificationReport::errored("x", Params::new(), 1e-6, &crate::Error::Divergence("no".into()));
        assert!(!r.passed && r.consistent());
        assert!(r.notes[0].contains("no"));
    }

    #[test]
    fn real_complex_params() {
        let p = params([("a", c64(1.0, 0.0)), ("b", c64(1.0, 2.0))]);
        assert_eq!(p["a"], ParamValue::Real(1.0));
        assert_eq!(p["b"], ParamValue::Complex(Cx { re: 1.0, im: 2.0 }));
    }
}
