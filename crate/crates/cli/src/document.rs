use serde::{Deserialize, Serialize};

use ngwp_core::identities::{Params, VerificationReport};

/// The JSON document written by `verify`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub timestamp: String,
    pub reports: Vec<VerificationReport>,
    pub resolved_constants: Vec<ConstantAnnotation>,
    pub summary: Summary,
}

/// Which overall constant closed an identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantAnnotation {
    pub identity: String,
    pub params: Params,
    pub constant: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl ReportDocument {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        let resolved_constants = reports
            .iter()
            .filter_map(|r| {
                r.resolved_constant.as_ref().map(|c| ConstantAnnotation {
                    identity: r.identity_id.clone(),
                    params: r.params.clone(),
                    constant: c.clone(),
                })
            })
            .collect();
        let passed = reports.iter().filter(|r| r.passed).count();
        ReportDocument {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            summary: Summary { total: reports.len(), passed, failed: reports.len() - passed },
            reports,
            resolved_constants,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}
