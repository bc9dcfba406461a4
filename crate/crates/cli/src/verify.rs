use std::fs;
use std::path::PathBuf;

use clap::Args;

use ngwp_core::identities::{all_ids, run_suite, ParamValue, VerificationReport};

use crate::document::ReportDocument;
use crate::{CliError, EXIT_FAIL};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Identity id to check (repeatable); see `ngwp list`.
    #[arg(long = "id")]
    ids: Vec<String>,
    /// Check every identity in the catalog.
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    /// Override the per-identity default tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Print the JSON report document on stdout.
    #[arg(long)]
    json: bool,
    /// Write the JSON report document to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: &VerifyArgs) -> Result<u8, CliError> {
    let ids: Vec<&str> = if args.all {
        all_ids()
    } else if args.ids.is_empty() {
        return Err(CliError::Usage("give at least one --id or --all".into()));
    } else {
        args.ids.iter().map(String::as_str).collect()
    };
    if let Some(t) = args.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {t}")));
        }
    }
    let reports = run_suite(&ids, None, args.tol)?;
    let doc = ReportDocument::new(reports);
    let body = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Failed(e.to_string()))?;
    if let Some(path) = &args.out {
        fs::write(path, format!("{body}\n"))?;
    }
    if args.json {
        println!("{body}");
    } else {
        print_table(&doc.reports);
        println!("{} passed, {} failed", doc.summary.passed, doc.summary.failed);
    }
    Ok(if doc.all_passed() { 0 } else { EXIT_FAIL })
}

fn fmt_params(r: &VerificationReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| match v {
            ParamValue::Real(x) => format!("{k}={x}"),
            ParamValue::Complex(z) => format!("{k}={}{:+}i", z.re, z.im),
            ParamValue::Text(s) => format!("{k}={s}"),
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn print_table(reports: &[VerificationReport]) {
    for r in reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        let err = r.abs_err.map_or("-".to_string(), |e| format!("{e:.2e}"));
        let constant = r.resolved_constant.as_deref().map_or(String::new(), |c| format!("  constant={c}"));
        println!(
            "{verdict}  {:16} {:40} abs_err={err:9} tol={:.0e}  {:.1}ms{constant}",
            r.identity_id,
            fmt_params(r),
            r.tol,
            r.runtime_ms
        );
        if !r.passed {
            for n in &r.notes {
                println!("      {n}");
            }
        }
    }
}
