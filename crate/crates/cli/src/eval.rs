use clap::{Args, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;

use ngwp_core::identities::{
    thm21_lhs, thm21_rhs_derived, thm31_lhs_shifted, thm31_rhs_derived, thm41_lhs, thm41_rhs, ReducedTime, Thm21Params,
    Thm31Params, TwoParticleParams, DEFAULT_QUAD_TOL,
};
use ngwp_core::Error;

use crate::grid::{parse_complex, GridSpec};
use crate::{CliError, EXIT_FAIL};

/// Reduced time used when neither --tau nor --hbar/--mass/--time is given.
pub const DEFAULT_TAU: f64 = 0.2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// ∫ z^v cos(xz) sech z e^{-iτz²} dz family, series in D_v.
    GlasserV,
    /// ∫ cos(xz) K(b,z) e^{-iτz²} dz with the Glaisher–Ramanujan kernel, g-series.
    Glaisher,
    /// Two particles with the cosh-ratio kernel, sum of two single integrals.
    TwoParticle,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Order v (complex, e.g. 0.5 or 2+1i), glasser-v only.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    v: Option<Complex64>,
    /// Position grid: VALUE or MIN:MAX:COUNT.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<GridSpec>,
    /// Alternative spelling of the position grid for the glaisher family.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<GridSpec>,
    /// Kernel parameter b ≥ 0, glaisher only.
    #[arg(long)]
    b: Option<f64>,
    /// Reduced time ħt/(2m).
    #[arg(long, conflicts_with_all = ["hbar", "mass", "time"])]
    tau: Option<f64>,
    #[arg(long, requires_all = ["mass", "time"])]
    hbar: Option<f64>,
    #[arg(long, requires_all = ["hbar", "time"])]
    mass: Option<f64>,
    #[arg(long, requires_all = ["hbar", "mass"])]
    time: Option<f64>,
    /// First coordinate grid, two-particle only.
    #[arg(long, allow_hyphen_values = true)]
    w1: Option<GridSpec>,
    /// Second coordinate grid, two-particle only.
    #[arg(long, allow_hyphen_values = true)]
    w2: Option<GridSpec>,
    #[arg(long, default_value_t = 1.0)]
    m1: f64,
    #[arg(long, default_value_t = 1.0)]
    m2: f64,
    /// The product ħt.
    #[arg(long = "hbar-t", default_value_t = 1.0)]
    hbar_t: f64,
    #[arg(long = "beta-prime", default_value_t = 1.0)]
    beta_prime: f64,
    /// Evaluate by contour-rotated quadrature instead of the series.
    #[arg(long)]
    via_integral: bool,
    /// Quadrature and series tolerance.
    #[arg(long, default_value_t = DEFAULT_QUAD_TOL)]
    tol: f64,
}

fn reduced_time(args: &EvalArgs) -> Result<ReducedTime, Error> {
    match (args.tau, args.hbar, args.mass, args.time) {
        (Some(t), ..) => ReducedTime::new(t),
        (None, Some(h), Some(m), Some(t)) => ReducedTime::from_physical(h, m, t),
        _ => ReducedTime::new(DEFAULT_TAU),
    }
}

fn reject(flag: &str, present: bool, family: &str) -> Result<(), CliError> {
    if present {
        Err(CliError::Usage(format!("--{flag} does not apply to --family {family}")))
    } else {
        Ok(())
    }
}

/// 17 significant digits, enough to round-trip any f64.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn run(args: &EvalArgs) -> Result<u8, CliError> {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    match args.family {
        Family::GlasserV => glasser(args),
        Family::Glaisher => glaisher(args),
        Family::TwoParticle => two_particle(args),
    }
}

fn write_rows(header: &str, rows: Vec<Result<String, Error>>) -> Result<u8, CliError> {
    println!("{header}");
    let mut failed = 0;
    for row in rows {
        match row {
            Ok(line) => println!("{line}"),
            Err(e) => {
                eprintln!("failed: {e}");
                failed += 1;
            }
        }
    }
    Ok(if failed == 0 { 0 } else { EXIT_FAIL })
}

fn glasser(args: &EvalArgs) -> Result<u8, CliError> {
    let name = "glasser-v";
    reject("b", args.b.is_some(), name)?;
    reject("a", args.a.is_some(), name)?;
    reject("w1", args.w1.is_some(), name)?;
    reject("w2", args.w2.is_some(), name)?;
    let v = args.v.ok_or_else(|| CliError::Usage("--family glasser-v needs --v".into()))?;
    let grid = args.x.ok_or_else(|| CliError::Usage("--family glasser-v needs --x".into()))?;
    let tau = reduced_time(args)?.get();
    let xs = grid.points();
    let ps = xs.iter().map(|&x| Thm31Params::new(v, x, tau)).collect::<Result<Vec<_>, _>>()?;
    let tol = args.tol;
    let rows = ps
        .par_iter()
        .map(|p| {
            let value = if args.via_integral {
                thm31_lhs_shifted(p, tol)?.value
            } else {
                match thm31_rhs_derived(p, tol) {
                    Ok(s) => s.value,
                    Err(Error::Divergence(_)) => {
                        eprintln!("note: series does not converge at x = {}; using quadrature", p.x);
                        thm31_lhs_shifted(p, tol)?.value
                    }
                    Err(e) => return Err(e),
                }
            };
            Ok(format!("{},{},{},{}", num(p.x), num(value.re), num(value.im), num(value.norm())))
        })
        .collect();
    write_rows("x,re,im,abs", rows)
}

fn glaisher(args: &EvalArgs) -> Result<u8, CliError> {
    let name = "glaisher";
    reject("v", args.v.is_some(), name)?;
    reject("w1", args.w1.is_some(), name)?;
    reject("w2", args.w2.is_some(), name)?;
    let grid = match (args.x, args.a) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give the position grid once, as --x or --a".into())),
        (Some(g), None) | (None, Some(g)) => g,
        (None, None) => return Err(CliError::Usage("--family glaisher needs --x".into())),
    };
    let b = args.b.unwrap_or(1.0);
    let tau = reduced_time(args)?.get();
    let ps = grid.points().into_iter().map(|a| Thm21Params::new(a, b, tau)).collect::<Result<Vec<_>, _>>()?;
    let tol = args.tol;
    let rows = ps
        .par_iter()
        .map(|p| {
            let value = if args.via_integral { thm21_lhs(p, tol)?.value } else { thm21_rhs_derived(p, tol)?.value };
            Ok(format!("{},{},{},{}", num(p.a), num(value.re), num(value.im), num(value.norm())))
        })
        .collect();
    write_rows("x,re,im,abs", rows)
}

fn two_particle(args: &EvalArgs) -> Result<u8, CliError> {
    let name = "two-particle";
    reject("v", args.v.is_some(), name)?;
    reject("b", args.b.is_some(), name)?;
    reject("x", args.x.is_some(), name)?;
    reject("a", args.a.is_some(), name)?;
    reject("tau", args.tau.is_some() || args.hbar.is_some(), name)?;
    let w1 = args.w1.ok_or_else(|| CliError::Usage("--family two-particle needs --w1".into()))?;
    let w2 = args.w2.ok_or_else(|| CliError::Usage("--family two-particle needs --w2".into()))?;
    let mut ps = Vec::new();
    for &a in &w1.points() {
        for &b in &w2.points() {
            ps.push(TwoParticleParams::new(a, b, args.m1, args.m2, args.hbar_t, args.beta_prime)?);
        }
    }
    let tol = args.tol;
    let rows = ps
        .par_iter()
        .map(|p| {
            // the stated sum of single integrals equals i times the double integral
            let value = if args.via_integral {
                thm41_lhs(p, tol)?.value
            } else {
                thm41_rhs(p, tol)? / Complex64::i()
            };
            Ok(format!("{},{},{},{},{}", num(p.w1), num(p.w2), num(value.re), num(value.im), num(value.norm())))
        })
        .collect();
    write_rows("w1,w2,re,im,abs", rows)
}
