//! Fock-space verification over a set of parameter cases.

use quasimode::fock::{verify_spectrum_with, VerificationReport, VerifyConfig};
use quasimode::{ModelParams, Momentum};
use serde::Serialize;

use crate::args::VerifyArgs;
use crate::error::{CliError, CliResult};
use crate::table::SCHEMA_VERSION;

pub const DEFAULT_XI: [f64; 3] = [0.0, 0.5, 1.0];
pub const DEFAULT_MOMENTUM: Momentum = Momentum {
    major: 0.2,
    minor: 0.1,
    perp: 0.05,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case {
    pub xi: f64,
    pub omega: f64,
    pub omega_p: f64,
    pub momentum: Momentum,
}

/// Built-in grid: for each ξ, the base point `(ω, ω_p) = (1, 0.5)` at rest,
/// then the same point with `p = (0.2, 0.1, 0.05)`, then `ω_p = 2` at rest.
pub fn default_cases() -> Vec<Case> {
    DEFAULT_XI
        .iter()
        .flat_map(|&xi| {
            [
                Case {
                    xi,
                    omega: 1.0,
                    omega_p: 0.5,
                    momentum: Momentum::ZERO,
                },
                Case {
                    xi,
                    omega: 1.0,
                    omega_p: 0.5,
                    momentum: DEFAULT_MOMENTUM,
                },
                Case {
                    xi,
                    omega: 1.0,
                    omega_p: 2.0,
                    momentum: Momentum::ZERO,
                },
            ]
        })
        .collect()
}

/// Cartesian product of the given lists; missing lists fall back to the
/// values of the built-in grid.
pub fn cases_from_args(args: &VerifyArgs) -> Vec<Case> {
    if args.xi.is_none() && args.omega.is_none() && args.omega_p.is_none() && args.p.is_empty() {
        return default_cases();
    }
    let xi: Vec<f64> = match &args.xi {
        Some(list) => list.0.iter().map(|p| p.xi()).collect(),
        None => DEFAULT_XI.to_vec(),
    };
    let omega = args.omega.clone().map_or_else(|| vec![1.0], |l| l.0);
    let omega_p = args.omega_p.clone().map_or_else(|| vec![0.5, 2.0], |l| l.0);
    let momenta = if args.p.is_empty() {
        vec![Momentum::ZERO, DEFAULT_MOMENTUM]
    } else {
        args.p.clone()
    };
    let mut cases = Vec::new();
    for &xi in &xi {
        for &omega in &omega {
            for &omega_p in &omega_p {
                for &momentum in &momenta {
                    cases.push(Case {
                        xi,
                        omega,
                        omega_p,
                        momentum,
                    });
                }
            }
        }
    }
    cases
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub schema_version: u32,
    pub kind: &'static str,
    pub tol: f64,
    pub cutoff_cap: usize,
    pub levels: usize,
    pub all_converged: bool,
    pub reports: Vec<VerificationReport>,
}

pub fn run_verify(
    cases: &[Case],
    tol: f64,
    cutoff_cap: usize,
    levels: usize,
    charges: u32,
) -> CliResult<VerifySummary> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Spec(format!("--tol must be positive, got {tol}")));
    }
    if levels == 0 {
        return Err(CliError::Spec("--levels must be at least 1".into()));
    }
    let config = VerifyConfig {
        cutoff_cap,
        charges,
        ..VerifyConfig::default()
    };
    if cutoff_cap / 4 < levels {
        return Err(CliError::Spec(format!(
            "--cutoff-cap {cutoff_cap} cannot resolve {levels} levels"
        )));
    }
    let mut reports = Vec::with_capacity(cases.len());
    for (i, c) in cases.iter().enumerate() {
        let params = ModelParams::new(c.xi, c.omega, c.omega_p)
            .map_err(|e| CliError::Spec(e.to_string()))?;
        let report =
            verify_spectrum_with(&params, &c.momentum, levels, tol, &config).map_err(|source| {
                CliError::Domain {
                    row: i + 1,
                    context: format!("xi={}, omega={}, omega_p={}", c.xi, c.omega, c.omega_p),
                    source,
                }
            })?;
        reports.push(report);
    }
    Ok(VerifySummary {
        schema_version: SCHEMA_VERSION,
        kind: "verify",
        tol,
        cutoff_cap,
        levels,
        all_converged: reports.iter().all(|r| r.converged),
        reports,
    })
}
