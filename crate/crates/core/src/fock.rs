//! Brute-force check of the analytic spectrum.
//!
//! The undiagonalized Hamiltonian
//!
//! ```text
//! H = p²/2m − g p·(ℰ a + ℰ* a†) + (ħω + quad)(a†a + ½) + ½ quad (ℰ·ℰ)(a² + a†²)
//! ```
//!
//! is written out in the photon-number basis `|0⟩ … |N_max⟩`, where it is
//! pentadiagonal, and diagonalized densely. The lowest eigenvalues are then
//! compared with the closed-form levels from [`crate::spectrum`]. The
//! plane-wave variant adds the two diagonal corrections that appear after
//! removing the `e^{i(k·r − ωt)}` phases.

use faer::{Mat, MatRef, Side};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::spectrum::{energy_level, ModeCoupling, Momentum};
use crate::units::ModelParams;

pub const MIN_CUTOFF: usize = 8;
pub const DEFAULT_START_CUTOFF: usize = 64;
pub const DEFAULT_CUTOFF_CAP: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Dipole,
    PlaneWave,
}

#[derive(Debug, Clone)]
pub struct FockHamiltonian {
    cutoff: usize,
    matrix: Mat<Complex64>,
    params: ModelParams,
    momentum: Momentum,
    variant: Variant,
}

impl FockHamiltonian {
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.cutoff + 1
    }

    pub fn matrix(&self) -> MatRef<'_, Complex64> {
        self.matrix.as_ref()
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn momentum(&self) -> &Momentum {
        &self.momentum
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim();
        (0..n).all(|j| (0..n).all(|i| i == j || self.matrix[(i, j)] == Complex64::new(0.0, 0.0)))
    }

    /// Lowest eigenvalue and its normalized eigenvector.
    pub fn ground_state(&self) -> Result<(f64, Vec<Complex64>)> {
        let eig = self
            .matrix
            .self_adjoint_eigen(Side::Lower)
            .map_err(eigen_error)?;
        let value = eig.S().column_vector()[0].re;
        let vector = eig.U().col(0).iter().copied().collect();
        Ok((value, vector))
    }
}

fn eigen_error(e: faer::linalg::evd::EvdError) -> Error {
    Error::EigenSolver(format!("{e:?}"))
}

pub fn build_dipole_hamiltonian(
    params: &ModelParams,
    p: &Momentum,
    cutoff: usize,
) -> Result<FockHamiltonian> {
    build_with_charges(params, p, cutoff, 1)
}

/// Dipole Hamiltonian for `charges` identical charges with summed
/// momentum `p` (the kinetic term is the constant `p²/2Nm`).
pub fn build_with_charges(
    params: &ModelParams,
    p: &Momentum,
    cutoff: usize,
    charges: u32,
) -> Result<FockHamiltonian> {
    if cutoff < MIN_CUTOFF {
        return Err(Error::CutoffTooSmall {
            cutoff,
            min: MIN_CUTOFF,
        });
    }
    if charges == 0 {
        return Err(Error::NonPositive {
            name: "charges",
            value: 0.0,
        });
    }
    let mode = ModeCoupling::new(params, charges)?;
    let xi = params.xi();
    let kinetic = p.norm_sq() / (2.0 * charges as f64 * params.mass());
    let number = mode.number_coefficient();
    let pair = mode.pair_coefficient();
    // −g p·ℰ multiplies a, whose only element is ⟨n|a|n+1⟩ = √(n+1)
    let linear = -mode.g * Complex64::new(p.major, xi * p.minor) / (1.0 + xi * xi).sqrt();

    let dim = cutoff + 1;
    let mut m = Mat::<Complex64>::zeros(dim, dim);
    for n in 0..dim {
        let nf = n as f64;
        m[(n, n)] = Complex64::new(kinetic + number * (nf + 0.5), 0.0);
        if n + 1 < dim {
            let v = linear * (nf + 1.0).sqrt();
            m[(n, n + 1)] = v;
            m[(n + 1, n)] = v.conj();
        }
        if n + 2 < dim && pair != 0.0 {
            let v = Complex64::new(pair * ((nf + 1.0) * (nf + 2.0)).sqrt(), 0.0);
            m[(n, n + 2)] = v;
            m[(n + 2, n)] = v;
        }
    }
    Ok(FockHamiltonian {
        cutoff,
        matrix: m,
        params: *params,
        momentum: *p,
        variant: Variant::Dipole,
    })
}

/// Dipole matrix plus the plane-wave diagonal corrections
/// `−(ħ k·p / m)(n + ½) + (ħ²k²/2m)(n + ½)²`, with `k = ω/c` along the
/// propagation axis so `k·p = k p_perp`.
pub fn build_planewave_hamiltonian(
    params: &ModelParams,
    p: &Momentum,
    cutoff: usize,
) -> Result<FockHamiltonian> {
    let mut h = build_dipole_hamiltonian(params, p, cutoff)?;
    let k = params.field_wavenumber();
    let (hbar, m) = (params.hbar(), params.mass());
    let drift = hbar * k * p.perp / m;
    let recoil = hbar * hbar * k * k / (2.0 * m);
    for n in 0..h.dim() {
        let level = n as f64 + 0.5;
        h.matrix[(n, n)].re += -drift * level + recoil * level * level;
    }
    h.variant = Variant::PlaneWave;
    Ok(h)
}

/// All eigenvalues of a dense Hermitian matrix, ascending.
///
/// Only the lower triangle is read.
pub fn hermitian_eigenvalues(matrix: MatRef<'_, Complex64>) -> Result<Vec<f64>> {
    matrix
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(eigen_error)
}

/// The `count` smallest eigenvalues, ascending.
///
/// Levels near the cutoff are distorted by truncation, so at most a
/// quarter of the basis may be requested.
pub fn lowest_eigenvalues(h: &FockHamiltonian, count: usize) -> Result<Vec<f64>> {
    let max = h.cutoff / 4;
    if count > max {
        return Err(Error::TooManyLevels {
            count,
            cutoff: h.cutoff,
            max,
        });
    }
    let mut values = if h.is_diagonal() {
        (0..h.dim()).map(|i| h.matrix[(i, i)].re).collect()
    } else {
        hermitian_eigenvalues(h.matrix())?
    };
    values.sort_by(f64::total_cmp);
    values.truncate(count);
    Ok(values)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub start_cutoff: usize,
    pub cutoff_cap: usize,
    pub charges: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            start_cutoff: DEFAULT_START_CUTOFF,
            cutoff_cap: DEFAULT_CUTOFF_CAP,
            charges: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutoffStep {
    pub cutoff: usize,
    /// Largest relative change of the tracked levels against the previous
    /// cutoff; `None` for the first step.
    pub max_rel_change: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub xi: f64,
    pub omega: f64,
    pub omega_p: f64,
    pub momentum: Momentum,
    pub charges: u32,
    pub tol: f64,
    pub lowest_analytic: Vec<f64>,
    pub lowest_numeric: Vec<f64>,
    pub max_rel_err: f64,
    /// Largest relative deviation of a numeric level spacing from `ħΩ`.
    pub spacing_max_rel_err: f64,
    pub cutoff_used: usize,
    /// Whether the levels stopped moving (by less than `tol/10`) on doubling
    /// the cutoff before the cap was reached.
    pub stabilized: bool,
    pub converged: bool,
    pub history: Vec<CutoffStep>,
}

pub fn verify_spectrum(
    params: &ModelParams,
    p: &Momentum,
    n_levels: usize,
    tol: f64,
) -> Result<VerificationReport> {
    verify_spectrum_with(params, p, n_levels, tol, &VerifyConfig::default())
}

/// Compare the numeric and analytic spectra, doubling the cutoff until the
/// lowest `n_levels` eigenvalues are stable.
///
/// `cutoff_used` is the smallest cutoff whose levels agreed with the doubled
/// one; its eigenvalues are the ones reported. Hitting the cap is reported
/// through `stabilized = false`, not as an error.
pub fn verify_spectrum_with(
    params: &ModelParams,
    p: &Momentum,
    n_levels: usize,
    tol: f64,
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    let tol = require_positive("tol", tol)?;
    let charges = config.charges;
    let analytic = (0..n_levels)
        .map(|n| energy_level(params, p, n as u32, charges).map(|l| l.energy))
        .collect::<Result<Vec<_>>>()?;
    let hbar_omega = params.hbar() * ModeCoupling::new(params, charges)?.omega_eff();

    let levels_at = |cutoff: usize| -> Result<Vec<f64>> {
        let h = build_with_charges(params, p, cutoff, charges)?;
        lowest_eigenvalues(&h, n_levels)
    };

    let first = config
        .start_cutoff
        .max(4 * n_levels)
        .max(MIN_CUTOFF)
        .min(config.cutoff_cap.max(MIN_CUTOFF));
    let mut cutoff = first;
    let mut current = levels_at(cutoff)?;
    let mut history = vec![CutoffStep {
        cutoff,
        max_rel_change: None,
    }];
    let mut stabilized = false;
    while cutoff * 2 <= config.cutoff_cap {
        let next = levels_at(cutoff * 2)?;
        let change = max_rel_diff(&next, &current, hbar_omega);
        history.push(CutoffStep {
            cutoff: cutoff * 2,
            max_rel_change: Some(change),
        });
        if change < tol / 10.0 {
            stabilized = true;
            break;
        }
        current = next;
        cutoff *= 2;
    }

    let max_rel_err = max_rel_diff(&current, &analytic, hbar_omega);
    let spacing_max_rel_err = current
        .windows(2)
        .map(|w| ((w[1] - w[0]) - hbar_omega).abs() / hbar_omega)
        .fold(0.0, f64::max);
    let converged = stabilized && max_rel_err <= tol && spacing_max_rel_err <= tol;

    Ok(VerificationReport {
        xi: params.xi(),
        omega: params.omega(),
        omega_p: params.omega_p(),
        momentum: *p,
        charges,
        tol,
        lowest_analytic: analytic,
        lowest_numeric: current,
        max_rel_err,
        spacing_max_rel_err,
        cutoff_used: cutoff,
        stabilized,
        converged,
        history,
    })
}

/// Largest `|a − b| / max(|b|, floor)` over paired entries.
fn max_rel_diff(a: &[f64], b: &[f64], floor: f64) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs() / y.abs().max(floor))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(xi: f64, omega: f64, omega_p: f64) -> ModelParams {
        ModelParams::new(xi, omega, omega_p).unwrap()
    }

    #[test]
    fn small_hermitian_matrix() {
        let m = Mat::<Complex64>::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => Complex64::new(0.0, 1.0),
            (1, 0) => Complex64::new(0.0, -1.0),
            _ => Complex64::new(1.0, 0.0),
        });
        let e = hermitian_eigenvalues(m.as_ref()).unwrap();
        assert!(e[0].abs() < 1e-15);
        assert!((e[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn matrix_is_hermitian_and_pentadiagonal() {
        let h =
            build_dipole_hamiltonian(&params(0.4, 1.0, 1.3), &Momentum::new(0.2, -0.3, 0.5), 40)
                .unwrap();
        let m = h.matrix();
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                assert!((m[(i, j)] - m[(j, i)].conj()).norm() <= 1e-14);
                if i.abs_diff(j) > 2 {
                    assert_eq!(m[(i, j)], Complex64::new(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn cutoff_guards() {
        let p = params(0.4, 1.0, 1.0);
        assert!(matches!(
            build_dipole_hamiltonian(&p, &Momentum::ZERO, 7),
            Err(Error::CutoffTooSmall { .. })
        ));
        let h = build_dipole_hamiltonian(&p, &Momentum::ZERO, 16).unwrap();
        assert!(matches!(
            lowest_eigenvalues(&h, 5),
            Err(Error::TooManyLevels { .. })
        ));
        assert_eq!(lowest_eigenvalues(&h, 4).unwrap().len(), 4);
    }

    #[test]
    fn circular_zero_momentum_is_diagonal() {
        let p = params(1.0, 0.8, 1.7);
        let h = build_dipole_hamiltonian(&p, &Momentum::ZERO, 32).unwrap();
        assert!(h.is_diagonal());
        let a = 0.8 + 1.7 * 1.7 / (2.0 * 0.8);
        for (n, e) in lowest_eigenvalues(&h, 8).unwrap().into_iter().enumerate() {
            assert_eq!(e, a * (n as f64 + 0.5));
        }
    }

    #[test]
    fn linear_ground_state_matches_plasmon() {
        let h = build_dipole_hamiltonian(&params(0.0, 1.0, 0.5), &Momentum::ZERO, 100).unwrap();
        let e = lowest_eigenvalues(&h, 3).unwrap();
        let w = 1.25f64.sqrt();
        for (n, v) in e.iter().enumerate() {
            assert_relative_eq!(*v, w * (n as f64 + 0.5), max_relative = 1e-10);
        }
        assert_relative_eq!(e[0], 0.559_016_994_374_947_4, max_relative = 1e-10);
    }

    #[test]
    fn elliptic_levels_match_analytic() {
        let params = params(0.5, 1.0, 0.5);
        let p = Momentum::new(0.2, 0.1, 0.05);
        let h = build_dipole_hamiltonian(&params, &p, 200).unwrap();
        let numeric = lowest_eigenvalues(&h, 5).unwrap();
        for (n, v) in numeric.iter().enumerate() {
            let a = energy_level(&params, &p, n as u32, 1).unwrap().energy;
            assert_relative_eq!(*v, a, max_relative = 1e-10);
        }
    }

    #[test]
    fn many_charges_match_analytic() {
        let params = params(0.3, 1.1, 0.6);
        let p = Momentum::new(0.4, -0.2, 0.3);
        let report = verify_spectrum_with(
            &params,
            &p,
            4,
            1e-8,
            &VerifyConfig {
                charges: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(report.converged, "{report:?}");
    }

    #[test]
    fn ground_state_offset_isolates_displacement() {
        let params = params(0.5, 1.0, 2.0);
        let p = Momentum::new(0.2, 0.1, 0.05);
        let r = verify_spectrum(&params, &p, 5, 1e-6).unwrap();
        assert!(r.converged);
        let lvl = energy_level(&params, &p, 0, 1).unwrap();
        let hw = lvl.omega_eff;
        let offset = r.lowest_numeric[0] - p.norm_sq() / 2.0 - 0.5 * hw;
        assert!((offset + hw * lvl.sigma_sq).abs() <= 1e-6 * r.lowest_numeric[0]);
    }

    #[test]
    fn diagonal_case_converges_at_start() {
        let r = verify_spectrum(&params(1.0, 1.3, 0.4), &Momentum::ZERO, 5, 1e-6).unwrap();
        assert!(r.converged);
        assert!(r.max_rel_err < 1e-12);
        assert_eq!(r.cutoff_used, 64);
    }

    #[test]
    fn unattainable_tolerance_is_reported() {
        let config = VerifyConfig {
            cutoff_cap: 256,
            ..Default::default()
        };
        let r = verify_spectrum_with(
            &params(0.5, 1.0, 2.0),
            &Momentum::new(0.2, 0.1, 0.05),
            5,
            1e-17,
            &config,
        )
        .unwrap();
        assert!(!r.stabilized);
        assert!(!r.converged);
        assert_eq!(r.cutoff_used, 256);
    }

    #[test]
    fn truncation_error_decays_with_cutoff() {
        // strong squeezing so the first cutoffs are visibly truncated
        let config = VerifyConfig {
            start_cutoff: 8,
            cutoff_cap: 256,
            charges: 1,
        };
        let r = verify_spectrum_with(
            &params(0.0, 0.3, 3.0),
            &Momentum::new(0.5, 0.0, 0.0),
            2,
            1e-13,
            &config,
        )
        .unwrap();
        let changes: Vec<f64> = r.history.iter().filter_map(|s| s.max_rel_change).collect();
        assert!(changes.len() >= 3, "{changes:?}");
        let significant: Vec<f64> = changes.into_iter().take_while(|c| *c > 1e-12).collect();
        for w in significant.windows(2) {
            assert!(w[1] < w[0], "{w:?}");
            if w[0] < 0.1 {
                assert!(w[1] < 0.5 * w[0], "{w:?}");
            }
        }
    }

    #[test]
    fn planewave_circular_shift_is_recoil() {
        let params = params(1.0, 1.0, 0.5);
        let dip = lowest_eigenvalues(
            &build_dipole_hamiltonian(&params, &Momentum::ZERO, 64).unwrap(),
            16,
        )
        .unwrap();
        let pw = lowest_eigenvalues(
            &build_planewave_hamiltonian(&params, &Momentum::ZERO, 64).unwrap(),
            16,
        )
        .unwrap();
        for (n, (a, b)) in dip.iter().zip(&pw).enumerate() {
            let level = n as f64 + 0.5;
            let expect = 0.5 * level * level;
            assert!(((b - a) - expect).abs() <= 1e-12 * expect);
        }
    }

    /// `⟨(n̂ + ½)²⟩` in a state given by its number-basis amplitudes.
    fn level_sq_expectation(v: &[Complex64]) -> f64 {
        v.iter()
            .enumerate()
            .map(|(n, c)| c.norm_sqr() * (n as f64 + 0.5).powi(2))
            .sum()
    }

    #[test]
    fn squeezed_vacuum_moments_match_eigenvector() {
        let params = params(0.0, 1.0, 0.5);
        let h = build_dipole_hamiltonian(&params, &Momentum::ZERO, 200).unwrap();
        let (_, v) = h.ground_state().unwrap();
        let s2 = crate::spectrum::bogoliubov_theta(&params)
            .unwrap()
            .sinh()
            .powi(2);
        // ⟨n⟩ = s², ⟨n²⟩ = 3s⁴ + 2s²
        let closed = 3.0 * s2 * s2 + 2.0 * s2 + s2 + 0.25;
        assert_relative_eq!(level_sq_expectation(&v), closed, max_relative = 1e-10);
    }

    #[test]
    fn planewave_ground_shift_matches_first_order() {
        let params = params(0.0, 1.0, 0.5).with_mass(1e4).unwrap();
        let dip = build_dipole_hamiltonian(&params, &Momentum::ZERO, 200).unwrap();
        let pw = build_planewave_hamiltonian(&params, &Momentum::ZERO, 200).unwrap();
        let (e0, v) = dip.ground_state().unwrap();
        let e1 = lowest_eigenvalues(&pw, 1).unwrap()[0];
        let recoil = 1.0 / (2.0 * 1e4);
        let first_order = recoil * level_sq_expectation(&v);
        let shift = e1 - e0;
        assert!(shift > 0.0 && shift <= first_order * (1.0 + 1e-9));
        assert!((shift - first_order).abs() <= 0.01 * first_order);
    }

    #[test]
    fn planewave_drift_slope() {
        let params = params(0.0, 1.0, 0.5).with_mass(1e4).unwrap();
        let shift = |pz: f64| {
            let p = Momentum::new(0.0, 0.0, pz);
            let a = lowest_eigenvalues(&build_dipole_hamiltonian(&params, &p, 128).unwrap(), 1)
                .unwrap()[0];
            let b = lowest_eigenvalues(&build_planewave_hamiltonian(&params, &p, 128).unwrap(), 1)
                .unwrap()[0];
            b - a
        };
        let h = 1e-2;
        let slope = (shift(h) - shift(-h)) / (2.0 * h);
        let (_, v) = build_dipole_hamiltonian(&params, &Momentum::ZERO, 128)
            .unwrap()
            .ground_state()
            .unwrap();
        let mean_level: f64 = v
            .iter()
            .enumerate()
            .map(|(n, c)| c.norm_sqr() * (n as f64 + 0.5))
            .sum();
        let expect = -(1.0 / 1e4) * mean_level;
        assert!(slope < 0.0);
        assert!((slope - expect).abs() <= 1e-3 * expect.abs());
    }
}
