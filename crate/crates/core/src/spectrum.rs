//! Exact energy levels of the diagonalized charge–mode Hamiltonian.
//!
//! After a Bogoliubov rotation (angle `θ`) removes the `a²`, `a†²` terms and
//! a displacement `σ` removes the terms linear in `a`, `a†`, the Hamiltonian
//! becomes a free particle plus one oscillator of frequency `Ω`:
//!
//! ```text
//! E(p, n) = p²/2m + ħΩ (n + ½ − |σ|²)
//! ```
//!
//! For `N` charges the squared charge is replaced by `Ne²` wherever it
//! appears squared (so `ω_p² → Nω_p²`), while the linear coupling keeps a
//! single `e` and multiplies the summed momentum.

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::units::{ModelParams, Polarization};

/// Momentum in the polarization frame, atomic units.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Momentum {
    /// Along `Re u`, the polarization major axis.
    pub major: f64,
    /// Along `Im u`, the minor axis.
    pub minor: f64,
    /// Along the propagation axis.
    pub perp: f64,
}

impl Momentum {
    pub const ZERO: Momentum = Momentum {
        major: 0.0,
        minor: 0.0,
        perp: 0.0,
    };

    pub fn new(major: f64, minor: f64, perp: f64) -> Self {
        Momentum { major, minor, perp }
    }

    pub fn norm_sq(&self) -> f64 {
        self.major * self.major + self.minor * self.minor + self.perp * self.perp
    }

    pub fn in_plane_sq(&self) -> f64 {
        self.major * self.major + self.minor * self.minor
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub n: u32,
    pub theta: f64,
    pub sigma_sq: f64,
    pub energy: f64,
    /// Effective oscillator frequency `Ω`.
    pub omega_eff: f64,
}

/// Oscillator coefficients for a given charge count.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ModeCoupling {
    pub pol: Polarization,
    pub hbar: f64,
    pub omega: f64,
    /// `ω_p²`, already scaled by the charge count.
    pub omega_p_sq: f64,
    /// `eα/(mc)` for one charge.
    pub g: f64,
    /// `Ne²α²/(mc²)`.
    pub quad: f64,
}

impl ModeCoupling {
    pub fn new(params: &ModelParams, charges: u32) -> Result<Self> {
        let omega = require_positive("omega", params.omega())?;
        let single = params.derived()?;
        let n = charges.max(1) as f64;
        Ok(ModeCoupling {
            pol: params.polarization(),
            hbar: params.hbar(),
            omega,
            omega_p_sq: n * params.omega_p() * params.omega_p(),
            g: single.g,
            quad: n * single.quad,
        })
    }

    /// `ħω + e²α²/mc²`, the coefficient of `a†a + ½`.
    pub fn number_coefficient(&self) -> f64 {
        self.hbar * self.omega + self.quad
    }

    /// Coefficient of `a² + a†²`.
    pub fn pair_coefficient(&self) -> f64 {
        0.5 * self.quad * self.pol.self_overlap()
    }

    /// `(A + 2C, A − 2C)` for number coefficient `A` and pair coefficient
    /// `C`, formed without cancellation: `1 ± r = 2/(1 + ξ²), 2ξ²/(1 + ξ²)`.
    fn normal_mode_split(&self) -> (f64, f64) {
        let xi2 = self.pol.xi() * self.pol.xi();
        let hw = self.hbar * self.omega;
        let share = self.quad * 2.0 / (1.0 + xi2);
        (hw + share, hw + share * xi2)
    }

    /// `θ = ¼ ln((A + 2C)/(A − 2C))`, i.e. `tanh 2θ = 2C/A`.
    pub fn theta(&self) -> f64 {
        let (sum, diff) = self.normal_mode_split();
        0.25 * (sum / diff).ln()
    }

    pub fn omega_eff(&self) -> f64 {
        let w2 = self.omega * self.omega;
        (w2 + self.omega_p_sq * (1.0 + self.pol.q() * self.omega_p_sq / w2)).sqrt()
    }

    /// `|σ|² = (cosh 2θ / A)² g²/(1 + ξ²) (P₁² e^{−2θ} + ξ² P₂² e^{2θ})`,
    /// evaluated as `g²/(1 + ξ²) (P₁²/(A + 2C) + ξ²P₂²/(A − 2C)) / ħΩ` so it
    /// stays finite when `θ` grows without bound as `ω → 0`.
    pub fn sigma_sq(&self, p: &Momentum) -> f64 {
        let xi = self.pol.xi();
        let (sum, diff) = self.normal_mode_split();
        let hbar_omega = (sum * diff).sqrt();
        let weight = self.g * self.g / (1.0 + xi * xi);
        weight * (p.major * p.major / sum + xi * xi * p.minor * p.minor / diff) / hbar_omega
    }
}

/// Bogoliubov angle from `tanh 2θ = quad/(ħω + quad) · (1 − ξ²)/(1 + ξ²)`.
pub fn bogoliubov_theta(params: &ModelParams) -> Result<f64> {
    Ok(ModeCoupling::new(params, 1)?.theta())
}

/// `Ω = √(ω² + ω_p²(1 + q ω_p²/ω²))`.
///
/// At `ω = 0` this is finite (`ω_p`) only for linear polarization.
pub fn effective_frequency(params: &ModelParams) -> Result<f64> {
    if params.omega() == 0.0 {
        return if params.polarization().is_linear() || params.omega_p() == 0.0 {
            Ok(params.omega_p())
        } else {
            Err(Error::DivergentAtZeroFrequency {
                quantity: "effective frequency",
                xi: params.xi(),
            })
        };
    }
    Ok(ModeCoupling::new(params, 1)?.omega_eff())
}

pub fn displacement_sigma_sq(params: &ModelParams, p: &Momentum) -> Result<f64> {
    Ok(ModeCoupling::new(params, 1)?.sigma_sq(p))
}

/// Level `n` for `charges` identical charges with summed momentum `p`.
///
/// The kinetic term is the centre-of-mass energy `p²/(2Nm)`, i.e. the
/// momentum is taken as shared equally between the charges.
pub fn energy_level(
    params: &ModelParams,
    p: &Momentum,
    n: u32,
    charges: u32,
) -> Result<EnergyLevel> {
    if charges == 0 {
        return Err(Error::NonPositive {
            name: "charges",
            value: 0.0,
        });
    }
    let mode = ModeCoupling::new(params, charges)?;
    let theta = mode.theta();
    let sigma_sq = mode.sigma_sq(p);
    let omega_eff = mode.omega_eff();
    let kinetic = p.norm_sq() / (2.0 * charges as f64 * params.mass());
    let energy = kinetic + params.hbar() * omega_eff * (n as f64 + 0.5 - sigma_sq);
    Ok(EnergyLevel {
        n,
        theta,
        sigma_sq,
        energy,
        omega_eff,
    })
}

/// Closed-form circular-polarization energy
/// `(2p²ω² + p_z²ω_p²) / 2m(2ω² + ω_p²) + ħω(1 + ω_p²/2ω²)(n + ½)`.
pub fn energy_cp(params: &ModelParams, p: &Momentum, n: u32) -> Result<f64> {
    let w = require_positive("omega", params.omega())?;
    let (w2, wp2, m) = (w * w, params.omega_p() * params.omega_p(), params.mass());
    let kinetic = (2.0 * p.norm_sq() * w2 + p.perp * p.perp * wp2) / (2.0 * m * (2.0 * w2 + wp2));
    Ok(kinetic + params.hbar() * w * (1.0 + wp2 / (2.0 * w2)) * (n as f64 + 0.5))
}

/// Closed-form linear-polarization energy
/// `p²/2m (1 − ω_p² cos²φ / (ω² + ω_p²)) + ħ√(ω² + ω_p²)(n + ½)`,
/// with `φ` the angle between `p` and the polarization vector.
///
/// Finite at `ω = 0`.
pub fn energy_lp(params: &ModelParams, p_magnitude: f64, phi: f64, n: u32) -> Result<f64> {
    let (w2, wp2) = (
        params.omega() * params.omega(),
        params.omega_p() * params.omega_p(),
    );
    let cos2 = phi.cos().powi(2);
    let total = w2 + wp2;
    let screening = if total > 0.0 {
        1.0 - wp2 * cos2 / total
    } else {
        1.0
    };
    let kinetic = p_magnitude * p_magnitude / (2.0 * params.mass()) * screening;
    Ok(kinetic + params.hbar() * total.sqrt() * (n as f64 + 0.5))
}

/// Minimum over `ω` of the zero-point energy `ħΩ(ω)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroPointMinimum {
    /// `ω* = ω_p √(ξ/(1 + ξ²))`.
    pub omega_min: f64,
    /// `E* = κħω_p/2`.
    pub energy: f64,
}

pub fn zero_point_minimum(pol: Polarization, omega_p: f64, hbar: f64) -> Result<ZeroPointMinimum> {
    let omega_p = require_positive("omega_p", omega_p)?;
    let hbar = require_positive("hbar", hbar)?;
    Ok(ZeroPointMinimum {
        omega_min: omega_p * pol.sqrt_q().sqrt(),
        energy: 0.5 * pol.kappa() * hbar * omega_p,
    })
}
