//! Force between two parallel plates from the single-mode zero-point energy.
//!
//! The charge is smeared over the slab `V = A·d` between the plates, so the
//! plasma frequency `ω_p = 2√π e / √(m A d)` carries all of the distance
//! dependence. The force is `F = −∂E/∂d` of the oscillator energy
//! `ħΩ(n + ½)`; it is repulsive.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::units::Polarization;

/// Charge, mass and `ħ` of the particles, atomic units by default.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChargeUnits {
    pub charge: f64,
    pub mass: f64,
    pub hbar: f64,
}

impl Default for ChargeUnits {
    fn default() -> Self {
        ChargeUnits::ATOMIC
    }
}

impl ChargeUnits {
    pub const ATOMIC: ChargeUnits = ChargeUnits {
        charge: 1.0,
        mass: 1.0,
        hbar: 1.0,
    };

    pub fn new(charge: f64, mass: f64, hbar: f64) -> Result<Self> {
        if !charge.is_finite() {
            return Err(Error::NonFinite {
                name: "charge",
                value: charge,
            });
        }
        Ok(ChargeUnits {
            charge: charge.abs(),
            mass: require_positive("mass", mass)?,
            hbar: require_positive("hbar", hbar)?,
        })
    }

    /// `R_B = ħ² / (m e²)`; infinite for a neutral particle.
    pub fn bohr_radius(&self) -> f64 {
        self.hbar * self.hbar / (self.mass * self.charge * self.charge)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlateGeometry {
    pub separation: f64,
    pub area: f64,
    pub charges: u32,
    pub photons: u32,
}

impl PlateGeometry {
    pub fn new(separation: f64, area: f64, charges: u32, photons: u32) -> Result<Self> {
        Ok(PlateGeometry {
            separation: require_positive("separation", separation)?,
            area: require_positive("area", area)?,
            charges,
            photons,
        })
    }

    pub fn volume(&self) -> f64 {
        self.area * self.separation
    }

    pub fn with_separation(self, separation: f64) -> Result<Self> {
        PlateGeometry::new(separation, self.area, self.charges, self.photons)
    }

    fn level_factor(&self) -> f64 {
        2.0 * self.photons as f64 + 1.0
    }
}

/// How `ω_p` responds when the plate separation changes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum ScalingMode {
    /// `ω_p(d)` is recomputed at every separation: `F* ∝ d^{-3/2}`.
    RecomputeOmegaP,
    /// `ω_p` is held at a reference value: `F* ∝ d^{-1}`.
    FrozenOmegaP { omega_p: f64 },
}

impl ScalingMode {
    pub fn frozen_at(geometry: &PlateGeometry, units: &ChargeUnits) -> Self {
        ScalingMode::FrozenOmegaP {
            omega_p: plasma_frequency_plates(geometry, units),
        }
    }
}

/// `ω_p = 2√π e √N / √(m A d)`.
pub fn plasma_frequency_plates(geometry: &PlateGeometry, units: &ChargeUnits) -> f64 {
    let n = geometry.charges as f64;
    2.0 * PI.sqrt() * units.charge * n.sqrt()
        / (units.mass * geometry.area * geometry.separation).sqrt()
}

/// Frequency-dependent force
/// `F = ħω_p(1 + 2qω_p²/ω²) / (4√(ω²/ω_p² + 1 + qω_p²/ω²)) / d`,
/// multiplied by `2n + 1` for `n` photons.
pub fn force_general(
    omega: f64,
    geometry: &PlateGeometry,
    units: &ChargeUnits,
    pol: Polarization,
) -> Result<f64> {
    if omega.is_nan() || omega < 0.0 {
        return Err(Error::Negative {
            name: "omega",
            value: omega,
        });
    }
    let wp = plasma_frequency_plates(geometry, units);
    force_with_omega_p(omega, wp, geometry, units, pol)
}

fn force_with_omega_p(
    omega: f64,
    wp: f64,
    geometry: &PlateGeometry,
    units: &ChargeUnits,
    pol: Polarization,
) -> Result<f64> {
    if wp == 0.0 {
        return Ok(0.0);
    }
    let q = pol.q();
    let scale = units.hbar * wp / (4.0 * geometry.separation) * geometry.level_factor();
    if omega == 0.0 {
        return if q == 0.0 {
            Ok(scale)
        } else {
            Err(Error::DivergentAtZeroFrequency {
                quantity: "plate force",
                xi: pol.xi(),
            })
        };
    }
    let ratio = wp * wp / (omega * omega);
    Ok(scale * (1.0 + 2.0 * q * ratio) / (1.0 / ratio + 1.0 + q * ratio).sqrt())
}

/// Force at the zero-point minimum, `F* = (κ/4) ħω_p(d, A) / d · (2n + 1)`.
pub fn force_at_minimum(geometry: &PlateGeometry, units: &ChargeUnits, pol: Polarization) -> f64 {
    force_at_minimum_scaled(geometry, units, pol, ScalingMode::RecomputeOmegaP)
}

pub fn force_at_minimum_scaled(
    geometry: &PlateGeometry,
    units: &ChargeUnits,
    pol: Polarization,
    mode: ScalingMode,
) -> f64 {
    let wp = match mode {
        ScalingMode::RecomputeOmegaP => plasma_frequency_plates(geometry, units),
        ScalingMode::FrozenOmegaP { omega_p } => omega_p,
    };
    0.25 * pol.kappa() * units.hbar * wp / geometry.separation * geometry.level_factor()
}

/// The same force written through the Bohr radius,
/// `F* = κ √(πR_B/A) N e² / d^{3/2} (½ + n)`.
///
/// `R_B` is evaluated with the total squared charge `Ne²`, the same
/// substitution that scales `ω_p²` by `N`.
pub fn force_at_minimum_bohr(
    geometry: &PlateGeometry,
    units: &ChargeUnits,
    pol: Polarization,
) -> f64 {
    let ne2 = geometry.charges as f64 * units.charge * units.charge;
    if ne2 == 0.0 {
        return 0.0;
    }
    let bohr = units.hbar * units.hbar / (units.mass * ne2);
    pol.kappa() * (PI * bohr / geometry.area).sqrt() * ne2 / geometry.separation.powf(1.5)
        * (0.5 + geometry.photons as f64)
}

/// Energy at the zero-point minimum for the given geometry, `κħω_p(n + ½)`.
pub fn minimum_energy(geometry: &PlateGeometry, units: &ChargeUnits, pol: Polarization) -> f64 {
    pol.kappa()
        * units.hbar
        * plasma_frequency_plates(geometry, units)
        * (geometry.photons as f64 + 0.5)
}
