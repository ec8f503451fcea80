//! Parameter model and unit conventions.
//!
//! Dimensionless quantities (dispersion, optics, velocities) are evaluated in
//! reduced units: frequencies in units of the plasma frequency `ω_p`,
//! wavenumbers in units of `k_p = ω_p / c` and velocities in units of `c`.
//! Dimensionful quantities (energies, forces) use atomic units with
//! `ħ = m = e = 1` unless overridden, and a configurable speed of light.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_non_negative, require_positive, Error, Result};

/// Speed of light in atomic units (inverse fine-structure constant).
pub const C_ATOMIC: f64 = 137.035999;

/// Field polarization parameter `ξ ∈ [0, 1]`.
///
/// `ξ = 0` is linear polarization, `ξ = 1` circular, anything in between
/// elliptic. Values outside the interval are rejected, never clamped.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Polarization(f64);

impl Polarization {
    pub const LINEAR: Polarization = Polarization(0.0);
    pub const CIRCULAR: Polarization = Polarization(1.0);

    pub fn new(xi: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&xi) {
            Ok(Polarization(xi))
        } else {
            Err(Error::InvalidPolarization(xi))
        }
    }

    #[inline]
    pub fn xi(self) -> f64 {
        self.0
    }

    /// `q = ξ² / (1 + ξ²)²`, the weight of the singular `1/k²` term.
    #[inline]
    pub fn q(self) -> f64 {
        let xi2 = self.0 * self.0;
        xi2 / ((1.0 + xi2) * (1.0 + xi2))
    }

    /// `√q = ξ / (1 + ξ²)`.
    #[inline]
    pub fn sqrt_q(self) -> f64 {
        self.0 / (1.0 + self.0 * self.0)
    }

    /// `κ = (1 + ξ) / √(1 + ξ²)`, ranging over `[1, √2]`.
    #[inline]
    pub fn kappa(self) -> f64 {
        (1.0 + self.0) / (1.0 + self.0 * self.0).sqrt()
    }

    /// `(1 − ξ²) / (1 + ξ²)`: the squared norm `ℰ·ℰ` of the polarization
    /// vector, which weights the `a²` and `a†²` terms.
    #[inline]
    pub fn self_overlap(self) -> f64 {
        let xi2 = self.0 * self.0;
        (1.0 - xi2) / (1.0 + xi2)
    }

    pub fn is_linear(self) -> bool {
        self.0 == 0.0
    }
}

impl TryFrom<f64> for Polarization {
    type Error = Error;

    fn try_from(xi: f64) -> Result<Self> {
        Polarization::new(xi)
    }
}

impl From<Polarization> for f64 {
    fn from(p: Polarization) -> f64 {
        p.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    /// `ħ = m = c = 1`.
    Natural,
    /// Hartree atomic units, `ħ = m = e = 1`, `c ≈ 137.036`.
    Atomic,
}

impl UnitSystem {
    pub fn speed_of_light(self) -> f64 {
        match self {
            UnitSystem::Natural => 1.0,
            UnitSystem::Atomic => C_ATOMIC,
        }
    }
}

/// Physical parameters of the charge–mode system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    polarization: Polarization,
    omega: f64,
    omega_p: f64,
    mass: f64,
    hbar: f64,
    c: f64,
}

impl ModelParams {
    /// Natural-unit parameters (`ħ = m = c = 1`).
    pub fn new(xi: f64, omega: f64, omega_p: f64) -> Result<Self> {
        Self::with_units(xi, omega, omega_p, UnitSystem::Natural)
    }

    pub fn with_units(xi: f64, omega: f64, omega_p: f64, units: UnitSystem) -> Result<Self> {
        Ok(ModelParams {
            polarization: Polarization::new(xi)?,
            omega: require_non_negative("omega", omega)?,
            omega_p: require_non_negative("omega_p", omega_p)?,
            mass: 1.0,
            hbar: 1.0,
            c: units.speed_of_light(),
        })
    }

    /// Parameters with `ω_p` derived from a charge smeared over a volume.
    pub fn from_volume(xi: f64, omega: f64, charge: f64, mass: f64, volume: f64) -> Result<Self> {
        let omega_p = plasma_frequency_from_volume(charge, mass, volume)?;
        Self::new(xi, omega, omega_p)?.with_mass(mass)
    }

    pub fn with_mass(mut self, mass: f64) -> Result<Self> {
        self.mass = require_positive("mass", mass)?;
        Ok(self)
    }

    pub fn with_hbar(mut self, hbar: f64) -> Result<Self> {
        self.hbar = require_positive("hbar", hbar)?;
        Ok(self)
    }

    pub fn with_speed_of_light(mut self, c: f64) -> Result<Self> {
        self.c = require_positive("c", c)?;
        Ok(self)
    }

    pub fn with_omega(mut self, omega: f64) -> Result<Self> {
        self.omega = require_non_negative("omega", omega)?;
        Ok(self)
    }

    pub fn with_omega_p(mut self, omega_p: f64) -> Result<Self> {
        self.omega_p = require_non_negative("omega_p", omega_p)?;
        Ok(self)
    }

    pub fn polarization(&self) -> Polarization {
        self.polarization
    }

    pub fn xi(&self) -> f64 {
        self.polarization.xi()
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn omega_p(&self) -> f64 {
        self.omega_p
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Field wavenumber `k = ω / c` of the free mode.
    pub fn field_wavenumber(&self) -> f64 {
        self.omega / self.c
    }

    pub fn derived(&self) -> Result<DerivedConstants> {
        derived_constants(self)
    }
}

/// Scalars derived from [`ModelParams`] that recur across modules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedConstants {
    /// Plasma wavenumber `ω_p / c`.
    pub k_p: f64,
    pub q: f64,
    pub kappa: f64,
    /// Linear coupling `eα/(mc) = √(ħω_p² / 2mω)`.
    pub g: f64,
    /// Quadratic coefficient `e²α²/(mc²) = ħω_p² / 2ω`.
    pub quad: f64,
}

pub fn derived_constants(p: &ModelParams) -> Result<DerivedConstants> {
    let omega = require_positive("omega", p.omega)?;
    let quad = p.hbar * p.omega_p * p.omega_p / (2.0 * omega);
    Ok(DerivedConstants {
        k_p: p.omega_p / p.c,
        q: p.polarization.q(),
        kappa: p.polarization.kappa(),
        g: (quad / p.mass).sqrt(),
        quad,
    })
}

/// `ω_p = √(4πe² / mV)` for a charge `e` of mass `m` in volume `V`.
pub fn plasma_frequency_from_volume(charge: f64, mass: f64, volume: f64) -> Result<f64> {
    let charge = require_non_negative("charge", charge.abs())?;
    let mass = require_positive("mass", mass)?;
    let volume = require_positive("volume", volume)?;
    Ok((4.0 * PI * charge * charge / (mass * volume)).sqrt())
}
