//! Exactly solvable model of a charged particle coupled to one quantized,
//! elliptically polarized field mode.
//!
//! The crate covers the quasimode dispersion and its complex wavenumber
//! branches, plasma optics, phase and group velocities, the diagonalized
//! energy spectrum, the zero-point plate force, and a truncated Fock-space
//! diagonalization that checks the analytic spectrum numerically.

mod complex;
pub mod dispersion;
pub mod error;
pub mod fock;
pub mod kinematics;
pub mod optics;
pub mod plate_force;
pub mod spectrum;
pub mod units;

pub use complex::principal_sqrt;
pub use dispersion::{Branch, BranchPair, ComplexWavenumber, CriticalPoints, Regime};
pub use error::{Error, Result};
pub use fock::{FockHamiltonian, VerificationReport, VerifyConfig};
pub use optics::OpticalResponse;
pub use plate_force::{ChargeUnits, PlateGeometry, ScalingMode};
pub use spectrum::{EnergyLevel, Momentum};
pub use units::{DerivedConstants, ModelParams, Polarization, UnitSystem};
