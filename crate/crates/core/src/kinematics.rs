//! Phase and group velocities of the quasimode, in units of `c`.

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::units::Polarization;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VelocityPoint {
    pub x: f64,
    pub v_ph: f64,
    pub v_g: f64,
}

impl VelocityPoint {
    pub fn at(x: f64, pol: Polarization) -> Result<Self> {
        Ok(VelocityPoint {
            x,
            v_ph: phase_velocity(x, pol)?,
            v_g: group_velocity(x, pol)?,
        })
    }
}

/// `v_ph = √(1 + 1/x² + q/x⁴)`; never below 1.
pub fn phase_velocity(x: f64, pol: Polarization) -> Result<f64> {
    let x = require_positive("k", x)?;
    let inv2 = 1.0 / (x * x);
    Ok((1.0 + inv2 + pol.q() * inv2 * inv2).sqrt())
}

/// `v_g = dΩ/dk = (1 − q/x⁴) / √(1 + 1/x² + q/x⁴)`.
///
/// Negative below `k*` for any non-linear polarization.
pub fn group_velocity(x: f64, pol: Polarization) -> Result<f64> {
    let x = require_positive("k", x)?;
    let inv2 = 1.0 / (x * x);
    let q_term = pol.q() * inv2 * inv2;
    Ok((1.0 - q_term) / (1.0 + inv2 + q_term).sqrt())
}

/// Wavenumber below which the group velocity is backward and faster than
/// light (`v_g < −c`):
///
/// ```text
/// k / k_p = ξ^{2/3} √(1 − ξ^{2/3} + ξ^{4/3}) / (1 + ξ²)
/// ```
pub fn superluminal_backward_threshold(pol: Polarization) -> Result<f64> {
    let xi = pol.xi();
    if xi == 0.0 {
        return Err(Error::NoBackwardSuperluminal);
    }
    let c = xi.cbrt();
    let c2 = c * c;
    Ok(c2 * (1.0 - c2 + c2 * c2).sqrt() / (1.0 + xi * xi))
}
