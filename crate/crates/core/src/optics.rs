//! Dielectric function, refractive index and normal-incidence reflectivity.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::principal_sqrt;
use crate::dispersion::{critical_points, Branch};
use crate::error::{require_positive, Error, Result};
use crate::units::Polarization;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OpticalResponse {
    pub zeta: Complex64,
    pub eta: Complex64,
    pub reflectivity: f64,
    pub branch: Branch,
}

impl OpticalResponse {
    pub fn at(y: f64, pol: Polarization, branch: Branch) -> Result<Self> {
        let zeta = dielectric(y, pol, branch)?;
        let eta = refractive_index(zeta);
        Ok(OpticalResponse {
            zeta,
            eta,
            reflectivity: reflectivity(eta)?,
            branch,
        })
    }
}

/// Relative permittivity `ζ± = ½[1 ± (1/y²)(√((1 − y²)² − 4q) ∓ 1)]`.
///
/// The two branches are the roots of `ζ² − (1 − 1/y²)ζ + q/y⁴ = 0`. When
/// they are real the larger one is taken from the closed form and the other
/// from the product `q/y⁴`, which avoids cancellation at high frequency.
pub fn dielectric(y: f64, pol: Polarization, branch: Branch) -> Result<Complex64> {
    let y = require_positive("omega", y)?;
    let y2 = y * y;
    let q = pol.q();
    let mean = 1.0 - 1.0 / y2;
    // (1 − y²)² − 4q, factored as in the wavenumber branches
    let cp = critical_points(pol);
    let disc =
        (y - cp.omega_star) * (y + cp.omega_star) * (y - cp.omega_tilde) * (y + cp.omega_tilde);
    let product = q / (y2 * y2);

    if disc < 0.0 {
        let spread = Complex64::new(0.0, (-disc).sqrt() / y2);
        let m = Complex64::new(mean, 0.0);
        return Ok(match branch {
            Branch::Plus => 0.5 * (m + spread),
            Branch::Minus => 0.5 * (m - spread),
        });
    }

    let spread = disc.sqrt() / y2;
    let (big, big_branch) = if mean >= 0.0 {
        (0.5 * (mean + spread), Branch::Plus)
    } else {
        (0.5 * (mean - spread), Branch::Minus)
    };
    let value = if branch == big_branch {
        big
    } else if big == 0.0 {
        0.0
    } else {
        product / big
    };
    Ok(Complex64::new(value, 0.0))
}

/// `η = √ζ` on the principal branch.
pub fn refractive_index(zeta: Complex64) -> Complex64 {
    principal_sqrt(zeta)
}

/// `R = |(η − 1)/(η + 1)|²`.
pub fn reflectivity(eta: Complex64) -> Result<f64> {
    let den = eta + 1.0;
    if den == Complex64::new(0.0, 0.0) {
        return Err(Error::ReflectivityPole);
    }
    Ok(((eta - 1.0) / den).norm_sqr())
}
