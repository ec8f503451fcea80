//! Quasimode dispersion `Ω(k; ξ)` and its inverse wavenumber branches.
//!
//! Everything here is in reduced units: `x = k / k_p`, `y = Ω / ω_p`. In
//! these units the dispersion is
//!
//! ```text
//! y² = x² + 1 + q / x²,      q = ξ² / (1 + ξ²)²
//! ```
//!
//! which is a quadratic in `u = x²`. Its two roots give the `k⁺` and `k⁻`
//! branches; they are real above the minimum `Ω*`, complex conjugate-like
//! between `Ω̃` and `Ω*`, and purely imaginary at or below `Ω̃`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::principal_sqrt;
use crate::error::{require_non_negative, Error, Result};
use crate::units::{ModelParams, Polarization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Plus, Branch::Minus];

    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `Ω ≥ Ω*`: real wavenumbers.
    Traveling,
    /// `Ω̃ < Ω < Ω*`: wavenumbers with both real and imaginary parts.
    DecayingTraveling,
    /// `Ω ≤ Ω̃`: purely imaginary wavenumbers.
    Evanescent,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Traveling => "traveling",
            Regime::DecayingTraveling => "decaying_traveling",
            Regime::Evanescent => "evanescent",
        }
    }
}

/// A point on the real dispersion curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DispersionPoint {
    pub x: f64,
    pub y: f64,
    pub xi: f64,
}

impl DispersionPoint {
    pub fn at(x: f64, pol: Polarization) -> Result<Self> {
        Ok(DispersionPoint {
            x,
            y: omega_of_k(x, pol)?,
            xi: pol.xi(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexWavenumber {
    pub value: Complex64,
    pub branch: Branch,
    pub regime: Regime,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchPair {
    pub plus: ComplexWavenumber,
    pub minus: ComplexWavenumber,
}

impl BranchPair {
    pub fn get(&self, branch: Branch) -> &ComplexWavenumber {
        match branch {
            Branch::Plus => &self.plus,
            Branch::Minus => &self.minus,
        }
    }
}

/// Minimum of the dispersion and the modified plasma frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoints {
    /// `k* / k_p = √(ξ / (1 + ξ²))`.
    pub k_star: f64,
    /// `Ω* / ω_p = (1 + ξ) / √(1 + ξ²)`.
    pub omega_star: f64,
    /// `Ω̃ / ω_p = (1 − ξ) / √(1 + ξ²)`.
    pub omega_tilde: f64,
}

/// Reduced dispersion `y = √(x² + 1 + q/x²)`.
///
/// `x = 0` is only admissible for linear polarization, where it gives the
/// plasma edge `y = 1`.
pub fn omega_of_k(x: f64, pol: Polarization) -> Result<f64> {
    let x = require_non_negative("k", x)?;
    let q = pol.q();
    if x == 0.0 {
        return if q == 0.0 {
            Ok(1.0)
        } else {
            Err(Error::SingularAtZeroWavenumber { xi: pol.xi() })
        };
    }
    let x2 = x * x;
    Ok((x2 + 1.0 + q / x2).sqrt())
}

/// Dispersion in physical units: `Ω(k) = √(c²k² + ω_p²(1 + q ω_p² / c²k²))`.
pub fn omega_of_k_physical(k: f64, params: &ModelParams) -> Result<f64> {
    let k = require_non_negative("k", k)?;
    let wp = params.omega_p();
    let ck = params.c() * k;
    let q = params.polarization().q();
    if k == 0.0 {
        return if q == 0.0 || wp == 0.0 {
            Ok(wp)
        } else {
            Err(Error::SingularAtZeroWavenumber { xi: params.xi() })
        };
    }
    let wp2 = wp * wp;
    Ok((ck * ck + wp2 * (1.0 + q * wp2 / (ck * ck))).sqrt())
}

pub fn critical_points(pol: Polarization) -> CriticalPoints {
    let xi = pol.xi();
    let norm = (1.0 + xi * xi).sqrt();
    CriticalPoints {
        k_star: pol.sqrt_q().sqrt(),
        omega_star: (1.0 + xi) / norm,
        omega_tilde: (1.0 - xi) / norm,
    }
}

pub fn classify_regime(y: f64, pol: Polarization) -> Regime {
    classify_against(y, &critical_points(pol))
}

fn classify_against(y: f64, cp: &CriticalPoints) -> Regime {
    if y >= cp.omega_star {
        Regime::Traveling
    } else if y > cp.omega_tilde {
        Regime::DecayingTraveling
    } else {
        Regime::Evanescent
    }
}

/// Both wavenumber branches `x± = √((y² − 1 ± √((y² − 1)² − 4q)) / 2)`.
///
/// Principal square roots are used at both levels. The smaller-magnitude
/// root of the quadratic in `x²` is recovered from the product `x₊²x₋² = q`
/// so neither branch loses precision far from the band edge. At `y = Ω̃`,
/// where `Im x⁻` jumps sign, the value is the limit from above.
pub fn k_branches(y: f64, pol: Polarization) -> Result<BranchPair> {
    let y = require_non_negative("omega", y)?;
    let cp = critical_points(pol);
    let regime = classify_against(y, &cp);
    let q = pol.q();
    let s = y * y - 1.0;
    // (y² − Ω*²)(y² − Ω̃²) = s² − 4q, factored so its sign matches the regime.
    let disc =
        (y - cp.omega_star) * (y + cp.omega_star) * (y - cp.omega_tilde) * (y + cp.omega_tilde);

    let (plus, minus) = match regime {
        Regime::Traveling => {
            let u_plus = 0.5 * (s + disc.max(0.0).sqrt());
            let u_minus = if u_plus > 0.0 { q / u_plus } else { 0.0 };
            (
                Complex64::new(u_plus.sqrt(), 0.0),
                Complex64::new(u_minus.sqrt(), 0.0),
            )
        }
        Regime::DecayingTraveling => {
            let r = Complex64::new(0.0, (-disc).sqrt());
            let s = Complex64::new(s, 0.0);
            (principal_sqrt(0.5 * (s + r)), principal_sqrt(0.5 * (s - r)))
        }
        Regime::Evanescent if disc == 0.0 => {
            let im = (-0.5 * s).max(0.0).sqrt();
            (Complex64::new(0.0, im), Complex64::new(0.0, -im))
        }
        Regime::Evanescent => {
            let u_minus = 0.5 * (s - disc.sqrt());
            let u_plus = q / u_minus;
            (
                Complex64::new(0.0, (-u_plus).max(0.0).sqrt()),
                Complex64::new(0.0, (-u_minus).sqrt()),
            )
        }
    };

    Ok(BranchPair {
        plus: ComplexWavenumber {
            value: plus,
            branch: Branch::Plus,
            regime,
        },
        minus: ComplexWavenumber {
            value: minus,
            branch: Branch::Minus,
            regime,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pol(xi: f64) -> Polarization {
        Polarization::new(xi).unwrap()
    }

    #[test]
    fn omega_of_k_examples() {
        assert_eq!(omega_of_k(1.0, pol(1.0)).unwrap(), 1.5);
        assert_eq!(omega_of_k(0.0, pol(0.0)).unwrap(), 1.0);
        let y = omega_of_k(1e3, pol(0.5)).unwrap();
        assert_relative_eq!(y, 1_000.000_499_999_955, max_relative = 1e-15);
    }

    #[test]
    fn zero_wavenumber_is_singular_for_elliptic() {
        assert_eq!(
            omega_of_k(0.0, pol(0.3)),
            Err(Error::SingularAtZeroWavenumber { xi: 0.3 })
        );
        assert!(omega_of_k(-1.0, pol(0.0)).is_err());
    }

    #[test]
    fn critical_point_examples() {
        let cp = critical_points(pol(1.0));
        assert_relative_eq!(
            cp.k_star,
            std::f64::consts::FRAC_1_SQRT_2,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            cp.omega_star,
            std::f64::consts::SQRT_2,
            max_relative = 1e-15
        );
        assert_eq!(cp.omega_tilde, 0.0);

        let cp = critical_points(pol(0.0));
        assert_eq!((cp.k_star, cp.omega_star, cp.omega_tilde), (0.0, 1.0, 1.0));

        // mpmath, 40 digits
        let cp = critical_points(pol(0.5));
        assert_relative_eq!(cp.k_star, 0.632_455_532_033_675_9, max_relative = 1e-15);
        assert_relative_eq!(cp.omega_star, 1.341_640_786_499_873_8, max_relative = 1e-15);
        assert_relative_eq!(
            cp.omega_tilde,
            0.447_213_595_499_957_9,
            max_relative = 1e-15
        );
    }

    #[test]
    fn branches_at_cp_example() {
        let pair = k_branches(1.5, pol(1.0)).unwrap();
        assert_relative_eq!(pair.plus.value.re, 1.0, max_relative = 1e-15);
        assert_relative_eq!(pair.minus.value.re, 0.5, max_relative = 1e-15);
        assert_eq!(pair.plus.value.im, 0.0);
        assert_eq!(pair.minus.value.im, 0.0);
        assert_eq!(pair.plus.regime, Regime::Traveling);
    }

    #[test]
    fn cp_branches_tend_to_half_root_two_at_zero_frequency() {
        let pair = k_branches(1e-9, pol(1.0)).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((pair.plus.value.im - h).abs() < 1e-8);
        assert!((pair.minus.value.im + h).abs() < 1e-8);
        assert_eq!(pair.plus.regime, Regime::DecayingTraveling);
    }

    #[test]
    fn branches_at_modified_plasma_frequency() {
        let p = pol(0.5);
        let pair = k_branches(critical_points(p).omega_tilde, p).unwrap();
        let mag = (0.5f64 / 1.25).sqrt();
        assert_eq!(pair.plus.regime, Regime::Evanescent);
        assert_eq!(pair.plus.value.re, 0.0);
        assert_eq!(pair.minus.value.re, 0.0);
        assert_relative_eq!(pair.plus.value.im, mag, max_relative = 1e-14);
        // limit from above: the minus branch still carries the negative sign
        assert_relative_eq!(pair.minus.value.im, -mag, max_relative = 1e-14);
    }

    #[test]
    fn minus_branch_jumps_at_modified_plasma_frequency() {
        let p = pol(0.5);
        let wt = critical_points(p).omega_tilde;
        let above = k_branches(wt + 1e-9, p).unwrap().minus.value.im;
        let below = k_branches(wt - 1e-9, p).unwrap().minus.value.im;
        let mag = (0.5f64 / 1.25).sqrt();
        assert!((above + mag).abs() < 1e-4);
        assert!((below - mag).abs() < 1e-4);
    }

    #[test]
    fn regime_examples() {
        assert_eq!(classify_regime(2.0, pol(0.5)), Regime::Traveling);
        assert_eq!(classify_regime(1.0, pol(0.5)), Regime::DecayingTraveling);
        assert_eq!(classify_regime(0.3, pol(0.5)), Regime::Evanescent);
    }

    #[test]
    fn linear_polarization_reduces_to_bulk_plasmon() {
        for &y in &[1.0, 1.2, 2.0, 7.5] {
            let pair = k_branches(y, pol(0.0)).unwrap();
            assert_relative_eq!(
                pair.plus.value.re,
                (y * y - 1.0f64).sqrt(),
                max_relative = 1e-14
            );
            assert_eq!(pair.minus.value, Complex64::new(0.0, 0.0));
            if y > 0.0 {
                let back = (pair.plus.value.re.powi(2) + 1.0).sqrt();
                assert_relative_eq!(back, y, max_relative = 1e-14);
            }
        }
    }

    #[test]
    fn physical_units_reduce_to_light_line() {
        let omega = 3.0;
        let p = ModelParams::new(0.7, omega, 1e-8 * omega)
            .unwrap()
            .with_speed_of_light(2.0)
            .unwrap();
        let k = omega / 2.0;
        let w = omega_of_k_physical(k, &p).unwrap();
        assert!((w - 2.0 * k).abs() <= 1e-6 * 2.0 * k);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rel(a: f64, b: f64) -> f64 {
            (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
        }

        proptest! {
            #[test]
            fn traveling_branches_roundtrip(xi in 0.0f64..=1.0, t in 0.0f64..1.0) {
                let p = pol(xi);
                let y = critical_points(p).omega_star + t * 20.0;
                let pair = k_branches(y, p).unwrap();
                for b in [pair.plus, pair.minus] {
                    prop_assert_eq!(b.value.im, 0.0);
                    prop_assert_eq!(b.regime, Regime::Traveling);
                    if b.value.re > 0.0 {
                        prop_assert!(rel(omega_of_k(b.value.re, p).unwrap(), y) <= 1e-10);
                    }
                }
                let prod = pair.plus.value.re * pair.minus.value.re;
                prop_assert!((prod - p.sqrt_q()).abs() <= 1e-10 * p.sqrt_q().max(1e-300));
                let sum = pair.plus.value.re.powi(2) + pair.minus.value.re.powi(2);
                prop_assert!(rel(sum, y * y - 1.0) <= 1e-10 || (y * y - 1.0).abs() < 1e-14);
            }

            #[test]
            fn regime_matches_branch_structure(xi in 0.01f64..=1.0, y in 0.0f64..3.0) {
                let p = pol(xi);
                let pair = k_branches(y, p).unwrap();
                for b in [pair.plus, pair.minus] {
                    match b.regime {
                        Regime::Traveling => prop_assert_eq!(b.value.im, 0.0),
                        Regime::Evanescent => prop_assert_eq!(b.value.re, 0.0),
                        Regime::DecayingTraveling => {
                            prop_assert!(b.value.im != 0.0 && b.value.re > 0.0)
                        }
                    }
                    prop_assert!(b.value.re >= 0.0);
                }
            }

            #[test]
            fn squared_branches_solve_the_dispersion(xi in 0.0f64..=1.0, y in 0.01f64..5.0) {
                // x² + q/x² = y² − 1 for every branch, complex or not
                let p = pol(xi);
                let pair = k_branches(y, p).unwrap();
                for b in [pair.plus, pair.minus] {
                    let u = b.value * b.value;
                    if u.norm() > 1e-12 {
                        let lhs = u + p.q() / u;
                        prop_assert!((lhs - Complex64::new(y * y - 1.0, 0.0)).norm() <= 1e-10 * (1.0 + y * y));
                    }
                }
            }

            #[test]
            fn dispersion_minimum(xi in 0.01f64..=1.0, t in 0.001f64..0.999) {
                let p = pol(xi);
                let cp = critical_points(p);
                prop_assert!((omega_of_k(cp.k_star, p).unwrap() - cp.omega_star).abs() <= 1e-12);
                let below = cp.k_star * t;
                let above = cp.k_star / t;
                let below2 = cp.k_star * t * 0.99;
                let above2 = cp.k_star / (t * 0.99);
                prop_assert!(omega_of_k(below2, p).unwrap() > omega_of_k(below, p).unwrap());
                prop_assert!(omega_of_k(above2, p).unwrap() > omega_of_k(above, p).unwrap());
            }

            #[test]
            fn critical_point_ordering(xi in 0.0f64..=1.0) {
                let cp = critical_points(pol(xi));
                prop_assert!(cp.omega_tilde <= 1.0 && 1.0 <= cp.omega_star);
            }
        }
    }
}
