use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polarization parameter xi = {0} is outside [0, 1]")]
    InvalidPolarization(f64),

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: f64 },

    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("dispersion is singular at k = 0 for xi = {xi} > 0")]
    SingularAtZeroWavenumber { xi: f64 },

    #[error("{quantity} diverges at omega = 0 for xi = {xi} > 0")]
    DivergentAtZeroFrequency { quantity: &'static str, xi: f64 },

    #[error("no backward superluminal group velocity exists for linear polarization")]
    NoBackwardSuperluminal,

    #[error("reflectivity has a pole at refractive index -1")]
    ReflectivityPole,

    #[error("Fock cutoff {cutoff} is below the minimum of {min}")]
    CutoffTooSmall { cutoff: usize, min: usize },

    #[error("requested {count} levels but cutoff {cutoff} only supports {max}")]
    TooManyLevels {
        count: usize,
        cutoff: usize,
        max: usize,
    },

    #[error("eigensolver failed to converge: {0}")]
    EigenSolver(String),
}

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        Err(Error::NonFinite { name, value })
    } else if value <= 0.0 {
        Err(Error::NonPositive { name, value })
    } else {
        Ok(value)
    }
}

pub(crate) fn require_non_negative(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        Err(Error::NonFinite { name, value })
    } else if value < 0.0 {
        Err(Error::Negative { name, value })
    } else {
        Ok(value)
    }
}
