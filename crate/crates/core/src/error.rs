use thiserror::Error;

/// Failures raised by the model functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    /// An argument fell outside the domain where the model is defined.
    #[error("{name} = {value} is out of domain: {requirement}")]
    Domain {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
    /// Target and background are both black; contrast is undefined.
    #[error("degenerate scene: target and background luminance are both zero")]
    DegenerateScene,
    /// A range grid with no samples.
    #[error("empty range grid: from {start} km to {end} km in steps of {step} km")]
    EmptyGrid { start: f64, end: f64, step: f64 },
    #[error("MRTD fit failed: {0}")]
    Fit(#[from] FitError),
}

impl ModelError {
    pub(crate) fn domain(name: &'static str, value: f64, requirement: &'static str) -> Self {
        ModelError::Domain {
            name,
            value,
            requirement,
        }
    }
}

/// Why a set of MRTD observations could not be fitted.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FitError {
    #[error("need at least 3 observations, got {0}")]
    TooFewPoints(usize),
    #[error("observation {index} has non-positive MRTD {value}")]
    NonPositiveMrtd { index: usize, value: f64 },
    #[error("observation {index} has invalid spatial frequency {value}")]
    InvalidFrequency { index: usize, value: f64 },
    #[error("all observations share the same spatial frequency")]
    NoFrequencySpread,
}

pub type Result<T, E = ModelError> = std::result::Result<T, E>;

/// Checks `value` is finite and `> 0`.
pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(ModelError::domain(name, value, "must be finite and > 0"))
    }
}

/// Checks `value` is finite and `>= 0`.
pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(ModelError::domain(name, value, "must be finite and >= 0"))
    }
}

/// Checks `value` lies strictly inside (0, 1).
pub(crate) fn open_probability(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value < 1.0 {
        Ok(value)
    } else {
        Err(ModelError::domain(
            name,
            value,
            "must lie strictly between 0 and 1",
        ))
    }
}
