//! Range-performance models for target acquisition by electro-optical and
//! thermal sensors.
//!
//! The crate is organised along the modelling chain:
//!
//! - [`sdt`]: Gaussian signal-detection relations (threshold, false-alarm
//!   probability, detection probability, required SNR).
//! - [`photometry`]: visual-band detection for the eye, binoculars and image
//!   intensifiers from a photon-budget SNR.
//! - [`thermal`]: thermal-imager recognition via an exponential MRTD curve
//!   and the target transform probability function.
//! - [`fit`]: log-space least-squares fitting of MRTD measurements.
//! - [`io`]: scenario files, CSV/JSON/SVG output and the bundled scenarios.

pub mod error;
pub mod fit;
pub mod io;
pub mod photometry;
pub mod sdt;
pub mod sweep;
pub mod thermal;

#[cfg(test)]
#[path = "../tests/common/oracle.rs"]
mod oracle;

pub use error::{FitError, ModelError, Result};
pub use fit::{fit_mrtd, predict, FitReport, MrtdObservation};
pub use photometry::{PhotometricState, VisualScenario};
pub use sdt::{
    normal_cdf, normal_quantile, normal_sf, pd_from_snr, snr_required, threshold_from_pfa,
    SdtPoint, SnrRequirement,
};
pub use sweep::{RangeCrossing, Sample, SweepResult};
pub use thermal::{MrtdCurve, ThermalScenario, ThermalState};
