//! Visual-band detection for the unaided eye, binoculars and image
//! intensifiers.
//!
//! The chain for one range `R`:
//!
//! 1. luminance of target and background, `L = ρ·I/π`, their contrast
//!    `C = (Lt − Lb)/(Lt + Lb)` and the range-attenuated contrast
//!    `C′ = C·e^(−AC·R)`;
//! 2. angular subtense of the target in arcminutes;
//! 3. photon-limited SNR
//!    `k = √(2.66e-11 · Lm² · C′² · a² · θ · P · r² · τ)` and from it the
//!    detection probability at the scenario's false-alarm rate.
//!
//! Unit conventions: range in km, target area in m², aperture radius in mm,
//! integration time in s, photon intensity in photons/(lumen·s). The subtense
//! uses `√area` as the target's characteristic size and converts range to
//! metres. The mean luminance `Lm` is the unattenuated `(Lt + Lb)/2`.

use serde::{Deserialize, Serialize};

use crate::error::{non_negative, open_probability, positive, ModelError, Result};
use crate::sdt::pd_from_snr;
use crate::sweep::{find_crossing, range_grid, RangeCrossing, SweepResult};

/// Photon-noise SNR constant, applied to the unit conventions above.
pub const SNR_CONSTANT: f64 = 2.66e-11;

/// Arcminutes per radian, with the 57.3 deg/rad rounding used by the model.
pub const ARCMIN_PER_RADIAN: f64 = 57.3 * 60.0;

/// Parameters of one visual detection scenario.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VisualScenario {
    /// Scene illumination, lux.
    pub illumination: f64,
    /// Target area presented to the sensor, m².
    pub target_area: f64,
    pub target_reflectance: f64,
    pub background_reflectance: f64,
    /// Entrance pupil or objective radius, mm.
    pub aperture_radius: f64,
    /// Overall detector efficiency of the viewing system (enters the SNR once).
    pub quantum_efficiency: f64,
    /// Eye or detector integration time, s.
    pub integration_time: f64,
    /// Photons per lumen per second.
    pub photon_intensity: f64,
    /// False-alarm probability.
    pub pfa: f64,
    /// Atmospheric attenuation coefficient, 1/km.
    pub attenuation: f64,
}

impl VisualScenario {
    pub fn validate(&self) -> Result<()> {
        positive("illumination", self.illumination)?;
        positive("target_area", self.target_area)?;
        reflectance("target_reflectance", self.target_reflectance)?;
        reflectance("background_reflectance", self.background_reflectance)?;
        positive("aperture_radius", self.aperture_radius)?;
        positive("quantum_efficiency", self.quantum_efficiency)?;
        positive("integration_time", self.integration_time)?;
        positive("photon_intensity", self.photon_intensity)?;
        open_probability("pfa", self.pfa)?;
        positive("attenuation", self.attenuation)?;
        Ok(())
    }
}

fn reflectance(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value <= 1.0 {
        Ok(value)
    } else {
        Err(ModelError::domain(name, value, "must lie in (0, 1]"))
    }
}

/// Intermediate photometric quantities at one range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhotometricState {
    /// cd/m²
    pub target_luminance: f64,
    /// cd/m²
    pub background_luminance: f64,
    /// cd/m²
    pub mean_luminance: f64,
    pub inherent_contrast: f64,
    pub apparent_contrast: f64,
    pub subtense_arcmin: f64,
    pub snr: f64,
}

/// Luminance of a diffuse surface, `reflectance · illumination / π` (cd/m²).
pub fn luminance(reflectance: f64, illumination: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&reflectance) {
        return Err(ModelError::domain(
            "reflectance",
            reflectance,
            "must lie in [0, 1]",
        ));
    }
    non_negative("illumination", illumination)?;
    Ok(reflectance * illumination / std::f64::consts::PI)
}

/// Weber-style contrast `(Lt − Lb)/(Lt + Lb)`.
pub fn contrast(l_target: f64, l_background: f64) -> Result<f64> {
    non_negative("l_target", l_target)?;
    non_negative("l_background", l_background)?;
    let sum = l_target + l_background;
    if sum == 0.0 {
        return Err(ModelError::DegenerateScene);
    }
    Ok((l_target - l_background) / sum)
}

/// Contrast seen through `range` km of atmosphere, `c·e^(−attenuation·range)`.
pub fn apparent_contrast(c: f64, attenuation: f64, range: f64) -> Result<f64> {
    non_negative("attenuation", attenuation)?;
    non_negative("range", range)?;
    Ok(c * (-attenuation * range).exp())
}

/// Angle in arcminutes subtended by a target of `target_area` m² at `range` km.
pub fn angular_subtense(target_area: f64, range: f64) -> Result<f64> {
    positive("target_area", target_area)?;
    positive("range", range)?;
    Ok(ARCMIN_PER_RADIAN * target_area.sqrt() / (1000.0 * range))
}

/// Runs the photometric chain to the SNR at `range` km.
pub fn visual_snr(scenario: &VisualScenario, range: f64) -> Result<PhotometricState> {
    scenario.validate()?;
    positive("range", range)?;
    let l_t = luminance(scenario.target_reflectance, scenario.illumination)?;
    let l_b = luminance(scenario.background_reflectance, scenario.illumination)?;
    let l_m = 0.5 * (l_t + l_b);
    let c = contrast(l_t, l_b)?;
    let c_app = apparent_contrast(c, scenario.attenuation, range)?;
    let subtense = angular_subtense(scenario.target_area, range)?;

    let photon_budget = SNR_CONSTANT
        * scenario.quantum_efficiency
        * scenario.photon_intensity
        * scenario.integration_time;
    // factored so the linear scalings in r and |C'| hold exactly
    let snr = l_m * c_app.abs() * subtense * scenario.aperture_radius * photon_budget.sqrt();

    Ok(PhotometricState {
        target_luminance: l_t,
        background_luminance: l_b,
        mean_luminance: l_m,
        inherent_contrast: c,
        apparent_contrast: c_app,
        subtense_arcmin: subtense,
        snr,
    })
}

/// Detection probability at `range` km.
pub fn visual_pd(scenario: &VisualScenario, range: f64) -> Result<f64> {
    let state = visual_snr(scenario, range)?;
    pd_from_snr(state.snr, scenario.pfa)
}

/// Evaluates the chain over the inclusive grid `r_start..=r_end` in `r_step` km.
pub fn visual_sweep(
    scenario: &VisualScenario,
    r_start: f64,
    r_end: f64,
    r_step: f64,
) -> Result<SweepResult<PhotometricState>> {
    scenario.validate()?;
    let grid = range_grid(r_start, r_end, r_step)?;
    SweepResult::evaluate(&grid, |range| {
        let state = visual_snr(scenario, range)?;
        let pd = pd_from_snr(state.snr, scenario.pfa)?;
        Ok((state, pd))
    })
}

/// Range at which detection probability falls to `p_target`.
pub fn detection_range(scenario: &VisualScenario, p_target: f64) -> Result<RangeCrossing> {
    scenario.validate()?;
    find_crossing(p_target, |range| visual_pd(scenario, range))
}
