//! Thermal-imager recognition: apparent temperature difference, exponential
//! MRTD curve, maximum resolvable frequency, resolvable cycles and the target
//! transform probability function (TTPF).
//!
//! Spatial frequency is in cycles/mrad throughout; a target of height `H` m
//! at `R` km subtends `H/R` mrad.

use serde::{Deserialize, Serialize};

use crate::error::{non_negative, positive, ModelError, Result};
use crate::sweep::{find_crossing, range_grid, RangeCrossing, SweepResult};

/// Exponential MRTD model `a·e^(b·SF)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MrtdCurve {
    /// MRTD at zero spatial frequency, K.
    pub a: f64,
    /// Growth rate, mrad/cycle.
    pub b: f64,
}

impl MrtdCurve {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let curve = MrtdCurve { a, b };
        curve.validate()?;
        Ok(curve)
    }

    pub fn validate(&self) -> Result<()> {
        positive("mrtd a", self.a)?;
        positive("mrtd b", self.b)?;
        Ok(())
    }

    /// Shorthand for [`mrtd`] on this curve.
    pub fn at(&self, sf: f64) -> Result<f64> {
        mrtd(self, sf)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalScenario {
    /// Inherent target-to-background temperature difference, K.
    pub delta_t_inherent: f64,
    /// Critical (height) dimension of the target, m.
    pub target_height: f64,
    pub mrtd: MrtdCurve,
    /// Resolvable cycles giving 50 % recognition probability.
    pub n50: f64,
    /// Atmospheric attenuation coefficient, 1/km.
    pub attenuation: f64,
}

impl ThermalScenario {
    pub fn validate(&self) -> Result<()> {
        positive("delta_t_inherent", self.delta_t_inherent)?;
        positive("target_height", self.target_height)?;
        self.mrtd.validate()?;
        positive("n50", self.n50)?;
        positive("attenuation", self.attenuation)?;
        Ok(())
    }
}

/// Intermediate quantities of the recognition chain at one range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalState {
    /// K
    pub delta_t_apparent: f64,
    /// mrad
    pub critical_subtense: f64,
    /// cycles/mrad
    pub max_frequency: f64,
    pub cycles: f64,
    pub p_recognition: f64,
}

/// Temperature difference after `range` km of atmosphere, `ΔT·e^(−AC·R)`.
pub fn apparent_delta_t(delta_t_inherent: f64, attenuation: f64, range: f64) -> Result<f64> {
    positive("delta_t_inherent", delta_t_inherent)?;
    non_negative("attenuation", attenuation)?;
    non_negative("range", range)?;
    Ok(delta_t_inherent * (-attenuation * range).exp())
}

/// MRTD at spatial frequency `sf` cycles/mrad.
pub fn mrtd(curve: &MrtdCurve, sf: f64) -> Result<f64> {
    curve.validate()?;
    non_negative("sf", sf)?;
    Ok(curve.a * (curve.b * sf).exp())
}

/// Highest spatial frequency whose MRTD does not exceed `delta_t_apparent`.
///
/// Returns 0 when `delta_t_apparent <= a`: not even the coarsest bar pattern
/// is resolvable.
pub fn max_resolvable_frequency(curve: &MrtdCurve, delta_t_apparent: f64) -> Result<f64> {
    curve.validate()?;
    positive("delta_t_apparent", delta_t_apparent)?;
    if delta_t_apparent <= curve.a {
        return Ok(0.0);
    }
    Ok((delta_t_apparent / curve.a).ln() / curve.b)
}

/// Cycles resolvable across a target of `target_height` m at `range` km.
pub fn resolvable_cycles(f_x: f64, target_height: f64, range: f64) -> Result<f64> {
    non_negative("f_x", f_x)?;
    positive("target_height", target_height)?;
    positive("range", range)?;
    Ok(f_x * (target_height / range))
}

/// Target transform probability function
/// `(N/N50)^E / (1 + (N/N50)^E)` with `E = 2.7 + 0.7·N/N50`.
pub fn ttpf(n: f64, n50: f64) -> Result<f64> {
    non_negative("n", n)?;
    positive("n50", n50)?;
    let ratio = n / n50;
    if ratio == 0.0 {
        return Ok(0.0);
    }
    let exponent = 2.7 + 0.7 * ratio;
    // x^E/(1+x^E) is the logistic of E·ln x; this form never overflows
    let t = exponent * ratio.ln();
    Ok(if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    })
}

/// Runs the recognition chain at `range` km.
pub fn thermal_state(scenario: &ThermalScenario, range: f64) -> Result<ThermalState> {
    scenario.validate()?;
    positive("range", range)?;
    let delta_t_apparent =
        apparent_delta_t(scenario.delta_t_inherent, scenario.attenuation, range)?;
    if delta_t_apparent <= 0.0 {
        // underflow at extreme range: nothing resolvable
        return Ok(ThermalState {
            delta_t_apparent: 0.0,
            critical_subtense: scenario.target_height / range,
            max_frequency: 0.0,
            cycles: 0.0,
            p_recognition: 0.0,
        });
    }
    let max_frequency = max_resolvable_frequency(&scenario.mrtd, delta_t_apparent)?;
    let cycles = resolvable_cycles(max_frequency, scenario.target_height, range)?;
    let p_recognition = ttpf(cycles, scenario.n50)?;
    Ok(ThermalState {
        delta_t_apparent,
        critical_subtense: scenario.target_height / range,
        max_frequency,
        cycles,
        p_recognition,
    })
}

pub fn thermal_sweep(
    scenario: &ThermalScenario,
    r_start: f64,
    r_end: f64,
    r_step: f64,
) -> Result<SweepResult<ThermalState>> {
    scenario.validate()?;
    let grid = range_grid(r_start, r_end, r_step)?;
    SweepResult::evaluate(&grid, |range| {
        let state = thermal_state(scenario, range)?;
        Ok((state, state.p_recognition))
    })
}

/// Range where recognition probability drops to `p_target`, searched by
/// bisection between 1 m and 100 km to better than 1 cm.
pub fn recognition_range(scenario: &ThermalScenario, p_target: f64) -> Result<RangeCrossing> {
    scenario.validate()?;
    if !(p_target > 0.0 && p_target < 1.0) {
        return Err(ModelError::domain(
            "p_target",
            p_target,
            "must lie strictly between 0 and 1",
        ));
    }
    find_crossing(p_target, |range| {
        thermal_state(scenario, range).map(|s| s.p_recognition)
    })
}
