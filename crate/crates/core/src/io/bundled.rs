//! Scenario files and MRTD measurement tables shipped with the crate.
//!
//! Visual scenarios cover four targets (person, tank, one-tonne truck,
//! mortar) on a desert background under daylight (unaided, binocular) and
//! full moon (unaided, image intensifier). Thermal scenarios cover a tank
//! seen by two thermal imagers.

use super::scenario::{parse_scenario, ScenarioError, ScenarioFile};
use super::IoError;
use crate::fit::MrtdObservation;

/// `(name, file contents)` of every bundled visual scenario.
pub const VISUAL: &[(&str, &str)] = &[
    (
        "mortar_daylight_binocular",
        include_str!("../../scenarios/mortar_daylight_binocular.scn"),
    ),
    (
        "mortar_daylight_unaided",
        include_str!("../../scenarios/mortar_daylight_unaided.scn"),
    ),
    (
        "mortar_fullmoon_intensifier",
        include_str!("../../scenarios/mortar_fullmoon_intensifier.scn"),
    ),
    (
        "mortar_fullmoon_unaided",
        include_str!("../../scenarios/mortar_fullmoon_unaided.scn"),
    ),
    (
        "one_tonner_daylight_binocular",
        include_str!("../../scenarios/one_tonner_daylight_binocular.scn"),
    ),
    (
        "one_tonner_daylight_unaided",
        include_str!("../../scenarios/one_tonner_daylight_unaided.scn"),
    ),
    (
        "one_tonner_fullmoon_intensifier",
        include_str!("../../scenarios/one_tonner_fullmoon_intensifier.scn"),
    ),
    (
        "one_tonner_fullmoon_unaided",
        include_str!("../../scenarios/one_tonner_fullmoon_unaided.scn"),
    ),
    (
        "person_daylight_binocular",
        include_str!("../../scenarios/person_daylight_binocular.scn"),
    ),
    (
        "person_daylight_unaided",
        include_str!("../../scenarios/person_daylight_unaided.scn"),
    ),
    (
        "person_fullmoon_intensifier",
        include_str!("../../scenarios/person_fullmoon_intensifier.scn"),
    ),
    (
        "person_fullmoon_unaided",
        include_str!("../../scenarios/person_fullmoon_unaided.scn"),
    ),
    (
        "tank_daylight_binocular",
        include_str!("../../scenarios/tank_daylight_binocular.scn"),
    ),
    (
        "tank_daylight_unaided",
        include_str!("../../scenarios/tank_daylight_unaided.scn"),
    ),
    (
        "tank_fullmoon_intensifier",
        include_str!("../../scenarios/tank_fullmoon_intensifier.scn"),
    ),
    (
        "tank_fullmoon_unaided",
        include_str!("../../scenarios/tank_fullmoon_unaided.scn"),
    ),
];

/// `(name, file contents)` of every bundled thermal scenario.
pub const THERMAL: &[(&str, &str)] = &[
    (
        "tank_system_i",
        include_str!("../../scenarios/tank_system_i.scn"),
    ),
    (
        "tank_system_ii",
        include_str!("../../scenarios/tank_system_ii.scn"),
    ),
];

/// Measured MRTD of thermal imager System I (`sf,mrtd`).
pub const MRTD_SYSTEM_I_OBSERVED: &str = include_str!("../../data/mrtd_system_i_observed.csv");
/// Published model MRTD for System I; not reproducible by a pure exponential.
pub const MRTD_SYSTEM_I_PREDICTED: &str = include_str!("../../data/mrtd_system_i_predicted.csv");
/// Measured MRTD of thermal imager System II (`sf,mrtd`).
pub const MRTD_SYSTEM_II_OBSERVED: &str = include_str!("../../data/mrtd_system_ii_observed.csv");
/// Published model MRTD for System II.
pub const MRTD_SYSTEM_II_PREDICTED: &str = include_str!("../../data/mrtd_system_ii_predicted.csv");

/// All bundled scenario sources, visual first.
pub fn all() -> impl Iterator<Item = (&'static str, &'static str)> {
    VISUAL.iter().chain(THERMAL.iter()).copied()
}

/// Source text of the bundled scenario called `name`.
pub fn source(name: &str) -> Option<&'static str> {
    all().find(|(n, _)| *n == name).map(|(_, text)| text)
}

/// Parses the bundled scenario called `name`.
pub fn load(name: &str) -> Option<Result<ScenarioFile, ScenarioError>> {
    source(name).map(parse_scenario)
}

/// Parses one of the bundled MRTD tables.
pub fn observations(table: &str) -> Result<Vec<MrtdObservation>, IoError> {
    super::observations::read_observations_csv(table)
}
