//! Line-oriented scenario files.
//!
//! ```text
//! # comment
//! format = 1
//! kind = visual            # or thermal
//! name = tank_daylight_binocular
//! illumination = 1000 lux
//! target_reflectance = 20 %
//! aperture_radius = 8.0 cm
//! quantum_efficiency = 1/4200
//! meta.source = free text kept verbatim
//! ```
//!
//! Each parameter line is `key = value [unit]`. Values are decimal numbers
//! or a ratio `p/q`. An omitted unit means the canonical unit (the first one
//! listed for the key in [`VISUAL_KEYS`] / [`THERMAL_KEYS`]). Every parameter
//! of the scenario kind must appear exactly once; anything else is rejected,
//! except `meta.*` keys which carry uninterpreted notes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::error::ModelError;
use crate::photometry::VisualScenario;
use crate::thermal::{MrtdCurve, ThermalScenario};

/// The only file format version understood.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("missing required key `{key}`")]
    MissingKey { key: String },
    #[error("line {line}: key `{key}` does not accept unit `{unit}` (allowed: {allowed})")]
    BadUnit {
        line: usize,
        key: String,
        unit: String,
        allowed: String,
    },
    #[error("line {line}: key `{key}` has non-numeric value `{value}`")]
    BadValue {
        line: usize,
        key: String,
        value: String,
    },
    #[error("line {line}: unsupported format version `{value}` (expected {FORMAT_VERSION})")]
    UnsupportedFormat { line: usize, value: String },
    #[error("line {line}: unknown scenario kind `{value}` (expected visual or thermal)")]
    UnknownKind { line: usize, value: String },
    #[error("invalid scenario: {0}")]
    Invalid(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ScenarioKind {
    Visual,
    Thermal,
}

impl ScenarioKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScenarioKind::Visual => "visual",
            ScenarioKind::Thermal => "thermal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scenario {
    Visual(VisualScenario),
    Thermal(ThermalScenario),
}

/// A parsed and validated scenario file.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioFile {
    pub name: String,
    pub scenario: Scenario,
    /// Unit annotation as written for each parameter key (empty if omitted).
    pub units: BTreeMap<String, String>,
    /// `meta.*` entries with the prefix stripped.
    pub metadata: BTreeMap<String, String>,
}

impl ScenarioFile {
    pub fn kind(&self) -> ScenarioKind {
        match self.scenario {
            Scenario::Visual(_) => ScenarioKind::Visual,
            Scenario::Thermal(_) => ScenarioKind::Thermal,
        }
    }

    pub fn visual(&self) -> Option<&VisualScenario> {
        match &self.scenario {
            Scenario::Visual(v) => Some(v),
            Scenario::Thermal(_) => None,
        }
    }

    pub fn thermal(&self) -> Option<&ThermalScenario> {
        match &self.scenario {
            Scenario::Thermal(t) => Some(t),
            Scenario::Visual(_) => None,
        }
    }

    /// Renders the file in canonical units. Parsing the output yields the
    /// same scenario values.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "format = {FORMAT_VERSION}");
        let _ = writeln!(out, "kind = {}", self.kind().as_str());
        let _ = writeln!(out, "name = {}", self.name);
        let (keys, values): (&[KeySpec], Vec<f64>) = match &self.scenario {
            Scenario::Visual(v) => (VISUAL_KEYS, visual_values(v).to_vec()),
            Scenario::Thermal(t) => (THERMAL_KEYS, thermal_values(t).to_vec()),
        };
        for (spec, value) in keys.iter().zip(values) {
            let unit = spec.units[0].0;
            if unit.is_empty() {
                let _ = writeln!(out, "{} = {value:?}", spec.key);
            } else {
                let _ = writeln!(out, "{} = {value:?} {unit}", spec.key);
            }
        }
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "meta.{k} = {v}");
        }
        out
    }
}

/// A parameter key and the units it accepts, canonical unit first, each
/// with its factor to the canonical unit.
#[derive(Debug, Clone, Copy)]
pub struct KeySpec {
    pub key: &'static str,
    pub units: &'static [(&'static str, f64)],
}

const FRACTION: &[(&str, f64)] = &[("", 1.0), ("%", 0.01)];
const PER_KM: &[(&str, f64)] = &[("1/km", 1.0), ("1/m", 1000.0)];

pub const VISUAL_KEYS: &[KeySpec] = &[
    KeySpec {
        key: "illumination",
        units: &[("lux", 1.0)],
    },
    KeySpec {
        key: "target_area",
        units: &[("m2", 1.0), ("cm2", 1e-4)],
    },
    KeySpec {
        key: "target_reflectance",
        units: FRACTION,
    },
    KeySpec {
        key: "background_reflectance",
        units: FRACTION,
    },
    KeySpec {
        key: "aperture_radius",
        units: &[("mm", 1.0), ("cm", 10.0), ("m", 1000.0)],
    },
    KeySpec {
        key: "quantum_efficiency",
        units: FRACTION,
    },
    KeySpec {
        key: "integration_time",
        units: &[("s", 1.0), ("ms", 1e-3)],
    },
    KeySpec {
        key: "photon_intensity",
        units: &[("photons/lm/s", 1.0)],
    },
    KeySpec {
        key: "pfa",
        units: FRACTION,
    },
    KeySpec {
        key: "attenuation",
        units: PER_KM,
    },
];

pub const THERMAL_KEYS: &[KeySpec] = &[
    // a temperature difference is the same in kelvin and degrees Celsius
    KeySpec {
        key: "delta_t_inherent",
        units: &[("K", 1.0), ("degC", 1.0)],
    },
    KeySpec {
        key: "target_height",
        units: &[("m", 1.0), ("cm", 0.01), ("km", 1000.0)],
    },
    KeySpec {
        key: "mrtd_a",
        units: &[("K", 1.0), ("degC", 1.0)],
    },
    KeySpec {
        key: "mrtd_b",
        units: &[("mrad/cycle", 1.0)],
    },
    KeySpec {
        key: "n50",
        units: &[("cycles", 1.0)],
    },
    KeySpec {
        key: "attenuation",
        units: PER_KM,
    },
];

fn visual_values(v: &VisualScenario) -> [f64; 10] {
    [
        v.illumination,
        v.target_area,
        v.target_reflectance,
        v.background_reflectance,
        v.aperture_radius,
        v.quantum_efficiency,
        v.integration_time,
        v.photon_intensity,
        v.pfa,
        v.attenuation,
    ]
}

fn thermal_values(t: &ThermalScenario) -> [f64; 6] {
    [
        t.delta_t_inherent,
        t.target_height,
        t.mrtd.a,
        t.mrtd.b,
        t.n50,
        t.attenuation,
    ]
}

struct Entry<'a> {
    line: usize,
    key: &'a str,
    value: &'a str,
}

fn parse_number(text: &str) -> Option<f64> {
    let v = match text.split_once('/') {
        Some((num, den)) => num.trim().parse::<f64>().ok()? / den.trim().parse::<f64>().ok()?,
        None => text.parse::<f64>().ok()?,
    };
    v.is_finite().then_some(v)
}

/// Parses and validates a scenario file.
pub fn parse_scenario(text: &str) -> Result<ScenarioFile, ScenarioError> {
    let mut entries: Vec<Entry<'_>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ScenarioError::Syntax {
                line,
                message: format!("expected `key = value`, found `{content}`"),
            })?;
        let key = key.trim();
        let value = value.trim();
        if key.is_empty() || value.is_empty() {
            return Err(ScenarioError::Syntax {
                line,
                message: format!("expected `key = value`, found `{content}`"),
            });
        }
        if entries.iter().any(|e| e.key == key) {
            return Err(ScenarioError::DuplicateKey {
                line,
                key: key.to_string(),
            });
        }
        entries.push(Entry { line, key, value });
    }

    let take = |key: &str| entries.iter().find(|e| e.key == key);
    let missing = |key: &str| ScenarioError::MissingKey {
        key: key.to_string(),
    };

    let format = take("format").ok_or_else(|| missing("format"))?;
    if format.value.parse::<u32>().ok() != Some(FORMAT_VERSION) {
        return Err(ScenarioError::UnsupportedFormat {
            line: format.line,
            value: format.value.to_string(),
        });
    }
    let kind_entry = take("kind").ok_or_else(|| missing("kind"))?;
    let (kind, keys) = match kind_entry.value {
        "visual" => (ScenarioKind::Visual, VISUAL_KEYS),
        "thermal" => (ScenarioKind::Thermal, THERMAL_KEYS),
        other => {
            return Err(ScenarioError::UnknownKind {
                line: kind_entry.line,
                value: other.to_string(),
            })
        }
    };
    let name = take("name")
        .ok_or_else(|| missing("name"))?
        .value
        .to_string();

    let mut values: BTreeMap<&str, f64> = BTreeMap::new();
    let mut units = BTreeMap::new();
    let mut metadata = BTreeMap::new();
    for entry in &entries {
        if matches!(entry.key, "format" | "kind" | "name") {
            continue;
        }
        if let Some(meta_key) = entry.key.strip_prefix("meta.") {
            if meta_key.is_empty() {
                return Err(ScenarioError::UnknownKey {
                    line: entry.line,
                    key: entry.key.to_string(),
                });
            }
            metadata.insert(meta_key.to_string(), entry.value.to_string());
            continue;
        }
        let spec =
            keys.iter()
                .find(|s| s.key == entry.key)
                .ok_or_else(|| ScenarioError::UnknownKey {
                    line: entry.line,
                    key: entry.key.to_string(),
                })?;
        let (number, unit) = match entry.value.split_once(char::is_whitespace) {
            Some((n, u)) => (n, u.trim()),
            None => (entry.value, ""),
        };
        let value = parse_number(number).ok_or_else(|| ScenarioError::BadValue {
            line: entry.line,
            key: entry.key.to_string(),
            value: number.to_string(),
        })?;
        let factor = if unit.is_empty() {
            spec.units[0].1
        } else {
            spec.units
                .iter()
                .find(|(u, _)| !u.is_empty() && *u == unit)
                .map(|(_, f)| *f)
                .ok_or_else(|| ScenarioError::BadUnit {
                    line: entry.line,
                    key: entry.key.to_string(),
                    unit: unit.to_string(),
                    allowed: spec
                        .units
                        .iter()
                        .map(|(u, _)| if u.is_empty() { "(none)" } else { u })
                        .collect::<Vec<_>>()
                        .join("|"),
                })?
        };
        values.insert(spec.key, value * factor);
        units.insert(spec.key.to_string(), unit.to_string());
    }

    let get = |key: &str| values.get(key).copied().ok_or_else(|| missing(key));
    let scenario = match kind {
        ScenarioKind::Visual => {
            let v = VisualScenario {
                illumination: get("illumination")?,
                target_area: get("target_area")?,
                target_reflectance: get("target_reflectance")?,
                background_reflectance: get("background_reflectance")?,
                aperture_radius: get("aperture_radius")?,
                quantum_efficiency: get("quantum_efficiency")?,
                integration_time: get("integration_time")?,
                photon_intensity: get("photon_intensity")?,
                pfa: get("pfa")?,
                attenuation: get("attenuation")?,
            };
            v.validate()?;
            Scenario::Visual(v)
        }
        ScenarioKind::Thermal => {
            let t = ThermalScenario {
                delta_t_inherent: get("delta_t_inherent")?,
                target_height: get("target_height")?,
                mrtd: MrtdCurve {
                    a: get("mrtd_a")?,
                    b: get("mrtd_b")?,
                },
                n50: get("n50")?,
                attenuation: get("attenuation")?,
            };
            t.validate()?;
            Scenario::Thermal(t)
        }
    };

    Ok(ScenarioFile {
        name,
        scenario,
        units,
        metadata,
    })
}
