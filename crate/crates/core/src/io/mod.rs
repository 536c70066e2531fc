//! File formats: scenario input, MRTD observation input, sweep CSV/SVG and
//! fit-report JSON output, plus the scenarios shipped with the crate.

pub mod bundled;
pub mod observations;
pub mod scenario;
pub mod svg;
pub mod table;

use thiserror::Error;

pub use observations::{fit_report_json, read_observations_csv};
pub use scenario::{parse_scenario, Scenario, ScenarioError, ScenarioFile, ScenarioKind};
pub use svg::write_sweep_svg;
pub use table::{format_significant, read_sweep_csv, write_sweep_csv, SweepTable};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error("no column named `{0}`")]
    MissingColumn(String),
    #[error("need at least {needed} rows, got {got}")]
    TooFewRows { needed: usize, got: usize },
    #[error("malformed table: {0}")]
    Table(String),
    #[error("expected header `{expected}`, found `{found}`")]
    BadHeader { expected: String, found: String },
    #[error("row {row}, column `{column}`: `{value}` is not a number")]
    BadNumber {
        row: usize,
        column: String,
        value: String,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
