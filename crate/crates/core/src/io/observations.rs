//! MRTD observation CSV input (`sf,mrtd`) and fit-report JSON output.

use super::IoError;
use crate::fit::{FitReport, MrtdObservation};

const HEADER: [&str; 2] = ["sf", "mrtd"];

/// Parses a two-column `sf,mrtd` CSV. The header row is required.
pub fn read_observations_csv(text: &str) -> Result<Vec<MrtdObservation>, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if header != HEADER {
        return Err(IoError::BadHeader {
            expected: HEADER.join(","),
            found: header.join(","),
        });
    }
    let mut out = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let field = |j: usize| -> Result<f64, IoError> {
            let raw = record.get(j).unwrap_or("");
            raw.parse::<f64>().map_err(|_| IoError::BadNumber {
                row: i + 1,
                column: HEADER[j].to_string(),
                value: raw.to_string(),
            })
        };
        out.push(MrtdObservation::new(field(0)?, field(1)?));
    }
    Ok(out)
}

/// Pretty-printed JSON of a fit report, newline-terminated.
pub fn fit_report_json(report: &FitReport) -> Result<String, IoError> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}
