//! Tabular sweep output and CSV encoding.

use serde::Serialize;

use super::IoError;
use crate::photometry::PhotometricState;
use crate::sweep::SweepResult;
use crate::thermal::ThermalState;

/// Column order of a visual sweep table.
pub const VISUAL_COLUMNS: [&str; 8] = [
    "range_km",
    "l_target",
    "l_background",
    "contrast",
    "apparent_contrast",
    "subtense_arcmin",
    "snr",
    "pd",
];

/// Column order of a thermal sweep table.
pub const THERMAL_COLUMNS: [&str; 5] = ["range_km", "delta_t_apparent", "f_x", "cycles", "p_r"];

/// Columns holding probabilities; plots pin these to [0, 1].
pub const PROBABILITY_COLUMNS: [&str; 2] = ["pd", "p_r"];

/// Significant digits written to CSV.
pub const CSV_SIGNIFICANT_DIGITS: usize = 6;

/// One row per range sample, columns fixed by sweep kind.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    /// Builds a table and checks it is rectangular with a strictly increasing
    /// first (range) column.
    pub fn new(header: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self, IoError> {
        if header.is_empty() {
            return Err(IoError::Table("table has no columns".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != header.len() {
                return Err(IoError::Table(format!(
                    "row {i} has {} values, header has {}",
                    row.len(),
                    header.len()
                )));
            }
        }
        if rows.windows(2).any(|w| w[1][0] <= w[0][0]) {
            return Err(IoError::Table(
                "range column is not strictly increasing".into(),
            ));
        }
        Ok(SweepTable { header, rows })
    }

    pub fn from_visual(sweep: &SweepResult<PhotometricState>) -> Self {
        let rows = sweep
            .samples
            .iter()
            .map(|s| {
                vec![
                    s.range_km,
                    s.state.target_luminance,
                    s.state.background_luminance,
                    s.state.inherent_contrast,
                    s.state.apparent_contrast,
                    s.state.subtense_arcmin,
                    s.state.snr,
                    s.probability,
                ]
            })
            .collect();
        SweepTable {
            header: VISUAL_COLUMNS.iter().map(|c| c.to_string()).collect(),
            rows,
        }
    }

    pub fn from_thermal(sweep: &SweepResult<ThermalState>) -> Self {
        let rows = sweep
            .samples
            .iter()
            .map(|s| {
                vec![
                    s.range_km,
                    s.state.delta_t_apparent,
                    s.state.max_frequency,
                    s.state.cycles,
                    s.probability,
                ]
            })
            .collect();
        SweepTable {
            header: THERMAL_COLUMNS.iter().map(|c| c.to_string()).collect(),
            rows,
        }
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// Values of the named column, top to bottom.
    pub fn column(&self, name: &str) -> Result<Vec<f64>, IoError> {
        let idx = self
            .column_index(name)
            .ok_or_else(|| IoError::MissingColumn(name.to_string()))?;
        Ok(self.rows.iter().map(|r| r[idx]).collect())
    }
}

/// Formats `x` with `digits` significant digits in the style of C's `%g`:
/// fixed notation for moderate exponents, scientific otherwise, trailing
/// zeros removed. Independent of locale.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Writes the table as CSV: header first, `\n` line endings, every number
/// to [`CSV_SIGNIFICANT_DIGITS`] significant digits.
pub fn write_sweep_csv(table: &SweepTable) -> Result<String, IoError> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer.write_record(&table.header)?;
    for row in &table.rows {
        writer.write_record(
            row.iter()
                .map(|v| format_significant(*v, CSV_SIGNIFICANT_DIGITS)),
        )?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| IoError::Table(format!("flushing CSV: {e}")))?;
    Ok(String::from_utf8(bytes).expect("CSV output is ASCII"))
}

/// Reads a CSV produced by [`write_sweep_csv`].
pub fn read_sweep_csv(text: &str) -> Result<SweepTable, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .enumerate()
            .map(|(j, field)| {
                field.trim().parse::<f64>().map_err(|_| IoError::BadNumber {
                    row: i + 1,
                    column: header.get(j).cloned().unwrap_or_default(),
                    value: field.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    SweepTable::new(header, rows)
}
