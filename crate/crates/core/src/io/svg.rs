//! Minimal standalone SVG line plots of sweep tables.

use std::fmt::Write as _;

use super::table::{format_significant, SweepTable, PROBABILITY_COLUMNS};
use super::IoError;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 72.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 56.0;
const TICKS: usize = 5;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn span(values: &[f64]) -> (f64, f64) {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}

/// Renders `y_column` against `x_column` as a polyline with labelled axes.
///
/// Probability columns (`pd`, `p_r`) use a fixed [0, 1] y-axis and their
/// values are clamped into it. Output is a pure function of the input.
pub fn write_sweep_svg(
    table: &SweepTable,
    x_column: &str,
    y_column: &str,
) -> Result<String, IoError> {
    let xs = table.column(x_column)?;
    let ys = table.column(y_column)?;
    if xs.len() < 2 {
        return Err(IoError::TooFewRows {
            needed: 2,
            got: xs.len(),
        });
    }
    let probability = PROBABILITY_COLUMNS.contains(&y_column);
    let (x_lo, x_hi) = span(&xs);
    let (y_lo, y_hi) = if probability { (0.0, 1.0) } else { span(&ys) };

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| {
        let y = if probability { y.clamp(0.0, 1.0) } else { y };
        TOP + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-family="sans-serif" font-size="15">{} vs {}</text>"#,
        WIDTH / 2.0,
        escape(y_column),
        escape(x_column)
    );

    // axes
    let (x0, x1, y0, y1) = (LEFT, LEFT + plot_w, TOP, TOP + plot_h);
    let _ = writeln!(
        svg,
        r#"<path d="M{x0:.2},{y0:.2} L{x0:.2},{y1:.2} L{x1:.2},{y1:.2}" fill="none" stroke="black" stroke-width="1"/>"#
    );

    for i in 0..=TICKS {
        let t = i as f64 / TICKS as f64;
        let xv = x_lo + t * (x_hi - x_lo);
        let xp = px(xv);
        let _ = writeln!(
            svg,
            r##"<line x1="{xp:.2}" y1="{y1:.2}" x2="{xp:.2}" y2="{:.2}" stroke="black"/><text x="{xp:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="11">{}</text>"##,
            y1 + 5.0,
            y1 + 18.0,
            format_significant(xv, 4)
        );
        let yv = y_lo + t * (y_hi - y_lo);
        let yp = TOP + (1.0 - t) * plot_h;
        let _ = writeln!(
            svg,
            r##"<line x1="{:.2}" y1="{yp:.2}" x2="{x0:.2}" y2="{yp:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end" font-family="sans-serif" font-size="11">{}</text>"##,
            x0 - 5.0,
            x0 - 8.0,
            yp + 4.0,
            format_significant(yv, 4)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="13">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
        escape(x_column)
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 16 {:.2})">{}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0,
        escape(y_column)
    );

    let points: Vec<String> = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| format!("{:.2},{:.2}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        svg,
        r##"<polyline fill="none" stroke="#1f5fa8" stroke-width="1.5" points="{}"/>"##,
        points.join(" ")
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
