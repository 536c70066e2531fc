use acquire_core::io::scenario::{THERMAL_KEYS, VISUAL_KEYS};
use acquire_core::io::{
    bundled, parse_scenario, read_sweep_csv, write_sweep_csv, write_sweep_svg, ScenarioError,
    SweepTable,
};
use acquire_core::photometry::visual_sweep;
use acquire_core::sweep::range_grid;
use acquire_core::thermal::thermal_sweep;

#[test]
fn golden_headers() {
    let v = parse_scenario(bundled::source("tank_daylight_unaided").unwrap()).unwrap();
    let sw = visual_sweep(v.visual().unwrap(), 0.5, 1.0, 0.25).unwrap();
    let csv = write_sweep_csv(&SweepTable::from_visual(&sw)).unwrap();
    assert_eq!(
        csv.lines().next().unwrap(),
        "range_km,l_target,l_background,contrast,apparent_contrast,subtense_arcmin,snr,pd"
    );

    let t = parse_scenario(bundled::source("tank_system_i").unwrap()).unwrap();
    let sw = thermal_sweep(t.thermal().unwrap(), 0.5, 1.0, 0.25).unwrap();
    let csv = write_sweep_csv(&SweepTable::from_thermal(&sw)).unwrap();
    assert_eq!(
        csv.lines().next().unwrap(),
        "range_km,delta_t_apparent,f_x,cycles,p_r"
    );
    assert!(csv.ends_with('\n'));
}

#[test]
fn visual_csv_golden_rows() {
    // first row of the tank daylight unaided sweep at 1 km, hand-evaluated:
    // Lt = 200/π, Lb = 260/π, C = -0.06/0.46, C' = C·e^-1.118, a = 3438·√2.5/1000
    let v = parse_scenario(bundled::source("tank_daylight_unaided").unwrap()).unwrap();
    let sw = visual_sweep(v.visual().unwrap(), 1.0, 2.0, 1.0).unwrap();
    let csv = write_sweep_csv(&SweepTable::from_visual(&sw)).unwrap();
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(
        &row[..6],
        &[
            "1",
            "63.662",
            "82.7606",
            "-0.130435",
            "-0.0426434",
            "5.43596"
        ]
    );
}

#[test]
fn one_row_per_grid_point() {
    let v = parse_scenario(bundled::source("person_daylight_binocular").unwrap()).unwrap();
    let sw = visual_sweep(v.visual().unwrap(), 0.1, 5.0, 0.05).unwrap();
    let csv = write_sweep_csv(&SweepTable::from_visual(&sw)).unwrap();
    let grid = range_grid(0.1, 5.0, 0.05).unwrap();
    assert_eq!(csv.lines().count(), grid.len() + 1);
    let back = read_sweep_csv(&csv).unwrap();
    assert_eq!(back.rows.len(), grid.len());
}

#[test]
fn bundled_files_round_trip_through_renderer() {
    for (name, text) in bundled::all() {
        let f = parse_scenario(text).unwrap();
        let again = parse_scenario(&f.to_text()).unwrap();
        assert_eq!(again.scenario, f.scenario, "{name}");
        assert_eq!(again.name, f.name);
        assert_eq!(again.metadata, f.metadata);
    }
}

#[test]
fn renaming_any_required_key_fails() {
    for (name, text) in bundled::all() {
        let kind_keys = if text.contains("kind = visual") {
            VISUAL_KEYS
        } else {
            THERMAL_KEYS
        };
        for spec in kind_keys {
            let needle = format!("\n{} =", spec.key);
            assert!(text.contains(&needle), "{name} lacks {}", spec.key);
            let mutated = text.replacen(&needle, &format!("\nx_{} =", spec.key), 1);
            match parse_scenario(&mutated) {
                Err(ScenarioError::UnknownKey { key, .. }) => {
                    assert_eq!(key, format!("x_{}", spec.key))
                }
                other => panic!(
                    "{name}/{}: expected unknown-key error, got {other:?}",
                    spec.key
                ),
            }
        }
    }
}

#[test]
fn dropping_pfa_is_named() {
    let text = bundled::source("tank_daylight_binocular").unwrap();
    let without: String = text
        .lines()
        .filter(|l| !l.starts_with("pfa"))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(
        parse_scenario(&without),
        Err(ScenarioError::MissingKey { key: "pfa".into() })
    );
}

#[test]
fn thermal_svg_trace_is_monotone() {
    let t = parse_scenario(bundled::source("tank_system_ii").unwrap()).unwrap();
    let sw = thermal_sweep(t.thermal().unwrap(), 0.1, 5.0, 0.05).unwrap();
    let svg = write_sweep_svg(&SweepTable::from_thermal(&sw), "range_km", "p_r").unwrap();
    let points = svg
        .split("points=\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap();
    let ys: Vec<f64> = points
        .split(' ')
        .map(|p| p.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(ys.len(), sw.len());
    // SVG y grows downward: falling probability means non-decreasing y
    assert!(ys.windows(2).all(|w| w[1] >= w[0]));
}

#[test]
fn emitters_are_deterministic() {
    let t = parse_scenario(bundled::source("tank_system_i").unwrap()).unwrap();
    let make = || {
        let sw = thermal_sweep(t.thermal().unwrap(), 0.1, 6.0, 0.1).unwrap();
        let table = SweepTable::from_thermal(&sw);
        (
            write_sweep_csv(&table).unwrap(),
            write_sweep_svg(&table, "range_km", "p_r").unwrap(),
        )
    };
    assert_eq!(make(), make());
}
