//! Datasets behind the five figures, with tagged rows for the critical
//! points.

use std::fs;
use std::path::{Path, PathBuf};

use quasimode::dispersion::{critical_points, k_branches, omega_of_k};
use quasimode::kinematics::{superluminal_backward_threshold, VelocityPoint};
use quasimode::optics::OpticalResponse;
use quasimode::spectrum::{effective_frequency, zero_point_minimum};
use quasimode::{Branch, ModelParams, Polarization};

use crate::error::{CliError, CliResult};
use crate::grid::GridSpec;
use crate::table::{Cell, Table};

pub const FIGURE_XI: [f64; 4] = [0.0, 0.2, 0.5, 1.0];
pub const GRID_START: f64 = 0.01;
pub const GRID_STOP: f64 = 3.0;
pub const GRID_POINTS: usize = 300;

pub const DATASETS: [&str; 6] = [
    "fig1_dispersion",
    "fig2a_rek",
    "fig2b_imk",
    "fig3_velocities",
    "fig4_reflectivity",
    "fig5_energy",
];

fn polarizations() -> Vec<Polarization> {
    FIGURE_XI
        .iter()
        .map(|&x| Polarization::new(x).expect("figure xi in range"))
        .collect()
}

fn grid() -> Vec<f64> {
    GridSpec::linear(GRID_START, GRID_STOP, GRID_POINTS).values()
}

const NONE: Cell = Cell::Text("");

pub fn fig1_dispersion() -> quasimode::Result<Table> {
    let mut t = Table::new(vec!["k_over_kp", "xi", "omega_over_wp", "marker"]);
    for p in polarizations() {
        let xi = Cell::Num(p.xi());
        if p.is_linear() {
            t.push(vec![
                Cell::Num(0.0),
                xi.clone(),
                Cell::Num(omega_of_k(0.0, p)?),
                NONE,
            ]);
        }
        for x in grid() {
            t.push(vec![
                Cell::Num(x),
                xi.clone(),
                Cell::Num(omega_of_k(x, p)?),
                NONE,
            ]);
        }
        let cp = critical_points(p);
        t.push(vec![
            Cell::Num(cp.k_star),
            xi,
            Cell::Num(cp.omega_star),
            Cell::Text("k_star"),
        ]);
    }
    Ok(t)
}

/// Frequency markers shared by the wavenumber and reflectivity figures.
fn frequency_markers(p: Polarization) -> [(f64, &'static str); 2] {
    let cp = critical_points(p);
    [
        (cp.omega_star, "omega_star"),
        (cp.omega_tilde, "omega_tilde"),
    ]
}

fn wavenumber_figure(imaginary: bool) -> quasimode::Result<Table> {
    let cols = if imaginary {
        vec![
            "omega_over_wp",
            "xi",
            "regime",
            "im_k_plus",
            "im_k_minus",
            "marker",
        ]
    } else {
        vec![
            "omega_over_wp",
            "xi",
            "regime",
            "re_k_plus",
            "re_k_minus",
            "marker",
        ]
    };
    let mut t = Table::new(cols);
    let part = |z: quasimode::ComplexWavenumber| if imaginary { z.value.im } else { z.value.re };
    for p in polarizations() {
        let rows = grid()
            .into_iter()
            .map(|y| (y, ""))
            .chain(frequency_markers(p));
        for (y, marker) in rows {
            let k = k_branches(y, p)?;
            t.push(vec![
                Cell::Num(y),
                Cell::Num(p.xi()),
                Cell::Text(k.plus.regime.as_str()),
                Cell::Num(part(k.plus)),
                Cell::Num(part(k.minus)),
                Cell::Text(marker),
            ]);
        }
    }
    Ok(t)
}

pub fn fig2a_rek() -> quasimode::Result<Table> {
    wavenumber_figure(false)
}

pub fn fig2b_imk() -> quasimode::Result<Table> {
    wavenumber_figure(true)
}

pub fn fig3_velocities() -> quasimode::Result<Table> {
    let mut t = Table::new(vec!["k_over_kp", "xi", "v_ph", "v_g", "marker"]);
    for p in polarizations() {
        let mut rows: Vec<(f64, &str)> = grid().into_iter().map(|x| (x, "")).collect();
        if !p.is_linear() {
            rows.push((critical_points(p).k_star, "k_star"));
            rows.push((
                superluminal_backward_threshold(p)?,
                "superluminal_threshold",
            ));
        }
        for (x, marker) in rows {
            let v = VelocityPoint::at(x, p)?;
            t.push(vec![
                Cell::Num(x),
                Cell::Num(p.xi()),
                Cell::Num(v.v_ph),
                Cell::Num(v.v_g),
                Cell::Text(marker),
            ]);
        }
    }
    Ok(t)
}

pub fn fig4_reflectivity() -> quasimode::Result<Table> {
    let mut t = Table::new(vec![
        "omega_over_wp",
        "xi",
        "regime",
        "r_plus",
        "r_minus",
        "marker",
    ]);
    for p in polarizations() {
        let markers = frequency_markers(p).into_iter().filter(|(y, _)| *y > 0.0);
        for (y, marker) in grid().into_iter().map(|y| (y, "")).chain(markers) {
            let plus = OpticalResponse::at(y, p, Branch::Plus)?;
            let minus = OpticalResponse::at(y, p, Branch::Minus)?;
            t.push(vec![
                Cell::Num(y),
                Cell::Num(p.xi()),
                Cell::Text(quasimode::dispersion::classify_regime(y, p).as_str()),
                Cell::Num(plus.reflectivity),
                Cell::Num(minus.reflectivity),
                Cell::Text(marker),
            ]);
        }
    }
    Ok(t)
}

/// Ground-state zero-point energy `ħΩ(ω)/2` against the bare frequency,
/// in units of `ħω_p`.
pub fn fig5_energy() -> quasimode::Result<Table> {
    let mut t = Table::new(vec!["omega_over_wp", "xi", "energy_over_hbar_wp", "marker"]);
    for p in polarizations() {
        for w in grid() {
            let params = ModelParams::new(p.xi(), w, 1.0)?;
            t.push(vec![
                Cell::Num(w),
                Cell::Num(p.xi()),
                Cell::Num(0.5 * effective_frequency(&params)?),
                NONE,
            ]);
        }
        let min = zero_point_minimum(p, 1.0, 1.0)?;
        t.push(vec![
            Cell::Num(min.omega_min),
            Cell::Num(p.xi()),
            Cell::Num(min.energy),
            Cell::Text("omega_min"),
        ]);
    }
    Ok(t)
}

pub fn figure(name: &str) -> Option<quasimode::Result<Table>> {
    Some(match name {
        "fig1_dispersion" => fig1_dispersion(),
        "fig2a_rek" => fig2a_rek(),
        "fig2b_imk" => fig2b_imk(),
        "fig3_velocities" => fig3_velocities(),
        "fig4_reflectivity" => fig4_reflectivity(),
        "fig5_energy" => fig5_energy(),
        _ => return None,
    })
}

/// Write every dataset as `<name>.csv` under `outdir`.
pub fn emit_figure_datasets(outdir: &Path) -> CliResult<Vec<PathBuf>> {
    fs::create_dir_all(outdir).map_err(|e| CliError::io(outdir.display().to_string(), e))?;
    let mut written = Vec::new();
    for name in DATASETS {
        let table = figure(name).expect("known dataset")?;
        let path = outdir.join(format!("{name}.csv"));
        fs::write(&path, table.to_csv_string())
            .map_err(|e| CliError::io(path.display().to_string(), e))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn find(t: &Table, pred: impl Fn(&[Cell]) -> bool) -> Vec<Cell> {
        t.rows
            .iter()
            .find(|r| pred(r))
            .cloned()
            .expect("row present")
    }

    fn num(c: &Cell) -> f64 {
        match c {
            Cell::Num(v) => *v,
            other => panic!("not a number: {other:?}"),
        }
    }

    #[test]
    fn fig1_lp_starts_at_plasma_edge() {
        let t = fig1_dispersion().unwrap();
        let row = find(&t, |r| {
            r[0] == Cell::Num(0.0) && r[1] == Cell::Num(0.0) && r[3] == NONE
        });
        assert_eq!(num(&row[2]), 1.0);
    }

    #[test]
    fn fig2b_cp_low_frequency_limit() {
        let t = fig2b_imk().unwrap();
        let row = find(&t, |r| {
            r[1] == Cell::Num(1.0) && r[5] == Cell::Text("omega_tilde")
        });
        assert_eq!(num(&row[0]), 0.0);
        assert!((num(&row[3]) - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((num(&row[4]) + FRAC_1_SQRT_2).abs() < 1e-15);
        let first = find(&t, |r| {
            r[1] == Cell::Num(1.0) && r[0] == Cell::Num(GRID_START)
        });
        assert!((num(&first[3]) - FRAC_1_SQRT_2).abs() < 1e-2);
        assert!((num(&first[4]) + FRAC_1_SQRT_2).abs() < 1e-2);
    }

    #[test]
    fn fig3_cp_minimum_marker() {
        let t = fig3_velocities().unwrap();
        let row = find(&t, |r| {
            r[1] == Cell::Num(1.0) && r[4] == Cell::Text("k_star")
        });
        assert!((num(&row[0]) - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(num(&row[3]).abs() < 1e-15);
        assert!((num(&row[2]) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn every_dataset_has_markers_per_xi() {
        for name in DATASETS {
            let t = figure(name).unwrap().unwrap();
            let marker = t.column("marker").unwrap();
            let xi = t.column("xi").unwrap();
            for x in FIGURE_XI {
                let tagged = t
                    .rows
                    .iter()
                    .filter(|r| r[xi] == Cell::Num(x) && r[marker] != NONE)
                    .count();
                // linear polarization has no group-velocity minimum to mark
                if name == "fig3_velocities" && x == 0.0 {
                    assert_eq!(tagged, 0);
                } else {
                    assert!(tagged >= 1, "{name} xi={x}");
                }
            }
        }
    }
}
