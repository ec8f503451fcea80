//! Parameter sweeps.
//!
//! Rows are ordered by polarization, then grid point, then branch (or level).
//! Points are evaluated in parallel and reassembled in that order.

use quasimode::dispersion::{k_branches, omega_of_k};
use quasimode::kinematics::VelocityPoint;
use quasimode::optics::OpticalResponse;
use quasimode::plate_force::{
    force_at_minimum, force_at_minimum_bohr, minimum_energy, plasma_frequency_plates,
};
use quasimode::spectrum::energy_level;
use quasimode::units::C_ATOMIC;
use quasimode::{
    Branch, ChargeUnits, ModelParams, Momentum, PlateGeometry, Polarization, UnitSystem,
};
use rayon::prelude::*;

use crate::args::{Quantity, SweepArgs, Units};
use crate::error::{CliError, CliResult};
use crate::grid::GridSpec;
use crate::table::{Cell, Table};

/// Evaluate `f` at every point in parallel and concatenate the rows in
/// input order. The first failing point becomes a domain error carrying
/// its 1-based data-row number.
pub fn collect_rows<P, F, C>(points: &[P], f: F, describe: C) -> CliResult<Vec<Vec<Cell>>>
where
    P: Sync,
    F: Fn(&P) -> quasimode::Result<Vec<Vec<Cell>>> + Sync,
    C: Fn(&P) -> String,
{
    let results: Vec<_> = points.par_iter().map(&f).collect();
    let mut rows = Vec::new();
    for (point, result) in points.iter().zip(results) {
        match result {
            Ok(mut r) => rows.append(&mut r),
            Err(source) => {
                return Err(CliError::Domain {
                    row: rows.len() + 1,
                    context: describe(point),
                    source,
                });
            }
        }
    }
    Ok(rows)
}

/// Conversion between reduced variables and the requested output units.
#[derive(Debug, Clone, Copy)]
struct Scale {
    wavenumber: f64,
    frequency: f64,
    velocity: f64,
}

impl Scale {
    fn new(units: Units, omega_p: f64) -> CliResult<Self> {
        match units {
            Units::Reduced => Ok(Scale {
                wavenumber: 1.0,
                frequency: 1.0,
                velocity: 1.0,
            }),
            Units::Atomic => {
                if !(omega_p > 0.0 && omega_p.is_finite()) {
                    return Err(CliError::Spec(format!(
                        "--omega-p must be positive, got {omega_p}"
                    )));
                }
                Ok(Scale {
                    wavenumber: omega_p / C_ATOMIC,
                    frequency: omega_p,
                    velocity: C_ATOMIC,
                })
            }
        }
    }
}

fn require_grid(grid: Option<GridSpec>, flag: &str, quantity: &str) -> CliResult<GridSpec> {
    grid.ok_or_else(|| CliError::Spec(format!("`{quantity}` sweeps need --{flag}")))
}

fn points(xi: &[Polarization], grid: &GridSpec) -> Vec<(Polarization, f64)> {
    let values = grid.values();
    xi.iter()
        .flat_map(|&p| values.iter().map(move |&v| (p, v)))
        .collect()
}

fn describe(name: &'static str) -> impl Fn(&(Polarization, f64)) -> String {
    move |(p, v)| format!("xi={}, {name}={v}", p.xi())
}

pub fn run_sweep(args: &SweepArgs) -> CliResult<Table> {
    let xi = &args.xi.0;
    let atomic = args.units == Units::Atomic;
    let scale = Scale::new(args.units, args.omega_p)?;
    match args.quantity {
        Quantity::Dispersion => {
            let grid = require_grid(args.k, "k", "dispersion")?;
            if grid.min() < 0.0 {
                return Err(CliError::Spec("wavenumbers must be non-negative".into()));
            }
            if grid.min() == 0.0 && xi.iter().any(|p| !p.is_linear()) {
                return Err(CliError::Spec(
                    "the k grid includes 0, where the dispersion diverges for xi > 0".into(),
                ));
            }
            let cols = if atomic {
                vec!["k_au", "xi", "omega_au"]
            } else {
                vec!["k_over_kp", "xi", "omega_over_wp"]
            };
            let rows = collect_rows(
                &points(xi, &grid),
                |&(p, k)| {
                    let y = omega_of_k(k / scale.wavenumber, p)?;
                    Ok(vec![vec![
                        Cell::Num(k),
                        Cell::Num(p.xi()),
                        Cell::Num(y * scale.frequency),
                    ]])
                },
                describe("k"),
            )?;
            Ok(Table {
                columns: cols,
                rows,
            })
        }
        Quantity::Velocity => {
            let grid = require_grid(args.k, "k", "velocity")?;
            if grid.min() <= 0.0 {
                return Err(CliError::Spec("velocities need wavenumbers above 0".into()));
            }
            let cols = if atomic {
                vec!["k_au", "xi", "v_ph_au", "v_g_au"]
            } else {
                vec!["k_over_kp", "xi", "v_ph", "v_g"]
            };
            let rows = collect_rows(
                &points(xi, &grid),
                |&(p, k)| {
                    let v = VelocityPoint::at(k / scale.wavenumber, p)?;
                    Ok(vec![vec![
                        Cell::Num(k),
                        Cell::Num(p.xi()),
                        Cell::Num(v.v_ph * scale.velocity),
                        Cell::Num(v.v_g * scale.velocity),
                    ]])
                },
                describe("k"),
            )?;
            Ok(Table {
                columns: cols,
                rows,
            })
        }
        Quantity::Wavenumber => {
            let grid = frequency_grid(args.omega, "wavenumber")?;
            let cols = if atomic {
                vec!["omega_au", "xi", "branch", "regime", "re_k_au", "im_k_au"]
            } else {
                vec![
                    "omega_over_wp",
                    "xi",
                    "branch",
                    "regime",
                    "re_k_over_kp",
                    "im_k_over_kp",
                ]
            };
            let rows = collect_rows(
                &points(xi, &grid),
                |&(p, w)| {
                    let pair = k_branches(w / scale.frequency, p)?;
                    Ok(Branch::BOTH
                        .iter()
                        .map(|&b| {
                            let k = pair.get(b);
                            vec![
                                Cell::Num(w),
                                Cell::Num(p.xi()),
                                Cell::Text(b.as_str()),
                                Cell::Text(k.regime.as_str()),
                                Cell::Num(k.value.re * scale.wavenumber),
                                Cell::Num(k.value.im * scale.wavenumber),
                            ]
                        })
                        .collect())
                },
                describe("omega"),
            )?;
            Ok(Table {
                columns: cols,
                rows,
            })
        }
        Quantity::Dielectric | Quantity::Reflectivity => {
            let dielectric = args.quantity == Quantity::Dielectric;
            let grid = frequency_grid(
                args.omega,
                if dielectric {
                    "dielectric"
                } else {
                    "reflectivity"
                },
            )?;
            let mut cols = vec![
                if atomic { "omega_au" } else { "omega_over_wp" },
                "xi",
                "branch",
                "regime",
            ];
            if dielectric {
                cols.extend(["re_zeta", "im_zeta", "re_eta", "im_eta"]);
            } else {
                cols.push("reflectivity");
            }
            let rows = collect_rows(
                &points(xi, &grid),
                |&(p, w)| {
                    let y = w / scale.frequency;
                    let regime = quasimode::dispersion::classify_regime(y, p);
                    Branch::BOTH
                        .iter()
                        .map(|&b| {
                            let r = OpticalResponse::at(y, p, b)?;
                            let mut row = vec![
                                Cell::Num(w),
                                Cell::Num(p.xi()),
                                Cell::Text(b.as_str()),
                                Cell::Text(regime.as_str()),
                            ];
                            if dielectric {
                                row.extend(
                                    [r.zeta.re, r.zeta.im, r.eta.re, r.eta.im].map(Cell::Num),
                                );
                            } else {
                                row.push(Cell::Num(r.reflectivity));
                            }
                            Ok(row)
                        })
                        .collect()
                },
                describe("omega"),
            )?;
            Ok(Table {
                columns: cols,
                rows,
            })
        }
        Quantity::Spectrum => {
            let grid = frequency_grid(args.omega, "spectrum")?;
            spectrum_table(
                xi,
                &grid,
                args.omega_p,
                &args.p,
                args.levels,
                args.charges,
                args.units,
            )
        }
        Quantity::Force => {
            let grid = require_grid(args.plates.d, "d", "force")?;
            force_table(
                xi,
                &grid,
                args.plates.area,
                args.charges,
                args.plates.photons,
            )
        }
    }
}

fn frequency_grid(grid: Option<GridSpec>, quantity: &str) -> CliResult<GridSpec> {
    let grid = require_grid(grid, "omega", quantity)?;
    if grid.min() < 0.0 {
        return Err(CliError::Spec("frequencies must be non-negative".into()));
    }
    Ok(grid)
}

/// Levels `0..levels` at every `(ξ, ω)`; frequencies and energies are in
/// the chosen unit system (`ħ = m = 1` in both).
pub fn spectrum_table(
    xi: &[Polarization],
    omega: &GridSpec,
    omega_p: f64,
    p: &Momentum,
    levels: u32,
    charges: u32,
    units: Units,
) -> CliResult<Table> {
    if levels == 0 {
        return Err(CliError::Spec("--levels must be at least 1".into()));
    }
    if omega.min() < 0.0 {
        return Err(CliError::Spec("frequencies must be non-negative".into()));
    }
    let system = match units {
        Units::Reduced => UnitSystem::Natural,
        Units::Atomic => UnitSystem::Atomic,
    };
    ModelParams::with_units(0.0, 1.0, omega_p, system)
        .map_err(|e| CliError::Spec(e.to_string()))?;
    let rows = collect_rows(
        &points(xi, omega),
        |&(pol, w)| {
            let params = ModelParams::with_units(pol.xi(), w, omega_p, system)?;
            (0..levels)
                .map(|n| {
                    let l = energy_level(&params, p, n, charges)?;
                    Ok(vec![
                        Cell::Num(w),
                        Cell::Num(pol.xi()),
                        Cell::Int(n.into()),
                        Cell::Num(l.energy),
                        Cell::Num(l.omega_eff),
                        Cell::Num(l.theta),
                        Cell::Num(l.sigma_sq),
                    ])
                })
                .collect()
        },
        describe("omega"),
    )?;
    Ok(Table {
        columns: vec![
            "omega",
            "xi",
            "n",
            "energy",
            "omega_eff",
            "theta",
            "sigma_sq",
        ],
        rows,
    })
}

/// Plate force at the zero-point minimum for each `(ξ, d)`, Gaussian
/// atomic units (`e = m = ħ = 1`).
pub fn force_table(
    xi: &[Polarization],
    d: &GridSpec,
    area: f64,
    charges: u32,
    photons: u32,
) -> CliResult<Table> {
    if d.min() <= 0.0 {
        return Err(CliError::Spec("plate separations must be positive".into()));
    }
    PlateGeometry::new(1.0, area, charges, photons).map_err(|e| CliError::Spec(e.to_string()))?;
    let units = ChargeUnits::ATOMIC;
    let rows = collect_rows(
        &points(xi, d),
        |&(pol, sep)| {
            let g = PlateGeometry::new(sep, area, charges, photons)?;
            Ok(vec![vec![
                Cell::Num(sep),
                Cell::Num(pol.xi()),
                Cell::Num(area),
                Cell::Int(charges.into()),
                Cell::Int(photons.into()),
                Cell::Num(plasma_frequency_plates(&g, &units)),
                Cell::Num(force_at_minimum(&g, &units, pol)),
                Cell::Num(force_at_minimum_bohr(&g, &units, pol)),
                Cell::Num(minimum_energy(&g, &units, pol)),
            ]])
        },
        describe("d"),
    )?;
    Ok(Table {
        columns: vec![
            "separation",
            "xi",
            "area",
            "charges",
            "photons",
            "omega_p",
            "force_min",
            "force_min_bohr",
            "energy_min",
        ],
        rows,
    })
}
