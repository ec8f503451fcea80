//! Command-line front end for the quasimode model: sweeps, figure datasets,
//! Fock-space verification, plate forces and energy spectra.

pub mod args;
pub mod error;
pub mod figures;
pub mod grid;
pub mod sweep;
pub mod table;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use args::{Cli, Command, Format, OutputArgs};
use error::{CliError, CliResult, EXIT_OK, EXIT_VERIFY_FAILED};
use table::Table;

fn open_output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::io(p.display().to_string(), e))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<W: Write>(mut w: W, value: &impl serde::Serialize) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")
        .and_then(|_| w.flush())
        .map_err(|e| CliError::io("output", e))
}

fn emit_table(table: &Table, name: &str, units: &str, output: &OutputArgs) -> CliResult<()> {
    let mut w = open_output(output.out.as_deref())?;
    match output.format {
        Format::Csv => table.write_csv(&mut w)?,
        Format::Json => write_json(&mut w, &table.to_json(name, units))?,
    }
    w.flush().map_err(|e| CliError::io("output", e))
}

/// Run one command and return its exit code; errors carry their own code.
pub fn run(cli: &Cli) -> CliResult<i32> {
    match &cli.command {
        Command::Sweep(a) => {
            let table = sweep::run_sweep(a)?;
            let name = format!("{:?}", a.quantity).to_lowercase();
            emit_table(&table, &name, a.units.as_str(), &a.output)?;
        }
        Command::Figures(a) => {
            for path in figures::emit_figure_datasets(&a.out)? {
                eprintln!("wrote {}", path.display());
            }
        }
        Command::Force(a) => {
            let d = a
                .plates
                .d
                .ok_or_else(|| CliError::Spec("force needs --d".into()))?;
            let table =
                sweep::force_table(&a.xi.0, &d, a.plates.area, a.charges, a.plates.photons)?;
            emit_table(&table, "force", "atomic", &a.output)?;
        }
        Command::Spectrum(a) => {
            let table = sweep::spectrum_table(
                &a.xi.0, &a.omega, a.omega_p, &a.p, a.levels, a.charges, a.units,
            )?;
            emit_table(&table, "spectrum", a.units.as_str(), &a.output)?;
        }
        Command::Verify(a) => {
            let cases = verify::cases_from_args(a);
            let summary = verify::run_verify(&cases, a.tol, a.cutoff_cap, a.levels, a.charges)?;
            for r in &summary.reports {
                eprintln!(
                    "{} xi={} omega={} omega_p={} p=({},{},{}) max_rel_err={:.3e} cutoff={}",
                    if r.converged { "ok  " } else { "FAIL" },
                    r.xi,
                    r.omega,
                    r.omega_p,
                    r.momentum.major,
                    r.momentum.minor,
                    r.momentum.perp,
                    r.max_rel_err,
                    r.cutoff_used,
                );
            }
            write_json(open_output(a.out.as_deref())?, &summary)?;
            if !summary.all_converged {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}
