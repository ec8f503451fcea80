use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasimode::Momentum;

use crate::grid::{parse_momentum, GridSpec, NumList, XiList};

#[derive(Debug, Parser)]
#[command(
    name = "quasimode",
    version,
    about = "Charge coupled to a single quantized field mode"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate one quantity over a grid for several polarizations.
    Sweep(SweepArgs),
    /// Write the figure datasets into a directory.
    Figures(FiguresArgs),
    /// Diagonalize the Fock-space Hamiltonian and compare with the analytic spectrum.
    Verify(VerifyArgs),
    /// Zero-point plate force over a range of separations.
    Force(ForceArgs),
    /// Energy levels at given parameters.
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Dispersion,
    Wavenumber,
    Dielectric,
    Reflectivity,
    Velocity,
    Spectrum,
    Force,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Units {
    /// Wavenumbers in k_p, frequencies in ω_p, velocities in c.
    #[default]
    Reduced,
    /// Hartree atomic units.
    Atomic,
}

impl Units {
    pub fn as_str(self) -> &'static str {
        match self {
            Units::Reduced => "reduced",
            Units::Atomic => "atomic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    /// Comma-separated polarization parameters in [0, 1].
    #[arg(long, default_value = "0,0.2,0.5,1")]
    pub xi: XiList,
    /// Wavenumber grid, `start:stop:count[:log]` or one value.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<GridSpec>,
    /// Frequency grid, `start:stop:count[:log]` or one value.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<GridSpec>,
    /// Plasma frequency; sets the scale for atomic units and the spectrum.
    #[arg(long, default_value_t = 1.0)]
    pub omega_p: f64,
    #[arg(long, value_enum, default_value_t = Units::Reduced)]
    pub units: Units,
    /// Charge momentum `major,minor,perp` for the spectrum.
    #[arg(long, value_parser = parse_momentum, default_value = "0,0,0", allow_hyphen_values = true)]
    pub p: Momentum,
    /// Number of levels for the spectrum.
    #[arg(long, default_value_t = 1)]
    pub levels: u32,
    #[arg(long, default_value_t = 1)]
    pub charges: u32,
    #[command(flatten)]
    pub plates: PlateArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PlateArgs {
    /// Plate separation grid, atomic units.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<GridSpec>,
    /// Plate area, atomic units.
    #[arg(long, default_value_t = 1.0)]
    pub area: f64,
    /// Photons in the mode.
    #[arg(long, default_value_t = 0)]
    pub photons: u32,
}

#[derive(Debug, Clone, Args)]
pub struct FiguresArgs {
    /// Directory for the CSV files; created if missing.
    #[arg(long, default_value = "figures")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Polarizations; with no case flags the built-in 9-case grid is used.
    #[arg(long)]
    pub xi: Option<XiList>,
    #[arg(long)]
    pub omega: Option<NumList>,
    #[arg(long)]
    pub omega_p: Option<NumList>,
    /// Momentum `major,minor,perp`; repeat for several.
    #[arg(long, value_parser = parse_momentum, allow_hyphen_values = true)]
    pub p: Vec<Momentum>,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = quasimode::fock::DEFAULT_CUTOFF_CAP)]
    pub cutoff_cap: usize,
    #[arg(long, default_value_t = 5)]
    pub levels: usize,
    #[arg(long, default_value_t = 1)]
    pub charges: u32,
    /// JSON report file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ForceArgs {
    #[arg(long, default_value = "1")]
    pub xi: XiList,
    #[arg(long, default_value_t = 1)]
    pub charges: u32,
    #[command(flatten)]
    pub plates: PlateArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[arg(long, default_value = "1")]
    pub xi: XiList,
    /// Bare mode frequency, one value or a grid.
    #[arg(long, default_value = "1")]
    pub omega: GridSpec,
    #[arg(long, default_value_t = 1.0)]
    pub omega_p: f64,
    #[arg(long, value_parser = parse_momentum, default_value = "0,0,0", allow_hyphen_values = true)]
    pub p: Momentum,
    #[arg(long, default_value_t = 5)]
    pub levels: u32,
    #[arg(long, default_value_t = 1)]
    pub charges: u32,
    #[arg(long, value_enum, default_value_t = Units::Reduced)]
    pub units: Units,
    #[command(flatten)]
    pub output: OutputArgs,
}
