//! Command-line configuration for batch runs.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable overriding the module dimension cap.
pub const CAP_ENV: &str = "OMEGA_FORGE_CAP";

#[derive(Parser, Debug, Clone)]
#[command(name = "omega-forge", version, about = "Exact Cayley-process computations on matrix monoids")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Apply powers of the Cayley process, or tabulate its constants.
    Omega(OmegaArgs),
    /// Find generators of invariants of binary forms, degree by degree.
    Invariants(InvariantsArgs),
    /// Polynomial dominant weights of M_n and the checks built on them.
    Weights(WeightsArgs),
    /// Run the seeded property suite.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputArgs {
    /// Output format; each command has its own default.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct OmegaArgs {
    /// Matrix size.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Polynomial in x11..xnn, in the plain text format.
    #[arg(long)]
    pub apply: Option<String>,
    /// Number of times to apply the process.
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    /// Tabulate constants for 1 <= s <= S.
    #[arg(long, value_name = "S")]
    pub constants: Option<u32>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct InvariantsArgs {
    /// Degree of the binary form.
    #[arg(long)]
    pub form_degree: u32,
    /// Largest degree searched in the coefficients.
    #[arg(long)]
    pub bound: u32,
    /// The determinant power s in I_{k+s,s}.
    #[arg(long, default_value_t = 0)]
    pub twist: u32,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Coefficient family for the determinant character.
    Det,
}

#[derive(Args, Debug, Clone)]
pub struct WeightsArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Weights are enumerated with every coordinate in [-B, B].
    #[arg(long = "box", value_name = "B")]
    pub bound: u32,
    /// Also tabulate free and forced-zero coefficients.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultKind {
    /// Perturb the process by a derivative, breaking equivariance.
    FirstRule,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Degree bound for random polynomials and for module families.
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Random cases per sampled property.
    #[arg(long, default_value_t = 12)]
    pub cases: usize,
    /// Replace the process by a deliberately broken one.
    #[arg(long, value_enum)]
    pub inject_fault: Option<FaultKind>,
    #[command(flatten)]
    pub out: OutputArgs,
}
