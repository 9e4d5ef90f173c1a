//! Command-line grammar.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qkflag", version, about = "Exact Schubert calculus on the incidence variety Fl(1,n-1)")]
pub struct Cli {
    /// Worker threads for table products and verification sweeps.
    #[arg(long, global = true, env = "QKFLAG_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two Schubert classes.
    Product(ProductArgs),
    /// Emit the full multiplication table.
    Table(TableArgs),
    /// Run verification sweeps over the table.
    Verify(VerifyArgs),
    /// Compare the conjectural closed formula with the table.
    Conjecture(ConjectureArgs),
    /// Evaluate a closed-form correlator.
    Correlator(CorrelatorArgs),
    /// Balanced splitting types and stabilization inequalities.
    Flags(FlagsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A pair `i,j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair(pub u32, pub u32);

impl FromStr for Pair {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let v = parse_list(s)?;
        match v.as_slice() {
            [a, b] => Ok(Pair(u32::try_from(*a).map_err(|e| e.to_string())?, u32::try_from(*b).map_err(|e| e.to_string())?)),
            _ => Err(format!("expected two comma-separated integers, got '{s}'")),
        }
    }
}

/// A comma-separated list of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct List(pub Vec<u64>);

impl FromStr for List {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        parse_list(s).map(List)
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',').map(|x| x.trim().parse::<u64>().map_err(|e| format!("'{x}': {e}"))).collect()
}

#[derive(Debug, Args)]
pub struct TableSource {
    /// Load the table from a golden-file JSON instead of rebuilding it.
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_name = "i,j")]
    pub u: Pair,
    #[arg(long, value_name = "k,p")]
    pub v: Pair,
    /// Classical K-theory product instead of the quantum one.
    #[arg(long)]
    pub classical: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub source: TableSource,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Positivity,
    Ring,
    Classical,
    Degree,
    Chevalley,
    Arbitration,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "positivity,ring,classical,degree")]
    pub checks: Vec<Check>,
    /// Largest n for the associativity sweep.
    #[arg(long, default_value_t = qkflag::verify::DEFAULT_ASSOC_MAX)]
    pub assoc_max: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub source: TableSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Gate {
    /// The bracket carries `1 - Δ(t1)`, as printed.
    Printed,
    /// The bracket carries `Δ(t1)`.
    Flipped,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value = "printed")]
    pub gate: Gate,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub source: TableSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorrelatorKind {
    /// `⟨O_u, I_w⟩_d`.
    Two,
    /// `⟨O_u, O_v, I_w⟩_d`.
    Three,
    /// Three-point correlator of projective space `P^m`.
    Pn,
    /// Quantum part of `O_h ⋆ O_v` in one degree, from correlators.
    QuantumPart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DivisorArg {
    H1,
    H2,
}

#[derive(Debug, Args)]
pub struct CorrelatorArgs {
    /// Rank (unused for `pn`).
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, value_enum)]
    pub kind: CorrelatorKind,
    #[arg(long, value_name = "i,j")]
    pub u: Option<Pair>,
    #[arg(long, value_name = "k,p")]
    pub v: Option<Pair>,
    /// The class paired with the dual basis element `I_w`.
    #[arg(long, value_name = "s,t")]
    pub w: Option<Pair>,
    /// Curve degree `d1,d2` (for `pn`, a single integer `d`).
    #[arg(long, value_name = "d1,d2")]
    pub degree: Option<List>,
    #[arg(long)]
    pub h: Option<DivisorArg>,
    /// Dimension `m` of `P^m`.
    #[arg(long)]
    pub m: Option<u32>,
    /// Schubert indices `i1,i2,i3` of `P^m`.
    #[arg(long, value_name = "i1,i2,i3")]
    pub indices: Option<List>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["balanced", "splitting", "stabilized"])))]
pub struct FlagsArgs {
    /// Balanced admissible sequences for shape `--dims` and degrees `--degrees`.
    #[arg(long)]
    pub balanced: bool,
    /// Carry-over inequalities at step `--k`.
    #[arg(long)]
    pub splitting: bool,
    /// Numeric stabilization hypotheses for forgetting step `--k` with `--r` points.
    #[arg(long)]
    pub stabilized: bool,
    #[arg(long, value_name = "i_1,...,i_m")]
    pub dims: List,
    #[arg(long, value_name = "d_1,...,d_m")]
    pub degrees: List,
    /// Ambient dimension (defaults to `i_m + 1`).
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<u64>,
    /// Also run the exhaustive spread minimization and compare.
    #[arg(long)]
    pub oracle: bool,
    /// Enumeration bound on the total degree for `--oracle`.
    #[arg(long, default_value_t = 16)]
    pub bound: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}
