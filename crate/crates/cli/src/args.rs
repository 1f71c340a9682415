use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cdelta", version, about = "c-differential uniformity toolkit")]
pub struct Cli {
    /// Cap on worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe a field: modulus, generator, order
    Field(FieldCmd),
    /// Dump the c-DDT of a function for one c
    Cddt(FnCmd),
    /// c-differential uniformity for one c or a range of c
    Cdu(FnCmd),
    /// δ_{F,c} for every c
    Spectrum(FnCmd),
    /// Spectrum maxima of F + x^{p^i} for each i
    ScanMonomials(FnCmd),
    /// Univariate polynomial of a function
    Interpolate(FnCmd),
    /// Exhaustive verification suites
    Verify(VerifyCmd),
    /// DU / cDU / perturbed cDU table for S-boxes
    Report(ReportCmd),
    /// Character sums
    Charsum(CharsumCmd),
}

#[derive(Debug, Args, Clone, Default)]
pub struct FieldArgs {
    /// Characteristic
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    /// Extension degree
    #[arg(long)]
    pub n: Option<u32>,
    /// Defining polynomial as an integer (0x11b) or comma-separated
    /// coefficients from the constant term up (1,1,0,1,1,0,0,0,1)
    #[arg(long)]
    pub modulus: Option<String>,
    /// GF(2^8) with x^8 + x^4 + x^3 + x + 1
    #[arg(long)]
    pub aes_field: bool,
}

#[derive(Debug, Args, Clone, Default)]
pub struct OutputArgs {
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
    /// Write to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FieldCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FnCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    /// inv | mono:<e> | inv+mono:<t> | inv+lin:<file> | table:<file> | poly:<file>
    #[arg(long = "fn", default_value = "inv")]
    pub function: String,
    /// Shorthand for --fn table:<path>
    #[arg(long, conflicts_with = "function")]
    pub sbox: Option<PathBuf>,
    /// A single multiplier c
    #[arg(long, conflicts_with_all = ["all_c", "exclude_zero"])]
    pub c: Option<String>,
    /// Every c ≠ 1
    #[arg(long)]
    pub all_c: bool,
    /// Every c ∉ {0, 1}
    #[arg(long)]
    pub exclude_zero: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Gcd,
    Bluher,
    LemmaRoots,
    MainThm,
    SecondThm,
    Weil,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    T0,
    T1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kernel {
    Radical,
    Restated,
}

#[derive(Debug, Args)]
pub struct VerifyCmd {
    pub suite: Suite,
    /// Characteristic for a single point (otherwise the default grid)
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub t: Option<u32>,
    /// Perturbation for second-thm (default: both)
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
    /// Skip the n ≥ 3·gcd(n, t) admissibility rule
    #[arg(long)]
    pub relax: bool,
    /// Scan c ∉ {0, 1} instead of c ≠ 1
    #[arg(long)]
    pub exclude_zero: bool,
    /// Random linearized polynomials per field for the weil suite
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Kernel::Radical)]
    pub kernel: Kernel,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReportCmd {
    /// The built-in corpus (the default when no --sbox is given)
    #[arg(long)]
    pub corpus: bool,
    /// S-box JSON files: {"name", "n", "table"}
    #[arg(long)]
    pub sbox: Vec<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharsumKind {
    Gauss,
    Weil,
    Bounds,
}

#[derive(Debug, Args)]
pub struct CharsumCmd {
    pub kind: CharsumKind,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Linearized polynomial JSON {"a": [...]} (default: identity)
    #[arg(long)]
    pub lin: Option<PathBuf>,
    /// Single α for weil (default: every α ≠ 0)
    #[arg(long)]
    pub alpha: Option<String>,
    /// Single character index for gauss (default: every k)
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, value_enum, default_value_t = Kernel::Radical)]
    pub kernel: Kernel,
    #[command(flatten)]
    pub output: OutputArgs,
}
