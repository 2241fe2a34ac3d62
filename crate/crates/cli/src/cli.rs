use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::formats::Format;

#[derive(Debug, Parser)]
#[command(name = "tropos", version, about = "Idempotent semiring algebra from the command line")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Best weights from a source node: solve X = Aᵀ ⊙ X ⊕ e_source.
    Solve(SolveArgs),
    /// Kleene closure A* = I ⊕ A ⊕ A² ⊕ … of a graph.
    Closure(ClosureArgs),
    /// Cycle-mean eigenvalue and an eigenvector (maxplus or minplus).
    Eigen(GraphArgs),
    /// Idempotent integral of a grid function, optionally against a density.
    Integrate(IntegrateArgs),
    /// Legendre transform of a max-plus grid function on a slope range.
    Legendre(LegendreArgs),
    /// Deformed sums u ⊕_h v and their residuals for a list of h.
    Deform(DeformArgs),
    /// Interval solution of the single-source Bellman equation.
    IntervalSolve(IntervalSolveArgs),
    /// Corner locus of a tropical polynomial sampled on a grid.
    Tropical(TropicalArgs),
    /// Sample the amoeba of a plane curve under Log_h.
    Amoeba(AmoebaArgs),
    /// Hausdorff distance between amoeba and tropical curve for a list of h.
    Converge(ConvergeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Jacobi,
    GaussSeidel,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Edge list: `src dst weight` per line.
    pub graph: PathBuf,

    /// Semiring to read the weights in; overrides the file header.
    #[arg(long)]
    pub semiring: Option<String>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    #[arg(long)]
    pub source: String,

    #[arg(long, value_enum, default_value_t = Method::Jacobi)]
    pub method: Method,

    /// Iteration budget; defaults to twice the node count.
    #[arg(long)]
    pub max_iter: Option<usize>,

    /// Run both methods and fail with exit code 5 if they disagree.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    #[arg(long)]
    pub max_iter: Option<usize>,
}

#[derive(Debug, Args)]
pub struct IntervalSolveArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    #[arg(long)]
    pub source: String,

    #[arg(long)]
    pub max_iter: Option<usize>,
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    /// Grid function: `point value` per line.
    pub input: PathBuf,

    #[arg(long, default_value = "maxplus")]
    pub semiring: String,

    /// Density of a Maslov measure, on the same points.
    #[arg(long)]
    pub density: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LegendreArgs {
    /// Grid function with real points and finite values.
    pub input: PathBuf,

    /// Slope grid as `lo:hi:step`.
    #[arg(long, allow_hyphen_values = true)]
    pub slopes: String,
}

#[derive(Debug, Args)]
pub struct DeformArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub u: f64,

    #[arg(long, allow_negative_numbers = true)]
    pub v: f64,

    /// Comma-separated nonzero values of h.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    pub h: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct TropicalArgs {
    /// Tropical polynomial: `coeff exp_1 … exp_n` per line.
    pub poly: PathBuf,

    /// Lower corner of the box; one value is used for every axis.
    #[arg(long, value_delimiter = ',', default_value = "-2", allow_hyphen_values = true)]
    pub lo: Vec<f64>,

    /// Upper corner of the box; one value is used for every axis.
    #[arg(long, value_delimiter = ',', default_value = "2", allow_hyphen_values = true)]
    pub hi: Vec<f64>,

    #[arg(long, default_value_t = 0.05)]
    pub step: f64,

    /// Tie tolerance; defaults to half the step.
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Debug, Args)]
pub struct AmoebaArgs {
    /// Complex curve: `re im exp_x exp_y` per line.
    pub poly: PathBuf,

    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub h: f64,

    #[arg(long, default_value_t = 2000)]
    pub samples: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = tropos::tropical::DEFAULT_LOG_RADIUS)]
    pub log_radius: f64,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    /// Complex curve with unit-modulus coefficients.
    pub poly: PathBuf,

    /// Tropical polynomial to compare with; defaults to the tropicalization.
    #[arg(long)]
    pub tropical: Option<PathBuf>,

    #[arg(long, value_delimiter = ',', default_value = "1,0.5,0.25,0.125", allow_hyphen_values = true)]
    pub h: Vec<f64>,

    #[arg(long, default_value_t = 2000)]
    pub samples: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 0.005)]
    pub grid_step: f64,

    #[arg(long, default_value_t = tropos::tropical::DEFAULT_LOG_RADIUS)]
    pub log_radius: f64,
}
