use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gsp_frames::{OperatorKind, DEFAULT_TOL};

#[derive(Debug, Parser)]
#[command(name = "gsp-frames", version, about = "Graph Fourier analysis and frame criteria for generalized translates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub output: Output,

    /// Absolute tolerance on spectral-domain identities.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorArg {
    Laplacian,
    Adjacency,
}

impl From<OperatorArg> for OperatorKind {
    fn from(o: OperatorArg) -> Self {
        match o {
            OperatorArg::Laplacian => OperatorKind::Laplacian,
            OperatorArg::Adjacency => OperatorKind::Adjacency,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Onb,
    Frame,
    Independence,
    Orthonormal,
    Biorthogonal,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Edge list: optional `n <N>` header, then `i j [w]` per line, 1-based.
    #[arg(long)]
    pub graph: PathBuf,

    /// Vertex count, for edge lists without a header.
    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long, value_enum, default_value_t = OperatorArg::Laplacian)]
    pub operator: OperatorArg,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GeneratorArgs {
    /// Kernel file (or inline `poly: ...` / `lagrange: ...`); the generator
    /// has coefficients `kernel(λ_l)`.
    #[arg(long)]
    pub kernel: Option<String>,

    /// Spectral coefficients `ĝ(λ_1),...,ĝ(λ_N)` as a comma-separated list;
    /// complex entries as `a+bi`. Repeat for several generators.
    #[arg(long, allow_hyphen_values = true)]
    pub ghat: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of the graph operator and decomposition residuals.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Basis, frame and independence tests for the translates of a generator.
    Translates {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long, value_enum)]
        check: Check,
        /// Number of translates `T_1 g..T_m g` (independence, orthonormal).
        #[arg(long)]
        m: Option<usize>,
        /// Second generator for the biorthogonality test.
        #[arg(long, allow_hyphen_values = true)]
        hhat: Option<String>,
    },
    /// Frame test for the spectral graph wavelet system.
    Wavelet {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        kernel: String,
        /// Comma-separated positive scales.
        #[arg(long, allow_hyphen_values = true)]
        scales: String,
    },
    /// Frame test for modulated translates `{T_i M_s g}`.
    Modulation {
        #[command(flatten)]
        graph: GraphArgs,
        /// Vertex values `g(1),...,g(N)`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "ghat", required_unless_present = "ghat")]
        signal: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        ghat: Option<String>,
    },
    /// Duality test; without `--hhat` the canonical dual is used.
    Dual {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, required = true, allow_hyphen_values = true)]
        ghat: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        hhat: Vec<String>,
    },
    /// Reproduces the K(1,3) star-graph wavelet example.
    StarExample {
        /// Comma-separated scales (default 0.5,1.5).
        #[arg(long)]
        scales: Option<String>,
    },
}
