use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Star and fan Ramsey constructions, verifiers and small-case oracles.
#[derive(Debug, Parser)]
#[command(name = "fanramsey", version, about)]
pub struct Cli {
    /// Emit structured JSON instead of line-oriented text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Graph file format; inferred from the extension when omitted
    /// (`.g6` is graph6, anything else an edge list).
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ColorArg {
    Red,
    Blue,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an extremal colouring or graph and verify it.
    Construct(ConstructArgs),
    /// Check a colouring (red edge list) for a Ramsey lower-bound witness.
    Verify(VerifyArgs),
    /// Edmonds–Gallai decomposition of a graph.
    Decompose(DecomposeArgs),
    /// Gale–Ryser test and bipartite realisation of degree sequences.
    Realize(RealizeArgs),
    /// Look for a fan, or run conditioned random high-degree trials.
    FanFind(FanFindArgs),
    /// Exhaustive Ramsey number search on small orders.
    Search(SearchArgs),
    /// Evaluate closed forms and bounds.
    Formula(FormulaArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ConstructKind {
    /// No blue K_{1,m} and no red F_n, for n < m < n(n-1).
    StarFan,
    /// The m = 2n variant with simpler block sizes.
    StarFanSpecial,
    /// Two red K_{2n} joined in blue; no monochromatic F_n.
    Chromatic,
    /// An F_k-free graph on n vertices with many edges.
    Turan,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: ConstructKind,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    /// Write the red graph (or the Turán graph) here instead of printing it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Red graph of the colouring.
    pub input: PathBuf,
    /// Star size; omit to check for monochromatic F_n in both colours.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub input: PathBuf,
    /// Analyse the neighbourhood of this vertex in the colouring whose red
    /// graph is the input.
    #[arg(long, requires_all = ["color", "n"])]
    pub vertex: Option<usize>,
    #[arg(long, value_enum)]
    pub color: Option<ColorArg>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["xs", "interval"]))]
pub struct RealizeArgs {
    /// Degrees of the x side, comma separated.
    #[arg(long, value_delimiter = ',', requires = "ys")]
    pub xs: Option<Vec<usize>>,
    /// Degrees of the y side, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ys: Option<Vec<usize>>,
    /// Interval realisation parameters a,b,c,d,sigma.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub interval: Option<Vec<usize>>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["input", "trials"]))]
pub struct FanFindArgs {
    /// Graph to search (the red graph of a colouring with --color).
    pub input: Option<PathBuf>,
    /// Fan size to look for.
    #[arg(long, requires = "input")]
    pub k: Option<usize>,
    /// Search this colour class of the colouring whose red graph is the input.
    #[arg(long, value_enum, requires = "input")]
    pub color: Option<ColorArg>,
    /// Number of random colourings, each conditioned on a monochromatic
    /// degree of at least 3n, to run through the high-degree search.
    #[arg(long, requires = "n")]
    pub trials: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Two targets, blue first: `star M fan N`, `fan N fan N`, ...
    #[arg(num_args = 4, value_names = ["KIND", "SIZE", "KIND", "SIZE"], required = true)]
    pub targets: Vec<String>,
    #[arg(long)]
    pub cap: usize,
    #[arg(long, env = "FANRAMSEY_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    #[command(subcommand)]
    pub which: FormulaKind,
}

#[derive(Debug, Subcommand)]
pub enum FormulaKind {
    /// R(K_{1,m}, F_n) in its three regimes.
    StarFan {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Lower and upper bounds on R(F_n).
    Fan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
    },
    /// Minimum degree forcing F_k in an n-vertex graph.
    Dirac {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}
