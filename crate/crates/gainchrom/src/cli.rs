//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gainchrom_core::chromatic::DEFAULT_EDGE_BOUND;
use gainchrom_core::identities::CHECK_EDGE_BOUND;

#[derive(Debug, Parser)]
#[command(name = "gainchrom", version, about = "Exact chromatic functions of integral gain graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a chromatic function at sample points.
    Eval(EvalArgs),
    /// Print a chromatic polynomial.
    Poly(PolyArgs),
    /// Count the regions of the graph's hyperplane arrangement.
    Regions(RegionsArgs),
    /// Check the expansion identities and invariants.
    Verify(VerifyArgs),
    /// Lower-degree sequences of overlap graphs.
    #[command(subcommand)]
    Lds(LdsCommand),
}

/// Where the gain graph comes from. Exactly one of `--graph`, `--family`,
/// `--partition` and `--minus-edges` is given.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// JSON graph file `{"n": N, "edges": [[tail, head, gain], ...]}`, 1-based.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Named family, sized by `--n`.
    #[arg(long, value_enum, requires = "n")]
    pub family: Option<Family>,
    /// Order of the family member.
    #[arg(long)]
    pub n: Option<usize>,
    /// Set partition such as `1 3|2 5|4 6`, giving one vertex per block.
    #[arg(long, value_name = "BLOCKS")]
    pub partition: Option<String>,
    /// JSON simple graph `{"n": N, "edges": [[u, v], ...]}`, giving the
    /// Shi graph plus a gain `-1` link on each of its edges.
    #[arg(long, value_name = "FILE")]
    pub minus_edges: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Catalan,
    HollowCatalan,
    Shi,
    Linial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// Colorings with colors 1..=q.
    Integral,
    /// Colorings with colors in Z_q.
    Modular,
    /// Zero-free chromatic polynomial.
    ZeroFree,
    /// Chromatic polynomial (total polynomial at z = 1).
    Chromatic,
    /// Total chromatic polynomial in q and z.
    Total,
    /// Number of regions of the arrangement.
    Regions,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum)]
    pub function: Function,
    /// Sample points; repeat the flag or separate with commas.
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<u64>,
    /// Value of z for the total polynomial.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub z: i64,
    /// Count colorings directly even when a family has a closed form.
    #[arg(long)]
    pub exact: bool,
    /// Largest edge count for which a polynomial is computed.
    #[arg(long, default_value_t = DEFAULT_EDGE_BOUND)]
    pub bound: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum)]
    pub function: Function,
    /// Exit with status 1 unless the polynomial equals this one.
    #[arg(long, value_name = "POLY")]
    pub compare: Option<String>,
    #[arg(long, default_value_t = DEFAULT_EDGE_BOUND)]
    pub bound: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RegionsArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = DEFAULT_EDGE_BOUND)]
    pub bound: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    /// Expansions over neutral edge subsets and flats.
    First,
    /// Expansion over stable partitions of the neutral subgraph.
    Second,
    /// Expansions over all partitions for graphs without neutral edges.
    Complete,
    /// Relations between the Catalan and hollow Catalan families.
    Catalan,
    /// Linial graphs as sums over set partitions.
    Linial,
    /// Total polynomial expansions.
    Total,
    /// Switching, simplification, loops, deletion-contraction and more.
    Invariance,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Largest family order checked.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Check this graph instead of the built-in corpus.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Seed for the random switchings and unions.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = CHECK_EDGE_BOUND)]
    pub bound: usize,
    /// Print every check, not only failures.
    #[arg(long)]
    pub verbose: bool,
    /// One JSON object per check.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum LdsCommand {
    /// Build a set partition whose overlap graph has this lower-degree sequence.
    Realize {
        /// Sequence such as `0,1,1`.
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Report whether a sequence is a lower-degree sequence on `[n]`.
    Check {
        sequence: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}
