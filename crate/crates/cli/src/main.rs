//! `lapmotif` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a precondition or check fails, 2 when an
//! input cannot be read or parsed (including bad command-line usage).

mod commands;
mod files;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "lapmotif",
    version,
    about = "Normalized graph Laplacian spectra and eigenvalue-1 constructions"
)]
pub struct Cli {
    /// Machine-readable output on stdout.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Write a standard graph.
    Gen {
        kind: GenKind,
        param: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Eigenvalues of the normalized Laplacian with multiplicities.
    Spectrum {
        #[arg(short)]
        i: PathBuf,
        /// Grouping tolerance; defaults to LAPMOTIF_TOL or 1e-8.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        eigenvectors: bool,
    },
    /// Exact multiplicity of eigenvalue 1.
    M1 {
        #[arg(short)]
        i: PathBuf,
        /// Write the kernel basis, one function per line.
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Exact eigenpair check; exits 1 when it fails.
    Verify {
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        f: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Graph operations.
    #[command(subcommand)]
    Op(OpCommand),
    /// Blocks with a prescribed (value, excess) pair and the embedding
    /// construction.
    #[command(subcommand)]
    Synth(SynthCommand),
    /// Copies of a small pattern inside a graph.
    Count {
        #[arg(short)]
        i: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GenKind {
    Chain,
    Cycle,
    Complete,
    Petal,
}

#[derive(Args)]
pub struct OpIo {
    /// Input graph.
    #[arg(short)]
    pub i: PathBuf,
    /// Output graph.
    #[arg(short)]
    pub o: PathBuf,
    /// Write the constructed function here.
    #[arg(long)]
    pub emit_function: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum OpCommand {
    DoubleVertex {
        #[command(flatten)]
        io: OpIo,
        #[arg(long)]
        vertex: usize,
    },
    DoubleMotif {
        #[command(flatten)]
        io: OpIo,
        /// Motif vertices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<usize>,
        /// Function on the motif, indexed by position in --vertices.
        #[arg(short)]
        f: Option<PathBuf>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    DoubleEdge {
        #[command(flatten)]
        io: OpIo,
        #[arg(long, num_args = 2, value_names = ["P1", "P2"], required = true)]
        edge: Vec<usize>,
        /// Which eigenvalue 1 ∓ 1/√(n₁n₂) the emitted function belongs to.
        #[arg(long, value_enum, default_value = "minus")]
        mode: EdgeModeArg,
    },
    DoubleGraph {
        #[command(flatten)]
        io: OpIo,
    },
    Split {
        #[command(flatten)]
        io: OpIo,
        #[arg(short)]
        f: PathBuf,
        #[arg(long, value_delimiter = ',')]
        shared: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        first: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        second: Vec<usize>,
        /// Edge `u,v` inside the shared set that goes to the first half.
        #[arg(long = "first-edge", value_parser = parse_pair)]
        first_edges: Vec<(usize, usize)>,
        /// Edge `u,v` inside the shared set that goes to the second half.
        #[arg(long = "second-edge", value_parser = parse_pair)]
        second_edges: Vec<(usize, usize)>,
    },
    Join {
        #[command(flatten)]
        io: OpIo,
        #[arg(long)]
        at: usize,
        /// Second graph.
        #[arg(long)]
        with: PathBuf,
        #[arg(long)]
        with_at: usize,
        /// Eigenfunction on the first graph; requires --with-function.
        #[arg(short, requires = "with_function")]
        f: Option<PathBuf>,
        #[arg(long, requires = "f")]
        with_function: Option<PathBuf>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    AttachChain2 {
        #[command(flatten)]
        io: OpIo,
        #[arg(short)]
        f: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    Merge {
        #[command(flatten)]
        io: OpIo,
        #[arg(short)]
        f: PathBuf,
        /// Pair `p,q`; q is identified into p.
        #[arg(long = "pair", value_parser = parse_pair, required = true)]
        pairs: Vec<(usize, usize)>,
    },
    Connect {
        #[command(flatten)]
        io: OpIo,
        #[arg(short)]
        f: PathBuf,
        /// Pair `p,q` to join by a new edge.
        #[arg(long = "pair", value_parser = parse_pair, required = true)]
        pairs: Vec<(usize, usize)>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum EdgeModeArg {
    Minus,
    Plus,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BlockKindArg {
    Triangle,
    Pentagon,
}

/// Block outputs are written as `FILE`, `FILE.fn` and `FILE.block.json`.
#[derive(Subcommand)]
pub enum SynthCommand {
    Block {
        #[arg(long, value_enum)]
        kind: BlockKindArg,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(short)]
        o: PathBuf,
    },
    Rotate {
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    Negate {
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    Join {
        #[arg(short, required = true)]
        i: Vec<PathBuf>,
        #[arg(short)]
        o: PathBuf,
    },
    Realize {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(short)]
        o: PathBuf,
    },
    /// Writes the graph to `-o` and the balanced function to `FILE.fn`.
    Embed {
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        f: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `p,q`, got {s:?}"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("{x:?} is not a vertex id"))
    };
    Ok((parse(a)?, parse(b)?))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
