mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rekolor",
    version,
    about = "Recoloring sequences between proper graph colorings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Through coherent colorings of a tree decomposition; needs k >= tw + 2.
    Tw,
    /// Through an optimal greedy coloring; needs k >= grundy number + 1.
    Grundy,
    /// Shortest sequence by exhaustive search.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Star,
    BipartiteMinusMatching,
    Random,
    PartialKtree,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a recoloring sequence from START to TARGET.
    ///
    /// START or TARGET may be the word `random` for a seeded random proper
    /// coloring. The sequence goes to --out, or to stdout with the report on
    /// stderr.
    Recolor {
        graph: PathBuf,
        start: String,
        target: String,
        #[arg(long, value_enum, default_value = "tw")]
        method: Method,
        /// Number of colors; defaults to the engine's minimum.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
        /// Also compute the exact distance (exponential).
        #[arg(long)]
        with_oracle: bool,
        /// Tree decomposition to use instead of an exact one (tw method).
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Print treewidth, chromatic number, grundy number and maximum degree.
    Stats {
        graph: PathBuf,
        #[arg(long)]
        exact_tw: bool,
        #[arg(long)]
        exact_grundy: bool,
        #[arg(long)]
        exact_chromatic: bool,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Check a sequence file against a graph and print the final coloring.
    Verify {
        graph: PathBuf,
        sequence: PathBuf,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Explore the recoloring graph R_k(G) exhaustively.
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        k: u32,
        /// Also compute the diameter (one search per state).
        #[arg(long)]
        diameter: bool,
        /// Write the edge list of state indices to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Write a generated graph in DIMACS format.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Width of the partial k-tree.
        #[arg(long, default_value_t = 2)]
        width: usize,
        /// Edge probability (random) or edge keep probability (partial-ktree).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the witness decomposition of a partial k-tree here.
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Recolor {
            graph,
            start,
            target,
            method,
            k,
            seed,
            out,
            report,
            with_oracle,
            decomposition,
        } => commands::recolor(commands::RecolorArgs {
            graph,
            start,
            target,
            method,
            k,
            seed,
            out,
            report,
            with_oracle,
            decomposition,
        }),
        Command::Stats {
            graph,
            exact_tw,
            exact_grundy,
            exact_chromatic,
            report,
        } => commands::stats(&graph, exact_tw, exact_grundy, exact_chromatic, report),
        Command::Verify { graph, sequence, k } => commands::verify(&graph, &sequence, k),
        Command::Oracle {
            graph,
            k,
            diameter,
            dump,
            report,
        } => commands::oracle(&graph, k, diameter, dump.as_deref(), report),
        Command::Generate {
            family,
            n,
            width,
            p,
            seed,
            out,
            decomposition,
        } => commands::generate(
            family,
            n,
            width,
            p,
            seed,
            out.as_deref(),
            decomposition.as_deref(),
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rekolor: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
