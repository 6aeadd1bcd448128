//! `deckkit`: k-decks, reconstruction numbers and equal-deck surveys from
//! the command line.
//!
//! Exit codes: 0 when the command succeeded and any claim checked holds,
//! 1 on a mismatch, disagreement or ambiguous reconstruction, 2 on bad
//! input or an inconsistent deck.

mod commands;
mod suites;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "deckkit",
    version,
    about = "Exact k-decks of graphs with maximum degree 2"
)]
struct Cli {
    /// Worker threads for the parallel engines.
    #[arg(long, global = true, env = "DECKKIT_THREADS")]
    threads: Option<usize>,

    /// Print complete JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum UniverseArg {
    Maxdeg2,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    /// The equal-deck identities for cycles and paths, with sharpness.
    Main,
    /// Long-cycle 2-regular graphs: equal decks and independent sets.
    Stanley,
    /// Degree-3 graphs sharing a 3-deck with a max-degree-2 graph.
    Exceptions,
    /// Manvel's star forests.
    Manvel,
    /// The reconstruction-number formula against exhaustive search.
    Rho,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ScopeArg {
    All,
    Path,
    Cycle,
    General,
}

#[derive(Subcommand)]
enum Command {
    /// Print the k-deck of a graph.
    Deck {
        /// Component spec such as `2C5+P3+3P1`.
        #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
        graph: Option<String>,
        /// Edge-list file: `n m` then one `u v` per line. Needs --brute.
        #[arg(long, requires = "brute")]
        edges: Option<PathBuf>,
        #[arg(short)]
        k: usize,
        /// Use subset enumeration instead of the componentwise engine.
        #[arg(long)]
        brute: bool,
    },
    /// Compare the k-decks of two graphs.
    Compare {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        brute: bool,
    },
    /// Evaluate the reconstruction-number formula.
    Rho {
        #[arg(long)]
        graph: String,
        /// Also search the given universe and compare.
        #[arg(long)]
        verify: Option<UniverseArg>,
        /// Largest order the search may handle; 9 enables the slow
        /// general universe of order 9.
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Reconstruct a max-degree-2 graph from a deck in JSON form.
    Reconstruct {
        #[arg(long)]
        deck: PathBuf,
        /// Vertex count; defaults to the deck's own.
        #[arg(short)]
        n: Option<usize>,
    },
    /// List the nontrivial k-deck equivalence classes of a universe.
    Pairs {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum)]
        universe: UniverseArg,
        /// Permit the order-9 general universe (several minutes).
        #[arg(long)]
        allow_order_nine: bool,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Size bound; each suite documents its default.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Regenerate the oracle fixtures.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        scope: ScopeArg,
    },
}

/// What a command prints and how it exits.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: serde_json::Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Deck {
            graph,
            edges,
            k,
            brute,
        } => commands::deck(graph, edges, k, brute),
        Command::Compare { g1, g2, k, brute } => commands::compare(&g1, &g2, k, brute),
        Command::Rho {
            graph,
            verify,
            nmax,
        } => commands::rho(&graph, verify, nmax),
        Command::Reconstruct { deck, n } => commands::reconstruct(&deck, n),
        Command::Pairs {
            n,
            k,
            universe,
            allow_order_nine,
        } => commands::pairs(n, k, universe, allow_order_nine),
        Command::Verify { suite, max_n } => suites::run(suite, max_n),
        Command::Fixtures { out, scope } => commands::fixtures(&out, scope),
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("JSON value serializes")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
