//! `abshift`: command-line front end for (alpha, beta)-shift computations.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use abshift::{Rational, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{Emitted, Failure};

#[derive(Parser, Debug)]
#[command(
    name = "abshift",
    version,
    about = "Symbolic dynamics of (alpha, beta)-transformations"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Translation parameter, as `p/q` or an integer.
    #[arg(long, global = true, value_parser = parse_rational)]
    pub alpha: Option<Rational>,

    /// Slope, as `p/q` or an integer.
    #[arg(long, global = true, value_parser = parse_rational)]
    pub beta: Option<Rational>,

    /// Emit canonical JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Emit CSV; with a path, write it there instead of standard output.
    #[arg(long, global = true, num_args = 0..=1, default_missing_value = "-", value_name = "PATH")]
    pub csv: Option<String>,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write a run manifest (version, parameters, timing, output digest) to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub manifest: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Digits and orbit of 0, the left limit at 1, or a rational point.
    Expand(ExpandArgs),
    /// Admissibility, enumeration and counting of words.
    #[command(subcommand)]
    Lang(LangCommand),
    /// The follower graph truncated at a depth.
    Graph(GraphArgs),
    /// Word surgery and its exhaustive property checks.
    #[command(subcommand)]
    Surgery(SurgeryCommand),
    /// The obstruction series along the expansion of 1.
    Criterion(CriterionArgs),
    /// Pressure estimates for a locally constant potential.
    Pressure(PressureArgs),
    /// Cylinder estimate against the bound constants for one word.
    Gibbs(GibbsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Zero,
    One,
    Point,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    /// The point to expand when `--which point`.
    #[arg(long, value_parser = parse_rational, required_if_eq("which", "point"))]
    pub x: Option<Rational>,
    #[arg(long, default_value_t = 20)]
    pub digits: usize,
}

#[derive(Subcommand, Debug)]
pub enum LangCommand {
    /// Is the word admissible?
    Check {
        #[arg(long, value_parser = parse_word)]
        word: Word,
    },
    /// All admissible words of a length, in lexicographic order.
    Enum {
        #[arg(long)]
        length: usize,
    },
    /// Number of admissible words of length `--length`.
    Count {
        #[arg(long)]
        length: usize,
    },
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[arg(long)]
    pub depth: usize,
    /// Write the graph in DOT format (`-` for standard output).
    #[arg(long, value_name = "PATH")]
    pub dot: Option<String>,
    /// Print vertex, edge and out-degree counts.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Subcommand, Debug)]
pub enum SurgeryCommand {
    /// `hat` of an admissible word.
    Hat {
        #[arg(long, value_parser = parse_word)]
        word: Word,
    },
    /// `tilde` of an admissible word.
    Tilde {
        #[arg(long, value_parser = parse_word)]
        word: Word,
    },
    /// The extension letter of an admissible word.
    G {
        #[arg(long, value_parser = parse_word)]
        word: Word,
    },
    /// Exhaustive property suite; exits 1 if any property fails.
    Check {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Random long words checked on top of the sweep.
        #[arg(long, default_value_t = 200)]
        random_count: usize,
        #[arg(long, default_value_t = 40)]
        random_length: usize,
    },
}

#[derive(Args, Debug)]
pub struct CriterionArgs {
    #[arg(long)]
    pub horizon: usize,
}

#[derive(Args, Debug)]
pub struct PressureArgs {
    /// Half-width of the centred sum.
    #[arg(long)]
    pub n: usize,
    /// Potential table as JSON (default: zero).
    #[arg(long, value_name = "PATH")]
    pub phi: Option<PathBuf>,
    /// Also report the sum restricted to words ending at the graph origin.
    #[arg(long, requires = "m")]
    pub restricted: bool,
    /// Word length for the restricted and full sums.
    #[arg(long)]
    pub m: Option<usize>,
    /// Tolerance for comparing the restricted sum with the centred estimate.
    #[arg(long, requires = "restricted")]
    pub epsilon: Option<f64>,
}

#[derive(Args, Debug)]
pub struct GibbsArgs {
    #[arg(long, value_parser = parse_word)]
    pub word: Word,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub epsilon: f64,
    #[arg(long, value_name = "PATH")]
    pub phi: Option<PathBuf>,
    /// Length from which the bounds are expected to hold.
    #[arg(long)]
    pub min_m: Option<usize>,
    /// Also report the cylinder estimate for every n up to `--n`.
    #[arg(long)]
    pub curve: bool,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: abshift::Error| e.to_string())
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e: abshift::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    if let Some(workers) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::dispatch(&cli) {
        Ok(Emitted { stdout, failed }) => {
            print!("{stdout}");
            if let Some(path) = &cli.global.manifest {
                let manifest = output::RunManifest::new(&cli, &stdout, started.elapsed());
                if let Err(e) = std::fs::write(path, manifest.to_json()) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(u8::from(failed))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
