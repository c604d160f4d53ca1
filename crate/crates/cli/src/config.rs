use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mgs_core::triangulation::MAX_ENUMERATION_M;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Svg,
    Csv,
}

/// Construct and check maximal green sequences of type A quivers.
///
/// Input files hold a `quiver <n>`, `seed <n>` or `polygon <m>` document.
/// Exit status: 0 success, 1 verification failed, 2 input rejected,
/// 64 parse or usage error.
#[derive(Debug, Parser)]
#[command(name = "mgs", version)]
pub struct Cli {
    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads for searches and census runs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a minimal-length maximal green sequence.
    Generate {
        file: PathBuf,
        /// Also run the exhaustive search and require equal lengths.
        #[arg(long)]
        oracle: bool,
    },
    /// Check whether a sequence is a maximal green sequence and print its trace.
    Verify {
        file: PathBuf,
        /// Vertices separated by commas or spaces, first mutation first.
        sequence: String,
        /// Read the sequence as a composition, rightmost mutation first.
        #[arg(long)]
        right_to_left: bool,
    },
    /// Exhaustive search over green mutations; prints a JSON report.
    Search(SearchArgs),
    /// Check every triangulation of a range of polygons; one CSV row each.
    Census(CensusArgs),
    /// Graphviz or SVG drawing of a quiver, seed or triangulation.
    Dot {
        file: PathBuf,
        /// Draw a quiver file as its framed seed.
        #[arg(long)]
        framed: bool,
        /// Draw a polygon file as its quiver.
        #[arg(long)]
        quiver: bool,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub shortest: bool,
    #[arg(long)]
    pub longest: bool,
    #[arg(long)]
    pub spectrum: bool,
    #[arg(long)]
    pub count: bool,
    /// Give up after this many distinct seeds.
    #[arg(long, default_value_t = 5_000_000)]
    pub max_nodes: usize,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Largest polygon size.
    #[arg(long, default_value_t = 8)]
    pub limit_m: usize,
    /// Smallest polygon size.
    #[arg(long, default_value_t = 3)]
    pub min_m: usize,
    /// Check every maximal green sequence against the triangulation up to this polygon size.
    #[arg(long, default_value_t = 8)]
    pub witness_max_m: usize,
    /// Check a random subset of this many triangulations.
    #[arg(long)]
    pub sample: Option<usize>,
    /// Random seed for --sample.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// A validated invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub jobs: usize,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig, String> {
        let allowed: &[Format] = match cli.command {
            Command::Generate { .. } | Command::Verify { .. } => &[Format::Text, Format::Json],
            Command::Search(_) => &[Format::Json],
            Command::Census(_) => &[Format::Csv, Format::Json],
            Command::Dot { .. } => &[Format::Dot, Format::Svg],
        };
        let format = cli.format.unwrap_or(allowed[0]);
        if !allowed.contains(&format) {
            let names: Vec<String> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
            return Err(format!(
                "format {:?} is not available here (expected one of {})",
                format!("{format:?}").to_lowercase(),
                names.join(", ")
            ));
        }
        let jobs = match cli.jobs {
            Some(0) => return Err("--jobs must be positive".into()),
            Some(j) => j,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        match &cli.command {
            Command::Search(a) if a.max_nodes == 0 => return Err("--max-nodes must be positive".into()),
            Command::Census(a) => {
                if a.min_m < 3 || a.min_m > a.limit_m {
                    return Err(format!(
                        "need 3 <= --min-m <= --limit-m, got {} and {}",
                        a.min_m, a.limit_m
                    ));
                }
                if a.limit_m > MAX_ENUMERATION_M {
                    return Err(format!("--limit-m is at most {MAX_ENUMERATION_M}"));
                }
                if a.sample == Some(0) {
                    return Err("--sample must be positive".into());
                }
            }
            _ => {}
        }
        Ok(RunConfig {
            command: cli.command,
            format,
            jobs,
        })
    }
}
