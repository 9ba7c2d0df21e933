mod check;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypoham::grinberg::verify_completeness;
use hypoham::hamilton::SearchConfig;
use hypoham::pipeline::{format_stats_csv, format_stats_table, load_seeds, run_pipeline, LevelKey};
use hypoham::{Catalog, PipelineConfig};

/// Orders above this need `--long`.
const DESK_ORDER: usize = 26;
const DESK_GRINBERG: usize = 42;

#[derive(Parser, Debug)]
#[command(name = "hypoham", version, about = "Planar hypohamiltonian graph toolkit")]
struct Cli {
    /// Worker threads; 1 gives fully sequential runs.
    #[arg(long, global = true, env = "HYPOHAM_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// planar_code if the file starts with the header or looks binary,
    /// rotation text otherwise.
    Auto,
    Pc,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Hamiltonian,
    Traceable,
    Hypohamiltonian,
    Hypotraceable,
    Planar,
    ThreeConnected,
    Grinbergian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Deflate,
    Inflate,
    Thomassen,
    Insert,
    Join4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Pair {
    FirstThird,
    SecondFourth,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report properties of every graph in a file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        /// Exit with status 1 unless every graph has this property.
        #[arg(long = "assert", value_enum)]
        asserts: Vec<Property>,
        /// Print the vertex-omitting cycles (paths).
        #[arg(long)]
        witnesses: bool,
        /// Node budget per Hamiltonicity search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Generate levels from seed files and filter hypohamiltonian graphs.
    Gen {
        /// Seed files or directories (planar_code).
        #[arg(long, required = true, num_args = 1..)]
        seeds: Vec<PathBuf>,
        /// Largest order.
        #[arg(long)]
        n: usize,
        /// Largest number of 4-faces.
        #[arg(long)]
        f_max: Option<usize>,
        #[arg(long, env = "HYPOHAM_CATALOG", default_value = "catalog")]
        catalog: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        /// Allow orders beyond desk scale.
        #[arg(long)]
        long: bool,
    },
    /// Apply a graph surgery and write the result.
    Transform {
        #[arg(value_enum)]
        op: Op,
        /// Input graph(s); `join4` takes four.
        #[arg(required = true, num_args = 1..)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        /// Face index (deflate, thomassen).
        #[arg(long)]
        face: Option<usize>,
        #[arg(long, value_enum)]
        pair: Option<Pair>,
        /// Index into the inflation site list (inflate).
        #[arg(long)]
        site: Option<usize>,
        /// Cubic vertex of each input (insert, join4).
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        vertex: Vec<usize>,
        /// Host cubic graph (insert).
        #[arg(long)]
        host: Option<PathBuf>,
        /// Output file; `.pc` selects planar_code, anything else text.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Face and degree sequence table of a catalog level.
    Stats {
        #[arg(long, env = "HYPOHAM_CATALOG", default_value = "catalog")]
        catalog: PathBuf,
        #[arg(long, requires = "f")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        f: Option<usize>,
        #[arg(long)]
        csv: bool,
    },
    /// Check that knapsack infeasibility coincides with the Grinbergian
    /// shapes for all face sequences up to a given order.
    VerifyGrinberg {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        long: bool,
    },
}

/// Failure classes and their exit codes.
pub enum Failure {
    /// A property assertion did not hold.
    Assertion(String),
    /// Bad input, bad flags or I/O trouble.
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn search_config(budget: Option<u64>) -> SearchConfig {
    SearchConfig {
        budget,
        ..SearchConfig::default()
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global()?;
    }
    match cli.command {
        Command::Check {
            file,
            format,
            asserts,
            witnesses,
            budget,
        } => check::run(&file, format, &asserts, witnesses, search_config(budget)),
        Command::Gen {
            seeds,
            n,
            f_max,
            catalog,
            budget,
            long,
        } => {
            if n > DESK_ORDER && !long {
                return Err(Failure::Usage(format!("n > {DESK_ORDER} is a long run; pass --long")));
            }
            let config = PipelineConfig {
                n_target: n,
                f_max,
                seeds: load_seeds(&seeds)?,
                search: search_config(budget),
            };
            let cat = Catalog::open(&catalog)?;
            let summary = run_pipeline(&config, Some(&cat), |s| {
                eprintln!(
                    "level {}: {} members, {} hypohamiltonian{}{}",
                    s.key,
                    s.members,
                    s.hypohamiltonian,
                    if s.exhaustive { "" } else { " (partial)" },
                    if s.resumed { " (resumed)" } else { "" },
                )
            })?;
            let mut levels = summary.levels.clone();
            levels.sort_by_key(|l| l.key);
            for l in &levels {
                println!("{} {} {}", l.key.dir_name(), l.members, l.hypohamiltonian);
            }
            let orders: std::collections::BTreeSet<usize> = levels.iter().map(|l| l.key.n).collect();
            for n in orders {
                println!("H4({n}) = {}", summary.hypohamiltonian_of_order(n));
            }
            if !summary.exhaustive() {
                println!("partial: some searches ran out of budget");
            }
            Ok(())
        }
        Command::Transform {
            op,
            files,
            format,
            face,
            pair,
            site,
            vertex,
            host,
            out,
        } => input::transform(
            input::TransformArgs {
                op,
                files,
                format,
                face,
                pair,
                site,
                vertex,
                host,
                out,
            },
        ),
        Command::Stats { catalog, n, f, csv } => {
            let cat = Catalog::open(&catalog)?;
            match (n, f) {
                (Some(n), Some(f)) => {
                    let rows = cat.stats(LevelKey::new(n, f)?)?;
                    print!("{}", if csv { format_stats_csv(&rows) } else { format_stats_table(&rows) });
                }
                _ => {
                    println!("level members hypohamiltonian exhaustive");
                    for key in cat.levels()? {
                        let m = cat.manifest(key)?.expect("listed levels have manifests");
                        println!("{} {} {} {}", key.dir_name(), m.members, m.hypohamiltonian, m.exhaustive);
                    }
                }
            }
            Ok(())
        }
        Command::VerifyGrinberg { nmax, long } => {
            if nmax > DESK_GRINBERG && !long {
                return Err(Failure::Usage(format!("nmax > {DESK_GRINBERG} is a long run; pass --long")));
            }
            let report = verify_completeness(nmax);
            for (n, c) in &report.examined {
                println!("n={n}: {c} sequences");
            }
            println!("examined {} face sequences", report.total_examined());
            println!("{} counterexamples", report.counterexamples.len());
            println!("{} feasible Grinbergian sequences", report.feasible_grinbergian.len());
            for (n, fs) in report.counterexamples.iter().chain(&report.feasible_grinbergian) {
                println!("  n={n}: {fs}");
            }
            if report.counterexamples.is_empty() && report.feasible_grinbergian.is_empty() {
                Ok(())
            } else {
                Err(Failure::Assertion("knapsack and Grinbergian shape disagree".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
