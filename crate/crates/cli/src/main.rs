use std::fs;
use std::io::{self, BufReader};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sups_cli::build_query::run_queries;
use sups_cli::campaign::{run_campaign, CampaignConfig, DEFAULT_SEED};
use sups_cli::input::{parse_input, InputFormat};
use sups_cli::scaling::{run_scaling, ScalingConfig, CSV_HEADER};
use sups_core::{MupsRule, SupsIndex};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "sups",
    version,
    about = "Shortest unique palindromic substring queries on run-length encoded strings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index from a file and answer `s t` query lines.
    BuildQuery {
        #[arg(long, value_enum)]
        format: InputFormat,
        #[arg(long)]
        input: PathBuf,
        /// Query file; standard input when omitted.
        #[arg(long)]
        queries: Option<PathBuf>,
    },
    /// Compare the index against the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of random cases.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Longest binary string in the exhaustive suite.
        #[arg(long, default_value_t = 12)]
        max_len: u32,
        /// Build with a deliberately broken rule to check the campaign
        /// notices.
        #[arg(long, value_enum, hide = true)]
        mutant: Option<Mutant>,
    },
    /// Measure build time, index size and query throughput; prints CSV.
    Bench {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest number of runs measured.
        #[arg(long, default_value_t = 100_000)]
        max_m: usize,
        /// Random queries per configuration.
        #[arg(long, default_value_t = 1_000_000)]
        queries: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mutant {
    /// Skip the occurrence check on `P` for `a^1 P a^1`.
    SkipInnerOccurrence,
}

fn build_query(format: InputFormat, input: PathBuf, queries: Option<PathBuf>) -> ExitCode {
    let bytes = match fs::read(&input) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("sups: cannot read {}: {e}", input.display());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let rle = match parse_input(format, &bytes) {
        Ok(rle) => rle,
        Err(e) => {
            eprintln!("sups: {}: {e}", input.display());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let index = match SupsIndex::build(rle) {
        Ok(index) => index,
        Err(e) => {
            eprintln!("sups: internal error while building the index: {e}");
            return ExitCode::from(EXIT_FAILED);
        }
    };
    let stdout = io::stdout().lock();
    let result = match queries {
        Some(path) => match fs::File::open(&path) {
            Ok(f) => run_queries(&index, BufReader::new(f), stdout),
            Err(e) => {
                eprintln!("sups: cannot read {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        },
        None => run_queries(&index, io::stdin().lock(), stdout),
    };
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("sups: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn verify(seed: u64, cases: usize, max_len: u32, mutant: Option<Mutant>) -> ExitCode {
    if cases == 0 {
        eprintln!("sups: warning: zero random cases; the random suite passes vacuously");
    }
    let config = CampaignConfig {
        seed,
        random_cases: cases,
        exhaustive_max_len: max_len,
        rule: match mutant {
            Some(Mutant::SkipInnerOccurrence) => MupsRule::Literal,
            None => MupsRule::Corrected,
        },
        ..CampaignConfig::default()
    };
    let reports = run_campaign(&config);
    for report in &reports {
        println!("{report}");
    }
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn bench(seed: u64, max_m: usize, queries: usize) -> ExitCode {
    let config = ScalingConfig {
        seed,
        sizes: ScalingConfig::default()
            .sizes
            .into_iter()
            .filter(|&m| m <= max_m)
            .collect(),
        queries,
        ..ScalingConfig::default()
    };
    println!("{CSV_HEADER}");
    for row in run_scaling(&config) {
        println!("{row}");
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::BuildQuery {
            format,
            input,
            queries,
        } => build_query(format, input, queries),
        Command::Verify {
            seed,
            cases,
            max_len,
            mutant,
        } => verify(seed, cases, max_len, mutant),
        Command::Bench {
            seed,
            max_m,
            queries,
        } => bench(seed, max_m, queries),
    }
}
