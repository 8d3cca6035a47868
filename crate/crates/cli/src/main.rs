//! Command-line harness for toughness, spectral bounds, and cycle structure.
//!
//! Every subcommand emits one JSON object per line (JSONL) and exits with:
//! 0 on a clean run, 1 on malformed input or an I/O failure, 2 when a
//! consistency check inside the output itself fails. Inconsistency wins over
//! a format error when both occur.

use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use toughgraph_cli::families::cmd_families;
use toughgraph_cli::lemmas::cmd_verify_lemmas;
use toughgraph_cli::report::ScanOpts;
use toughgraph_cli::sample::{cmd_random, EdgeSpec, RandomParams};
use toughgraph_cli::scan::cmd_scan;

#[derive(Parser)]
#[command(name = "toughgraph", version, about = "Exact graph invariants for tough graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Toughness level the checks are parameterized by.
    #[arg(long, default_value_t = 4)]
    t: u32,

    /// Largest order at which toughness is computed exactly.
    #[arg(long, default_value_t = toughgraph::toughness::DEFAULT_TOUGH_LIMIT)]
    tough_limit: usize,

    /// Node budget for cycle searches before reporting "unknown".
    #[arg(long, default_value_t = toughgraph::cycles::DEFAULT_BUDGET)]
    budget: u64,

    /// Write JSONL here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Reporting {
    /// Also run the per-graph bound checks and report them.
    #[arg(long)]
    lemmas: bool,

    /// Evaluate the spectral sufficient conditions and report a verdict.
    #[arg(long)]
    verdict: bool,

    /// Search for cycles to confirm what a verdict implies (slow).
    #[arg(long)]
    verify_conclusion: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Read graph6 lines from stdin and report invariants per graph.
    Scan {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        reporting: Reporting,
        /// Stop at the first malformed line instead of skipping it.
        #[arg(long)]
        strict: bool,
    },

    /// Check the bound and closure lemmas against a graph6 corpus file.
    VerifyLemmas {
        #[command(flatten)]
        common: Common,
        /// Path to a graph6 file, one graph per line.
        corpus: PathBuf,
        /// Skip corpus graphs larger than this.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },

    /// Construct the structured families near the size threshold and test them.
    Families {
        #[command(flatten)]
        common: Common,
        /// Smallest order to construct.
        #[arg(long, default_value_t = 20)]
        n_min: usize,
        /// Largest order to construct.
        #[arg(long, default_value_t = 24)]
        n_max: usize,
        /// Search for cycles to confirm what a verdict implies (slow).
        #[arg(long)]
        verify_conclusion: bool,
    },

    /// Sample seeded random graphs and report invariants per graph.
    Random {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        reporting: Reporting,
        /// Number of vertices per sample.
        #[arg(long)]
        n: usize,
        /// How many graphs to sample.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Edge model: p:PROB for independent edges, m:COUNT for a fixed size.
        #[arg(long, default_value = "p:0.5")]
        edges: String,
        /// RNG seed; the same seed reproduces the output byte for byte.
        #[arg(long)]
        seed: u64,
    },
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

fn scan_opts(common: &Common, reporting: &Reporting, strict: bool) -> ScanOpts {
    ScanOpts {
        t: common.t,
        lemmas: reporting.lemmas,
        verdict: reporting.verdict,
        verify_conclusion: reporting.verify_conclusion,
        tough_limit: common.tough_limit,
        budget: common.budget,
        strict,
    }
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Scan { common, reporting, strict } => {
            let opts = scan_opts(&common, &reporting, strict);
            let mut out = open_out(&common.out)?;
            let stdin = io::stdin();
            let mut input: Box<dyn BufRead> = Box::new(stdin.lock());
            cmd_scan(&mut input, &mut out, &opts)
        }
        Cmd::VerifyLemmas { common, corpus, max_n } => {
            let f = File::open(&corpus)
                .with_context(|| format!("reading {}", corpus.display()))?;
            let mut input: Box<dyn BufRead> = Box::new(io::BufReader::new(f));
            let mut out = open_out(&common.out)?;
            cmd_verify_lemmas(&mut input, &mut out, max_n, common.budget)
        }
        Cmd::Families { common, n_min, n_max, verify_conclusion } => {
            let mut out = open_out(&common.out)?;
            cmd_families(&mut out, common.t, n_min, n_max, common.budget, verify_conclusion)
        }
        Cmd::Random { common, reporting, n, count, edges, seed } => {
            let edges: EdgeSpec = edges.parse()?;
            let params = RandomParams { n, count, edges, seed };
            let opts = scan_opts(&common, &reporting, false);
            let mut out = open_out(&common.out)?;
            cmd_random(&params, &opts, &mut out)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            process::exit(1);
        }
    }
}
