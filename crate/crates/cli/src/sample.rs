//! Seeded random graph sampling. Generation is strictly sequential from one
//! ChaCha stream, so a given seed always yields the same byte stream.

use std::io::Write;
use std::str::FromStr;

use anyhow::{bail, Result};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha20Rng;

use toughgraph::graph6;
use toughgraph::Graph;

use crate::report::{process_line, ScanOpts};
use crate::scan::{write_record, ExitState};

/// Edge model for one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeSpec {
    /// Each pair becomes an edge independently with this probability.
    Probability(f64),
    /// Uniform among graphs with exactly this many edges.
    Count(usize),
}

impl FromStr for EdgeSpec {
    type Err = anyhow::Error;

    /// "p:0.35" or "m:120".
    fn from_str(s: &str) -> Result<Self> {
        if let Some(p) = s.strip_prefix("p:") {
            let p: f64 = p.parse()?;
            if !(0.0..=1.0).contains(&p) {
                bail!("edge probability must be in [0, 1], got {p}");
            }
            Ok(EdgeSpec::Probability(p))
        } else if let Some(m) = s.strip_prefix("m:") {
            Ok(EdgeSpec::Count(m.parse()?))
        } else {
            bail!("edge spec must look like p:0.35 or m:120, got {s:?}")
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RandomParams {
    pub n: usize,
    pub count: usize,
    pub edges: EdgeSpec,
    pub seed: u64,
}

pub fn sample_graph(rng: &mut ChaCha20Rng, n: usize, edges: EdgeSpec) -> Result<Graph> {
    match edges {
        EdgeSpec::Probability(p) => {
            let mut list = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(p) {
                        list.push((u, v));
                    }
                }
            }
            Ok(Graph::from_edges(n, &list)?)
        }
        EdgeSpec::Count(m) => {
            let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
            for u in 0..n {
                for v in (u + 1)..n {
                    pairs.push((u, v));
                }
            }
            if m > pairs.len() {
                bail!("m = {m} exceeds the {} possible edges at n = {n}", pairs.len());
            }
            // Partial Fisher-Yates: the first m slots become the sample.
            for i in 0..m {
                let j = rng.random_range(i..pairs.len());
                pairs.swap(i, j);
            }
            pairs.truncate(m);
            Ok(Graph::from_edges(n, &pairs)?)
        }
    }
}

/// Samples `count` graphs and scans each one exactly like `cmd_scan` would.
pub fn cmd_random(params: &RandomParams, opts: &ScanOpts, out: &mut dyn Write) -> Result<i32> {
    let mut rng = ChaCha20Rng::seed_from_u64(params.seed);
    let mut state = ExitState::default();
    for index in 0..params.count {
        let g = sample_graph(&mut rng, params.n, params.edges)?;
        let line = graph6::encode(&g);
        let record = process_line(index, &line, opts);
        write_record(out, &record)?;
        state.absorb(&record);
    }
    out.flush()?;
    Ok(state.code())
}
