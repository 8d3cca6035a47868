//! Cross-module verification suites over an exhaustive small-graph corpus.
//!
//! Four radius-bound suites (with their exact equality characterizations),
//! the closure-equivalence suite (a graph and its n-closure are Hamiltonian
//! together), and the dense-degree pancyclicity suite. Any violation is a
//! release blocker: these facts are proved, so a failure falsifies the
//! implementation or the corpus.

use std::io::{BufRead, Write};

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::Serialize;

use toughgraph::closure::{dense_degree_majority, k_closure};
use toughgraph::cycles::{cycle_spectrum, find_hamiltonian_cycle, CycleSearch};
use toughgraph::graph6;
use toughgraph::spectra::{bounds_report, spectral_summary, BoundCheck};
use toughgraph::Graph;

use crate::report::SCHEMA_SUITE;

const EXAMPLE_CAP: usize = 5;

#[derive(Debug, Serialize)]
pub struct SuiteRecord {
    pub schema: &'static str,
    pub suite: &'static str,
    /// Graphs the suite applied to.
    pub checked: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_cases: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_mismatches: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unresolved: Option<usize>,
    /// graph6 of the first few offenders.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
    pub pass: bool,
}

impl SuiteRecord {
    fn new(suite: &'static str) -> Self {
        SuiteRecord {
            schema: SCHEMA_SUITE,
            suite,
            checked: 0,
            violations: 0,
            equality_cases: None,
            equality_mismatches: None,
            unresolved: None,
            examples: Vec::new(),
            pass: true,
        }
    }

    fn offend(&mut self, g6: &str) {
        self.violations += 1;
        self.pass = false;
        if self.examples.len() < EXAMPLE_CAP {
            self.examples.push(g6.to_string());
        }
    }
}

/// K_{1,n-1}: one center adjacent to all leaves, nothing else.
fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.size() == n - 1 && g.max_degree() == n - 1
}

/// Per-graph measurements, computed in parallel and reduced sequentially.
struct Findings {
    g6: String,
    /// (holds, equality) for the four radius bounds; `None` where the bound
    /// is undefined (n = 1 for the signless Laplacian one).
    adjacency: Option<(bool, bool)>,
    signless: Option<(bool, bool)>,
    distance: Option<(bool, bool)>,
    distance_signless: Option<(bool, bool)>,
    complete_or_star: bool,
    transmission_regular: bool,
    /// Some(agree) when both searches resolved; `None` when inapplicable.
    closure_agreement: Option<bool>,
    closure_unresolved: bool,
    /// Some(pancyclic) when the dense-degree condition fired on a
    /// Hamiltonian graph.
    dense_pancyclic: Option<bool>,
}

fn flags(check: &BoundCheck) -> (bool, bool) {
    (check.holds, check.equality)
}

fn measure(g6: &str, g: &Graph, budget: u64) -> Result<Findings> {
    let n = g.order();
    let connected = g.is_connected();

    let (adjacency, signless, distance, distance_signless, transmission_regular) = if connected {
        let b = bounds_report(g)?;
        let s = spectral_summary(g)?;
        (
            Some(flags(&b.adjacency_upper)),
            b.signless_laplacian_upper.as_ref().map(flags),
            Some(flags(&b.distance_lower)),
            Some(flags(&b.distance_signless_laplacian_lower)),
            s.transmission_regular,
        )
    } else {
        (None, None, None, None, false)
    };

    let (closure_agreement, closure_unresolved) = if n >= 3 {
        let direct = find_hamiltonian_cycle(g, budget)?;
        let closed = find_hamiltonian_cycle(&k_closure(g, n).closed, budget)?;
        match (&direct, &closed) {
            (CycleSearch::Unknown, _) | (_, CycleSearch::Unknown) => (None, true),
            (a, b) => {
                let a = matches!(a, CycleSearch::Found(_));
                let b = matches!(b, CycleSearch::Found(_));
                (Some(a == b), false)
            }
        }
    } else {
        (None, false)
    };

    let dense_pancyclic = if n >= 3
        && dense_degree_majority(g)
        && matches!(find_hamiltonian_cycle(g, budget)?, CycleSearch::Found(_))
    {
        Some(cycle_spectrum(g, budget).pancyclic)
    } else {
        None
    };

    Ok(Findings {
        g6: g6.to_string(),
        adjacency,
        signless,
        distance,
        distance_signless,
        complete_or_star: g.is_complete() || is_star(g),
        transmission_regular,
        closure_agreement,
        closure_unresolved,
        dense_pancyclic,
    })
}

fn absorb_bound(
    record: &mut SuiteRecord,
    found: Option<(bool, bool)>,
    equality_expected: bool,
    g6: &str,
) {
    let Some((holds, equality)) = found else { return };
    record.checked += 1;
    if !holds {
        record.offend(g6);
    }
    if equality {
        *record.equality_cases.get_or_insert(0) += 1;
    } else {
        record.equality_cases.get_or_insert(0);
    }
    if equality != equality_expected {
        *record.equality_mismatches.get_or_insert(0) += 1;
        record.pass = false;
        if record.examples.len() < EXAMPLE_CAP {
            record.examples.push(g6.to_string());
        }
    } else {
        record.equality_mismatches.get_or_insert(0);
    }
}

/// Runs every suite over the corpus (graphs with more than `max_n` vertices
/// are skipped). Emits one JSONL record per suite plus a summary record.
/// Exit code 2 on any violation, 0 otherwise.
pub fn cmd_verify_lemmas(
    corpus: &mut dyn BufRead,
    out: &mut dyn Write,
    max_n: usize,
    budget: u64,
) -> Result<i32> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    let mut skipped_large = 0usize;
    for (i, line) in corpus.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line).with_context(|| format!("corpus line {}", i + 1))?;
        if g.order() > max_n {
            skipped_large += 1;
            continue;
        }
        graphs.push((line.to_string(), g));
    }

    let findings: Vec<Findings> = graphs
        .par_iter()
        .map(|(g6, g)| measure(g6, g, budget))
        .collect::<Result<_>>()?;

    let mut adjacency = SuiteRecord::new("adjacency_radius_upper");
    let mut signless = SuiteRecord::new("signless_laplacian_radius_upper");
    let mut distance = SuiteRecord::new("distance_radius_lower");
    let mut distance_signless = SuiteRecord::new("distance_signless_laplacian_radius_lower");
    let mut closure = SuiteRecord::new("closure_equivalence");
    closure.unresolved = Some(0);
    let mut dense = SuiteRecord::new("dense_degree_pancyclicity");

    for f in &findings {
        absorb_bound(&mut adjacency, f.adjacency, f.complete_or_star, &f.g6);
        absorb_bound(&mut signless, f.signless, f.complete_or_star, &f.g6);
        absorb_bound(&mut distance, f.distance, f.transmission_regular, &f.g6);
        absorb_bound(&mut distance_signless, f.distance_signless, f.transmission_regular, &f.g6);

        if let Some(agree) = f.closure_agreement {
            closure.checked += 1;
            if !agree {
                closure.offend(&f.g6);
            }
        }
        if f.closure_unresolved {
            *closure.unresolved.get_or_insert(0) += 1;
            closure.pass = false;
        }

        if let Some(pancyclic) = f.dense_pancyclic {
            dense.checked += 1;
            if !pancyclic {
                dense.offend(&f.g6);
            }
        }
    }

    let suites = [adjacency, signless, distance, distance_signless, closure, dense];
    let pass = suites.iter().all(|s| s.pass);
    for record in &suites {
        serde_json::to_writer(&mut *out, record)?;
        out.write_all(b"\n")?;
    }

    #[derive(Serialize)]
    struct Summary {
        schema: &'static str,
        suite: &'static str,
        graphs: usize,
        skipped_large: usize,
        pass: bool,
    }
    let summary = Summary {
        schema: SCHEMA_SUITE,
        suite: "summary",
        graphs: graphs.len(),
        skipped_large,
        pass,
    };
    serde_json::to_writer(&mut *out, &summary)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(if pass { 0 } else { 2 })
}
