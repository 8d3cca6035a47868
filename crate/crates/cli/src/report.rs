//! JSONL record types shared by the subcommands.
//!
//! Every record carries a schema tag; every field that can be unavailable is
//! either absent (not requested by flags) or an explicit `Skipped` with the
//! reason, never a silent null.

use serde::Serialize;

use toughgraph::conditions::{ConditionQuery, ConditionVerdict};
use toughgraph::graph6;
use toughgraph::spectra::{bounds_report, spectral_summary, BoundsReport, SpectralSummary};
use toughgraph::toughness::{toughness_exact, Toughness, ToughnessValue};
use toughgraph::Graph;

pub const SCHEMA_SCAN: &str = "toughgraph/scan/v1";
pub const SCHEMA_SUITE: &str = "toughgraph/suite/v1";
pub const SCHEMA_FAMILY: &str = "toughgraph/family/v1";

/// Exhaustive cut enumeration never goes past one machine word.
pub const HARD_TOUGH_CAP: usize = 63;

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Section<T> {
    Ok { value: T },
    Skipped { reason: String },
}

impl<T> Section<T> {
    pub fn ok(value: T) -> Self {
        Section::Ok { value }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Section::Skipped { reason: reason.into() }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Section::Ok { value } => Some(value),
            Section::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Invariants {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub bipartite: bool,
}

impl Invariants {
    pub fn of(g: &Graph) -> Self {
        Invariants {
            n: g.order(),
            m: g.size(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            connected: g.is_connected(),
            bipartite: g.is_bipartite().is_some(),
        }
    }
}

/// Serialization view of an exact toughness result.
#[derive(Debug, Clone, Serialize)]
pub struct ToughnessReport {
    /// "infinite" or the exact rational, e.g. "4/3".
    pub value: String,
    pub infinite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pieces: Option<usize>,
}

impl From<&Toughness> for ToughnessReport {
    fn from(t: &Toughness) -> Self {
        let (value, infinite) = match &t.value {
            ToughnessValue::Infinite => ("infinite".to_string(), true),
            ToughnessValue::Finite(r) => (r.to_string(), false),
        };
        ToughnessReport {
            value,
            infinite,
            cut: t.witness.as_ref().map(|w| w.cut.clone()),
            pieces: t.witness.as_ref().map(|w| w.pieces),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub schema: &'static str,
    pub index: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Invariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral: Option<Section<SpectralSummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub toughness: Option<Section<ToughnessReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Section<BoundsReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<ConditionVerdict>,
}

/// Shared knobs for record production.
#[derive(Debug, Clone, Copy)]
pub struct ScanOpts {
    pub t: u32,
    pub lemmas: bool,
    pub verdict: bool,
    pub verify_conclusion: bool,
    pub tough_limit: usize,
    pub budget: u64,
    pub strict: bool,
}

impl Default for ScanOpts {
    fn default() -> Self {
        ScanOpts {
            t: 4,
            lemmas: false,
            verdict: false,
            verify_conclusion: false,
            tough_limit: toughgraph::toughness::DEFAULT_TOUGH_LIMIT,
            budget: toughgraph::cycles::DEFAULT_BUDGET,
            strict: false,
        }
    }
}

impl ScanOpts {
    pub fn condition_query(&self) -> ConditionQuery {
        ConditionQuery {
            t: self.t,
            assume_tough: false,
            verify_conclusion: self.verify_conclusion,
            budget: self.budget,
            tough_limit: self.tough_limit.min(HARD_TOUGH_CAP),
        }
    }
}

/// Turns one graph6 input line into a record. Malformed input becomes an
/// error record; nothing panics.
pub fn process_line(index: usize, line: &str, opts: &ScanOpts) -> ScanRecord {
    let mut record = ScanRecord {
        schema: SCHEMA_SCAN,
        index,
        graph6: line.to_string(),
        error: None,
        invariants: None,
        spectral: None,
        toughness: None,
        bounds: None,
        verdict: None,
    };
    let g = match graph6::decode(line) {
        Ok(g) => g,
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    };
    fill_record(&mut record, &g, opts);
    record
}

/// Populates the analysis sections for an already decoded graph.
pub fn fill_record(record: &mut ScanRecord, g: &Graph, opts: &ScanOpts) {
    let n = g.order();
    let connected = g.is_connected();
    record.invariants = Some(Invariants::of(g));

    record.spectral = Some(if connected {
        match spectral_summary(g) {
            Ok(s) => Section::ok(s),
            Err(e) => Section::skipped(e.to_string()),
        }
    } else {
        Section::skipped("disconnected: distance spectra undefined")
    });

    let limit = opts.tough_limit.min(HARD_TOUGH_CAP);
    record.toughness = Some(if !connected {
        Section::skipped("disconnected: no vertex cut is needed to separate it")
    } else if n > limit {
        Section::skipped(format!("order {n} exceeds tough-limit {limit}"))
    } else {
        match toughness_exact(g, limit) {
            Ok(t) => Section::ok(ToughnessReport::from(&t)),
            Err(e) => Section::skipped(e.to_string()),
        }
    });

    if opts.lemmas {
        record.bounds = Some(if connected {
            match bounds_report(g) {
                Ok(b) => Section::ok(b),
                Err(e) => Section::skipped(e.to_string()),
            }
        } else {
            Section::skipped("disconnected: distance bounds undefined")
        });
    }

    if opts.verdict {
        record.verdict =
            Some(toughgraph::conditions::evaluate_conditions(g, &opts.condition_query()));
    }
}
