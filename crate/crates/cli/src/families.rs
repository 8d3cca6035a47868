//! Builds the tight families over an order range and verifies their cycle
//! structure, closure-first.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use toughgraph::closure::{degree_predicate, low_degree_nonadjacent_pair, PredicateOutcome};
use toughgraph::conditions::{
    construct_family, threshold_size, CoreKind, ExtremalVariant, FamilySpec,
};
use toughgraph::cycles::{
    classify_conclusion, is_hamiltonian_via_closure, ClosureHamiltonicity, ClosureProof,
    ClosureRule, ConclusionTriple, ThreeValued,
};
use toughgraph::graph6;
use toughgraph::Graph;

use crate::report::SCHEMA_FAMILY;

pub const ALL_CORES: [CoreKind; 4] =
    [CoreKind::Cycle8, CoreKind::TwoCycle4, CoreKind::FourK2, CoreKind::EightK1];

#[derive(Debug, Serialize)]
pub struct FamilyRecord {
    pub schema: &'static str,
    pub label: String,
    pub spec: FamilySpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_runs: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian: Option<ThreeValued>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proof: Option<ClosureProof>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<ConclusionTriple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_threshold: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_margin: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicate: Option<PredicateOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub low_degree_nonadjacent_pair: Option<Option<(usize, usize)>>,
}

impl FamilyRecord {
    fn empty(spec: FamilySpec) -> Self {
        FamilyRecord {
            schema: SCHEMA_FAMILY,
            label: spec.to_string(),
            spec,
            skipped: None,
            n: None,
            m: None,
            degree_runs: None,
            graph6: None,
            hamiltonian: None,
            proof: None,
            cycle: None,
            conclusion: None,
            size_threshold: None,
            size_margin: None,
            predicate: None,
            low_degree_nonadjacent_pair: None,
        }
    }
}

/// Builds one family member and runs the checks. Extremal realizations use
/// the reduced closure threshold their construction justifies; everything
/// else uses the unconditional one.
pub fn build_and_check(
    spec: FamilySpec,
    t: u32,
    budget: u64,
    verify_conclusion: bool,
) -> FamilyRecord {
    let mut record = FamilyRecord::empty(spec);
    let g: Graph = match construct_family(&spec) {
        Ok(g) => g,
        Err(e) => {
            record.skipped = Some(e.to_string());
            return record;
        }
    };
    let n = g.order();
    record.n = Some(n);
    record.m = Some(g.size());
    record.degree_runs = Some(g.degree_sequence().runs());
    record.graph6 = Some(graph6::encode(&g));
    record.size_threshold = threshold_size(n, t).ok();
    record.size_margin = record.size_threshold.map(|thr| g.size() as i64 - thr as i64);
    record.predicate = Some(degree_predicate(&g.degree_sequence(), t as usize));
    record.low_degree_nonadjacent_pair = Some(low_degree_nonadjacent_pair(&g));

    let rule = match spec {
        FamilySpec::Extremal { .. } => ClosureRule::TwoTough,
        _ => ClosureRule::Unconditional,
    };
    match is_hamiltonian_via_closure(&g, rule, budget) {
        Ok(ClosureHamiltonicity::Yes { cycle, proof }) => {
            record.hamiltonian = Some(ThreeValued::Yes);
            record.proof = Some(proof);
            record.cycle = cycle;
        }
        Ok(ClosureHamiltonicity::No) => record.hamiltonian = Some(ThreeValued::No),
        Ok(ClosureHamiltonicity::Unknown) => record.hamiltonian = Some(ThreeValued::Unknown),
        Err(e) => record.skipped = Some(format!("cycle search failed: {e}")),
    }

    if verify_conclusion {
        record.conclusion = Some(classify_conclusion(&g, budget));
    }
    record
}

/// Every family instance for one order: join families over all hub counts
/// t..=2t+2 and cores, the extremal realizations where they exist, and the
/// balanced bipartite graph for even orders.
pub fn specs_for_order(n: usize, t: u32) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    let t_us = t as usize;
    for hubs in t_us..=(2 * t_us + 2) {
        if n >= hubs + 9 {
            for core in ALL_CORES {
                specs.push(FamilySpec::Join { hubs, n, core });
            }
        }
    }
    if n + 3 > 10 * t_us {
        specs.push(FamilySpec::Extremal { t, n, variant: ExtremalVariant::ThreeBlock });
    }
    if n == 10 * t_us - 1 {
        specs.push(FamilySpec::Extremal { t, n, variant: ExtremalVariant::TwoBlock });
    }
    if n % 2 == 0 && n >= 2 {
        specs.push(FamilySpec::BalancedBipartite { n });
    }
    specs
}

/// Sweeps orders `n_min..=n_max`, one JSONL record per family instance.
pub fn cmd_families(
    out: &mut dyn Write,
    t: u32,
    n_min: usize,
    n_max: usize,
    budget: u64,
    verify_conclusion: bool,
) -> Result<i32> {
    for n in n_min..=n_max {
        for spec in specs_for_order(n, t) {
            let record = build_and_check(spec, t, budget, verify_conclusion);
            serde_json::to_writer(&mut *out, &record)?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_family_record_is_hamiltonian_with_certificate() {
        let spec = FamilySpec::Join { hubs: 4, n: 20, core: CoreKind::Cycle8 };
        let r = build_and_check(spec, 4, 1_000_000, false);
        assert_eq!(r.hamiltonian, Some(ThreeValued::Yes));
        assert!(r.cycle.is_some());
        assert_eq!(r.n, Some(20));
        assert_eq!(r.size_threshold, Some(114));
        assert_eq!(r.size_margin, Some(106 - 114));
    }

    #[test]
    fn starved_core_family_is_not_hamiltonian() {
        // Four hubs cannot thread eight isolated core vertices.
        let spec = FamilySpec::Join { hubs: 4, n: 20, core: CoreKind::EightK1 };
        let r = build_and_check(spec, 4, 100_000_000, false);
        assert_eq!(r.hamiltonian, Some(ThreeValued::No));
    }

    #[test]
    fn unconstructible_spec_is_skipped() {
        let spec = FamilySpec::Join { hubs: 14, n: 20, core: CoreKind::Cycle8 };
        let r = build_and_check(spec, 4, 1000, false);
        assert!(r.skipped.is_some());
        assert!(r.hamiltonian.is_none());
    }

    #[test]
    fn order_sweep_covers_expected_specs() {
        let specs = specs_for_order(20, 4);
        // hubs 4..=10 all fit (20 >= hubs + 9 up to hubs = 11), 4 cores each,
        // plus the balanced bipartite member; no extremal ones at n = 20.
        assert_eq!(specs.len(), 7 * 4 + 1);
        let specs = specs_for_order(39, 4);
        assert!(specs
            .iter()
            .any(|s| matches!(s, FamilySpec::Extremal { variant: ExtremalVariant::TwoBlock, .. })));
        assert!(specs
            .iter()
            .any(|s| matches!(s, FamilySpec::Extremal { variant: ExtremalVariant::ThreeBlock, .. })));
    }

    #[test]
    fn families_stream_runs() {
        let mut out = Vec::new();
        let code = cmd_families(&mut out, 4, 20, 20, 200_000, false).unwrap();
        assert_eq!(code, 0);
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 29);
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["schema"], "toughgraph/family/v1");
        }
    }
}
