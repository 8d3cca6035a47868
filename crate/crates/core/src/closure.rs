//! Degree-sum closures and degree-sequence conditions.

use serde::Serialize;

use crate::graph::{DegreeSequence, Graph};

/// Result of a k-closure computation: the closed graph, the edges added in
/// the order they were forced, and whether the closure is complete.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub closed: Graph,
    pub added: Vec<(usize, usize)>,
    pub is_complete: bool,
}

/// The k-closure: repeatedly join nonadjacent pairs whose degree sum is at
/// least `k` until no such pair remains. The scan is lexicographic over pairs
/// and repeats until a full pass adds nothing; the fixpoint itself is unique
/// regardless of order.
pub fn k_closure(g: &Graph, k: usize) -> ClosureResult {
    let n = g.order();
    let mut closed = g.clone();
    let mut deg: Vec<usize> = (0..n).map(|v| closed.degree(v)).collect();
    let mut added = Vec::new();
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in (u + 1)..n {
                if !closed.has_edge(u, v) && deg[u] + deg[v] >= k {
                    closed.add_edge_mut(u, v);
                    deg[u] += 1;
                    deg[v] += 1;
                    added.push((u, v));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let is_complete = closed.is_complete();
    ClosureResult { closed, added, is_complete }
}

/// Witness for a failing degree-condition index (1-based `k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PredicateWitness {
    pub k: usize,
    /// `d_k` (1-based), which is at most `k`.
    pub degree_at_k: usize,
    /// `d_{n-k+t}` (1-based), which is at most `n-k-1`.
    pub degree_at_upper: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PredicateOutcome {
    Holds,
    Fails(PredicateWitness),
}

/// Degree predicate with slack `t` on a nondecreasing sequence `d_1..d_n`:
/// for every `k < n/2`, `d_k <= k` must imply `d_{n-k+t} >= n-k`. Returns the
/// smallest violating `k` with its witness degrees, or `Holds`. Indices
/// `n-k+t` beyond `n` make the requirement vacuous and are skipped.
pub fn degree_predicate(seq: &DegreeSequence, t: usize) -> PredicateOutcome {
    let d = seq.degrees();
    let n = d.len();
    let mut k = 1;
    while 2 * k < n {
        if d[k - 1] <= k {
            let idx = n - k + t;
            if idx <= n && d[idx - 1] + k + 1 <= n {
                return PredicateOutcome::Fails(PredicateWitness {
                    k,
                    degree_at_k: d[k - 1],
                    degree_at_upper: d[idx - 1],
                });
            }
        }
        k += 1;
    }
    PredicateOutcome::Holds
}

/// Finds a nonadjacent pair whose degree sum is at most `n - 5`, minimizing
/// the degree sum (ties broken lexicographically). `None` when every
/// nonadjacent pair has degree sum at least `n - 4`, or when the graph is
/// complete.
pub fn low_degree_nonadjacent_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 5 {
        return None;
    }
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut best: Option<(usize, (usize, usize))> = None;
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            let s = deg[u] + deg[v];
            if best.map_or(true, |(b, _)| s < b) {
                best = Some((s, (u, v)));
            }
        }
    }
    match best {
        Some((s, pair)) if s + 5 <= n => Some(pair),
        _ => None,
    }
}

/// True when more than `n/3` vertices have degree above `n/2` (both strict,
/// exact integer comparisons: `2 d(v) > n` and `3 count > n`).
pub fn dense_degree_majority(g: &Graph) -> bool {
    let n = g.order();
    let count = (0..n).filter(|&v| 2 * g.degree(v) > n).count();
    3 * count > n
}

// ====================================================================
// tests
// ====================================================================
