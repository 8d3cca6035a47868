//! Cycle structure: Hamilton cycles, fixed-length cycles, pancyclicity.
//!
//! Searches are exact backtracking over bitset adjacency with a node-expansion
//! budget. Exhausting the budget yields an explicit `Unknown`, never a guess.
//! The closure route first computes a degree-sum closure (denser, easier to
//! search) and maps certificates back to the original graph by unwinding the
//! added edges through crossover rerouting.

use serde::Serialize;

use crate::closure::k_closure;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::toughness::{
    heuristic_violation, is_t_tough, Rational, ToughDecision, DEFAULT_TOUGH_LIMIT,
};

/// Default node-expansion budget for cycle searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Slice of the budget spent before trying the exhaustive cut argument.
const STAGE_ONE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CycleSearch {
    /// Vertices in cycle order (closing edge back to the first implied).
    Found(Vec<usize>),
    Absent,
    /// Budget exhausted before the search space was covered.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ThreeValued {
    Yes,
    No,
    Unknown,
}

struct Budget {
    left: u64,
    starved: bool,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { left: limit, starved: false }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        if self.left == 0 {
            self.starved = true;
            return false;
        }
        self.left -= 1;
        true
    }
}

// ====================================================================
// bitset helpers over multi-word rows
// ====================================================================

#[inline]
fn get_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
fn set_bit(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

#[inline]
fn clear_bit(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1 << (i % 64));
}

fn full_mask(n: usize, words: usize) -> Vec<u64> {
    let mut f = vec![!0u64; words];
    let spare = words * 64 - n;
    if spare > 0 {
        f[words - 1] = !0 >> spare;
    }
    f
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * 64 + bit)
        })
    })
}

// ====================================================================
// Hamilton cycle search
// ====================================================================

struct HamSearch<'g> {
    g: &'g Graph,
    n: usize,
    words: usize,
    start: usize,
    visited: Vec<u64>,
    path: Vec<usize>,
    scratch: Vec<u64>,
    frontier: Vec<u64>,
    reached: Vec<u64>,
}

impl<'g> HamSearch<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        let words = g.words_per_row();
        // Anchor at a minimum-degree vertex: scarce vertices first.
        let start = (0..n).min_by_key(|&v| g.degree(v)).expect("nonempty graph");
        let mut s = HamSearch {
            g,
            n,
            words,
            start,
            visited: vec![0; words],
            path: Vec::with_capacity(n),
            scratch: vec![0; words],
            frontier: vec![0; words],
            reached: vec![0; words],
        };
        set_bit(&mut s.visited, start);
        s.path.push(start);
        s
    }

    /// The rest of the cycle runs head -> (all unvisited vertices) -> anchor,
    /// so consecutive unvisited vertices are adjacent. Hence: every unvisited
    /// vertex needs two usable neighbors (among unvisited vertices, the head,
    /// and the anchor), the unvisited set must induce a connected subgraph,
    /// and both the head and the anchor must touch it.
    fn feasible(&mut self, cur: usize) -> bool {
        // scratch := unvisited
        for w in 0..self.words {
            self.scratch[w] = !self.visited[w];
        }
        let full = full_mask(self.n, self.words);
        for w in 0..self.words {
            self.scratch[w] &= full[w];
        }
        if self.scratch.iter().all(|&w| w == 0) {
            return true;
        }

        let start_row = self.g.row(self.start);
        let cur_row = self.g.row(cur);
        let mut cur_touch = 0u64;
        let mut start_touch = 0u64;
        for w in 0..self.words {
            cur_touch |= cur_row[w] & self.scratch[w];
            start_touch |= start_row[w] & self.scratch[w];
        }
        if cur_touch == 0 || start_touch == 0 {
            return false;
        }

        // Degree rule.
        let mut seed = usize::MAX;
        for wi in 0..self.words {
            let mut bits = self.scratch[wi];
            while bits != 0 {
                let v = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if seed == usize::MAX {
                    seed = v;
                }
                let row = self.g.row(v);
                let mut avail = 0u32;
                for w in 0..self.words {
                    avail += (row[w] & self.scratch[w]).count_ones();
                }
                if get_bit(cur_row, v) {
                    avail += 1;
                }
                if get_bit(start_row, v) {
                    avail += 1;
                }
                if avail < 2 {
                    return false;
                }
            }
        }

        // Connectivity of the induced unvisited subgraph.
        for w in 0..self.words {
            self.frontier[w] = 0;
            self.reached[w] = 0;
        }
        set_bit(&mut self.frontier, seed);
        set_bit(&mut self.reached, seed);
        loop {
            let mut grew = false;
            for wi in 0..self.words {
                let mut bits = self.frontier[wi];
                self.frontier[wi] = 0;
                while bits != 0 {
                    let v = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let row = self.g.row(v);
                    for w in 0..self.words {
                        let fresh = row[w] & self.scratch[w] & !self.reached[w];
                        if fresh != 0 {
                            self.reached[w] |= fresh;
                            self.frontier[w] |= fresh;
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        (0..self.words).all(|w| self.scratch[w] & !self.reached[w] == 0)
    }

    fn dfs(&mut self, budget: &mut Budget) -> bool {
        if !budget.tick() {
            return false;
        }
        let cur = *self.path.last().expect("path never empty");
        if self.path.len() == self.n {
            return self.g.has_edge(cur, self.start);
        }
        if !self.feasible(cur) {
            return false;
        }
        // Scarcest successor first: extending toward vertices with few
        // remaining continuations keeps dead ends shallow.
        let mut cands: Vec<(u32, usize)> = Vec::new();
        for v in iter_bits(self.g.row(cur)) {
            if get_bit(&self.visited, v) {
                continue;
            }
            let row = self.g.row(v);
            let mut avail = 0u32;
            for w in 0..self.words {
                avail += (row[w] & !self.visited[w]).count_ones();
            }
            cands.push((avail, v));
        }
        cands.sort_unstable();
        for (_, v) in cands {
            set_bit(&mut self.visited, v);
            self.path.push(v);
            if self.dfs(budget) {
                return true;
            }
            self.path.pop();
            clear_bit(&mut self.visited, v);
            if budget.starved {
                return false;
            }
        }
        false
    }
}

/// Exact Hamilton cycle search by pruned backtracking.
///
/// Errors with `TooSmall` below 3 vertices. A disconnected graph is
/// immediately `Absent`. A vertex cut that leaves more pieces than its size
/// also proves `Absent` without searching: a Hamilton cycle minus a cut of
/// size s falls into at most s paths. `Unknown` only when the budget runs out
/// and no such cut is found.
pub fn find_hamiltonian_cycle(g: &Graph, budget: u64) -> Result<CycleSearch> {
    let n = g.order();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if !g.is_connected() {
        return Ok(CycleSearch::Absent);
    }
    if g.min_degree() < 2 {
        return Ok(CycleSearch::Absent);
    }
    if !g.is_complete() {
        if let ToughDecision::No(_) = heuristic_violation(g, 1, 1) {
            return Ok(CycleSearch::Absent);
        }
    }

    // Stage one: a modest slice of the budget. Most graphs resolve here.
    let first = budget.min(STAGE_ONE_BUDGET);
    let mut stage = Budget::new(first);
    let mut search = HamSearch::new(g);
    if search.dfs(&mut stage) {
        let cycle = search.path.clone();
        debug_assert!(is_valid_hamiltonian_cycle(g, &cycle));
        return Ok(CycleSearch::Found(cycle));
    }
    if !stage.starved {
        return Ok(CycleSearch::Absent);
    }

    // The search is hard. An exhaustive cut search is cheap on small graphs
    // and settles instances the backtracking grinds on.
    if n <= DEFAULT_TOUGH_LIMIT {
        let one = Rational::from_integer(1);
        if let Ok(ToughDecision::No(_)) = is_t_tough(g, one, DEFAULT_TOUGH_LIMIT) {
            return Ok(CycleSearch::Absent);
        }
    }

    // Stage two: the rest of the budget. Restarting repeats the stage-one
    // prefix, an accepted overhead of a few percent.
    if budget <= first {
        return Ok(CycleSearch::Unknown);
    }
    let mut stage = Budget::new(budget - first);
    let mut search = HamSearch::new(g);
    if search.dfs(&mut stage) {
        let cycle = search.path.clone();
        debug_assert!(is_valid_hamiltonian_cycle(g, &cycle));
        Ok(CycleSearch::Found(cycle))
    } else if stage.starved {
        Ok(CycleSearch::Unknown)
    } else {
        Ok(CycleSearch::Absent)
    }
}

/// Checks that `cycle` lists every vertex exactly once and consecutive
/// vertices (cyclically) are adjacent.
pub fn is_valid_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.order();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

// ====================================================================
// fixed-length cycle search
// ====================================================================

/// Searches for a cycle through exactly `len` vertices. Exhaustive over
/// anchors: every cycle is found at its minimum vertex.
fn find_cycle_of_length(g: &Graph, len: usize, budget: &mut Budget) -> CycleSearch {
    let n = g.order();
    if len < 3 || len > n {
        return CycleSearch::Absent;
    }
    let words = g.words_per_row();
    for anchor in 0..=(n - len) {
        let mut allowed = full_mask(n, words);
        for v in 0..anchor {
            clear_bit(&mut allowed, v);
        }
        let mut visited = vec![0u64; words];
        set_bit(&mut visited, anchor);
        let mut path = vec![anchor];
        if len_dfs(g, len, anchor, &allowed, &mut visited, &mut path, budget) {
            return CycleSearch::Found(path);
        }
        if budget.starved {
            return CycleSearch::Unknown;
        }
    }
    CycleSearch::Absent
}

fn len_dfs(
    g: &Graph,
    len: usize,
    anchor: usize,
    allowed: &[u64],
    visited: &mut Vec<u64>,
    path: &mut Vec<usize>,
    budget: &mut Budget,
) -> bool {
    if !budget.tick() {
        return false;
    }
    let cur = *path.last().expect("path never empty");
    if path.len() == len {
        return g.has_edge(cur, anchor);
    }
    let words = visited.len();
    // Remaining candidates must at least cover the missing length.
    let need = len - path.len();
    let mut candidates = 0usize;
    for w in 0..words {
        candidates += (allowed[w] & !visited[w]).count_ones() as usize;
    }
    if candidates < need {
        return false;
    }
    let row: Vec<u64> = g.row(cur).to_vec();
    for v in iter_bits(&row) {
        if !get_bit(allowed, v) || get_bit(visited, v) {
            continue;
        }
        set_bit(visited, v);
        path.push(v);
        if len_dfs(g, len, anchor, allowed, visited, path, budget) {
            return true;
        }
        path.pop();
        clear_bit(visited, v);
        if budget.starved {
            return false;
        }
    }
    false
}

// ====================================================================
// closure route
// ====================================================================

/// Which degree-sum threshold the closure route uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClosureRule {
    /// Threshold n: sound for every graph.
    Unconditional,
    /// Threshold n-1: sound when the caller knows the graph is 2-tough.
    TwoTough,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ClosureProof {
    /// The closure is complete, which settles Hamiltonicity by itself.
    CompleteClosure { k: usize },
    /// Hamiltonicity was decided by searching the (denser) closed graph.
    SearchOnClosure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ClosureHamiltonicity {
    Yes {
        /// Explicit cycle in the original graph when reconstruction
        /// succeeded; under `TwoTough` the proof can stand without one.
        cycle: Option<Vec<usize>>,
        proof: ClosureProof,
    },
    No,
    Unknown,
}

/// Decides Hamiltonicity through a degree-sum closure. The closed graph is
/// Hamiltonian exactly when the original is (for `TwoTough`, under the
/// caller's 2-toughness guarantee), so a complete closure is an immediate
/// yes and otherwise the denser closed graph is searched.
pub fn is_hamiltonian_via_closure(
    g: &Graph,
    rule: ClosureRule,
    budget: u64,
) -> Result<ClosureHamiltonicity> {
    let n = g.order();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if !g.is_connected() {
        return Ok(ClosureHamiltonicity::No);
    }
    let k = match rule {
        ClosureRule::Unconditional => n,
        ClosureRule::TwoTough => n - 1,
    };
    let closure = k_closure(g, k);
    let guaranteed = k >= n;

    if closure.is_complete {
        let seed: Vec<usize> = (0..n).collect();
        let cycle = unwind_cycle(g, &closure.added, seed);
        debug_assert!(!guaranteed || cycle.is_some());
        let cycle = match cycle {
            Some(c) => Some(c),
            // Threshold n-1 additions do not guarantee a crossover; fall
            // back to a bounded direct search for the explicit cycle.
            None => match find_hamiltonian_cycle(g, budget)? {
                CycleSearch::Found(c) => Some(c),
                _ => None,
            },
        };
        return Ok(ClosureHamiltonicity::Yes {
            cycle,
            proof: ClosureProof::CompleteClosure { k },
        });
    }

    match find_hamiltonian_cycle(&closure.closed, budget)? {
        CycleSearch::Found(c) => {
            let cycle = match unwind_cycle(g, &closure.added, c) {
                Some(c) => Some(c),
                None => match find_hamiltonian_cycle(g, budget)? {
                    CycleSearch::Found(c) => Some(c),
                    _ => None,
                },
            };
            Ok(ClosureHamiltonicity::Yes { cycle, proof: ClosureProof::SearchOnClosure })
        }
        CycleSearch::Absent => Ok(ClosureHamiltonicity::No),
        CycleSearch::Unknown => Ok(ClosureHamiltonicity::Unknown),
    }
}

/// Rewrites a Hamilton cycle of `g + added` into one of `g` by peeling the
/// added edges in reverse order. When the peeled edge sits on the cycle, a
/// crossover pair reroutes around it; a degree sum of at least n at addition
/// time guarantees the crossover exists. Returns `None` if some peel finds
/// no crossover (possible only below that threshold).
fn unwind_cycle(g: &Graph, added: &[(usize, usize)], mut cycle: Vec<usize>) -> Option<Vec<usize>> {
    let n = cycle.len();
    let mut work = g.clone();
    for &(u, v) in added {
        work.add_edge_mut(u, v);
    }
    for &(u, v) in added.iter().rev() {
        work.remove_edge_mut(u, v);
        let pu = cycle.iter().position(|&x| x == u).expect("cycle spans all vertices");
        let succ = cycle[(pu + 1) % n];
        let pred = cycle[(pu + n - 1) % n];
        if succ != v && pred != v {
            continue;
        }
        // Lay the cycle out as a path u .. v not using the edge (u, v).
        let path: Vec<usize> = if succ == v {
            (0..n).map(|i| cycle[(pu + n - i) % n]).collect()
        } else {
            (0..n).map(|i| cycle[(pu + i) % n]).collect()
        };
        debug_assert!(path[0] == u && path[n - 1] == v);
        let mut cross = None;
        for i in 0..(n - 1) {
            if work.has_edge(path[0], path[i + 1]) && work.has_edge(path[i], path[n - 1]) {
                cross = Some(i);
                break;
            }
        }
        let i = cross?;
        let mut next: Vec<usize> = path[..=i].to_vec();
        next.extend(path[i + 1..].iter().rev());
        cycle = next;
    }
    debug_assert!(is_valid_hamiltonian_cycle(g, &cycle));
    Some(cycle)
}

// ====================================================================
// cycle spectrum and conclusions
// ====================================================================

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpectrumStatus {
    Exact,
    BudgetExhausted,
}

/// Which cycle lengths exist. Absences are proven: a length missing from
/// both `present` and `unresolved` was exhaustively ruled out (odd lengths
/// in bipartite graphs are ruled out without search).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleSpectrum {
    pub present: Vec<usize>,
    pub unresolved: Vec<usize>,
    /// Length n proven present.
    pub hamiltonian: bool,
    /// Every length 3..=n proven present.
    pub pancyclic: bool,
    pub bipartite: bool,
    pub status: SpectrumStatus,
}

/// Per-length exact cycle search over lengths 3..=n sharing one budget.
pub fn cycle_spectrum(g: &Graph, budget: u64) -> CycleSpectrum {
    let n = g.order();
    let bipartite = g.is_bipartite().is_some();
    let mut pool = Budget::new(budget);
    let mut present = Vec::new();
    let mut unresolved = Vec::new();
    for len in 3..=n {
        if bipartite && len % 2 == 1 {
            continue;
        }
        if pool.starved {
            unresolved.push(len);
            continue;
        }
        match find_cycle_of_length(g, len, &mut pool) {
            CycleSearch::Found(_) => present.push(len),
            CycleSearch::Absent => {}
            CycleSearch::Unknown => unresolved.push(len),
        }
    }
    let hamiltonian = present.contains(&n);
    let pancyclic = n >= 3 && present.len() == n - 2;
    let status =
        if unresolved.is_empty() { SpectrumStatus::Exact } else { SpectrumStatus::BudgetExhausted };
    CycleSpectrum { present, unresolved, hamiltonian, pancyclic, bipartite, status }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConclusionTriple {
    pub hamiltonian: ThreeValued,
    pub pancyclic: ThreeValued,
    pub bipartite: bool,
}

/// Exact-where-possible classification of the cycle structure.
pub fn classify_conclusion(g: &Graph, budget: u64) -> ConclusionTriple {
    let n = g.order();
    let spectrum = cycle_spectrum(g, budget);
    let hamiltonian = if n < 3 {
        ThreeValued::No
    } else if spectrum.present.contains(&n) {
        ThreeValued::Yes
    } else if spectrum.unresolved.contains(&n) {
        ThreeValued::Unknown
    } else {
        ThreeValued::No
    };
    let pancyclic = if n < 3 {
        ThreeValued::No
    } else if spectrum.pancyclic {
        ThreeValued::Yes
    } else if (3..=n).any(|l| !spectrum.present.contains(&l) && !spectrum.unresolved.contains(&l)) {
        ThreeValued::No
    } else {
        ThreeValued::Unknown
    };
    ConclusionTriple { hamiltonian, pancyclic, bipartite: spectrum.bipartite }
}

// ====================================================================
// tests
// ====================================================================
