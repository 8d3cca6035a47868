//! Simple undirected graphs on up to [`MAX_ORDER`] vertices.
//!
//! Adjacency is kept as one bitset row per vertex. Rows stay symmetric with a
//! zero diagonal; the edge count is maintained incrementally. All constructors
//! reject loops and out-of-range endpoints, duplicate edges collapse silently.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the number of vertices.
pub const MAX_ORDER: usize = 512;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    /// `n * words` words; row `v` occupies `adj[v*words .. (v+1)*words]`.
    adj: Vec<u64>,
    m: usize,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    Ok(())
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        check_order(n)?;
        let words = n.div_ceil(WORD_BITS);
        Ok(Graph { n, words, adj: vec![0; n * words], m: 0 })
    }

    /// Graph on `n` vertices from an explicit edge list. Duplicate edges and
    /// both orientations of the same pair collapse to a single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge_mut(u, v);
            }
        }
        Ok(g)
    }

    /// Cycle `C_n`; defined for `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        check_order(n)?;
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Self::edgeless(n)?;
        for v in 0..n {
            g.add_edge_mut(v, (v + 1) % n);
        }
        Ok(g)
    }

    /// Complete bipartite graph `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter(
                "both bipartition sides must be nonempty".into(),
            ));
        }
        let mut g = Self::edgeless(a + b)?;
        for u in 0..a {
            for v in a..(a + b) {
                g.add_edge_mut(u, v);
            }
        }
        Ok(g)
    }

    /// Join: disjoint copies of `self` and `other` plus all cross edges.
    /// The result has `m1 + m2 + n1*n2` edges.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..(self.n + other.n) {
                g.add_edge_mut(u, v);
            }
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        let mut g = Self::edgeless(n)?;
        for (u, v) in self.edges() {
            g.add_edge_mut(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_mut(u + self.n, v + self.n);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    /// Adds the edge if absent; returns true when a new edge was created.
    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.adj[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
        self.m += 1;
        true
    }

    /// Removes the edge if present; returns true when an edge was deleted.
    pub(crate) fn remove_edge_mut(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.adj[v * self.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
        self.m -= 1;
        true
    }

    /// Edge list with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    /// Nondecreasing degree sequence.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted((0..self.n).map(|v| self.degree(v)).collect())
    }

    /// Component count plus a per-vertex component label (labels are assigned
    /// in order of first discovery scanning vertices 0..n).
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected(&self) -> bool {
        self.components().0 == 1
    }

    /// BFS two-coloring. Returns a bipartition `(X, Y)` with every edge
    /// crossing, or `None` when some component has an odd cycle. An edgeless
    /// graph puts every vertex in `X`.
    pub fn is_bipartite(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let x = (0..self.n).filter(|&v| color[v] == 0).collect();
        let y = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((x, y))
    }

    /// Component count of the subgraph induced on the vertices of `alive`
    /// (a bitset of `self.words_per_row()` words).
    pub(crate) fn components_masked(&self, alive: &[u64]) -> usize {
        debug_assert_eq!(alive.len(), self.words);
        let mut unseen = alive.to_vec();
        let mut count = 0;
        let mut stack = Vec::new();
        loop {
            let Some(start) = first_bit(&unseen) else { break };
            count += 1;
            unseen[start / WORD_BITS] &= !(1 << (start % WORD_BITS));
            stack.push(start);
            while let Some(u) = stack.pop() {
                let row = self.row(u);
                for w in 0..self.words {
                    let mut hits = row[w] & unseen[w];
                    while hits != 0 {
                        let v = w * WORD_BITS + hits.trailing_zeros() as usize;
                        hits &= hits - 1;
                        unseen[w] &= !(1 << (v % WORD_BITS));
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    #[inline]
    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    /// Parses the plain text form `"n\nu v\nu v\n..."`. Blank lines are
    /// skipped; `#` starts a comment line.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, first) = lines.next().ok_or_else(|| {
            Error::InvalidParameter("edge list is empty; expected an order line".into())
        })?;
        let n: usize = first.parse().map_err(|_| {
            Error::InvalidParameter(format!("edge list order line {first:?} is not an integer"))
        })?;
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let mut it = line.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::InvalidParameter(format!(
                    "edge list line {}: expected \"u v\", got {line:?}",
                    idx + 1
                )));
            };
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| {
                    Error::InvalidParameter(format!(
                        "edge list line {}: {s:?} is not a vertex index",
                        idx + 1
                    ))
                })
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Self::from_edges(n, &edges)
    }

    /// Internal consistency check used by tests: symmetric rows, zero
    /// diagonal, cached edge count matching the bit population.
    #[cfg(test)]
    pub(crate) fn assert_invariants(&self) {
        let mut bits = 0usize;
        for u in 0..self.n {
            assert!(!self.has_edge(u, u), "diagonal bit set at {u}");
            for v in 0..self.n {
                if u != v {
                    assert_eq!(self.has_edge(u, v), self.has_edge(v, u));
                }
            }
            bits += self.degree(u);
        }
        assert_eq!(bits, 2 * self.m);
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    for (i, &w) in words.iter().enumerate() {
        if w != 0 {
            return Some(i * WORD_BITS + w.trailing_zeros() as usize);
        }
    }
    None
}

struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter { words, word_idx: 0, current: words.first().copied().unwrap_or(0) }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

/// Named constructions addressable by a single value, e.g. from a CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Edgeless(usize),
}

pub fn construct_named(kind: NamedGraph) -> Result<Graph> {
    match kind {
        NamedGraph::Complete(n) => Graph::complete(n),
        NamedGraph::Cycle(n) => Graph::cycle(n),
        NamedGraph::CompleteBipartite(a, b) => Graph::complete_bipartite(a, b),
        NamedGraph::Edgeless(n) => Graph::edgeless(n),
    }
}

/// A nondecreasing degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn from_unsorted(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        DegreeSequence { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn min(&self) -> Option<usize> {
        self.degrees.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.degrees.last().copied()
    }

    /// Run-length form as `(value, multiplicity)` pairs, values ascending.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.degrees {
            match out.last_mut() {
                Some((v, c)) if *v == d => *c += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

impl fmt::Display for DegreeSequence {
    /// Compact run notation, e.g. `(1^3, 3^1)` for a claw.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (v, c)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}^{c}")?;
        }
        write!(f, ")")
    }
}

// ====================================================================
// tests
// ====================================================================
