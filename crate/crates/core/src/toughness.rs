//! Exact vertex toughness.
//!
//! The toughness of a connected non-complete graph is the minimum of
//! `|S| / c(G - S)` over vertex cuts `S` (sets whose removal disconnects the
//! graph); complete graphs have infinite toughness. Everything here is exact
//! rational arithmetic; no floats.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Rational = Ratio<i64>;

/// Default cap on the order for exhaustive cut enumeration.
pub const DEFAULT_TOUGH_LIMIT: usize = 24;

/// Subset enumeration works one machine word at a time.
const WORD_LIMIT: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToughnessValue {
    /// Complete graph: no vertex cut exists.
    Infinite,
    Finite(Rational),
}

/// A witness cut: removing `cut` leaves `pieces >= 2` components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub cut: Vec<usize>,
    pub pieces: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Toughness {
    pub value: ToughnessValue,
    /// A minimizing cut; `None` exactly when the value is infinite.
    pub witness: Option<CutCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToughDecision {
    Yes,
    /// A violating cut `S` with `t * c(G - S) > |S|`.
    No(CutCertificate),
    /// Order exceeds the exhaustive limit and no violating cut was found
    /// among the heuristic candidates.
    Unknown,
}

fn single_word_rows(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| {
            let mut w = 0u64;
            for u in g.neighbors(v) {
                w |= 1 << u;
            }
            w
        })
        .collect()
}

fn components_word(rows: &[u64], alive: u64) -> usize {
    let mut unseen = alive;
    let mut count = 0;
    while unseen != 0 {
        count += 1;
        let start = unseen & unseen.wrapping_neg();
        let mut visited = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & alive & !visited;
            visited |= fresh;
            frontier |= fresh;
        }
        unseen &= !visited;
    }
    count
}

fn cert_from_mask(mask: u64, pieces: usize) -> CutCertificate {
    let mut cut = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        cut.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    CutCertificate { cut, pieces }
}

/// Next bitmask with the same popcount (Gosper's hack).
#[inline]
fn next_subset(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// Exact toughness by exhaustive cut enumeration in increasing cut size,
/// stopping once no larger cut can improve on the best ratio found.
///
/// Errors: `NotConnected` for disconnected input, `BudgetExceeded` when the
/// order is beyond `limit` (or beyond one machine word).
pub fn toughness_exact(g: &Graph, limit: usize) -> Result<Toughness> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Ok(Toughness { value: ToughnessValue::Infinite, witness: None });
    }
    let n = g.order();
    let limit = limit.min(WORD_LIMIT);
    if n > limit {
        return Err(Error::BudgetExceeded { order: n, limit });
    }
    let rows = single_word_rows(g);
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let mut best: Option<(Rational, u64, usize)> = None;
    for s in 1..=(n - 2) {
        if let Some((val, _, _)) = best {
            // At size >= s the ratio is at least s / (n - s).
            if val <= Rational::new(s as i64, (n - s) as i64) {
                break;
            }
        }
        let mut mask: u64 = (1 << s) - 1;
        loop {
            let pieces = components_word(&rows, full & !mask);
            if pieces >= 2 {
                let val = Rational::new(s as i64, pieces as i64);
                if best.map_or(true, |(b, _, _)| val < b) {
                    best = Some((val, mask, pieces));
                }
            }
            let next = next_subset(mask);
            if next > full || next < mask {
                break;
            }
            mask = next;
        }
    }
    let (val, mask, pieces) =
        best.expect("connected non-complete graph has a vertex cut of size n-2");
    Ok(Toughness {
        value: ToughnessValue::Finite(val),
        witness: Some(cert_from_mask(mask, pieces)),
    })
}

/// Decides `t`-toughness: `t * c(G - S) <= |S|` for every vertex cut `S`.
///
/// Exhaustive up to `limit` vertices. Beyond the limit, a violating cut is
/// still searched among neighborhood-shaped candidates (the cuts that isolate
/// one vertex or a nonadjacent pair); if none violates, the answer is
/// `Unknown` rather than a guess.
pub fn is_t_tough(g: &Graph, t: Rational, limit: usize) -> Result<ToughDecision> {
    if t <= Rational::from_integer(0) {
        return Err(Error::InvalidParameter(format!("t must be positive, got {t}")));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Ok(ToughDecision::Yes);
    }
    let n = g.order();
    let (p, q) = (*t.numer(), *t.denom());
    let limit = limit.min(WORD_LIMIT);
    if n > limit {
        return Ok(heuristic_violation(g, p, q));
    }

    let rows = single_word_rows(g);
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    for s in 1..=(n - 2) {
        // A cut of size s can violate only if t * (n - s) > s.
        if p * (n - s) as i64 <= q * s as i64 {
            break;
        }
        let mut mask: u64 = (1 << s) - 1;
        loop {
            let pieces = components_word(&rows, full & !mask);
            if pieces >= 2 && p * pieces as i64 > q * s as i64 {
                return Ok(ToughDecision::No(cert_from_mask(mask, pieces)));
            }
            let next = next_subset(mask);
            if next > full || next < mask {
                break;
            }
            mask = next;
        }
    }
    Ok(ToughDecision::Yes)
}

/// Tries cuts of the form N(v), N(u) U N(v) for nonadjacent u, v, and
/// N(u) & N(v) for adjacent u, v.
pub(crate) fn heuristic_violation(g: &Graph, p: i64, q: i64) -> ToughDecision {
    let n = g.order();
    let words = g.words_per_row();
    let full = {
        let mut f = vec![!0u64; words];
        let spare = words * 64 - n;
        if spare > 0 {
            f[words - 1] = !0 >> spare;
        }
        f
    };
    let check = |cut_words: &[u64]| -> Option<CutCertificate> {
        let size = cut_words.iter().map(|w| w.count_ones() as i64).sum::<i64>();
        if size as usize >= n {
            return None;
        }
        let alive: Vec<u64> =
            full.iter().zip(cut_words).map(|(f, c)| f & !c).collect();
        let pieces = g.components_masked(&alive);
        if pieces >= 2 && p * pieces as i64 > q * size {
            let cut = (0..n)
                .filter(|&v| cut_words[v / 64] >> (v % 64) & 1 == 1)
                .collect();
            Some(CutCertificate { cut, pieces })
        } else {
            None
        }
    };

    for v in 0..n {
        let mut cut = g.row(v).to_vec();
        cut[v / 64] &= !(1 << (v % 64));
        if let Some(cert) = check(&cut) {
            return ToughDecision::No(cert);
        }
    }
    for u in 0..n {
        for v in (u + 1)..n {
            let mut cut: Vec<u64> = if g.has_edge(u, v) {
                // Common neighborhood of an edge: separates the pair from
                // everything it only reaches through shared neighbors.
                g.row(u).iter().zip(g.row(v)).map(|(a, b)| a & b).collect()
            } else {
                g.row(u).iter().zip(g.row(v)).map(|(a, b)| a | b).collect()
            };
            cut[u / 64] &= !(1 << (u % 64));
            cut[v / 64] &= !(1 << (v % 64));
            if let Some(cert) = check(&cut) {
                return ToughDecision::No(cert);
            }
        }
    }
    ToughDecision::Unknown
}

// ====================================================================
// tests
// ====================================================================
