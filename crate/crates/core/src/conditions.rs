//! Sufficient-condition evaluation for Hamiltonicity of tough graphs.
//!
//! A connected t-tough graph on n > 10t - 3 vertices is Hamiltonian (indeed
//! pancyclic or bipartite) once its edge count reaches a quadratic threshold;
//! four eigenvalue conditions (adjacency radius, signless Laplacian radius,
//! distance radius, distance signless Laplacian radius) each imply that size
//! condition. This module evaluates the thresholds exactly, assembles
//! verdicts with margins, and constructs the extremal families that make the
//! thresholds tight.

use std::fmt;

use serde::Serialize;

use crate::closure::k_closure;
use crate::cycles::{classify_conclusion, ConclusionTriple, ThreeValued};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::spectra::{
    adjacency_spectral_radius, distance_signless_laplacian_spectral_radius,
    distance_spectral_radius, signless_laplacian_spectral_radius, EQUALITY_TOL,
};
use crate::toughness::{is_t_tough, Rational, ToughDecision, DEFAULT_TOUGH_LIMIT};

// ====================================================================
// thresholds
// ====================================================================

/// Edge-count threshold: C(n - 2t, 2) + 3t^2. A connected t-tough graph on
/// n > 10t - 3 vertices with at least this many edges is Hamiltonian and
/// pancyclic-or-bipartite. Exact integer arithmetic.
pub fn threshold_size(n: usize, t: u32) -> Result<u64> {
    let t = t as u64;
    let n = n as u64;
    if n <= 2 * t {
        return Err(Error::InvalidParameter(format!(
            "size threshold needs n > 2t, got n = {n}, t = {t}"
        )));
    }
    let k = n - 2 * t;
    Ok(k * (k - 1) / 2 + 3 * t * t)
}

/// The four eigenvalue conditions, named by the spectrum they constrain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConditionKind {
    AdjacencyRadius,
    SignlessLaplacianRadius,
    DistanceRadius,
    DistanceSignlessLaplacianRadius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundDirection {
    /// Condition holds when the invariant is >= the threshold.
    AtLeast,
    /// Condition holds when the invariant is <= the threshold.
    AtMost,
}

/// Threshold value and direction for one eigenvalue condition at (n, t).
/// Pure formula evaluation; meaningful for n >= 2 (a full verdict
/// additionally needs n > 10t - 3).
pub fn threshold_condition(kind: ConditionKind, n: usize, t: u32) -> (f64, BoundDirection) {
    let n = n as f64;
    let t = t as f64;
    match kind {
        ConditionKind::AdjacencyRadius => {
            let radicand = n * n - (4.0 * t + 2.0) * n + 10.0 * t * t + 2.0 * t + 1.0;
            (radicand.sqrt(), BoundDirection::AtLeast)
        }
        ConditionKind::SignlessLaplacianRadius => {
            let v = (n * n - (4.0 * t + 1.0) * n + 10.0 * t * t + 2.0 * t) / (n - 1.0) + n - 2.0;
            (v, BoundDirection::AtLeast)
        }
        ConditionKind::DistanceRadius => {
            (n + 4.0 * t - 1.0 - (10.0 * t * t + 2.0 * t) / n, BoundDirection::AtMost)
        }
        ConditionKind::DistanceSignlessLaplacianRadius => {
            (2.0 * n + 8.0 * t - 2.0 - (20.0 * t * t + 4.0 * t) / n, BoundDirection::AtMost)
        }
    }
}

/// Human-readable formula behind each threshold, for report metadata. The
/// signless Laplacian form is the corrected one (an earlier published
/// variant carried a stray factor of 2 on the leading term).
pub fn condition_formula(kind: ConditionKind) -> &'static str {
    match kind {
        ConditionKind::AdjacencyRadius => "sqrt(n^2 - (4t+2)n + 10t^2 + 2t + 1)",
        ConditionKind::SignlessLaplacianRadius => {
            "(n^2 - (4t+1)n + 10t^2 + 2t)/(n-1) + n - 2"
        }
        ConditionKind::DistanceRadius => "n + 4t - 1 - (10t^2 + 2t)/n",
        ConditionKind::DistanceSignlessLaplacianRadius => "2n + 8t - 2 - (20t^2 + 4t)/n",
    }
}

// ====================================================================
// verdicts
// ====================================================================

/// Parameters for a condition evaluation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionQuery {
    /// Integer toughness parameter (the conditions are calibrated for
    /// t >= 4; smaller t runs the same formulas and gets a coverage note).
    pub t: u32,
    /// Trust the t-toughness precondition instead of verifying it.
    pub assume_tough: bool,
    /// Run the exact cycle-structure classifier and cross-check.
    pub verify_conclusion: bool,
    /// Node-expansion budget for cycle searches.
    pub budget: u64,
    /// Largest order at which toughness is verified exactly.
    pub tough_limit: usize,
}

impl Default for ConditionQuery {
    fn default() -> Self {
        ConditionQuery {
            t: 4,
            assume_tough: false,
            verify_conclusion: false,
            budget: crate::cycles::DEFAULT_BUDGET,
            tough_limit: DEFAULT_TOUGH_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ToughnessStatus {
    Yes,
    No,
    /// Taken on trust per the query, not verified.
    Assumed,
    /// Verification was inconclusive at this scale.
    Unknown,
}

/// One eigenvalue condition evaluated on a concrete graph. `margin` is
/// positive when the condition holds with room: invariant minus threshold
/// for at-least conditions, threshold minus invariant for at-most ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionMargin {
    pub value: f64,
    pub threshold: f64,
    pub margin: f64,
    pub holds: bool,
}

impl ConditionMargin {
    fn new(value: f64, kind: ConditionKind, n: usize, t: u32) -> Self {
        let (threshold, direction) = threshold_condition(kind, n, t);
        let margin = match direction {
            BoundDirection::AtLeast => value - threshold,
            BoundDirection::AtMost => threshold - value,
        };
        ConditionMargin { value, threshold, margin, holds: margin >= -EQUALITY_TOL }
    }
}

/// The edge-count condition with exact integer margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SizeCheck {
    pub threshold: u64,
    pub margin: i64,
    pub holds: bool,
}

/// Conclusions forced when the preconditions and at least one condition
/// hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ImpliedConclusion {
    pub hamiltonian: bool,
    pub pancyclic_or_bipartite: bool,
}

/// Full evaluation of the sufficient conditions on one graph. Every
/// unavailable field is `None` for a structural reason (threshold undefined,
/// spectrum needs connectivity), never silently defaulted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionVerdict {
    pub n: usize,
    pub m: u64,
    pub connected: bool,
    /// n > 10t - 3, the order range the implications are proved for.
    pub order_ok: bool,
    pub toughness: ToughnessStatus,
    pub size: Option<SizeCheck>,
    pub adjacency: Option<ConditionMargin>,
    pub signless_laplacian: Option<ConditionMargin>,
    pub distance: Option<ConditionMargin>,
    pub distance_signless_laplacian: Option<ConditionMargin>,
    pub implied: Option<ImpliedConclusion>,
    pub observed: Option<ConclusionTriple>,
    /// False only when an implied conclusion contradicts an observed exact
    /// one, which would falsify the implementation or the run.
    pub consistent: bool,
    pub note: Option<String>,
}

/// Evaluates all five sufficient conditions on `g`, verifies or assumes the
/// toughness precondition, and assembles the verdict. Never panics:
/// whatever cannot be computed degrades to `None`/`Unknown` with the reason
/// encoded in the structure.
pub fn evaluate_conditions(g: &Graph, query: &ConditionQuery) -> ConditionVerdict {
    let n = g.order();
    let m = g.size() as u64;
    let t = query.t;
    let connected = g.is_connected();
    let order_ok = n + 3 > 10 * t as usize;

    let toughness = if query.assume_tough {
        ToughnessStatus::Assumed
    } else if !connected {
        ToughnessStatus::No
    } else {
        match is_t_tough(g, Rational::from_integer(t as i64), query.tough_limit) {
            Ok(ToughDecision::Yes) => ToughnessStatus::Yes,
            Ok(ToughDecision::No(_)) => ToughnessStatus::No,
            Ok(ToughDecision::Unknown) => ToughnessStatus::Unknown,
            Err(_) => ToughnessStatus::Unknown,
        }
    };

    let size = threshold_size(n, t).ok().map(|threshold| SizeCheck {
        threshold,
        margin: m as i64 - threshold as i64,
        holds: m >= threshold,
    });
    let adjacency = (n >= 1).then(|| {
        ConditionMargin::new(adjacency_spectral_radius(g), ConditionKind::AdjacencyRadius, n, t)
    });
    let signless_laplacian = (n >= 2).then(|| {
        ConditionMargin::new(
            signless_laplacian_spectral_radius(g),
            ConditionKind::SignlessLaplacianRadius,
            n,
            t,
        )
    });
    let distance = distance_spectral_radius(g)
        .ok()
        .map(|v| ConditionMargin::new(v, ConditionKind::DistanceRadius, n, t));
    let distance_signless_laplacian = distance_signless_laplacian_spectral_radius(g)
        .ok()
        .map(|v| ConditionMargin::new(v, ConditionKind::DistanceSignlessLaplacianRadius, n, t));

    let any_condition = size.is_some_and(|c| c.holds)
        || adjacency.is_some_and(|c| c.holds)
        || signless_laplacian.is_some_and(|c| c.holds)
        || distance.is_some_and(|c| c.holds)
        || distance_signless_laplacian.is_some_and(|c| c.holds);
    let preconditions_ok = connected
        && order_ok
        && matches!(toughness, ToughnessStatus::Yes | ToughnessStatus::Assumed);
    let implied = (preconditions_ok && any_condition)
        .then_some(ImpliedConclusion { hamiltonian: true, pancyclic_or_bipartite: true });

    let observed = query.verify_conclusion.then(|| classify_conclusion(g, query.budget));

    let consistent = match (implied, observed) {
        (Some(imp), Some(obs)) => {
            let ham_ok = !imp.hamiltonian || obs.hamiltonian != ThreeValued::No;
            let pb_ok = !imp.pancyclic_or_bipartite
                || obs.pancyclic != ThreeValued::No
                || obs.bipartite;
            ham_ok && pb_ok
        }
        _ => true,
    };

    let note = (1..=3).contains(&t).then(|| {
        format!("t = {t} is below the primary range t >= 4; this range is covered by earlier results and the formulas coincide")
    });

    ConditionVerdict {
        n,
        m,
        connected,
        order_ok,
        toughness,
        size,
        adjacency,
        signless_laplacian,
        distance,
        distance_signless_laplacian,
        implied,
        observed,
        consistent,
        note,
    }
}

// ====================================================================
// extremal families
// ====================================================================

/// The order-8 cores used in the tight join families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoreKind {
    /// One 8-cycle.
    Cycle8,
    /// Two disjoint 4-cycles.
    TwoCycle4,
    /// Four disjoint edges.
    FourK2,
    /// Eight isolated vertices.
    EightK1,
}

impl CoreKind {
    pub fn build(self) -> Graph {
        match self {
            CoreKind::Cycle8 => Graph::cycle(8).expect("8 >= 3"),
            CoreKind::TwoCycle4 => {
                let c4 = Graph::cycle(4).expect("4 >= 3");
                Graph::disjoint_union(&c4, &c4).expect("order 8")
            }
            CoreKind::FourK2 => {
                Graph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).expect("valid edges")
            }
            CoreKind::EightK1 => Graph::edgeless(8).expect("order 8"),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CoreKind::Cycle8 => "C8",
            CoreKind::TwoCycle4 => "2C4",
            CoreKind::FourK2 => "4K2",
            CoreKind::EightK1 => "8K1",
        }
    }
}

/// Which of the two tight degree sequences to realize.
///
/// `ThreeBlock` is ((2t)^(2t), (n-2t-1)^(n-3t), (n-1)^t) for any n past
/// the order gate; its (n-1)-closure is complete, certifying Hamiltonicity.
/// `TwoBlock` is ((5t-1)^(6t), (10t-2)^(4t-1)), which exists only at
/// n = 10t - 1 and instead defeats the degree predicate while admitting no
/// low-degree nonadjacent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtremalVariant {
    ThreeBlock,
    TwoBlock,
}

/// A constructible family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilySpec {
    /// K_hubs joined with (K_(n-8-hubs) + core): the families showing the
    /// size threshold cannot be lowered.
    Join { hubs: usize, n: usize, core: CoreKind },
    /// A greedy realization of one of the tight degree sequences.
    Extremal { t: u32, n: usize, variant: ExtremalVariant },
    /// K_(n/2, n/2), the bipartite escape in the conclusions.
    BalancedBipartite { n: usize },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Join { hubs, n, core } => {
                write!(f, "K{hubs} v (K{} + {})", n.saturating_sub(8 + hubs), core.label())
            }
            FamilySpec::Extremal { t, n, variant } => match variant {
                ExtremalVariant::ThreeBlock => {
                    let t = t as usize;
                    write!(
                        f,
                        "realization(({}^{}, {}^{}, {}^{}))",
                        2 * t,
                        2 * t,
                        n - 2 * t - 1,
                        n - 3 * t,
                        n - 1,
                        t
                    )
                }
                ExtremalVariant::TwoBlock => {
                    let t = t as usize;
                    write!(
                        f,
                        "realization(({}^{}, {}^{}))",
                        5 * t - 1,
                        6 * t,
                        10 * t - 2,
                        4 * t - 1
                    )
                }
            },
            FamilySpec::BalancedBipartite { n } => write!(f, "K{},{}", n / 2, n / 2),
        }
    }
}

/// Builds the requested family member. Join families need every block
/// nonempty; `TwoBlock` exists only at n = 10t - 1; bipartite needs n even.
pub fn construct_family(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Join { hubs, n, core } => {
            if hubs < 1 || n < 8 + hubs + 1 {
                return Err(Error::InvalidParameter(format!(
                    "join family needs 1 <= hubs and n >= hubs + 9, got hubs = {hubs}, n = {n}"
                )));
            }
            let middle = Graph::complete(n - 8 - hubs)?;
            let inner = Graph::disjoint_union(&middle, &core.build())?;
            Graph::join(&Graph::complete(hubs)?, &inner)
        }
        FamilySpec::Extremal { t, n, variant } => {
            let t = t as usize;
            if t < 1 {
                return Err(Error::InvalidParameter("t must be at least 1".into()));
            }
            match variant {
                ExtremalVariant::ThreeBlock => {
                    if n <= 10 * t - 3 {
                        return Err(Error::InvalidParameter(format!(
                            "three-block sequence needs n > 10t - 3, got n = {n}, t = {t}"
                        )));
                    }
                    // Join K_t onto a realization of the reduced sequence
                    // (t^(2t), (n-3t-1)^(n-3t)) on n - t vertices.
                    let mut reduced = vec![t; 2 * t];
                    reduced.extend(std::iter::repeat(n - 3 * t - 1).take(n - 3 * t));
                    let inner = realize_degree_sequence(&DegreeSequence::from_unsorted(reduced))
                        .ok_or(Error::NotRealizable)?;
                    Graph::join(&Graph::complete(t)?, &inner)
                }
                ExtremalVariant::TwoBlock => {
                    if n != 10 * t - 1 {
                        return Err(Error::InvalidParameter(format!(
                            "two-block sequence exists only at n = 10t - 1, got n = {n}, t = {t}"
                        )));
                    }
                    // Join K_(4t-1) onto a t-regular graph on 6t vertices.
                    let reduced = vec![t; 6 * t];
                    let inner = realize_degree_sequence(&DegreeSequence::from_unsorted(reduced))
                        .ok_or(Error::NotRealizable)?;
                    Graph::join(&Graph::complete(4 * t - 1)?, &inner)
                }
            }
        }
        FamilySpec::BalancedBipartite { n } => {
            if n < 2 || n % 2 != 0 {
                return Err(Error::InvalidParameter(format!(
                    "balanced bipartite needs even n >= 2, got {n}"
                )));
            }
            Graph::complete_bipartite(n / 2, n / 2)
        }
    }
}

/// Certifies the three-block family Hamiltonian through its complete
/// (n-1)-closure; the argument is independent of which realization the
/// greedy construction produced.
pub fn three_block_closure_is_complete(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && k_closure(g, n - 1).is_complete
}

// ====================================================================
// degree sequence realization
// ====================================================================

/// Deterministic greedy (largest-first) realization of a degree sequence.
/// Returns `None` exactly when the sequence is not graphical. Vertex i of
/// the output receives the i-th largest requested degree.
pub fn realize_degree_sequence(seq: &DegreeSequence) -> Option<Graph> {
    let n = seq.len();
    if n == 0 {
        return None;
    }
    let mut residual: Vec<(usize, usize)> = seq
        .degrees()
        .iter()
        .rev()
        .enumerate()
        .map(|(v, &d)| (d, v))
        .collect();
    if residual.iter().any(|&(d, _)| d >= n) {
        return None;
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(seq.sum() / 2);
    loop {
        // Largest residual first, ties by vertex index for determinism.
        residual.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = residual[0];
        if d == 0 {
            break;
        }
        if d >= residual.len() {
            return None;
        }
        for slot in residual.iter_mut().skip(1).take(d) {
            if slot.0 == 0 {
                return None;
            }
            slot.0 -= 1;
            edges.push((v, slot.1));
        }
        residual[0].0 = 0;
    }
    let g = Graph::from_edges(n, &edges).ok()?;
    debug_assert_eq!(g.degree_sequence(), *seq);
    Some(g)
}

// ====================================================================
// tests
// ====================================================================
