//! Dense symmetric spectra.
//!
//! A single cyclic Jacobi rotation solver backs every spectral radius here:
//! adjacency, signless Laplacian Q = D + A, distance matrix, and distance
//! signless Laplacian Q_D = Diag(Tr) + D. Matrices are built symmetric from
//! exact integer quantities, so the only floating-point step is the rotation
//! sweep itself. Off-diagonal convergence is 1e-10 relative to the max-norm
//! of the input; equality detection downstream uses 1e-8.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative off-diagonal convergence threshold for the eigensolver.
pub const EIGEN_TOL: f64 = 1e-10;
/// Tolerance for treating a bound as attained with equality.
pub const EQUALITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds from `f(i, j)` evaluated once per unordered pair (including the
    /// diagonal) and mirrored, so the result is symmetric by construction.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        SymmetricMatrix { n, data }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_norm(&self) -> f64 {
        self.data.iter().fold(0.0, |a, &x| a.max(x.abs()))
    }

    /// `M v` for a dense vector.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// Eigenvalues in nonincreasing order together with the eigenvector of the
/// largest eigenvalue.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub leading_vector: Vec<f64>,
}

/// Cyclic Jacobi diagonalization. Sweeps rotate away every off-diagonal
/// entry above the threshold until the largest off-diagonal magnitude drops
/// below `EIGEN_TOL * max_norm`.
pub fn symmetric_eigen(m: &SymmetricMatrix) -> EigenDecomposition {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = EIGEN_TOL * m.max_norm();

    let off = |a: &[f64]| -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max(a[i * n + j].abs());
            }
        }
        worst
    };

    let mut sweeps = 0;
    while off(&a) > threshold && sweeps < 100 {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= threshold {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // Rotate rows/columns p and q.
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    debug_assert!(off(&a) <= threshold.max(f64::EPSILON), "Jacobi sweep cap reached");

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j].partial_cmp(&a[i * n + i]).expect("eigenvalues are finite")
    });
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let lead = order[0];
    let leading_vector: Vec<f64> = (0..n).map(|k| v[k * n + lead]).collect();
    EigenDecomposition { values, leading_vector }
}

/// Eigenvalues only, nonincreasing.
pub fn symmetric_eigenvalues(m: &SymmetricMatrix) -> Vec<f64> {
    symmetric_eigen(m).values
}

pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(g.order(), |i, j| f64::from(i != j && g.has_edge(i, j)))
}

/// Signless Laplacian Q = Diag(degrees) + A.
pub fn signless_laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else {
            f64::from(g.has_edge(i, j))
        }
    })
}

/// Largest adjacency eigenvalue. Defined for disconnected graphs too.
pub fn adjacency_spectral_radius(g: &Graph) -> f64 {
    symmetric_eigen(&adjacency_matrix(g)).values[0]
}

/// Largest signless Laplacian eigenvalue. Defined for disconnected graphs.
pub fn signless_laplacian_spectral_radius(g: &Graph) -> f64 {
    symmetric_eigen(&signless_laplacian_matrix(g)).values[0]
}

/// All-pairs BFS distances. Errors with `NotConnected` when some pair is
/// unreachable.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<u32>>> {
    let n = g.order();
    let mut dist = vec![vec![u32::MAX; n]; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if row[w] == u32::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if row.iter().any(|&d| d == u32::MAX) {
            return Err(Error::NotConnected);
        }
    }
    Ok(dist)
}

/// Wiener index (sum of pairwise distances) and per-vertex transmissions.
/// Exact integers; `wiener = sum(transmissions) / 2`.
pub fn wiener_and_transmissions(g: &Graph) -> Result<(u64, Vec<u64>)> {
    let dist = distance_matrix(g)?;
    let tr: Vec<u64> =
        dist.iter().map(|row| row.iter().map(|&d| u64::from(d)).sum()).collect();
    let total: u64 = tr.iter().sum();
    debug_assert_eq!(total % 2, 0);
    Ok((total / 2, tr))
}

/// Largest distance-matrix eigenvalue; requires a connected graph.
pub fn distance_spectral_radius(g: &Graph) -> Result<f64> {
    let dist = distance_matrix(g)?;
    let m = SymmetricMatrix::from_fn(g.order(), |i, j| f64::from(dist[i][j]));
    Ok(symmetric_eigen(&m).values[0])
}

/// Largest eigenvalue of Q_D = Diag(Tr) + D; requires a connected graph.
pub fn distance_signless_laplacian_spectral_radius(g: &Graph) -> Result<f64> {
    let dist = distance_matrix(g)?;
    let tr: Vec<u64> =
        dist.iter().map(|row| row.iter().map(|&d| u64::from(d)).sum()).collect();
    let m = SymmetricMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            tr[i] as f64
        } else {
            f64::from(dist[i][j])
        }
    });
    Ok(symmetric_eigen(&m).values[0])
}

/// Everything spectral for a connected graph in one pass.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    pub lambda1_adjacency: f64,
    pub q1_signless_laplacian: f64,
    pub lambda1_distance: f64,
    pub eta1_distance_signless_laplacian: f64,
    pub wiener: u64,
    pub transmissions: Vec<u64>,
    pub transmission_regular: bool,
}

pub fn spectral_summary(g: &Graph) -> Result<SpectralSummary> {
    let dist = distance_matrix(g)?;
    let n = g.order();
    let tr: Vec<u64> =
        dist.iter().map(|row| row.iter().map(|&d| u64::from(d)).sum()).collect();
    let wiener = tr.iter().sum::<u64>() / 2;
    let d_mat = SymmetricMatrix::from_fn(n, |i, j| f64::from(dist[i][j]));
    let qd_mat = SymmetricMatrix::from_fn(n, |i, j| {
        if i == j {
            tr[i] as f64
        } else {
            f64::from(dist[i][j])
        }
    });
    Ok(SpectralSummary {
        lambda1_adjacency: adjacency_spectral_radius(g),
        q1_signless_laplacian: signless_laplacian_spectral_radius(g),
        lambda1_distance: symmetric_eigen(&d_mat).values[0],
        eta1_distance_signless_laplacian: symmetric_eigen(&qd_mat).values[0],
        wiener,
        transmission_regular: tr.iter().all(|&x| x == tr[0]),
        transmissions: tr,
    })
}

/// One upper or lower bound check: `value` against `bound`, with the slack
/// oriented so that nonnegative slack means the bound holds.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundCheck {
    pub value: f64,
    pub bound: f64,
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
}

impl BoundCheck {
    fn upper(value: f64, bound: f64) -> Self {
        let slack = bound - value;
        BoundCheck {
            value,
            bound,
            slack,
            holds: slack >= -EQUALITY_TOL,
            equality: slack.abs() <= EQUALITY_TOL,
        }
    }

    fn lower(value: f64, bound: f64) -> Self {
        let slack = value - bound;
        BoundCheck {
            value,
            bound,
            slack,
            holds: slack >= -EQUALITY_TOL,
            equality: slack.abs() <= EQUALITY_TOL,
        }
    }
}

/// Exact integer lower bounds tied to distances.
#[derive(Debug, Clone, Serialize)]
pub struct TransmissionCheck {
    /// Minimum over vertices of `Tr(v) - (2(n-1) - d(v))`.
    pub min_slack: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WienerCheck {
    pub wiener: u64,
    /// `n(n-1) - m`.
    pub lower_bound: i64,
    pub holds: bool,
}

/// The four radius bounds plus the exact transmission and Wiener bounds,
/// evaluated on a connected graph:
///
/// * adjacency radius <= sqrt(2m - n + 1)
/// * signless Laplacian radius <= 2m/(n-1) + n - 2 (order >= 2)
/// * distance radius >= 2W/n
/// * distance signless Laplacian radius >= 4W/n
/// * Tr(v) >= 2(n-1) - d(v) for every vertex
/// * W >= n(n-1) - m
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub adjacency_upper: BoundCheck,
    /// `None` for the one-vertex graph (the bound divides by n-1).
    pub signless_laplacian_upper: Option<BoundCheck>,
    pub distance_lower: BoundCheck,
    pub distance_signless_laplacian_lower: BoundCheck,
    pub transmission_lower: TransmissionCheck,
    pub wiener_lower: WienerCheck,
}

pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    let summary = spectral_summary(g)?;
    let n = g.order();
    let m = g.size();
    let w = summary.wiener;

    let adjacency_upper = BoundCheck::upper(
        summary.lambda1_adjacency,
        ((2 * m) as f64 - n as f64 + 1.0).sqrt(),
    );
    let signless_laplacian_upper = (n >= 2).then(|| {
        BoundCheck::upper(
            summary.q1_signless_laplacian,
            (2 * m) as f64 / (n - 1) as f64 + (n - 2) as f64,
        )
    });
    let distance_lower =
        BoundCheck::lower(summary.lambda1_distance, (2 * w) as f64 / n as f64);
    let distance_signless_laplacian_lower = BoundCheck::lower(
        summary.eta1_distance_signless_laplacian,
        (4 * w) as f64 / n as f64,
    );

    let min_slack = (0..n)
        .map(|v| summary.transmissions[v] as i64 - (2 * (n as i64 - 1) - g.degree(v) as i64))
        .min()
        .expect("order is at least 1");
    let transmission_lower = TransmissionCheck { min_slack, holds: min_slack >= 0 };

    let wiener_bound = n as i64 * (n as i64 - 1) - m as i64;
    let wiener_lower =
        WienerCheck { wiener: w, lower_bound: wiener_bound, holds: w as i64 >= wiener_bound };

    Ok(BoundsReport {
        adjacency_upper,
        signless_laplacian_upper,
        distance_lower,
        distance_signless_laplacian_lower,
        transmission_lower,
        wiener_lower,
    })
}

// ====================================================================
// tests
// ====================================================================
