//! Walk-regularity: every vertex closes the same number of walks of each length.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::network::Network;
use crate::solver;

/// Two vertices with different closed-walk counts at length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WalkViolation {
    pub k: usize,
    pub x: usize,
    pub y: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WalkRegularityReport {
    pub is_regular: bool,
    pub is_walk_regular: bool,
    /// Only set for regular graphs that fail at some `k >= 3`.
    pub first_violation: Option<WalkViolation>,
    /// Largest walk length examined.
    pub checked_k_max: usize,
}

/// Counts closed walks of every length `k = 2..=max(n-1, 2)` exactly.
///
/// Lengths up to `n - 1` suffice: by Cayley-Hamilton every higher power of the
/// adjacency matrix is a combination of `I, A, ..., A^{n-1}`, whose diagonals
/// are then all constant (`k = 0, 1` are trivially so).
pub fn check_walk_regular(net: &Network) -> Result<WalkRegularityReport> {
    if !net.is_unit() {
        return Err(Error::NonUnitConductance);
    }
    let n = net.vertex_count();
    let degree = net.degree(0)?;
    if (1..n).any(|v| net.degree(v).ok() != Some(degree)) {
        return Ok(WalkRegularityReport {
            is_regular: false,
            is_walk_regular: false,
            first_violation: None,
            checked_k_max: 2,
        });
    }
    let k_max = (n.saturating_sub(1)).max(2);
    let mut walks = WalkCounts::new(net);
    for k in 2..=k_max {
        walks.step(net);
        let diag = walks.diagonal();
        if let Some(y) = (1..n).find(|&y| diag[y] != diag[0]) {
            return Ok(WalkRegularityReport {
                is_regular: true,
                is_walk_regular: false,
                first_violation: Some(WalkViolation { k, x: 0, y }),
                checked_k_max: k,
            });
        }
    }
    Ok(WalkRegularityReport {
        is_regular: true,
        is_walk_regular: true,
        first_violation: None,
        checked_k_max: k_max,
    })
}

/// Walk counts between every ordered pair for the current length.
struct WalkCounts {
    n: usize,
    counts: Vec<BigUint>,
}

impl WalkCounts {
    /// Length-one walks: the adjacency matrix.
    fn new(net: &Network) -> Self {
        let n = net.vertex_count();
        let mut counts = vec![BigUint::ZERO; n * n];
        for (i, nbrs) in net.adjacency().iter().enumerate() {
            for &(j, _) in nbrs {
                counts[i * n + j] = BigUint::from(1u8);
            }
        }
        WalkCounts { n, counts }
    }

    /// `W <- A W`, using only additions since `A` is 0/1.
    fn step(&mut self, net: &Network) {
        let n = self.n;
        let mut next = vec![BigUint::ZERO; n * n];
        for (i, nbrs) in net.adjacency().iter().enumerate() {
            let row = &mut next[i * n..(i + 1) * n];
            for &(l, _) in nbrs {
                for (dst, src) in row.iter_mut().zip(&self.counts[l * n..(l + 1) * n]) {
                    *dst += src;
                }
            }
        }
        self.counts = next;
    }

    fn diagonal(&self) -> Vec<&BigUint> {
        (0..self.n).map(|i| &self.counts[i * self.n + i]).collect()
    }
}

/// Number of closed walks of length `k >= 1` starting at each vertex, i.e. `diag(A^k)`.
pub fn closed_walk_counts(net: &Network, k: usize) -> Result<Vec<BigUint>> {
    if !net.is_unit() {
        return Err(Error::NonUnitConductance);
    }
    if k == 0 {
        return Err(Error::BadParameter("walk length must be at least 1".into()));
    }
    let mut walks = WalkCounts::new(net);
    for _ in 1..k {
        walks.step(net);
    }
    Ok(walks.diagonal().into_iter().cloned().collect())
}

/// `max |E_a T_b - E_b T_a| / max(1, E_a T_b)` over all ordered pairs.
///
/// Zero on walk-regular graphs, but zero does not certify walk-regularity.
pub fn hitting_symmetry_defect(net: &Network) -> Result<f64> {
    let h = solver::hitting_time_matrix(net)?.hitting;
    let n = net.vertex_count();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let d = libm::fabs(h[a][b] - h[b][a]) / h[a][b].max(1.0);
            worst = worst.max(d);
        }
    }
    Ok(worst)
}
