//! Exact resistances and random-walk expectations by dense linear algebra on
//! the weighted Laplacian `L` (`L_zz = C_z`, `L_yz = -C_yz`).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Cholesky, SquareMatrix, SymmetricEigen};
use crate::network::Network;

/// Eigenvalues below this fraction of the largest one count as zero modes.
pub const ZERO_MODE_RATIO: f64 = 1e-10;

/// Pairwise effective resistances and their sum over unordered pairs.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResistanceReport {
    pub resistance: Vec<Vec<f64>>,
    pub kirchhoff_index: f64,
}

impl ResistanceReport {
    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.resistance[a][b]
    }
}

/// Expected hitting, commute and return times of the induced walk.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HittingReport {
    /// `hitting[a][b]` is the expected number of steps from `a` until `b` is first visited.
    pub hitting: Vec<Vec<f64>>,
    pub commute: Vec<Vec<f64>>,
    /// First-step return times `1 + sum_y P(z, y) hitting[y][z]`.
    pub return_time: Vec<f64>,
}

pub fn laplacian(net: &Network) -> SquareMatrix {
    let n = net.vertex_count();
    let mut l = SquareMatrix::zeros(n);
    for &(a, b, c) in net.edges() {
        l[(a, b)] -= c;
        l[(b, a)] -= c;
        l[(a, a)] += c;
        l[(b, b)] += c;
    }
    l
}

/// Moore-Penrose pseudoinverse of the Laplacian of a connected network,
/// computed as `(L + J/n)^-1 - J/n` with a Cholesky factorisation.
pub fn laplacian_pseudoinverse(net: &Network) -> Result<SquareMatrix> {
    let n = net.vertex_count();
    let shift = 1.0 / n as f64;
    let mut m = laplacian(net);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] += shift;
        }
    }
    let mut inv = Cholesky::factor(&m)?.inverse();
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] -= shift;
        }
    }
    Ok(inv)
}

/// Laplacian spectrum in ascending order, with the single zero mode pinned to 0.
///
/// More than one eigenvalue below `ZERO_MODE_RATIO * max` means more than one
/// component, reported as [`Error::DisconnectedGraph`].
pub fn laplacian_spectrum(net: &Network) -> Result<Vec<f64>> {
    let mut values = SymmetricEigen::new(&laplacian(net))?.values;
    let largest = values.last().copied().unwrap_or(0.0);
    let cutoff = ZERO_MODE_RATIO * largest;
    let zeros = values.iter().filter(|&&mu| mu <= cutoff).count();
    if zeros != 1 {
        return Err(Error::DisconnectedGraph);
    }
    values[0] = 0.0;
    Ok(values)
}

/// Kirchhoff index from the spectrum: `n * sum 1/mu` over nonzero eigenvalues.
pub fn kirchhoff_index_spectral(net: &Network) -> Result<f64> {
    let mu = laplacian_spectrum(net)?;
    Ok(net.vertex_count() as f64 * mu[1..].iter().map(|m| 1.0 / m).sum::<f64>())
}

/// `R_ab = L+_aa + L+_bb - 2 L+_ab` for every pair.
pub fn effective_resistance_matrix(net: &Network) -> Result<ResistanceReport> {
    let n = net.vertex_count();
    let pinv = laplacian_pseudoinverse(net)?;
    let mut resistance = vec![vec![0.0; n]; n];
    let mut kirchhoff_index = 0.0;
    for a in 0..n {
        for b in a + 1..n {
            let r = pinv[(a, a)] + pinv[(b, b)] - 2.0 * pinv[(a, b)];
            resistance[a][b] = r;
            resistance[b][a] = r;
            kirchhoff_index += r;
        }
    }
    Ok(ResistanceReport { resistance, kirchhoff_index })
}

pub fn effective_resistance(net: &Network, a: usize, b: usize) -> Result<f64> {
    net.check_vertex(a)?;
    net.check_vertex(b)?;
    Ok(effective_resistance_matrix(net)?.get(a, b))
}

pub fn kirchhoff_index(net: &Network) -> Result<f64> {
    Ok(effective_resistance_matrix(net)?.kirchhoff_index)
}

fn require_walk(net: &Network) -> Result<()> {
    if net.vertex_count() < 2 {
        return Err(Error::BadParameter("random walk needs at least two vertices".into()));
    }
    Ok(())
}

/// Expected steps to reach `target` from every vertex.
///
/// Solves the grounded first-step system `h(target) = 0`,
/// `C_v h(v) - sum_{y != target} C_vy h(y) = C_v`, whose matrix is the
/// Laplacian with the target row and column removed.
pub fn hitting_times_to(net: &Network, target: usize) -> Result<Vec<f64>> {
    net.check_vertex(target)?;
    require_walk(net)?;
    let n = net.vertex_count();
    let index = |v: usize| if v < target { v } else { v - 1 };
    let mut grounded = SquareMatrix::zeros(n - 1);
    let mut rhs = vec![0.0; n - 1];
    for v in (0..n).filter(|&v| v != target) {
        let i = index(v);
        grounded[(i, i)] = net.strengths()[v];
        rhs[i] = net.strengths()[v];
        for &(y, c) in &net.adjacency()[v] {
            if y != target {
                grounded[(i, index(y))] -= c;
            }
        }
    }
    let h = Cholesky::factor(&grounded)?.solve(&rhs);
    Ok((0..n).map(|v| if v == target { 0.0 } else { h[index(v)] }).collect())
}

pub fn hitting_time_matrix(net: &Network) -> Result<HittingReport> {
    require_walk(net)?;
    let n = net.vertex_count();
    let mut hitting = vec![vec![0.0; n]; n];
    for b in 0..n {
        for (a, h) in hitting_times_to(net, b)?.into_iter().enumerate() {
            hitting[a][b] = h;
        }
    }
    let commute = (0..n)
        .map(|a| (0..n).map(|b| hitting[a][b] + hitting[b][a]).collect())
        .collect();
    let return_time = (0..n)
        .map(|z| {
            let cz = net.strengths()[z];
            1.0 + net.adjacency()[z].iter().map(|&(y, c)| c / cz * hitting[y][z]).sum::<f64>()
        })
        .collect();
    Ok(HittingReport { hitting, commute, return_time })
}

pub fn hitting_time(net: &Network, from: usize, to: usize) -> Result<f64> {
    net.check_vertex(from)?;
    Ok(hitting_times_to(net, to)?[from])
}

/// Expected return time `C / C_z`.
pub fn return_time(net: &Network, z: usize) -> Result<f64> {
    let cz = net.vertex_strength(z)?;
    require_walk(net)?;
    Ok(net.total_strength() / cz)
}

/// `E_a T_b + E_b T_a` from two grounded solves.
pub fn commute_time(net: &Network, a: usize, b: usize) -> Result<f64> {
    net.check_vertex(a)?;
    net.check_vertex(b)?;
    if a == b {
        return Err(Error::BadParameter("commute time needs distinct vertices".into()));
    }
    Ok(hitting_time(net, a, b)? + hitting_time(net, b, a)?)
}
