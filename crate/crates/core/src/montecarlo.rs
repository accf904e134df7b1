//! Monte Carlo simulation of the conductance-induced walk.
//!
//! Walker `i` draws from a ChaCha8 stream keyed by `(seed, i)`, so results do
//! not depend on how walkers are scheduled. Per-walker results are folded in
//! walker-index order.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::network::Network;
use crate::solver;

/// Default cap on the length of a single simulated walk.
pub const MAX_WALK_STEPS: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(samples)`; zero for a single sample.
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McEstimate {
    /// `|mean - exact| <= k * stderr`, with a rounding allowance for
    /// deterministic walks whose stderr is exactly zero.
    pub fn agrees_with(&self, exact: f64, k: f64) -> bool {
        libm::fabs(self.mean - exact) <= k * self.stderr + 1e-12 * libm::fabs(exact).max(1.0)
    }

    /// Distance from `exact` in units of the standard error.
    pub fn z_score(&self, exact: f64) -> f64 {
        (self.mean - exact) / self.stderr
    }
}

/// Welford accumulator.
#[derive(Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn finish(self, seed: u64) -> McEstimate {
        let stderr = if self.count > 1 {
            let var = self.m2 / (self.count - 1) as f64;
            libm::sqrt(var / self.count as f64)
        } else {
            0.0
        };
        McEstimate { mean: self.mean, stderr, samples: self.count, seed }
    }
}

/// The RNG stream for walker `index`.
pub fn walker_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Step sampler over cumulative conductance tables.
#[derive(Debug, Clone)]
pub struct Walker<'a> {
    net: &'a Network,
    cumulative: Vec<Vec<f64>>,
    step_cap: u64,
}

impl<'a> Walker<'a> {
    pub fn new(net: &'a Network) -> Result<Self> {
        if net.vertex_count() < 2 {
            return Err(Error::BadParameter("random walk needs at least two vertices".into()));
        }
        let cumulative = (0..net.vertex_count())
            .map(|v| {
                let mut acc = 0.0;
                net.adjacency()[v]
                    .iter()
                    .map(|&(_, c)| {
                        acc += c;
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(Walker { net, cumulative, step_cap: MAX_WALK_STEPS })
    }

    pub fn with_step_cap(mut self, cap: u64) -> Self {
        self.step_cap = cap;
        self
    }

    /// One step from `y`: neighbour `z` with probability `C_yz / C_y`.
    pub fn step<R: RngCore>(&self, y: usize, rng: &mut R) -> usize {
        let table = &self.cumulative[y];
        let total = *table.last().expect("connected network has no isolated vertex");
        let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        let x = u * total;
        let i = table.partition_point(|&c| c <= x).min(table.len() - 1);
        self.net.adjacency()[y][i].0
    }

    /// Steps until `target` is visited, starting from `start` and counting
    /// from step one (so `start == target` gives a return time).
    fn steps_until<R: RngCore>(&self, start: usize, target: usize, rng: &mut R) -> Result<u64> {
        let mut v = start;
        let mut steps = 0;
        loop {
            v = self.step(v, rng);
            steps += 1;
            if v == target {
                return Ok(steps);
            }
            if steps >= self.step_cap {
                return Err(Error::WalkCapExceeded(self.step_cap));
            }
        }
    }

    /// Visits to `z` after time zero before the walk reaches `absorber`.
    fn returns_before<R: RngCore>(&self, z: usize, absorber: usize, rng: &mut R) -> Result<u64> {
        let mut v = z;
        let mut returns = 0;
        let mut steps = 0u64;
        loop {
            v = self.step(v, rng);
            steps += 1;
            if v == absorber {
                return Ok(returns);
            }
            if v == z {
                returns += 1;
            }
            if steps >= self.step_cap {
                return Err(Error::WalkCapExceeded(self.step_cap));
            }
        }
    }

    fn estimate<F>(&self, samples: u64, seed: u64, mut one: F) -> Result<McEstimate>
    where
        F: FnMut(&mut ChaCha8Rng) -> Result<u64>,
    {
        if samples == 0 {
            return Err(Error::BadParameter("need at least one sample".into()));
        }
        let mut moments = Moments::default();
        for i in 0..samples {
            let mut rng = walker_rng(seed, i);
            moments.push(one(&mut rng)? as f64);
        }
        Ok(moments.finish(seed))
    }

    /// Estimates `E_z T_z^+`.
    pub fn return_time(&self, z: usize, samples: u64, seed: u64) -> Result<McEstimate> {
        self.net.check_vertex(z)?;
        self.estimate(samples, seed, |rng| self.steps_until(z, z, rng))
    }

    /// Estimates `E_a T_b` for `a != b`.
    pub fn hitting_time(&self, a: usize, b: usize, samples: u64, seed: u64) -> Result<McEstimate> {
        self.net.check_vertex(a)?;
        self.net.check_vertex(b)?;
        if a == b {
            return Err(Error::BadParameter("hitting time needs distinct vertices".into()));
        }
        self.estimate(samples, seed, |rng| self.steps_until(a, b, rng))
    }

    /// Estimates the number of returns to `z` before first reaching `absorber`.
    pub fn returns_before_absorption(
        &self,
        z: usize,
        absorber: usize,
        samples: u64,
        seed: u64,
    ) -> Result<McEstimate> {
        self.net.check_vertex(z)?;
        self.net.check_vertex(absorber)?;
        self.estimate(samples, seed, |rng| self.returns_before(z, absorber, rng))
    }

    /// How often each neighbour of `y` is chosen in `draws` single steps.
    /// Counts follow the order of [`Network::neighbors`].
    pub fn step_counts(&self, y: usize, draws: u64, seed: u64) -> Result<Vec<u64>> {
        let nbrs = self.net.neighbors(y)?;
        let mut counts = alloc::vec![0u64; nbrs.len()];
        let mut rng = walker_rng(seed, 0);
        for _ in 0..draws {
            let z = self.step(y, &mut rng);
            let i = nbrs.binary_search_by_key(&z, |&(v, _)| v).expect("step stays on an edge");
            counts[i] += 1;
        }
        Ok(counts)
    }
}

pub fn estimate_return_time(net: &Network, z: usize, samples: u64, seed: u64) -> Result<McEstimate> {
    Walker::new(net)?.return_time(z, samples, seed)
}

pub fn estimate_hitting_time(
    net: &Network,
    a: usize,
    b: usize,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    Walker::new(net)?.hitting_time(a, b, samples, seed)
}

/// Simulated `E_z T~_{z~}` on the network with a unit pendant `z~` at `z`,
/// next to the two closed forms it should match: `C + 1`, and
/// `C_z E_z T_z^+ + 1` with the return time taken as `C / C_z`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PendantCheck {
    pub lhs: McEstimate,
    pub c_plus_1: f64,
    pub cz_formula: f64,
}

pub fn verify_pendant_identities(
    net: &Network,
    z: usize,
    samples: u64,
    seed: u64,
) -> Result<PendantCheck> {
    let (extended, pendant) = net.add_pendant_vertex(z, 1.0)?;
    let lhs = Walker::new(&extended)?.hitting_time(z, pendant, samples, seed)?;
    let cz = net.vertex_strength(z)?;
    Ok(PendantCheck {
        lhs,
        c_plus_1: net.total_strength() + 1.0,
        cz_formula: cz * solver::return_time(net, z)? + 1.0,
    })
}

/// Simulated number of excursions from `z` back to `z` before the walk on the
/// pendant-extended network escapes to `z~`; the expectation is `C_z`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExcursionCheck {
    pub mean_excursions: McEstimate,
    pub expected: f64,
}

pub fn excursion_count_check(
    net: &Network,
    z: usize,
    samples: u64,
    seed: u64,
) -> Result<ExcursionCheck> {
    let (extended, pendant) = net.add_pendant_vertex(z, 1.0)?;
    let mean_excursions =
        Walker::new(&extended)?.returns_before_absorption(z, pendant, samples, seed)?;
    Ok(ExcursionCheck { mean_excursions, expected: net.vertex_strength(z)? })
}
