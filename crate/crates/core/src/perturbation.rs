//! What happens when a single non-cut edge is deleted.
//!
//! Across a unit edge `ab` the network is the edge itself in parallel with the
//! rest of the graph, so `1/R_ab = 1 + 1/R'_ab`. This gives the new resistance
//! in closed form, and on walk-regular graphs (where hitting times are
//! symmetric before and after the deletion) the new hitting time as well.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::generators::connected_unit_graphs;
use crate::network::{EdgeRef, Network};
use crate::solver;
use crate::walk_regular::check_walk_regular;

/// Resistances within this distance of 1 are treated as a cut-edge.
pub const CUT_EDGE_EPSILON: f64 = 1e-9;

fn check_resistance(r_ab: f64) -> Result<()> {
    if !(r_ab.is_finite() && r_ab > 0.0) {
        return Err(Error::BadParameter(format!("resistance must be positive, got {r_ab}")));
    }
    if r_ab >= 1.0 - CUT_EDGE_EPSILON {
        return Err(Error::CutEdgeResistance(r_ab));
    }
    Ok(())
}

/// `R' = R / (1 - R)` for a unit edge of resistance `R` in the intact graph.
pub fn predicted_removed_resistance(r_ab: f64) -> Result<f64> {
    check_resistance(r_ab)?;
    Ok(r_ab / (1.0 - r_ab))
}

/// `R' - R = R^2 / (1 - R)`.
pub fn resistance_increment(r_ab: f64) -> Result<f64> {
    check_resistance(r_ab)?;
    Ok(r_ab * r_ab / (1.0 - r_ab))
}

/// Largest and smallest possible `R' - R` over connected unit graphs on `n`
/// vertices: `(n-1)^2 / n` (the cycle) and `4 / (n (n-2))` (the complete graph).
pub fn extremal_increment_bounds(n: usize) -> Result<(f64, f64)> {
    if n < 3 {
        return Err(Error::BadParameter(format!("need n >= 3, got {n}")));
    }
    let n = n as f64;
    Ok(((n - 1.0) * (n - 1.0) / n, 4.0 / (n * (n - 2.0))))
}

/// `E_a T_b` after deleting the unit edge `ab` from a walk-regular graph with
/// `edge_count` edges: `(|E| - 1) R / (1 - R)`.
pub fn removed_edge_hitting_time(edge_count: usize, r_ab: f64) -> Result<f64> {
    check_resistance(r_ab)?;
    if edge_count < 2 {
        return Err(Error::BadParameter(format!("need at least two edges, got {edge_count}")));
    }
    Ok((edge_count - 1) as f64 * r_ab / (1.0 - r_ab))
}

/// Before/after quantities for one edge deletion, with closed-form
/// predictions next to values recomputed on the smaller network.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PerturbationReport {
    pub edge: EdgeRef,
    pub r_before: f64,
    pub r_after_predicted: f64,
    pub r_after_direct: f64,
    pub r_increment: f64,
    pub hitting_before: f64,
    /// Present only when the intact graph is certified walk-regular.
    pub hitting_after_predicted: Option<f64>,
    pub hitting_after_direct: f64,
    pub kirchhoff_before: f64,
    pub kirchhoff_after: f64,
}

pub fn analyze_edge_removal(net: &Network, edge: EdgeRef) -> Result<PerturbationReport> {
    net.check_vertex(edge.a)?;
    net.check_vertex(edge.b)?;
    if !net.has_edge(edge.a, edge.b) {
        return Err(Error::NoSuchEdge { a: edge.a, b: edge.b });
    }
    if !net.is_unit() {
        return Err(Error::NonUnitConductance);
    }
    let reduced = net.remove_edge(edge)?;

    let before = solver::effective_resistance_matrix(net)?;
    let after = solver::effective_resistance_matrix(&reduced)?;
    let r_before = before.get(edge.a, edge.b);

    let walk_regular = check_walk_regular(net)?.is_walk_regular;
    let hitting_after_predicted = if walk_regular {
        Some(removed_edge_hitting_time(net.edge_count(), r_before)?)
    } else {
        None
    };

    Ok(PerturbationReport {
        edge,
        r_before,
        r_after_predicted: predicted_removed_resistance(r_before)?,
        r_after_direct: after.get(edge.a, edge.b),
        r_increment: resistance_increment(r_before)?,
        hitting_before: solver::hitting_time(net, edge.a, edge.b)?,
        hitting_after_predicted,
        hitting_after_direct: solver::hitting_time(&reduced, edge.a, edge.b)?,
        kirchhoff_before: before.kirchhoff_index,
        kirchhoff_after: after.kirchhoff_index,
    })
}

/// Networks attaining an extreme increment, each with the edge that attains it.
#[derive(Debug, Clone)]
pub struct Extreme {
    pub value: f64,
    pub attained_by: Vec<(Network, EdgeRef)>,
}

#[derive(Debug, Clone)]
pub struct IncrementExtremes {
    pub max: Extreme,
    pub min: Extreme,
    /// Non-cut edges examined.
    pub edges_examined: usize,
}

/// Brute force over every connected unit graph on `n` vertices and each of
/// its non-cut edges, measuring `R' - R` by direct recomputation. Graphs
/// within `tolerance` of an extreme are collected.
pub fn increment_extremes(n: usize, tolerance: f64) -> Result<IncrementExtremes> {
    let mut samples: Vec<(f64, Network, EdgeRef)> = Vec::new();
    for net in connected_unit_graphs(n)? {
        let bridges = net.bridges();
        let before = solver::effective_resistance_matrix(&net)?;
        for &(a, b, _) in net.edges() {
            let edge = EdgeRef::new(a, b);
            if bridges.contains(&edge) {
                continue;
            }
            let after = solver::effective_resistance(&net.remove_edge(edge)?, a, b)?;
            samples.push((after - before.get(a, b), net.clone(), edge));
        }
    }
    if samples.is_empty() {
        return Err(Error::BadParameter(format!("no graph on {n} vertices has a non-cut edge")));
    }
    let max = samples.iter().map(|s| s.0).fold(f64::NEG_INFINITY, f64::max);
    let min = samples.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let collect = |target: f64| Extreme {
        value: target,
        attained_by: samples
            .iter()
            .filter(|s| libm::fabs(s.0 - target) <= tolerance)
            .map(|s| (s.1.clone(), s.2))
            .collect(),
    };
    Ok(IncrementExtremes { max: collect(max), min: collect(min), edges_examined: samples.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, hypercube, path, unitary_cayley};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn removed_resistance_examples() {
        for n in 3..20 {
            let r = (n - 1) as f64 / n as f64;
            assert!(close(predicted_removed_resistance(r).unwrap(), (n - 1) as f64));
        }
        assert!(close(predicted_removed_resistance(2.0 / 5.0).unwrap(), 2.0 / 3.0));
        assert_eq!(predicted_removed_resistance(0.5).unwrap(), 1.0);
    }

    #[test]
    fn increment_examples() {
        assert!(close(resistance_increment(4.0 / 5.0).unwrap(), 16.0 / 5.0));
        assert!(close(resistance_increment(2.0 / 5.0).unwrap(), 4.0 / 15.0));
        assert_eq!(resistance_increment(0.5).unwrap(), 0.5);
    }

    #[test]
    fn bad_resistances() {
        for f in [predicted_removed_resistance, resistance_increment] {
            assert_eq!(f(1.0), Err(Error::CutEdgeResistance(1.0)));
            assert!(matches!(f(1.0 - 1e-10), Err(Error::CutEdgeResistance(_))));
            assert!(matches!(f(0.0), Err(Error::BadParameter(_))));
            assert!(matches!(f(f64::NAN), Err(Error::BadParameter(_))));
        }
        assert!(matches!(removed_edge_hitting_time(12, 1.5), Err(Error::CutEdgeResistance(_))));
    }

    #[test]
    fn bounds_examples() {
        let (hi, lo) = extremal_increment_bounds(5).unwrap();
        assert!(close(hi, 16.0 / 5.0) && close(lo, 4.0 / 15.0));
        let (hi, lo) = extremal_increment_bounds(3).unwrap();
        assert!(close(hi, 4.0 / 3.0) && close(lo, 4.0 / 3.0));
        let (hi, lo) = extremal_increment_bounds(6).unwrap();
        assert!(close(hi, 25.0 / 6.0) && close(lo, 1.0 / 6.0));
        assert!(extremal_increment_bounds(2).is_err());
    }

    #[test]
    fn hitting_time_examples() {
        for n in 3..13usize {
            let r = (n - 1) as f64 / n as f64;
            let got = removed_edge_hitting_time(n, r).unwrap();
            assert!(close(got, ((n - 1) * (n - 1)) as f64));
        }
        for n in 3..9usize {
            let got = removed_edge_hitting_time(n * (n - 1) / 2, 2.0 / n as f64).unwrap();
            let nf = n as f64;
            assert!(close(got, (nf * (nf - 1.0) - 2.0) / (nf - 2.0)));
        }
        assert!(close(removed_edge_hitting_time(12, 7.0 / 12.0).unwrap(), 15.4));
    }

    #[test]
    fn analyze_cube() {
        let rep = analyze_edge_removal(&hypercube(3).unwrap(), EdgeRef::new(0, 1)).unwrap();
        assert!((rep.r_before - 7.0 / 12.0).abs() < 1e-12);
        assert!((rep.r_after_predicted - 7.0 / 5.0).abs() < 1e-12);
        assert!((rep.r_after_direct - 7.0 / 5.0).abs() < 1e-12);
        assert!((rep.hitting_before - 7.0).abs() < 1e-12);
        assert!((rep.hitting_after_predicted.unwrap() - 15.4).abs() < 1e-12);
        assert!((rep.hitting_after_direct - 15.4).abs() < 1e-9);
        assert!(rep.kirchhoff_after >= rep.kirchhoff_before);
        assert!((rep.r_increment - (rep.r_after_predicted - rep.r_before)).abs() < 1e-12);
    }

    #[test]
    fn analyze_cycle_and_cayley() {
        let rep = analyze_edge_removal(&cycle(8).unwrap(), EdgeRef::new(3, 4)).unwrap();
        assert!((rep.hitting_before - 7.0).abs() < 1e-12);
        assert!((rep.hitting_after_direct - 49.0).abs() < 1e-9);
        assert!((rep.hitting_after_predicted.unwrap() - 49.0).abs() < 1e-9);

        let rep = analyze_edge_removal(&unitary_cayley(5).unwrap(), EdgeRef::new(0, 2)).unwrap();
        assert!((rep.hitting_before - 4.0).abs() < 1e-12);
        assert!((rep.hitting_after_direct - 6.0).abs() < 1e-9);
        assert!((rep.hitting_after_predicted.unwrap() - 6.0).abs() < 1e-9);
    }

    #[test]
    fn analyze_rejections() {
        let p = path(3).unwrap();
        assert_eq!(
            analyze_edge_removal(&p, EdgeRef::new(0, 1)),
            Err(Error::WouldDisconnect { a: 0, b: 1 })
        );
        assert_eq!(
            analyze_edge_removal(&p, EdgeRef::new(0, 2)),
            Err(Error::NoSuchEdge { a: 0, b: 2 })
        );
        let w = Network::build(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 1.0)]).unwrap();
        assert_eq!(analyze_edge_removal(&w, EdgeRef::new(0, 1)), Err(Error::NonUnitConductance));
    }

    #[test]
    fn non_walk_regular_has_no_prediction() {
        // K_4 minus an edge is not regular
        let net = complete(4).unwrap().remove_edge(EdgeRef::new(0, 1)).unwrap();
        let rep = analyze_edge_removal(&net, EdgeRef::new(2, 3)).unwrap();
        assert_eq!(rep.hitting_after_predicted, None);
        assert!((rep.r_after_predicted - rep.r_after_direct).abs() < 1e-9);
    }
}
