//! Exhaustive checks over every connected labelled graph on a few vertices.

use elnet_core::generators::{connected_unit_graphs, MAX_ENUMERATION_VERTICES};
use elnet_core::perturbation::{increment_extremes, predicted_removed_resistance};
use elnet_core::{solver, EdgeRef, Network};

fn connected_after_removing(net: &Network, (a, b): (usize, usize)) -> bool {
    let n = net.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(w, _) in net.neighbors(v).unwrap() {
            if (v.min(w), v.max(w)) == (a, b) || seen[w] {
                continue;
            }
            seen[w] = true;
            stack.push(w);
        }
    }
    seen.into_iter().all(|s| s)
}

#[test]
fn bridge_search_matches_connectivity_oracle() {
    assert!(MAX_ENUMERATION_VERTICES >= 6);
    for n in 2..=6 {
        for net in connected_unit_graphs(n).unwrap() {
            for &(a, b, _) in net.edges() {
                let cut = net.is_cut_edge(EdgeRef::new(a, b)).unwrap();
                assert_eq!(cut, !connected_after_removing(&net, (a, b)), "{net:?} ({a},{b})");
            }
        }
    }
}

/// Closed-form post-removal resistance against recomputation, and Rayleigh
/// monotonicity for every pair, on all graphs with up to six vertices.
#[test]
fn removal_resistance_and_monotonicity() {
    let mut checked = 0;
    for n in 3..=6 {
        for net in connected_unit_graphs(n).unwrap() {
            let before = solver::effective_resistance_matrix(&net).unwrap();
            let bridges = net.bridges();
            for &(a, b, _) in net.edges() {
                let edge = EdgeRef::new(a, b);
                if bridges.contains(&edge) {
                    continue;
                }
                let after = solver::effective_resistance_matrix(&net.remove_edge(edge).unwrap()).unwrap();
                let predicted = predicted_removed_resistance(before.get(a, b)).unwrap();
                let direct = after.get(a, b);
                assert!((predicted - direct).abs() <= 1e-9 * direct, "{net:?} ({a},{b})");
                for x in 0..n {
                    for y in 0..n {
                        assert!(after.get(x, y) >= before.get(x, y) - 1e-12);
                    }
                }
                assert!(after.kirchhoff_index >= before.kirchhoff_index);
                checked += 1;
            }
        }
    }
    assert!(checked > 100_000, "{checked}");
}

fn is_cycle(net: &Network) -> bool {
    let n = net.vertex_count();
    net.edge_count() == n && (0..n).all(|v| net.degree(v).unwrap() == 2)
}

fn is_complete(net: &Network) -> bool {
    let n = net.vertex_count();
    net.edge_count() == n * (n - 1) / 2
}

fn both_endpoints_dominate(net: &Network, e: EdgeRef) -> bool {
    (0..net.vertex_count())
        .filter(|&v| v != e.a && v != e.b)
        .all(|v| net.has_edge(v, e.a) && net.has_edge(v, e.b))
}

#[test]
fn increment_extremes_on_five_and_six_vertices() {
    for n in [5usize, 6] {
        let x = increment_extremes(n, 1e-9).unwrap();
        let nf = n as f64;
        assert!((x.max.value - (nf - 1.0).powi(2) / nf).abs() < 1e-9);
        assert!((x.min.value - 4.0 / (nf * (nf - 2.0))).abs() < 1e-9);
        assert!(x.max.attained_by.iter().all(|(g, _)| is_cycle(g)));
        // The minimum 2/n edge resistance is reached whenever every other
        // vertex is joined to both endpoints: those vertices then share one
        // potential and edges among them carry no current. K_n is one such graph.
        assert!(x.min.attained_by.iter().all(|(g, e)| both_endpoints_dominate(g, *e)));
        assert!(x.min.attained_by.iter().any(|(g, _)| is_complete(g)));
        // every labelled n-cycle: (n-1)!/2 of them, n edges each
        let cycles = (1..n).product::<usize>() / 2;
        assert_eq!(x.max.attained_by.len(), cycles * n, "n = {n}");
        let inner_pairs = (n - 2) * (n - 3) / 2;
        assert_eq!(x.min.attained_by.len(), n * (n - 1) / 2 * (1 << inner_pairs), "n = {n}");
    }
}
