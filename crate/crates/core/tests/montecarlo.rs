//! Statistical agreement between simulation and exact values.

use elnet_core::generators::{complete, cycle, hypercube};
use elnet_core::montecarlo::{
    estimate_hitting_time, estimate_return_time, excursion_count_check, verify_pendant_identities,
};
use elnet_core::{solver, Network};

fn weighted_triangle() -> Network {
    Network::build(3, [(0, 1, 1.0), (0, 2, 2.0), (1, 2, 3.0)]).unwrap()
}

/// At least 99% of independently seeded trials land within 4 standard errors.
#[test]
fn four_sigma_rule_over_seeds() {
    let trials = 200u64;
    let samples = 2_000;
    let net = weighted_triangle();
    let bent = Network::build(5, [(0, 1, 0.5), (1, 2, 3.0), (2, 3, 1.0), (3, 4, 2.0), (4, 0, 1.0), (1, 3, 0.25)]).unwrap();
    let exact_hit = solver::hitting_time(&bent, 0, 2).unwrap();
    let exact_ret = solver::return_time(&net, 1).unwrap();
    let exact_pendant = net.total_strength() + 1.0;

    let mut ok = [0u64; 3];
    for seed in 0..trials {
        ok[0] += estimate_hitting_time(&bent, 0, 2, samples, 1000 + seed).unwrap().agrees_with(exact_hit, 4.0) as u64;
        ok[1] += estimate_return_time(&net, 1, samples, 5000 + seed).unwrap().agrees_with(exact_ret, 4.0) as u64;
        ok[2] += verify_pendant_identities(&net, 2, samples, 9000 + seed).unwrap().lhs.agrees_with(exact_pendant, 4.0) as u64;
    }
    for count in ok {
        assert!(count * 100 >= 99 * trials, "{count}/{trials}");
    }
}

#[test]
fn concordance_examples() {
    let cases: [(Network, usize, usize, f64); 3] = [
        (cycle(6).unwrap(), 0, 1, 5.0),
        (hypercube(3).unwrap(), 0, 1, 7.0),
        (complete(5).unwrap(), 3, 1, 4.0),
    ];
    for (net, a, b, exact) in cases {
        let e = estimate_hitting_time(&net, a, b, 20_000, 42).unwrap();
        assert!(e.agrees_with(exact, 3.0), "{e:?} vs {exact}");
    }
    let e = excursion_count_check(&hypercube(3).unwrap(), 5, 20_000, 42).unwrap();
    assert_eq!(e.expected, 3.0);
    assert!(e.mean_excursions.agrees_with(3.0, 3.0));
}
