//! Named graph families with unit conductances.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::network::Network;

/// Largest hypercube dimension accepted.
pub const MAX_HYPERCUBE_DIM: u32 = 20;

fn bad(msg: alloc::string::String) -> Error {
    Error::BadParameter(msg)
}

/// The `n`-cycle: `i ~ i+1 (mod n)`.
pub fn cycle(n: usize) -> Result<Network> {
    if n < 3 {
        return Err(bad(format!("cycle needs n >= 3, got {n}")));
    }
    Network::unit(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path on `n` vertices, `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Network> {
    if n < 1 {
        return Err(bad("path needs n >= 1".into()));
    }
    Network::unit(n, (1..n).map(|i| (i - 1, i)))
}

/// The star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Result<Network> {
    if leaves < 1 {
        return Err(bad("star needs at least one leaf".into()));
    }
    Network::unit(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Network> {
    if n < 2 {
        return Err(bad(format!("complete graph needs n >= 2, got {n}")));
    }
    Network::unit(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// The `d`-dimensional hypercube. Vertex `v` is the bit string of `v`; edges
/// join strings at Hamming distance one.
pub fn hypercube(d: u32) -> Result<Network> {
    if !(1..=MAX_HYPERCUBE_DIM).contains(&d) {
        return Err(bad(format!("hypercube dimension must be in 1..={MAX_HYPERCUBE_DIM}, got {d}")));
    }
    let n = 1usize << d;
    Network::unit(
        n,
        (0..n).flat_map(move |v| {
            (0..d).map(move |bit| (v, v ^ (1 << bit))).filter(|&(v, w)| v < w)
        }),
    )
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient by trial-division factorisation.
pub fn totient(n: u64) -> u64 {
    let mut rest = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// The unitary Cayley graph on `Z_n`: `x ~ y` iff `gcd(x - y, n) = 1`.
pub fn unitary_cayley(n: usize) -> Result<Network> {
    if n < 3 {
        return Err(bad(format!("unitary Cayley graph needs n >= 3, got {n}")));
    }
    Network::unit(
        n,
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).filter(|&(x, y)| gcd(y - x, n) == 1),
    )
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Network {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Network::unit(10, outer.chain(inner).chain(spokes)).expect("petersen graph is valid")
}

/// Largest `n` accepted by [`connected_unit_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Every connected simple graph on vertices `0..n` (labelled, no isomorphism
/// reduction), in increasing order of the edge-subset bitmask. Bit `i` of the
/// mask selects the `i`-th pair in lexicographic order.
pub fn connected_unit_graphs(n: usize) -> Result<impl Iterator<Item = Network>> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(bad(format!(
            "enumeration supports 1..={MAX_ENUMERATION_VERTICES} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let subsets = 1u64 << pairs.len();
    Ok((0..subsets).filter_map(move |mask| {
        let chosen = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
        Network::unit(n, chosen).ok()
    }))
}
