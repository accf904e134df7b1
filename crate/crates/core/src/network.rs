//! The electric network: an undirected simple graph whose edges carry
//! positive conductances. The same object defines the induced random walk,
//! which steps from `y` to `z` with probability `C_yz / C_y`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, InvalidEdgeReason, Result};

/// An edge named by its endpoints. The pair is unordered as an edge, but the
/// order is kept so that directional quantities (hitting `a -> b`) know which
/// endpoint is the start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EdgeRef {
    pub a: usize,
    pub b: usize,
}

impl EdgeRef {
    pub const fn new(a: usize, b: usize) -> Self {
        EdgeRef { a, b }
    }

    /// Endpoints with the smaller id first.
    pub fn ordered(self) -> (usize, usize) {
        if self.a <= self.b {
            (self.a, self.b)
        } else {
            (self.b, self.a)
        }
    }
}

impl From<(usize, usize)> for EdgeRef {
    fn from((a, b): (usize, usize)) -> Self {
        EdgeRef::new(a, b)
    }
}

/// A validated, connected, conductance-weighted simple graph.
///
/// Values are immutable: every surgery returns a new network.
#[derive(Debug, Clone)]
pub struct Network {
    vertex_count: usize,
    // sorted by (a, b) with a < b
    edges: Vec<(usize, usize, f64)>,
    adjacency: Vec<Vec<(usize, f64)>>,
    strength: Vec<f64>,
}

impl PartialEq for Network {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Network {
    /// Validates the edge list and builds a network on vertices `0..vertex_count`.
    pub fn build<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let net = Self::build_unchecked_connectivity(vertex_count, edges)?;
        if !net.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(net)
    }

    /// Builds a network with unit conductance on every listed pair.
    pub fn unit<I>(vertex_count: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(vertex_count, pairs.into_iter().map(|(a, b)| (a, b, 1.0)))
    }

    fn build_unchecked_connectivity<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        if vertex_count == 0 {
            return Err(Error::BadParameter("a network needs at least one vertex".into()));
        }
        let mut list = Vec::new();
        for (a, b, c) in edges {
            for id in [a, b] {
                if id >= vertex_count {
                    return Err(Error::BadVertexId { id, vertex_count });
                }
            }
            if a == b {
                return Err(Error::InvalidEdge { a, b, reason: InvalidEdgeReason::SelfLoop });
            }
            if !(c.is_finite() && c > 0.0) {
                return Err(Error::InvalidEdge {
                    a,
                    b,
                    reason: InvalidEdgeReason::NonPositiveConductance,
                });
            }
            list.push((a.min(b), a.max(b), c));
        }
        list.sort_by_key(|&(a, b, _)| (a, b));
        if let Some(w) = list.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::InvalidEdge {
                a: w[0].0,
                b: w[0].1,
                reason: InvalidEdgeReason::Duplicate,
            });
        }

        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b, c) in &list {
            adjacency[a].push((b, c));
            adjacency[b].push((a, c));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_by_key(|&(v, _)| v);
        }
        let strength = adjacency
            .iter()
            .map(|nbrs| nbrs.iter().map(|&(_, c)| c).sum())
            .collect();
        Ok(Network { vertex_count, edges: list, adjacency, strength })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `|E|`
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(a, b, conductance)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Neighbours of `z` with the conductance of the connecting edge, sorted by id.
    pub fn neighbors(&self, z: usize) -> Result<&[(usize, f64)]> {
        self.check_vertex(z)?;
        Ok(&self.adjacency[z])
    }

    pub fn degree(&self, z: usize) -> Result<usize> {
        Ok(self.neighbors(z)?.len())
    }

    pub fn conductance(&self, a: usize, b: usize) -> Option<f64> {
        let nbrs = self.adjacency.get(a)?;
        nbrs.binary_search_by_key(&b, |&(v, _)| v).ok().map(|i| nbrs[i].1)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.conductance(a, b).is_some()
    }

    /// `C_z`, the sum of conductances at `z`. Equals the degree for unit conductances.
    pub fn vertex_strength(&self, z: usize) -> Result<f64> {
        self.check_vertex(z)?;
        Ok(self.strength[z])
    }

    /// `C`, the sum of all vertex strengths (twice the total conductance).
    pub fn total_strength(&self) -> f64 {
        self.strength.iter().sum()
    }

    /// True when every edge has conductance exactly 1.
    pub fn is_unit(&self) -> bool {
        self.edges.iter().all(|&(_, _, c)| c == 1.0)
    }

    pub(crate) fn strengths(&self) -> &[f64] {
        &self.strength
    }

    pub(crate) fn adjacency(&self) -> &[Vec<(usize, f64)>] {
        &self.adjacency
    }

    pub fn check_vertex(&self, z: usize) -> Result<()> {
        if z < self.vertex_count {
            Ok(())
        } else {
            Err(Error::BadVertexId { id: z, vertex_count: self.vertex_count })
        }
    }

    fn check_edge(&self, edge: EdgeRef) -> Result<f64> {
        self.check_vertex(edge.a)?;
        self.check_vertex(edge.b)?;
        self.conductance(edge.a, edge.b)
            .ok_or(Error::NoSuchEdge { a: edge.a, b: edge.b })
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// All cut-edges, found with an iterative low-link depth-first search.
    /// Each bridge is reported with its smaller endpoint first.
    pub fn bridges(&self) -> Vec<EdgeRef> {
        let n = self.vertex_count;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut clock = 0;

        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = clock;
        low[0] = clock;
        clock += 1;
        while let Some(frame) = stack.last_mut() {
            let (v, parent, i) = *frame;
            if let Some(&(w, _)) = self.adjacency[v].get(i) {
                frame.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push(EdgeRef::new(parent.min(v), parent.max(v)));
                    }
                }
            }
        }
        out.sort_by_key(|e| (e.a, e.b));
        out
    }

    /// Whether deleting `edge` would disconnect the network.
    pub fn is_cut_edge(&self, edge: EdgeRef) -> Result<bool> {
        self.check_edge(edge)?;
        let key = edge.ordered();
        Ok(self.bridges().iter().any(|e| (e.a, e.b) == key))
    }

    /// `G'`: the network with `edge` deleted. Refuses cut-edges.
    pub fn remove_edge(&self, edge: EdgeRef) -> Result<Network> {
        if self.is_cut_edge(edge)? {
            return Err(Error::WouldDisconnect { a: edge.a, b: edge.b });
        }
        let key = edge.ordered();
        Self::build(
            self.vertex_count,
            self.edges.iter().copied().filter(|&(a, b, _)| (a, b) != key),
        )
    }

    /// The network with one extra edge between existing vertices.
    pub fn add_edge(&self, a: usize, b: usize, conductance: f64) -> Result<Network> {
        Self::build(
            self.vertex_count,
            self.edges.iter().copied().chain(core::iter::once((a, b, conductance))),
        )
    }

    /// Attaches a new degree-one vertex to `z` through an edge of the given
    /// conductance. Returns the enlarged network and the id of the new vertex,
    /// which is always `vertex_count()` of the original.
    pub fn add_pendant_vertex(&self, z: usize, conductance: f64) -> Result<(Network, usize)> {
        self.check_vertex(z)?;
        let pendant = self.vertex_count;
        let net = Self::build(
            self.vertex_count + 1,
            self.edges.iter().copied().chain(core::iter::once((z, pendant, conductance))),
        )?;
        Ok((net, pendant))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Network {
        Network::unit(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn weighted_triangle() -> Network {
        Network::build(3, [(0, 1, 1.0), (0, 2, 2.0), (1, 2, 3.0)]).unwrap()
    }

    fn p3() -> Network {
        Network::unit(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> Network {
        Network::unit(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(k3().edge_count(), 3);
        assert_eq!(p3().edge_count(), 2);
        assert_eq!(
            Network::unit(4, [(0, 1), (2, 3)]).unwrap_err(),
            Error::DisconnectedGraph
        );
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            Network::unit(2, [(0, 0)]),
            Err(Error::InvalidEdge { reason: InvalidEdgeReason::SelfLoop, .. })
        ));
        assert!(matches!(
            Network::unit(2, [(0, 1), (1, 0)]),
            Err(Error::InvalidEdge { reason: InvalidEdgeReason::Duplicate, .. })
        ));
        for c in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                Network::build(2, [(0, 1, c)]),
                Err(Error::InvalidEdge { reason: InvalidEdgeReason::NonPositiveConductance, .. })
            ));
        }
        assert_eq!(
            Network::unit(2, [(0, 2)]).unwrap_err(),
            Error::BadVertexId { id: 2, vertex_count: 2 }
        );
        assert!(matches!(Network::unit(0, []), Err(Error::BadParameter(_))));
        assert_eq!(Network::unit(1, []).unwrap().vertex_count(), 1);
    }

    #[test]
    fn strengths() {
        assert_eq!(k3().vertex_strength(0).unwrap(), 2.0);
        assert_eq!(weighted_triangle().vertex_strength(0).unwrap(), 3.0);
        assert_eq!(p3().vertex_strength(1).unwrap(), 2.0);
        assert!(matches!(k3().vertex_strength(3), Err(Error::BadVertexId { .. })));

        assert_eq!(k3().total_strength(), 6.0);
        assert_eq!(weighted_triangle().total_strength(), 12.0);
        assert_eq!(p3().total_strength(), 4.0);
    }

    #[test]
    fn cut_edges() {
        assert!(p3().is_cut_edge(EdgeRef::new(0, 1)).unwrap());
        for (a, b, _) in c4().edges().to_vec() {
            assert!(!c4().is_cut_edge(EdgeRef::new(b, a)).unwrap());
        }
        let k4 = Network::unit(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.bridges().is_empty());
        assert_eq!(
            p3().is_cut_edge(EdgeRef::new(0, 2)).unwrap_err(),
            Error::NoSuchEdge { a: 0, b: 2 }
        );
    }

    #[test]
    fn remove_edge_examples() {
        let path = c4().remove_edge(EdgeRef::new(0, 1)).unwrap();
        assert_eq!(path, Network::unit(4, [(1, 2), (2, 3), (3, 0)]).unwrap());
        // P_3 centred at 2
        assert_eq!(
            k3().remove_edge(EdgeRef::new(1, 0)).unwrap(),
            Network::unit(3, [(0, 2), (2, 1)]).unwrap()
        );
        assert_eq!(
            p3().remove_edge(EdgeRef::new(0, 1)).unwrap_err(),
            Error::WouldDisconnect { a: 0, b: 1 }
        );
        // input untouched
        let c = c4();
        let _ = c.remove_edge(EdgeRef::new(0, 1)).unwrap();
        assert_eq!(c.edge_count(), 4);
    }

    #[test]
    fn pendant_vertex() {
        let (g, z) = k3().add_pendant_vertex(0, 1.0).unwrap();
        assert_eq!((g.vertex_count(), z), (4, 3));
        assert_eq!(g.total_strength(), 8.0);

        let (g, z) = p3().add_pendant_vertex(1, 1.0).unwrap();
        assert_eq!(g.degree(z).unwrap(), 1);
        assert_eq!(g.degree(1).unwrap(), 3);

        let (g, _) = weighted_triangle().add_pendant_vertex(0, 1.0).unwrap();
        assert_eq!(g.total_strength(), 14.0);

        assert!(matches!(k3().add_pendant_vertex(7, 1.0), Err(Error::BadVertexId { .. })));
    }
}
