//! Simple undirected graphs on labelled vertices `0..n`, with the edge
//! transformations the star-basis recursion is built from: deletion,
//! contraction, dot-contraction and leaf-contraction, plus connectivity
//! predicates.
//!
//! Adjacency is stored as one bitmask row per vertex, which caps the vertex
//! count at 62 (also the single-byte graph6 limit). Everything here is an
//! immutable value; transformations return new graphs.

use crate::error::{Error, Result};
use crate::partition::Partition;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// Hard cap on vertices, matching the short graph6 encoding.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Classification of an edge by the DNC recursion: `Leaf` edges have a
/// degree-one endpoint and are never expanded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Leaf,
    Internal,
}

#[derive(Serialize, Deserialize)]
struct EdgeListJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Constraint(format!(
                "graph too large: {n} > {MAX_VERTICES} vertices"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts an edge; duplicate insertion is a no-op, loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(Error::Constraint(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.adj[v];
        (0..self.n).filter(move |&u| row & (1 << u) != 0)
    }

    pub(crate) fn adjacency_row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut row = self.adj[u] >> (u + 1) << (u + 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                out.push((u, v));
                row &= row - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn require_edge(&self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(u, v));
        }
        Ok(())
    }

    /// `G \ e`: same vertices, edge removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.require_edge(u, v)?;
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        Ok(g)
    }

    /// `G / e`: endpoints merged into the smaller label, parallel edges
    /// collapsed, labels above the removed one shifted down.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.require_edge(u, v)?;
        let keep = u.min(v);
        let gone = u.max(v);
        let map = |x: usize| if x < gone { x } else { x - 1 };
        let mut g = Graph::new(self.n - 1)?;
        for (a, b) in self.edges() {
            if (a, b) == (keep, gone) {
                continue;
            }
            let a2 = if a == gone { keep } else { a };
            let b2 = if b == gone { keep } else { b };
            g.add_edge(map(a2), map(b2))?;
        }
        Ok(g)
    }

    /// `(G/e)°`: contraction plus an isolated vertex, so the vertex count is
    /// unchanged. The new vertex takes the last label.
    pub fn dot_contract(&self, u: usize, v: usize) -> Result<Graph> {
        let contracted = self.contract_edge(u, v)?;
        let mut g = Graph::new(self.n)?;
        g.adj[..self.n - 1].copy_from_slice(&contracted.adj);
        Ok(g)
    }

    /// `(G/e)⊸`: dot-contraction plus an edge from the merged vertex to the
    /// new vertex.
    pub fn leaf_contract(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.dot_contract(u, v)?;
        let merged = u.min(v);
        g.add_edge(merged, self.n - 1)?;
        Ok(g)
    }

    pub fn edge_kind(&self, u: usize, v: usize) -> Result<EdgeKind> {
        self.require_edge(u, v)?;
        if self.degree(u) == 1 || self.degree(v) == 1 {
            Ok(EdgeKind::Leaf)
        } else {
            Ok(EdgeKind::Internal)
        }
    }

    pub fn internal_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| self.degree(u) >= 2 && self.degree(v) >= 2)
            .collect()
    }

    /// A star forest is exactly a graph with no internal edge.
    pub fn is_star_forest(&self) -> bool {
        self.internal_edges().is_empty()
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// BFS reachability restricted to `mask`; true when every vertex of the
    /// mask is reached from its lowest member. An empty mask counts as
    /// connected here (callers guard the empty graph themselves).
    fn connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == mask
    }

    /// The empty graph is not connected by convention; a single vertex is.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_within(self.full_mask())
    }

    /// `k`-connectivity: at least `k+1` vertices and no set of `k-1`
    /// vertices disconnects the graph.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.n < k + 1 {
            return false;
        }
        (0..self.n).combinations(k - 1).all(|cut| {
            let mut mask = self.full_mask();
            for v in cut {
                mask &= !(1u64 << v);
            }
            self.connected_within(mask)
        })
    }

    /// κ(G): the largest `k` such that the graph is `k`-connected.
    pub fn connectivity(&self) -> usize {
        let mut kappa = 0;
        for k in 1..self.n {
            if self.is_k_connected(k) {
                kappa = k;
            } else {
                break;
            }
        }
        kappa
    }

    /// Adds a new vertex adjacent to all existing ones.
    pub fn add_universal_vertex(&self) -> Result<Graph> {
        let mut g = Graph::new(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..self.n {
            g.add_edge(v, self.n)?;
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.n + other.n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    /// Connected component vertex sets, ordered by lowest member.
    pub fn components(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = self.full_mask();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v] & left & !seen;
                }
                seen |= next;
                frontier = next;
            }
            out.push(seen);
            left &= !seen;
        }
        out
    }

    /// Component sizes as a partition of `n`.
    pub fn component_sizes(&self) -> Partition {
        let sizes: Vec<u32> = self
            .components()
            .iter()
            .map(|c| c.count_ones())
            .collect();
        Partition::new(sizes).expect("component sizes are positive")
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n
    }

    /// Relabels vertices: `perm[old] = new`. Must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Constraint("permutation length mismatch".into()));
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(EdgeListJson {
            n: self.n,
            edges: self.edges(),
        })
        .expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        let parsed: EdgeListJson = serde_json::from_str(s)
            .map_err(|e| Error::InvalidGraphSpec(format!("bad edge-list JSON: {e}")))?;
        Graph::from_edges(parsed.n, &parsed.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::family;

    #[test]
    fn triangle_minus_edge_is_path() {
        let k3 = family::complete(3).unwrap();
        let deleted = k3.delete_edge(0, 1).unwrap();
        assert!(is_isomorphic(&deleted, &family::path(3).unwrap()).unwrap());
    }

    #[test]
    fn star_minus_leaf_edge() {
        let st5 = family::star(5).unwrap();
        let deleted = st5.delete_edge(0, 4).unwrap();
        let expected = family::star(4).unwrap().disjoint_union(&family::star(1).unwrap()).unwrap();
        assert!(is_isomorphic(&deleted, &expected).unwrap());
    }

    #[test]
    fn fig1_delete_marked_edge() {
        let g = family::fig1().unwrap();
        assert_eq!(g.edge_count(), 5);
        let child = g.delete_edge(1, 2).unwrap();
        assert_eq!(child.edge_count(), 4);
    }

    #[test]
    fn triangle_contraction_collapses_parallel_edges() {
        let k3 = family::complete(3).unwrap();
        let contracted = k3.contract_edge(0, 1).unwrap();
        assert_eq!(contracted.n(), 2);
        assert_eq!(contracted.edge_count(), 1);
    }

    #[test]
    fn path_middle_contraction() {
        let p4 = family::path(4).unwrap();
        let contracted = p4.contract_edge(1, 2).unwrap();
        assert!(is_isomorphic(&contracted, &family::path(3).unwrap()).unwrap());
    }

    #[test]
    fn cycle_contraction() {
        for n in 4..=7 {
            let cn = family::cycle(n).unwrap();
            let contracted = cn.contract_edge(0, 1).unwrap();
            assert!(is_isomorphic(&contracted, &family::cycle(n - 1).unwrap()).unwrap());
        }
    }

    #[test]
    fn dot_and_leaf_contract_preserve_vertex_count() {
        let p4 = family::path(4).unwrap();
        let dot = p4.dot_contract(1, 2).unwrap();
        let leaf = p4.leaf_contract(1, 2).unwrap();
        assert_eq!(dot.n(), 4);
        assert_eq!(leaf.n(), 4);
        assert_eq!(leaf.edge_count(), dot.edge_count() + 1);

        // P4 dot-contracted at the middle is the star forest St_{3,1}.
        let st31 = family::star(3).unwrap().disjoint_union(&family::star(1).unwrap()).unwrap();
        assert!(is_isomorphic(&dot, &st31).unwrap());
        // ... and leaf-contracted it is St_4.
        assert!(is_isomorphic(&leaf, &family::star(4).unwrap()).unwrap());
    }

    #[test]
    fn triangle_leaf_contract_is_path() {
        let k3 = family::complete(3).unwrap();
        let leaf = k3.leaf_contract(0, 1).unwrap();
        assert!(is_isomorphic(&leaf, &family::path(3).unwrap()).unwrap());
    }

    #[test]
    fn leaf_edge_identities() {
        // For a leaf edge e: G \ e ≅ (G/e)° and (G/e)⊸ ≅ G.
        let graphs = [
            family::path(4).unwrap(),
            family::star(5).unwrap(),
            family::fig1().unwrap(),
            family::caterpillar(&[3, 2]).unwrap(),
        ];
        for g in &graphs {
            for (u, v) in g.edges() {
                if g.edge_kind(u, v).unwrap() == EdgeKind::Leaf {
                    let deleted = g.delete_edge(u, v).unwrap();
                    let dot = g.dot_contract(u, v).unwrap();
                    let leaf = g.leaf_contract(u, v).unwrap();
                    assert!(is_isomorphic(&deleted, &dot).unwrap());
                    assert!(is_isomorphic(&leaf, g).unwrap());
                }
            }
        }
    }

    #[test]
    fn edge_kinds() {
        let st6 = family::star(6).unwrap();
        assert!(st6.internal_edges().is_empty());
        for (u, v) in st6.edges() {
            assert_eq!(st6.edge_kind(u, v).unwrap(), EdgeKind::Leaf);
        }

        let p4 = family::path(4).unwrap();
        assert_eq!(p4.edge_kind(1, 2).unwrap(), EdgeKind::Internal);
        assert_eq!(p4.edge_kind(0, 1).unwrap(), EdgeKind::Leaf);
        assert_eq!(p4.edge_kind(2, 3).unwrap(), EdgeKind::Leaf);

        // Figure-1 graph: five edges, the triangle's three are internal.
        let fig1 = family::fig1().unwrap();
        assert_eq!(fig1.internal_edges().len(), 3);
    }

    #[test]
    fn edge_errors() {
        let p3 = family::path(3).unwrap();
        assert_eq!(p3.delete_edge(0, 2), Err(Error::EdgeNotInGraph(0, 2)));
        assert!(p3.contract_edge(0, 2).is_err());
        assert!(p3.edge_kind(0, 2).is_err());
    }

    #[test]
    fn connectivity_conventions() {
        assert!(!Graph::new(0).unwrap().is_connected());
        let k1 = Graph::new(1).unwrap();
        assert!(k1.is_connected());
        assert_eq!(k1.connectivity(), 0);
        for n in 3..=7 {
            assert_eq!(family::path(n).unwrap().connectivity(), 1);
        }
        for n in 2..=6 {
            assert_eq!(family::complete(n).unwrap().connectivity(), n - 1);
        }
        for n in 3..=7 {
            assert_eq!(family::cycle(n).unwrap().connectivity(), 2);
        }
    }

    #[test]
    fn figure2_connectivities() {
        let g = family::fig2g().unwrap();
        let h = family::fig2h().unwrap();
        assert_eq!(g.edge_count(), 11);
        assert_eq!(h.edge_count(), 11);
        assert_eq!(g.connectivity(), 3);
        assert_eq!(h.connectivity(), 2);
    }

    #[test]
    fn universal_vertex() {
        let st2 = family::star(2).unwrap();
        assert!(is_isomorphic(&st2.add_universal_vertex().unwrap(), &family::complete(3).unwrap()).unwrap());
        let k1 = Graph::new(1).unwrap();
        assert!(is_isomorphic(&k1.add_universal_vertex().unwrap(), &family::star(2).unwrap()).unwrap());
        let g = family::fig2g().unwrap().add_universal_vertex().unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.connectivity(), 4);
    }

    #[test]
    fn universal_vertex_raises_connectivity() {
        // κ(G•) = κ(G) + 1 for small connected graphs.
        let samples = [
            family::path(4).unwrap(),
            family::cycle(5).unwrap(),
            family::complete(4).unwrap(),
            family::star(6).unwrap(),
            family::cuttlefish(3, 2).unwrap(),
        ];
        for g in &samples {
            let up = g.add_universal_vertex().unwrap();
            assert_eq!(up.connectivity(), g.connectivity() + 1);
        }
    }

    #[test]
    fn components_and_sizes() {
        let g = family::path(3)
            .unwrap()
            .disjoint_union(&family::complete(3).unwrap())
            .unwrap()
            .disjoint_union(&Graph::new(1).unwrap())
            .unwrap();
        assert_eq!(g.component_sizes().parts(), &[3, 3, 1]);
        assert!(!g.is_connected());
    }

    #[test]
    fn json_round_trip() {
        let g = family::fig1().unwrap();
        let json = g.to_json().to_string();
        let back = Graph::from_json(&json).unwrap();
        assert_eq!(g, back);
    }
}
