//! Undirected simple graphs on at most 64 vertices.
//!
//! Every vertex neighborhood is a single `u64` mask, so set operations on
//! vertex subsets are word operations.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, .., 63}` stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Serialized as a sorted array of vertex indices.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(deserializer)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(VertexSet::from_vertices(v))
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Undirected simple graph. `adj[v]` is the neighborhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighborhood masks. The masks must already be
    /// symmetric and loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let all = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !all).leading_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::Loop(v));
            }
            for u in VertexSet(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency not symmetric at {v}-{u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::ParallelEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically. This is the
    /// canonical edge order used to index orientation bits.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| (self.adj[v] & set.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            let fresh = VertexSet(next & within.0 & !seen.0);
            seen = seen.union(fresh);
            frontier = fresh;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their lowest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reachable_within(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> ComponentDecomposition {
        let components = self.components_within(self.vertices());
        let edge_counts = components.iter().map(|&c| self.edges_within(c)).collect();
        ComponentDecomposition {
            components,
            edge_counts,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_within(0, self.vertices()) == self.vertices()
    }

    /// True iff every component contains a cycle, i.e. the graph admits an
    /// orientation with all in-degrees at least one.
    pub fn in_class_c(&self) -> bool {
        let cd = self.components();
        cd.components
            .iter()
            .zip(&cd.edge_counts)
            .all(|(c, &m)| m >= c.len())
    }

    pub fn is_disjoint_union_of_cycles(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// True iff the subgraph induced by `set` is a disjoint union of cycles.
    pub fn induces_cycle_union(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (self.adj[v] & set.0).count_ones() == 2)
    }

    pub fn is_cycle(&self) -> bool {
        self.is_connected() && self.is_disjoint_union_of_cycles()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << self.n));
        Ok(Graph { n, adj })
    }

    /// Subgraph induced by `set`, relabelled to `0..set.len()` in increasing
    /// vertex order. Returns the graph together with the old labels.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let old: Vec<usize> = set.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(old.len())?;
        for (i, &v) in old.iter().enumerate() {
            for u in VertexSet(self.adj[v] & set.0) {
                g.adj[i] |= 1 << index[u];
            }
        }
        Ok((g, old))
    }

    pub(crate) fn assert_invariants(&self) {
        let all = VertexSet::full(self.n).0;
        for v in 0..self.n {
            assert_eq!(self.adj[v] & !all, 0, "stray mask bits at vertex {v}");
            assert!(!self.has_edge(v, v), "loop at {v}");
            for u in self.neighbors(v) {
                assert!(self.has_edge(u, v), "asymmetric edge {v}-{u}");
            }
        }
    }
}

/// Connected components with their internal edge counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentDecomposition {
    pub components: Vec<VertexSet>,
    pub edge_counts: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

pub const ISOMORPHISM_LIMIT: usize = 10;

/// Brute-force isomorphism test with degree-based pruning. Only graphs on at
/// most 10 vertices are accepted.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    crate::error::check_budget("isomorphism vertex", ISOMORPHISM_LIMIT, g.n().max(h.n()))?;
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    Ok(extend_isomorphism(g, h, 0, &mut map, 0))
}

fn extend_isomorphism(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: u64) -> bool {
    if v == g.n() {
        return true;
    }
    for image in VertexSet(VertexSet::full(h.n()).0 & !used) {
        if g.degree(v) != h.degree(image) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], image));
        if consistent {
            map[v] = image;
            if extend_isomorphism(g, h, v + 1, map, used | 1 << image) {
                return true;
            }
        }
    }
    map[v] = usize::MAX;
    false
}

/// Common small graphs used throughout the crate and its tests.
pub mod named {
    use super::Graph;

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).expect("complete bipartite")
    }

    /// K4 minus the edge 2-3 (the diamond).
    pub fn k4_minus_e() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("diamond")
    }

    /// Triangle 1-2-3 with pendant vertex 0 attached to 1.
    pub fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).expect("paw")
    }

    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star")
    }

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5).
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen")
    }
}
