use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A direction for every edge of a base graph.
///
/// `out[v]` and `in[v]` partition the neighborhood of `v`. Direction bits
/// follow the canonical edge order of [`Graph::edges`]: bit `i` clear means
/// edge `(u, v)`, `u < v`, is the arc `u -> v`; set means `v -> u`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation{:?}", self.arcs())
    }
}

impl Orientation {
    pub fn from_direction_bits(base: &Graph, reversed: &[bool]) -> Result<Self> {
        let edges = base.edges();
        if reversed.len() != edges.len() {
            return Err(Error::ArcMismatch(format!(
                "{} direction bits for {} edges",
                reversed.len(),
                edges.len()
            )));
        }
        let mut d = Orientation::unassigned(base);
        for (&(u, v), &rev) in edges.iter().zip(reversed) {
            if rev {
                d.set_arc(v, u);
            } else {
                d.set_arc(u, v);
            }
        }
        Ok(d)
    }

    /// Builds the orientation with exactly the given arcs; every edge of
    /// `base` must appear once, in one direction.
    pub fn from_arcs(base: &Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Orientation::unassigned(base);
        for &(u, v) in arcs {
            if u >= base.n() || v >= base.n() || !base.has_edge(u, v) {
                return Err(Error::ArcMismatch(format!("{u}->{v} is not an edge")));
            }
            if d.out[u] >> v & 1 == 1 || d.out[v] >> u & 1 == 1 {
                return Err(Error::ArcMismatch(format!("edge {u}-{v} oriented twice")));
            }
            d.set_arc(u, v);
        }
        if let Some((u, v)) = base
            .edges()
            .into_iter()
            .find(|&(u, v)| (d.out[u] | d.inn[u]) >> v & 1 == 0)
        {
            return Err(Error::ArcMismatch(format!("edge {u}-{v} has no direction")));
        }
        d.assert_invariants();
        Ok(d)
    }

    /// All edges unassigned; only for incremental construction.
    pub(crate) fn unassigned(base: &Graph) -> Self {
        Orientation {
            base: base.clone(),
            out: vec![0; base.n()],
            inn: vec![0; base.n()],
        }
    }

    #[inline]
    pub(crate) fn set_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.out[u] &= !(1 << v);
        self.inn[v] &= !(1 << u);
        self.out[v] &= !(1 << u);
        self.inn[u] &= !(1 << v);
    }

    /// Reverses the arc between `u` and `v`.
    pub fn flip(&mut self, u: usize, v: usize) {
        assert!(self.base.has_edge(u, v));
        let forward = self.has_arc(u, v);
        self.clear_edge(u, v);
        if forward {
            self.set_arc(v, u);
        } else {
            self.set_arc(u, v);
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.base.n()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.out[v])
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.inn[v])
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].count_ones() as usize
    }

    pub(crate) fn out_masks(&self) -> &[u64] {
        &self.out
    }

    pub(crate) fn in_masks(&self) -> &[u64] {
        &self.inn
    }

    /// Vertices dominated by `s`: the union of their out-neighborhoods.
    pub fn dominated_by(&self, s: VertexSet) -> VertexSet {
        VertexSet(s.iter().fold(0, |acc, v| acc | self.out[v]))
    }

    /// Every vertex has at least one in-neighbor.
    pub fn is_valid(&self) -> bool {
        self.first_source().is_none()
    }

    pub(crate) fn first_source(&self) -> Option<usize> {
        (0..self.n()).find(|&v| self.inn[v] == 0)
    }

    /// Arcs in canonical edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .into_iter()
            .map(|(u, v)| if self.has_arc(u, v) { (u, v) } else { (v, u) })
            .collect()
    }

    pub fn direction_bits(&self) -> Vec<bool> {
        self.base
            .edges()
            .into_iter()
            .map(|(u, v)| self.has_arc(v, u))
            .collect()
    }

    pub(crate) fn assert_invariants(&self) {
        for v in 0..self.n() {
            assert_eq!(self.out[v] | self.inn[v], self.base.adjacency()[v], "vertex {v}");
            assert_eq!(self.out[v] & self.inn[v], 0, "vertex {v}");
            for u in self.out_neighbors(v) {
                assert!(self.inn[u] >> v & 1 == 1);
            }
        }
    }
}

/// Serialized as the arc list `[[u, v], ...]` in canonical edge order.
impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let arcs = self.arcs();
        let mut seq = serializer.serialize_seq(Some(arcs.len()))?;
        for (u, v) in arcs {
            seq.serialize_element(&[u, v])?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn arcs_round_trip() {
        let g = named::paw();
        let arcs = [(0, 1), (2, 1), (3, 2), (1, 3)];
        let d = Orientation::from_arcs(&g, &arcs).unwrap();
        assert_eq!(d.arcs(), [(0, 1), (2, 1), (1, 3), (3, 2)]);
        let again = Orientation::from_direction_bits(&g, &d.direction_bits()).unwrap();
        assert_eq!(again, d);
        assert_eq!(serde_json::to_string(&d).unwrap(), "[[0,1],[2,1],[1,3],[3,2]]");
    }

    #[test]
    fn arc_list_must_match_edges() {
        let g = named::cycle(3);
        assert!(Orientation::from_arcs(&g, &[(0, 1), (1, 2)]).is_err());
        assert!(Orientation::from_arcs(&g, &[(0, 1), (1, 0), (1, 2), (2, 0)]).is_err());
        assert!(Orientation::from_arcs(&g, &[(0, 1), (1, 2), (2, 0), (0, 0)]).is_err());
        assert!(Orientation::from_direction_bits(&g, &[false]).is_err());
    }

    #[test]
    fn validity() {
        let g = named::cycle(4);
        let circuit = Orientation::from_arcs(&g, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(circuit.is_valid());
        let k4 = named::complete(4);
        let source = Orientation::from_arcs(&k4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!source.is_valid());
        let mut flipped = circuit.clone();
        flipped.flip(0, 1);
        assert!(!flipped.is_valid());
        flipped.assert_invariants();
    }

    #[test]
    fn trees_have_no_valid_orientation() {
        let t = named::path(4);
        for bits in 0..8u32 {
            let rev: Vec<bool> = (0..3).map(|i| bits >> i & 1 == 1).collect();
            assert!(!Orientation::from_direction_bits(&t, &rev).unwrap().is_valid());
        }
    }
}
