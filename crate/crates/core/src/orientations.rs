//! Valid orientations of undirected graphs: construction, enumeration, the
//! exact upper and lower orientable total domination numbers, and a pruned
//! search for extremal orientations (total domination number `n - 1`).

use serde::Serialize;

use crate::domination::{gamma_t, gamma_t_window, has_overdominating_set, Window, OVERDOMINATION_LIMIT};
use crate::error::{check_budget, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::orientation::Orientation;

/// Largest edge count for exhaustive orientation enumeration.
pub const EDGE_BUDGET: usize = 24;

fn require_class_c(g: &Graph) -> Result<()> {
    let cd = g.components();
    for (c, &m) in cd.components.iter().zip(&cd.edge_counts) {
        if m < c.len() {
            return Err(Error::NotClassC(c.first().unwrap_or(0)));
        }
    }
    Ok(())
}

/// A valid orientation built from a spanning tree plus one extra edge per
/// component: the cycle closed by the extra edge becomes a circuit and the
/// tree edges point away from it. Remaining edges point from the lower to
/// the higher index.
pub fn construct_valid_orientation(g: &Graph) -> Result<Orientation> {
    require_class_c(g)?;
    let n = g.n();
    let mut d = Orientation::unassigned(g);
    let assign = |d: &mut Orientation, u: usize, v: usize| d.set_arc(u, v);

    for comp in g.components().components {
        let root = comp.first().expect("non-empty component");
        // BFS tree.
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut order = vec![root];
        let mut seen = VertexSet::singleton(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in g.neighbors(v).difference(seen) {
                seen.insert(u);
                parent[u] = v;
                depth[u] = depth[v] + 1;
                order.push(u);
            }
        }
        let is_tree_edge = |u: usize, v: usize| parent[u] == v || parent[v] == u;
        let (a, b) = g
            .edges()
            .into_iter()
            .find(|&(u, v)| comp.contains(u) && !is_tree_edge(u, v))
            .expect("class-C component has a non-tree edge");

        // Tree path a .. lca .. b, then the extra edge b -> a closes it.
        let (mut x, mut y) = (a, b);
        let mut up = vec![x];
        let mut down = vec![y];
        while x != y {
            if depth[x] >= depth[y] {
                x = parent[x];
                up.push(x);
            } else {
                y = parent[y];
                down.push(y);
            }
        }
        down.pop();
        let cycle: Vec<usize> = up.into_iter().chain(down.into_iter().rev()).collect();
        for w in cycle.windows(2) {
            assign(&mut d, w[0], w[1]);
        }
        assign(&mut d, *cycle.last().unwrap(), cycle[0]);

        // Remaining tree edges point outward from the cycle.
        let mut reached = VertexSet::from_vertices(cycle.iter().copied());
        let mut frontier: Vec<usize> = cycle;
        while let Some(v) = frontier.pop() {
            for u in g.neighbors(v).difference(reached) {
                if is_tree_edge(u, v) {
                    reached.insert(u);
                    assign(&mut d, v, u);
                    frontier.push(u);
                }
            }
        }
    }
    for (u, v) in g.edges() {
        if !d.has_arc(u, v) && !d.has_arc(v, u) {
            assign(&mut d, u, v);
        }
    }
    d.assert_invariants();
    assert!(d.is_valid());
    Ok(d)
}

/// Every valid orientation of `g`, each exactly once, in depth-first order
/// over the canonical edge list (forward direction first).
pub struct ValidOrientations {
    d: Orientation,
    edges: Vec<(usize, usize)>,
    /// Vertices whose last incident edge (in enumeration order) is edge `i`.
    closing: Vec<u64>,
    state: Vec<u8>,
    depth: usize,
    exhausted: bool,
}

pub fn enumerate_valid_orientations(g: &Graph) -> Result<ValidOrientations> {
    require_class_c(g)?;
    check_budget("orientation edge", EDGE_BUDGET, g.m())?;
    Ok(ValidOrientations::new(g, g.edges()))
}

impl ValidOrientations {
    fn new(g: &Graph, edges: Vec<(usize, usize)>) -> Self {
        let closing = closing_masks(g.n(), &edges);
        let m = edges.len();
        ValidOrientations {
            d: Orientation::unassigned(g),
            edges,
            closing,
            state: vec![0; m],
            depth: 0,
            exhausted: m == 0,
        }
    }

    /// Advances to the next valid orientation without cloning it.
    pub fn advance(&mut self) -> Option<&Orientation> {
        let m = self.edges.len();
        if self.depth == m && !self.exhausted {
            // Resume after the previously returned leaf.
            self.depth -= 1;
        }
        loop {
            if self.exhausted {
                return None;
            }
            let i = self.depth;
            let (u, v) = self.edges[i];
            match self.state[i] {
                0 => {
                    self.state[i] = 1;
                    self.d.set_arc(u, v);
                }
                1 => {
                    self.d.clear_edge(u, v);
                    self.state[i] = 2;
                    self.d.set_arc(v, u);
                }
                _ => {
                    self.d.clear_edge(u, v);
                    self.state[i] = 0;
                    if i == 0 {
                        self.exhausted = true;
                    } else {
                        self.depth -= 1;
                    }
                    continue;
                }
            }
            let closed_ok = VertexSet(self.closing[i])
                .iter()
                .all(|w| !self.d.in_neighbors(w).is_empty());
            if closed_ok {
                self.depth += 1;
                if self.depth == m {
                    return Some(&self.d);
                }
            }
        }
    }
}

impl Iterator for ValidOrientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        self.advance().cloned()
    }
}

fn closing_masks(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut last = vec![usize::MAX; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        last[u] = i;
        last[v] = i;
    }
    let mut closing = vec![0u64; edges.len()];
    for (v, &i) in last.iter().enumerate() {
        if i != usize::MAX {
            closing[i] |= 1 << v;
        }
    }
    closing
}

/// Exact lower and upper orientable total domination numbers with an
/// orientation attaining each.
#[derive(Clone, Debug, Serialize)]
pub struct DomtRange {
    pub lower: usize,
    pub upper: usize,
    pub argmin: Orientation,
    pub argmax: Orientation,
    pub orientations: u64,
}

/// Single enumeration pass computing both extremes. After the first
/// orientation, each solver call only resolves whether the value falls
/// outside the running `[min, max]`.
pub fn domt_range(g: &Graph) -> Result<DomtRange> {
    let mut it = enumerate_valid_orientations(g)?;
    let first = it.advance().expect("class-C graph has a valid orientation").clone();
    let sol = gamma_t(&first)?;
    let mut range = DomtRange {
        lower: sol.size,
        upper: sol.size,
        argmin: first.clone(),
        argmax: first,
        orientations: 1,
    };
    while let Some(d) = it.advance() {
        range.orientations += 1;
        match gamma_t_window(d, range.lower, range.upper)? {
            Window::Inside => {}
            Window::Below(s) => {
                range.lower = s.size;
                range.argmin = d.clone();
            }
            Window::Above(s) => {
                range.upper = s.size;
                range.argmax = d.clone();
            }
        }
    }
    Ok(range)
}

pub fn domt_upper(g: &Graph) -> Result<usize> {
    Ok(domt_range(g)?.upper)
}

pub fn domt_lower(g: &Graph) -> Result<usize> {
    Ok(domt_range(g)?.lower)
}

/// Necessary conditions on extremal orientations, used both as pruning
/// rules and as post-hoc checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremalRule {
    InDegree,
    OutDegreeCap,
    ZeroOutDegree,
    CommonOutNeighbor,
    Overdomination,
}

impl ExtremalRule {
    pub fn tag(self) -> &'static str {
        match self {
            ExtremalRule::InDegree => "in-degree",
            ExtremalRule::OutDegreeCap => "out-degree-cap",
            ExtremalRule::ZeroOutDegree => "zero-out-degree",
            ExtremalRule::CommonOutNeighbor => "common-out-neighbor",
            ExtremalRule::Overdomination => "overdomination",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PruneCounts {
    pub in_degree: u64,
    pub out_degree_cap: u64,
    pub common_out_neighbor: u64,
    pub zero_out_degree: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrientationSearchStats {
    pub orientations_examined: u64,
    pub nodes_pruned_by_rule: PruneCounts,
    pub solver_calls: u64,
}

impl OrientationSearchStats {
    pub fn merge(&mut self, other: &OrientationSearchStats) {
        self.orientations_examined += other.orientations_examined;
        self.solver_calls += other.solver_calls;
        let (a, b) = (&mut self.nodes_pruned_by_rule, &other.nodes_pruned_by_rule);
        a.in_degree += b.in_degree;
        a.out_degree_cap += b.out_degree_cap;
        a.common_out_neighbor += b.common_out_neighbor;
        a.zero_out_degree += b.zero_out_degree;
    }

    fn count(&mut self, rule: ExtremalRule) {
        let p = &mut self.nodes_pruned_by_rule;
        match rule {
            ExtremalRule::InDegree => p.in_degree += 1,
            ExtremalRule::OutDegreeCap => p.out_degree_cap += 1,
            ExtremalRule::CommonOutNeighbor => p.common_out_neighbor += 1,
            ExtremalRule::ZeroOutDegree => p.zero_out_degree += 1,
            ExtremalRule::Overdomination => {}
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalSearch {
    pub orientation: Option<Orientation>,
    pub stats: OrientationSearchStats,
}

/// Backtracking search for an orientation with total domination number
/// `n - 1`. Partial assignments are pruned when a finished vertex has no
/// in-neighbor, any vertex gets out-degree 3, two finished vertices have
/// out-degree 0, or two finished out-degree-2 vertices have disjoint
/// out-neighborhoods. Survivors are confirmed by the exact solver.
pub fn exists_extremal_orientation(g: &Graph) -> Result<ExtremalSearch> {
    require_class_c(g)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if g.is_cycle() {
        return Err(Error::Precondition("cycles have no extremal orientation: DOM_t = n".into()));
    }
    let n = g.n();
    let mut edges = g.edges();
    // High-degree endpoints first; the sort is stable so ties keep the
    // canonical order.
    edges.sort_by_key(|&(u, v)| {
        let (a, b) = (g.degree(u), g.degree(v));
        (std::cmp::Reverse(a.max(b)), std::cmp::Reverse(a + b))
    });
    let mut search = ExtremalSearcher {
        closing: closing_masks(n, &edges),
        edges,
        d: Orientation::unassigned(g),
        finished: 0,
        zero_out: 0,
        stats: OrientationSearchStats::default(),
        found: None,
    };
    search.dfs(0)?;
    Ok(ExtremalSearch {
        orientation: search.found,
        stats: search.stats,
    })
}

struct ExtremalSearcher {
    edges: Vec<(usize, usize)>,
    closing: Vec<u64>,
    d: Orientation,
    finished: u64,
    zero_out: usize,
    stats: OrientationSearchStats,
    found: Option<Orientation>,
}

impl ExtremalSearcher {
    fn dfs(&mut self, i: usize) -> Result<()> {
        if self.found.is_some() {
            return Ok(());
        }
        if i == self.edges.len() {
            self.stats.orientations_examined += 1;
            self.stats.solver_calls += 1;
            let n = self.d.n();
            if gamma_t_window(&self.d, n - 1, n - 1)? == Window::Inside {
                self.found = Some(self.d.clone());
            }
            return Ok(());
        }
        let (a, b) = self.edges[i];
        for (u, v) in [(a, b), (b, a)] {
            self.d.set_arc(u, v);
            match self.violation(i, u) {
                Some(rule) => self.stats.count(rule),
                None => {
                    let closing = VertexSet(self.closing[i]);
                    let zeros = closing.iter().filter(|&w| self.d.out_degree(w) == 0).count();
                    self.finished |= closing.0;
                    self.zero_out += zeros;
                    self.dfs(i + 1)?;
                    self.zero_out -= zeros;
                    self.finished &= !closing.0;
                }
            }
            self.d.clear_edge(u, v);
            if self.found.is_some() {
                break;
            }
        }
        Ok(())
    }

    fn violation(&self, i: usize, tail: usize) -> Option<ExtremalRule> {
        if self.d.out_degree(tail) > 2 {
            return Some(ExtremalRule::OutDegreeCap);
        }
        let closing = VertexSet(self.closing[i]);
        if closing.iter().any(|w| self.d.in_degree(w) == 0) {
            return Some(ExtremalRule::InDegree);
        }
        let zeros = closing.iter().filter(|&w| self.d.out_degree(w) == 0).count();
        if self.zero_out + zeros > 1 {
            return Some(ExtremalRule::ZeroOutDegree);
        }
        let finished = self.finished | closing.0;
        for x in closing {
            if self.d.out_degree(x) != 2 {
                continue;
            }
            let ox = self.d.out_neighbors(x);
            for y in VertexSet(finished & !(1 << x)) {
                if self.d.out_degree(y) == 2 && self.d.out_neighbors(y).intersection(ox).is_empty() {
                    return Some(ExtremalRule::CommonOutNeighbor);
                }
            }
        }
        None
    }
}

/// Necessary conditions every extremal orientation satisfies that `d`
/// violates. An empty list does not imply `d` is extremal.
pub fn verify_extremal_necessary_conditions(d: &Orientation) -> Result<Vec<ExtremalRule>> {
    let n = d.n();
    check_budget("overdomination vertex", OVERDOMINATION_LIMIT, n)?;
    let mut out = Vec::new();
    if d.first_source().is_some() {
        out.push(ExtremalRule::InDegree);
    }
    if (0..n).any(|v| d.out_degree(v) > 2) {
        out.push(ExtremalRule::OutDegreeCap);
    }
    if (0..n).filter(|&v| d.out_degree(v) == 0).count() > 1 {
        out.push(ExtremalRule::ZeroOutDegree);
    }
    let twos: Vec<usize> = (0..n).filter(|&v| d.out_degree(v) == 2).collect();
    let disjoint_pair = twos.iter().enumerate().any(|(i, &x)| {
        twos[i + 1..]
            .iter()
            .any(|&y| d.out_neighbors(x).intersection(d.out_neighbors(y)).is_empty())
    });
    if disjoint_pair {
        out.push(ExtremalRule::CommonOutNeighbor);
    }
    if has_overdominating_set(d)? {
        out.push(ExtremalRule::Overdomination);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::gamma_t_oracle;
    use crate::graph::named;

    fn brute_force_valid_count(g: &Graph) -> usize {
        let m = g.m();
        (0u64..1 << m)
            .filter(|bits| {
                let rev: Vec<bool> = (0..m).map(|i| bits >> i & 1 == 1).collect();
                Orientation::from_direction_bits(g, &rev).unwrap().is_valid()
            })
            .count()
    }

    #[test]
    fn constructed_orientations_are_valid() {
        let c4 = construct_valid_orientation(&named::cycle(4)).unwrap();
        assert!(c4.is_valid());
        assert!((0..4).all(|v| c4.out_degree(v) == 1));
        let paw = construct_valid_orientation(&named::paw()).unwrap();
        assert!(paw.is_valid());
        assert_eq!(paw.in_neighbors(0), VertexSet::singleton(1));
        assert!(matches!(construct_valid_orientation(&named::path(4)), Err(Error::NotClassC(0))));
        let two = named::cycle(3).disjoint_union(&named::paw()).unwrap();
        assert!(construct_valid_orientation(&two).unwrap().is_valid());
        assert_eq!(construct_valid_orientation(&named::petersen()).unwrap(), construct_valid_orientation(&named::petersen()).unwrap());
    }

    #[test]
    fn valid_orientation_counts() {
        assert_eq!(enumerate_valid_orientations(&named::cycle(3)).unwrap().count(), 2);
        assert_eq!(enumerate_valid_orientations(&named::cycle(4)).unwrap().count(), 2);
        for g in [named::complete(4), named::k4_minus_e(), named::paw(), named::complete_bipartite(2, 3)] {
            let all: Vec<Orientation> = enumerate_valid_orientations(&g).unwrap().collect();
            assert_eq!(all.len(), brute_force_valid_count(&g));
            assert!(all.iter().all(Orientation::is_valid));
            let distinct: std::collections::HashSet<_> = all.iter().map(|d| d.direction_bits()).collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn budget_and_class_checks() {
        assert!(matches!(enumerate_valid_orientations(&named::complete(8)), Err(Error::Budget { .. })));
        assert!(enumerate_valid_orientations(&named::star(3)).is_err());
        assert!(exists_extremal_orientation(&named::cycle(4)).is_err());
        let two = named::cycle(3).disjoint_union(&named::paw()).unwrap();
        assert!(exists_extremal_orientation(&two).is_err());
    }

    #[test]
    fn range_of_small_graphs() {
        for n in 3..=8 {
            let r = domt_range(&named::cycle(n)).unwrap();
            assert_eq!((r.lower, r.upper), (n, n));
        }
        let k4 = domt_range(&named::complete(4)).unwrap();
        assert_eq!((k4.lower, k4.upper), (3, 3));
        let k23 = domt_range(&named::complete_bipartite(2, 3)).unwrap();
        assert_eq!((k23.lower, k23.upper), (4, 4));
        assert_eq!(gamma_t(&k23.argmin).unwrap().size, 4);
    }

    #[test]
    fn range_matches_oracle_fold() {
        for g in [named::paw(), named::k4_minus_e(), named::complete(4)] {
            let sizes: Vec<usize> = enumerate_valid_orientations(&g)
                .unwrap()
                .map(|d| gamma_t_oracle(&d).unwrap().size)
                .collect();
            let r = domt_range(&g).unwrap();
            assert_eq!(r.lower, *sizes.iter().min().unwrap());
            assert_eq!(r.upper, *sizes.iter().max().unwrap());
            assert_eq!(r.orientations as usize, sizes.len());
        }
    }

    #[test]
    fn extremal_search_small() {
        let k23 = named::complete_bipartite(2, 3);
        let found = exists_extremal_orientation(&k23).unwrap();
        let d = found.orientation.unwrap();
        assert_eq!(gamma_t(&d).unwrap().size, 4);
        assert!(verify_extremal_necessary_conditions(&d).unwrap().is_empty());
        assert!(found.stats.orientations_examined >= found.stats.solver_calls);
    }

    #[test]
    fn necessary_condition_tags() {
        let k4 = named::complete(4);
        let d = Orientation::from_arcs(&k4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap();
        let v = verify_extremal_necessary_conditions(&d).unwrap();
        assert!(v.contains(&ExtremalRule::OutDegreeCap));
        assert!(v.contains(&ExtremalRule::Overdomination));
        let arcs: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let c6 = Orientation::from_arcs(&named::cycle(6), &arcs).unwrap();
        assert!(verify_extremal_necessary_conditions(&c6).unwrap().is_empty());
    }
}
