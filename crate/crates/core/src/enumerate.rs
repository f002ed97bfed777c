//! Isomorph-free enumeration of small graphs.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle bit string (graph6 bit order) over all vertex
//! permutations. Classes on `n` vertices are produced by extending every
//! class on `n - 1` vertices with a new vertex joined to each possible
//! neighbor subset, then keeping one graph per canonical code.

use std::collections::BTreeMap;

use crate::error::{check_budget, Result};
use crate::graph::{Graph, ISOMORPHISM_LIMIT};

/// Largest vertex count served by the built-in enumeration.
pub const ENUMERATION_LIMIT: usize = 7;

/// Canonical code together with the inverse permutation that realizes it:
/// `order[i]` is the old vertex placed at new position `i`.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= ISOMORPHISM_LIMIT, "canonical form is brute force");
    let mut search = CanonSearch {
        g,
        best: None,
        best_order: Vec::new(),
        order: Vec::with_capacity(n),
    };
    search.extend(0, 0, 0);
    (search.best.expect("at least one permutation").0, search.best_order)
}

pub fn canonical_code(g: &Graph) -> u64 {
    canonical_form(g).0
}

/// The graph relabelled into its canonical vertex order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut perm = vec![0; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.relabel(&perm)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    /// (code, bit length) of the best complete labelling so far.
    best: Option<(u64, u32)>,
    best_order: Vec<usize>,
    order: Vec<usize>,
}

impl CanonSearch<'_> {
    fn extend(&mut self, used: u64, prefix: u64, len: u32) {
        let n = self.g.n();
        let j = self.order.len();
        if j == n {
            if self.best.is_none_or(|(b, _)| prefix < b) {
                self.best = Some((prefix, len));
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut code = prefix;
            for &u in &self.order {
                code = code << 1 | self.g.has_edge(u, v) as u64;
            }
            let new_len = len + j as u32;
            if let Some((best, best_len)) = self.best {
                let best_prefix = best >> (best_len - new_len);
                if code > best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.extend(used | 1 << v, code, new_len);
            self.order.pop();
        }
    }
}

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted by canonical code, restricted to graphs accepted by `filter`.
pub fn enumerate_graphs<F>(n: usize, filter: F) -> Result<impl Iterator<Item = Graph>>
where
    F: Fn(&Graph) -> bool,
{
    check_budget("built-in enumeration vertex", ENUMERATION_LIMIT, n)?;
    let all = all_classes(n)?;
    Ok(all.into_iter().filter(move |g| filter(g)))
}

fn all_classes(n: usize) -> Result<Vec<Graph>> {
    let mut level = vec![Graph::empty(1)?];
    for size in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u64..(1 << (size - 1)) {
                let mut adj = g.adjacency().to_vec();
                for (v, row) in adj.iter_mut().enumerate() {
                    *row |= (mask >> v & 1) << (size - 1);
                }
                adj.push(mask);
                let h = Graph::from_adjacency(adj)?;
                let (code, _) = canonical_form(&h);
                next.entry(code).or_insert_with(|| canonical_graph(&h));
            }
        }
        level = next.into_values().collect();
    }
    if n == 0 {
        level.clear();
    }
    Ok(level)
}

/// Connected class-C graphs (every component has a cycle) on `n` vertices.
pub fn connected_class_c(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n, |g| g.is_connected() && g.in_class_c())?.collect())
}
