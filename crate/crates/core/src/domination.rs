//! Total domination in digraphs.
//!
//! A set `S` totally dominates `D` when every vertex has an in-neighbor in
//! `S`. The exact solver is a branch and bound over undominated vertices:
//! it branches on the undominated vertex with the fewest remaining
//! in-neighbors, so vertices with a unique in-neighbor become forced moves.

use serde::Serialize;

use crate::error::{check_budget, Error, Result};
use crate::graph::VertexSet;
use crate::orientation::Orientation;

pub const ORACLE_LIMIT: usize = 20;
pub const MINIMAL_SETS_LIMIT: usize = 16;
pub const OVERDOMINATION_LIMIT: usize = 20;

/// A minimum total dominating set and its size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TdsSolution {
    pub size: usize,
    pub witness: VertexSet,
}

pub fn is_total_dominating(d: &Orientation, s: VertexSet) -> bool {
    d.dominated_by(s) == d.base().vertices()
}

fn require_valid(d: &Orientation) -> Result<()> {
    match d.first_source() {
        Some(v) => Err(Error::InvalidOrientation(v)),
        None => Ok(()),
    }
}

/// Exact total domination number with one optimal witness.
pub fn gamma_t(d: &Orientation) -> Result<TdsSolution> {
    require_valid(d)?;
    let mut solver = Solver::new(d, Mode::Exact);
    solver.run();
    let (size, witness) = solver.best.expect("valid orientation has a total dominating set");
    let sol = TdsSolution { size, witness };
    check_lower_bound(&sol);
    Ok(sol)
}

// No vertex dominates itself and no two vertices dominate each other.
fn check_lower_bound(sol: &TdsSolution) {
    assert!(sol.size >= 3, "total domination number {} below 3", sol.size);
}

/// Where the total domination number falls relative to a window `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    Below(TdsSolution),
    Inside,
    Above(TdsSolution),
}

/// Decides whether `gamma_t(d)` lies below, inside, or above `[lo, hi]`,
/// computing the exact value only when it lies outside. Used when folding
/// the minimum and maximum over many orientations.
pub fn gamma_t_window(d: &Orientation, lo: usize, hi: usize) -> Result<Window> {
    require_valid(d)?;
    debug_assert!(lo <= hi);
    let mut solver = Solver::new(d, Mode::Window { lo, hi });
    solver.run();
    match solver.best {
        None => Ok(Window::Above(gamma_t(d)?)),
        Some((size, witness)) if size < lo => {
            let sol = TdsSolution { size, witness };
            check_lower_bound(&sol);
            Ok(Window::Below(sol))
        }
        Some(_) => Ok(Window::Inside),
    }
}

/// Some total dominating set of size at most `k`, if one exists.
pub fn tds_at_most(d: &Orientation, k: usize) -> Result<Option<VertexSet>> {
    require_valid(d)?;
    let mut solver = Solver::new(d, Mode::FirstAtMost(k));
    solver.run();
    Ok(solver.best.map(|(_, w)| w))
}

#[derive(Clone, Copy)]
enum Mode {
    Exact,
    Window { lo: usize, hi: usize },
    FirstAtMost(usize),
}

struct Solver<'a> {
    out: &'a [u64],
    inn: &'a [u64],
    n: usize,
    mode: Mode,
    /// Only solutions strictly smaller than this are of interest.
    cutoff: usize,
    best: Option<(usize, VertexSet)>,
    done: bool,
}

impl<'a> Solver<'a> {
    fn new(d: &'a Orientation, mode: Mode) -> Self {
        let n = d.n();
        let cutoff = match mode {
            Mode::Exact => n + 1,
            Mode::Window { hi, .. } => hi + 1,
            Mode::FirstAtMost(k) => k + 1,
        };
        Solver {
            out: d.out_masks(),
            inn: d.in_masks(),
            n,
            mode,
            cutoff,
            best: None,
            done: false,
        }
    }

    fn run(&mut self) {
        let all = VertexSet::full(self.n).0;
        let greedy = self.greedy(all);
        self.offer(greedy);
        if !self.done {
            self.search(0, 0, all, 0);
        }
    }

    fn record(&mut self, set: u64) {
        let size = set.count_ones() as usize;
        self.best = Some((size, VertexSet(set)));
        match self.mode {
            Mode::Exact => self.cutoff = size,
            Mode::Window { lo, .. } => self.cutoff = if size >= lo { lo } else { size },
            Mode::FirstAtMost(_) => self.done = true,
        }
    }

    fn offer(&mut self, set: u64) {
        if (set.count_ones() as usize) < self.cutoff {
            self.record(set);
        }
    }

    /// Repeatedly takes the vertex covering the most undominated vertices.
    fn greedy(&self, all: u64) -> u64 {
        let mut undominated = all;
        let mut chosen = 0u64;
        while undominated != 0 {
            let mut best_v = usize::MAX;
            let mut best_gain = 0;
            for v in 0..self.n {
                let gain = (self.out[v] & undominated).count_ones();
                if gain > best_gain {
                    best_gain = gain;
                    best_v = v;
                }
            }
            debug_assert!(best_gain > 0);
            chosen |= 1 << best_v;
            undominated &= !self.out[best_v];
        }
        chosen
    }

    fn search(&mut self, chosen: u64, size: usize, undominated: u64, forbidden: u64) {
        if self.done {
            return;
        }
        if undominated == 0 {
            if size < self.cutoff {
                self.record(chosen);
            }
            return;
        }
        if size + 1 >= self.cutoff {
            return;
        }
        let free = !(chosen | forbidden);
        let mut max_gain = 0;
        for v in VertexSet(free & VertexSet::full(self.n).0) {
            max_gain = max_gain.max((self.out[v] & undominated).count_ones() as usize);
        }
        if max_gain == 0 {
            return;
        }
        let remaining = undominated.count_ones() as usize;
        if size + remaining.div_ceil(max_gain) >= self.cutoff {
            return;
        }

        // Undominated vertex with the fewest candidate dominators, lowest
        // index on ties.
        let mut pivot_candidates = u64::MAX;
        let mut fewest = u32::MAX;
        for u in VertexSet(undominated) {
            let c = self.inn[u] & free;
            let k = c.count_ones();
            if k < fewest {
                fewest = k;
                pivot_candidates = c;
                if k <= 1 {
                    break;
                }
            }
        }
        if fewest == 0 {
            return;
        }
        let mut forbidden = forbidden;
        for c in VertexSet(pivot_candidates) {
            self.search(chosen | 1 << c, size + 1, undominated & !self.out[c], forbidden);
            if self.done {
                return;
            }
            forbidden |= 1 << c;
        }
    }
}

/// Independent oracle: subsets in increasing cardinality, first hit wins.
pub fn gamma_t_oracle(d: &Orientation) -> Result<TdsSolution> {
    require_valid(d)?;
    let n = d.n();
    check_budget("oracle vertex", ORACLE_LIMIT, n)?;
    for k in 1..=n {
        let mut s: u64 = (1 << k) - 1;
        while s < 1 << n {
            let set = VertexSet(s);
            if is_total_dominating(d, set) {
                return Ok(TdsSolution { size: k, witness: set });
            }
            // Next subset with the same popcount (Gosper's hack).
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set dominates a valid orientation")
}

/// All inclusion-minimal total dominating sets, ordered by size then mask.
pub fn minimal_total_dominating_sets(d: &Orientation) -> Result<Vec<VertexSet>> {
    require_valid(d)?;
    let n = d.n();
    check_budget("minimal-set vertex", MINIMAL_SETS_LIMIT, n)?;
    let out = d.out_masks();
    let all = VertexSet::full(n).0;
    let dom = dominated_table(out, n);
    let mut sets: Vec<VertexSet> = (0..1u64 << n)
        .filter(|&s| dom[s as usize] == all)
        .filter(|&s| VertexSet(s).iter().all(|v| dom[(s & !(1 << v)) as usize] != all))
        .map(VertexSet)
        .collect();
    sets.sort_by_key(|s| (s.len(), s.0));
    Ok(sets)
}

/// `table[s]` is the set dominated by the vertex subset `s`.
fn dominated_table(out: &[u64], n: usize) -> Vec<u64> {
    let mut table = vec![0u64; 1 << n];
    for s in 1..table.len() {
        let low = s.trailing_zeros() as usize;
        table[s] = table[s & (s - 1)] | out[low];
    }
    table
}

/// True iff some `S` dominates at least `|S| + 2` vertices.
pub fn has_overdominating_set(d: &Orientation) -> Result<bool> {
    let n = d.n();
    check_budget("overdomination vertex", OVERDOMINATION_LIMIT, n)?;
    let dom = dominated_table(d.out_masks(), n);
    Ok(dom
        .iter()
        .enumerate()
        .any(|(s, &t)| t.count_ones() >= (s as u64).count_ones() + 2))
}
