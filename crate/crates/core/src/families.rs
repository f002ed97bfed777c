//! Graph families whose upper orientable total domination number is one
//! less than the vertex count.
//!
//! * F2: disjoint cycles plus a hub `s` of degree at least 2 touching every
//!   cycle; all non-cycle edges are incident with `s`.
//! * F1: a unique degree-1 vertex `s`, a path `s w_1 .. w_k`, optional
//!   disjoint cycles, and every further edge incident with `w_k`.
//! * F3: an F1 member plus one or two edges at `s`, subject to conditions on
//!   the degree-3 vertices of the F1 member.
//! * F: a cycle with a pendant path.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, named, Graph, VertexSet};
use crate::orientation::Orientation;

pub mod random;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2Witness {
    pub s: usize,
    /// Components of `G - s`, each listed in circuit order.
    pub cycles: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F1Witness {
    pub s: usize,
    /// `w_1 .. w_k`.
    pub path: Vec<usize>,
    /// Cycle components of `G - {s, w_1, .., w_k}` in circuit order.
    pub cycles: Vec<Vec<usize>>,
    /// Edges `(w_k, x)` other than the path edge into `w_k`.
    pub extra_edges: Vec<(usize, usize)>,
}

impl F1Witness {
    pub fn k(&self) -> usize {
        self.path.len()
    }

    pub fn wk(&self) -> usize {
        *self.path.last().expect("k >= 1")
    }

    /// Vertices other than `w_k` joined to `w_k` by an extra edge; in the
    /// F1 orientation these are exactly the out-degree-2 vertices.
    pub fn wk_attachments(&self) -> Vec<usize> {
        self.extra_edges.iter().map(|&(_, x)| x).collect()
    }

    fn map(&self, f: &impl Fn(usize) -> usize) -> F1Witness {
        F1Witness {
            s: f(self.s),
            path: self.path.iter().map(|&v| f(v)).collect(),
            cycles: self.cycles.iter().map(|c| c.iter().map(|&v| f(v)).collect()).collect(),
            extra_edges: self.extra_edges.iter().map(|&(a, b)| (f(a), f(b))).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum F3Case {
    #[serde(rename = "single-edge")]
    SingleEdge,
    #[serde(rename = "dwk4-plus")]
    DwkAtLeast4,
    #[serde(rename = "dwk3-via-wk")]
    Dwk3ViaWk,
    #[serde(rename = "dwk3-via-xy")]
    Dwk3ViaXy,
    #[serde(rename = "dwk2-via-wk")]
    Dwk2ViaWk,
    #[serde(rename = "dwk2-via-x")]
    Dwk2ViaX,
}

impl F3Case {
    pub const ALL: [F3Case; 6] = [
        F3Case::SingleEdge,
        F3Case::DwkAtLeast4,
        F3Case::Dwk3ViaWk,
        F3Case::Dwk3ViaXy,
        F3Case::Dwk2ViaWk,
        F3Case::Dwk2ViaX,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            F3Case::SingleEdge => "single-edge",
            F3Case::DwkAtLeast4 => "dwk4-plus",
            F3Case::Dwk3ViaWk => "dwk3-via-wk",
            F3Case::Dwk3ViaXy => "dwk3-via-xy",
            F3Case::Dwk2ViaWk => "dwk2-via-wk",
            F3Case::Dwk2ViaX => "dwk2-via-x",
        }
    }

    pub fn from_tag(tag: &str) -> Option<F3Case> {
        F3Case::ALL.into_iter().find(|c| c.tag() == tag)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F3Witness {
    /// F1 witness of `R = G - added`. Cycle lists follow the circuit
    /// direction that makes the case conditions hold.
    pub base: F1Witness,
    /// Edges `(s, v)` added to `R`.
    pub added: Vec<(usize, usize)>,
    pub case_tag: F3Case,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FWitness {
    pub cycle: Vec<usize>,
    /// From the leaf to the attachment vertex, inclusive.
    pub path: Vec<usize>,
    pub attach: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum FamilyWitness {
    F1(F1Witness),
    F2(F2Witness),
    F3(F3Witness),
}

impl FamilyWitness {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyWitness::F1(_) => "F1",
            FamilyWitness::F2(_) => "F2",
            FamilyWitness::F3(_) => "F3",
        }
    }

    fn map(&self, f: &impl Fn(usize) -> usize) -> FamilyWitness {
        match self {
            FamilyWitness::F1(w) => FamilyWitness::F1(w.map(f)),
            FamilyWitness::F2(w) => FamilyWitness::F2(F2Witness {
                s: f(w.s),
                cycles: w.cycles.iter().map(|c| c.iter().map(|&v| f(v)).collect()).collect(),
            }),
            FamilyWitness::F3(w) => FamilyWitness::F3(F3Witness {
                base: w.base.map(f),
                added: w.added.iter().map(|&(a, b)| (f(a), f(b))).collect(),
                case_tag: w.case_tag,
            }),
        }
    }
}

/// Walks a connected 2-regular induced subgraph starting at its lowest
/// vertex, stepping first to the lower of its two neighbors.
fn cycle_order(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let start = comp.first().expect("non-empty cycle");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).intersection(comp).first().expect("cycle vertex has neighbors");
    while cur != start {
        order.push(cur);
        let mut next = g.neighbors(cur).intersection(comp);
        next.remove(prev);
        prev = cur;
        cur = next.first().expect("2-regular");
    }
    order
}

/// If `comp` induces a path with endpoint `start`, its vertices from `start`.
fn path_from(g: &Graph, comp: VertexSet, start: usize) -> Option<Vec<usize>> {
    if g.edges_within(comp) + 1 != comp.len() {
        return None;
    }
    if comp.iter().any(|v| g.neighbors(v).intersection(comp).len() > 2) {
        return None;
    }
    if comp.len() > 1 && g.neighbors(start).intersection(comp).len() != 1 {
        return None;
    }
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).intersection(comp).difference(seen).first() {
        order.push(next);
        seen.insert(next);
        cur = next;
    }
    (seen == comp).then_some(order)
}

pub fn recognize_f2(g: &Graph) -> Option<F2Witness> {
    if !g.is_connected() {
        return None;
    }
    (0..g.n()).find_map(|s| f2_with_hub(g, s))
}

fn f2_with_hub(g: &Graph, s: usize) -> Option<F2Witness> {
    if g.degree(s) < 2 {
        return None;
    }
    let mut rest = g.vertices();
    rest.remove(s);
    if rest.is_empty() || !g.induces_cycle_union(rest) {
        return None;
    }
    let comps = g.components_within(rest);
    if comps.iter().any(|c| c.intersection(g.neighbors(s)).is_empty()) {
        return None;
    }
    Some(F2Witness {
        s,
        cycles: comps.iter().map(|&c| cycle_order(g, c)).collect(),
    })
}

/// All F1 witnesses, one per admissible choice of `w_k`, in increasing
/// order of `w_k`.
pub fn f1_witnesses(g: &Graph) -> Vec<F1Witness> {
    let n = g.n();
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if leaves.len() != 1 || g.min_degree() == 0 || !g.is_connected() {
        return Vec::new();
    }
    let s = leaves[0];
    (0..n).filter(|&t| t != s).filter_map(|t| f1_with_wk(g, s, t)).collect()
}

fn f1_with_wk(g: &Graph, s: usize, t: usize) -> Option<F1Witness> {
    if g.degree(t) < 2 {
        return None;
    }
    let mut rest = g.vertices();
    rest.remove(t);
    let comps = g.components_within(rest);
    let mut path = None;
    let mut cycles = Vec::new();
    for c in comps {
        if c.contains(s) {
            path = Some(path_from(g, c, s)?);
        } else {
            if !g.induces_cycle_union(c) || c.intersection(g.neighbors(t)).is_empty() {
                return None;
            }
            cycles.push(cycle_order(g, c));
        }
    }
    let mut path = path?;
    let end = *path.last().unwrap();
    if !g.has_edge(t, end) {
        return None;
    }
    path.remove(0);
    path.push(t);
    let extra_edges = g
        .neighbors(t)
        .iter()
        .filter(|&x| x != end)
        .map(|x| (t, x))
        .collect();
    Some(F1Witness {
        s,
        path,
        cycles,
        extra_edges,
    })
}

pub fn recognize_f1(g: &Graph) -> Option<F1Witness> {
    f1_witnesses(g).into_iter().next()
}

pub fn recognize_f3(g: &Graph) -> Option<F3Witness> {
    if !g.is_connected() {
        return None;
    }
    for s in 0..g.n() {
        let d = g.degree(s);
        if d != 2 && d != 3 {
            continue;
        }
        for keep in g.neighbors(s) {
            let added: Vec<(usize, usize)> = g.neighbors(s).iter().filter(|&v| v != keep).map(|v| (s, v)).collect();
            let mut r = g.clone();
            for &(a, b) in &added {
                r.remove_edge(a, b);
            }
            for base in f1_witnesses(&r) {
                if base.s != s {
                    continue;
                }
                if let Some(w) = f3_case(&r, base, &added) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Neighbor of `x` that `x` points to in the F1 orientation besides `w_k`,
/// for each admissible circuit direction of the cycle containing `x`.
/// Returns `(target, cycle index, reversed)`; path vertices have a single
/// fixed target and no cycle.
fn designated_targets(base: &F1Witness, x: usize) -> Vec<(usize, Option<(usize, bool)>)> {
    if let Some(i) = base.path.iter().position(|&w| w == x) {
        // w_i points to w_{i-1}; w_1 points to s.
        let target = if i == 0 { base.s } else { base.path[i - 1] };
        return vec![(target, None)];
    }
    for (ci, cycle) in base.cycles.iter().enumerate() {
        if let Some(p) = cycle.iter().position(|&v| v == x) {
            let len = cycle.len();
            return vec![
                (cycle[(p + 1) % len], Some((ci, false))),
                (cycle[(p + len - 1) % len], Some((ci, true))),
            ];
        }
    }
    Vec::new()
}

fn with_directions(base: &F1Witness, dirs: &[(usize, bool)]) -> F1Witness {
    let mut w = base.clone();
    let mut dirs = dirs.to_vec();
    dirs.dedup();
    for &(ci, rev) in &dirs {
        if rev {
            let c = &mut w.cycles[ci];
            // Keep the first vertex, walk the other way round.
            c[1..].reverse();
        }
    }
    w
}

/// Checks the added edges at `s` against the F3 conditions for one F1
/// witness of `r`.
fn f3_case(r: &Graph, base: F1Witness, added: &[(usize, usize)]) -> Option<F3Witness> {
    let s = base.s;
    let targets: Vec<usize> = added.iter().map(|&(_, v)| v).collect();
    let done = |base: F1Witness, case_tag| {
        Some(F3Witness {
            base,
            added: added.to_vec(),
            case_tag,
        })
    };
    match targets.len() {
        1 => return done(base, F3Case::SingleEdge),
        2 => {}
        _ => return None,
    }
    let wk = base.wk();
    let k = base.k();
    let dwk = r.degree(wk);
    let d3 = base.wk_attachments();
    debug_assert_eq!(d3.len(), dwk - 1);
    debug_assert!(d3.iter().all(|&x| r.degree(x) == 3));
    let via_wk = k > 1 && targets.contains(&wk);
    let choices_for = |x: usize| designated_targets(&base, x);

    match dwk {
        d if d >= 4 => via_wk.then(|| F3Witness {
            base: base.clone(),
            added: added.to_vec(),
            case_tag: F3Case::DwkAtLeast4,
        }),
        3 => {
            if via_wk {
                return done(base, F3Case::Dwk3ViaWk);
            }
            let (x, y) = (d3[0], d3[1]);
            for (tx, dx) in choices_for(x) {
                for (ty, dy) in choices_for(y) {
                    // One circuit direction per cycle.
                    if let (Some((cx, rx)), Some((cy, ry))) = (dx, dy) {
                        if cx == cy && rx != ry {
                            continue;
                        }
                    }
                    let hit = (targets[0] == tx && targets[1] == ty) || (targets[0] == ty && targets[1] == tx);
                    if hit && tx != ty {
                        let dirs: Vec<(usize, bool)> = dx.into_iter().chain(dy).collect();
                        return done(with_directions(&base, &dirs), F3Case::Dwk3ViaXy);
                    }
                }
            }
            None
        }
        2 => {
            if via_wk {
                return done(base, F3Case::Dwk2ViaWk);
            }
            let x = d3[0];
            for (tx, dx) in choices_for(x) {
                if targets.contains(&tx) && tx != s {
                    let dirs: Vec<(usize, bool)> = dx.into_iter().collect();
                    return done(with_directions(&base, &dirs), F3Case::Dwk2ViaX);
                }
            }
            None
        }
        _ => None,
    }
}

/// Membership in F1 ∪ F2 ∪ F3, tried in that order.
pub fn recognize_theorem_class(g: &Graph) -> Option<FamilyWitness> {
    recognize_f1(g)
        .map(FamilyWitness::F1)
        .or_else(|| recognize_f2(g).map(FamilyWitness::F2))
        .or_else(|| recognize_f3(g).map(FamilyWitness::F3))
}

/// A graph made of disjoint cycles plus one component in F1 ∪ F2 ∪ F3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnionWitness {
    pub cycles: Vec<Vec<usize>>,
    pub core: FamilyWitness,
}

/// Structural side of the disconnected case: every component but exactly
/// one is a cycle and that one is in the theorem class. Witness vertices
/// use the labels of `g`.
pub fn recognize_theorem_class_union(g: &Graph) -> Option<UnionWitness> {
    let comps = g.components().components;
    let (cycle_comps, rest): (Vec<VertexSet>, Vec<VertexSet>) =
        comps.into_iter().partition(|&c| g.induces_cycle_union(c));
    let [core] = rest.as_slice() else {
        return None;
    };
    let (h, labels) = g.induced_subgraph(*core).ok()?;
    if !h.in_class_c() {
        return None;
    }
    let w = recognize_theorem_class(&h)?;
    Some(UnionWitness {
        cycles: cycle_comps.iter().map(|&c| cycle_order(g, c)).collect(),
        core: w.map(&|v| labels[v]),
    })
}

/// Cycle with a pendant path: connected, unicyclic, one vertex of degree 1,
/// one of degree 3, all others of degree 2.
pub fn recognize_f(g: &Graph) -> Option<FWitness> {
    if !g.is_connected() || g.m() != g.n() {
        return None;
    }
    let by_degree = |d: usize| (0..g.n()).filter(|&v| g.degree(v) == d).collect::<Vec<_>>();
    let (ones, threes) = (by_degree(1), by_degree(3));
    if ones.len() != 1 || threes.len() != 1 || ones.len() + threes.len() + by_degree(2).len() != g.n() {
        return None;
    }
    let attach = threes[0];
    let mut path = vec![ones[0]];
    let mut seen = VertexSet::singleton(ones[0]);
    while *path.last().unwrap() != attach {
        let next = g.neighbors(*path.last().unwrap()).difference(seen).first()?;
        seen.insert(next);
        path.push(next);
    }
    let mut cycle_set = g.vertices().difference(seen);
    cycle_set.insert(attach);
    let mut cycle = cycle_order(g, cycle_set);
    let p = cycle.iter().position(|&v| v == attach).unwrap();
    cycle.rotate_left(p);
    Some(FWitness { cycle, path, attach })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Result1Verdict {
    pub member: bool,
    pub f: Option<FWitness>,
    /// `K4`, `K2,3` or `K4-e` when matched.
    pub special: Option<&'static str>,
}

/// Membership in F ∪ {K4, K2,3, K4 - e}.
pub fn recognize_result1_class(g: &Graph) -> Result1Verdict {
    if let Some(f) = recognize_f(g) {
        return Result1Verdict {
            member: true,
            f: Some(f),
            special: None,
        };
    }
    let specials = [
        ("K4", named::complete(4)),
        ("K2,3", named::complete_bipartite(2, 3)),
        ("K4-e", named::k4_minus_e()),
    ];
    let special = specials
        .into_iter()
        .find(|(_, h)| g.n() == h.n() && is_isomorphic(g, h).unwrap_or(false))
        .map(|(name, _)| name);
    Result1Verdict {
        member: special.is_some(),
        f: None,
        special,
    }
}

/// Parameters for an F1 member: path length `k`, cycle components with the
/// number of their vertices joined to `w_k` (the first ones in cycle order),
/// and chords `w_i w_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct F1Params {
    pub k: usize,
    pub cycle_lengths: Vec<usize>,
    pub links: Vec<usize>,
    pub chords: Vec<usize>,
}

/// Builds an F1 member with `s = 0`, `w_i = i`, then the cycles in order.
pub fn generate_f1(p: &F1Params) -> Result<(Graph, F1Witness)> {
    let bad = |msg: String| Err(Error::InvalidParameters(msg));
    if p.k == 0 {
        return bad("path length k must be at least 1".into());
    }
    check_cycles(&p.cycle_lengths, &p.links)?;
    let mut chords = p.chords.clone();
    chords.sort_unstable();
    chords.dedup();
    if chords.len() != p.chords.len() {
        return bad("repeated chord".into());
    }
    if let Some(&c) = chords.iter().find(|&&c| c == 0 || c + 1 >= p.k) {
        return bad(format!("chord w_{c} w_k must satisfy 1 <= i <= k - 2"));
    }
    if chords.is_empty() && p.links.iter().sum::<usize>() == 0 {
        return bad("w_k needs an edge besides the path edge".into());
    }
    let n = 1 + p.k + p.cycle_lengths.iter().sum::<usize>();
    let mut g = Graph::empty(n)?;
    for i in 0..p.k {
        g.add_edge(i, i + 1)?;
    }
    let wk = p.k;
    for &c in &chords {
        g.add_edge(c, wk)?;
    }
    let cycles = add_cycles(&mut g, p.k + 1, &p.cycle_lengths, &p.links, wk)?;
    let extra_edges = g
        .neighbors(wk)
        .iter()
        .filter(|&x| x != wk - 1)
        .map(|x| (wk, x))
        .collect();
    let w = F1Witness {
        s: 0,
        path: (1..=p.k).collect(),
        cycles,
        extra_edges,
    };
    Ok((g, w))
}

fn check_cycles(lengths: &[usize], links: &[usize]) -> Result<()> {
    if lengths.len() != links.len() {
        return Err(Error::InvalidParameters("one link count per cycle required".into()));
    }
    for (&len, &l) in lengths.iter().zip(links) {
        if len < 3 {
            return Err(Error::InvalidParameters(format!("cycle length {len} < 3")));
        }
        if l == 0 || l > len {
            return Err(Error::InvalidParameters(format!("link count {l} outside 1..={len}")));
        }
    }
    Ok(())
}

fn add_cycles(g: &mut Graph, first: usize, lengths: &[usize], links: &[usize], hub: usize) -> Result<Vec<Vec<usize>>> {
    let mut next = first;
    let mut cycles = Vec::new();
    for (&len, &l) in lengths.iter().zip(links) {
        let cyc: Vec<usize> = (next..next + len).collect();
        for i in 0..len {
            g.add_edge(cyc[i], cyc[(i + 1) % len])?;
        }
        for &v in &cyc[..l] {
            g.add_edge(hub, v)?;
        }
        next += len;
        cycles.push(cyc);
    }
    Ok(cycles)
}

/// Builds an F2 member with hub `s = 0` and the cycles on `1..`.
pub fn generate_f2(cycle_lengths: &[usize], links: &[usize]) -> Result<(Graph, F2Witness)> {
    check_cycles(cycle_lengths, links)?;
    if cycle_lengths.is_empty() {
        return Err(Error::InvalidParameters("at least one cycle required".into()));
    }
    if links.iter().sum::<usize>() < 2 {
        return Err(Error::InvalidParameters("hub degree must be at least 2".into()));
    }
    let n = 1 + cycle_lengths.iter().sum::<usize>();
    let mut g = Graph::empty(n)?;
    let cycles = add_cycles(&mut g, 1, cycle_lengths, links, 0)?;
    Ok((g, F2Witness { s: 0, cycles }))
}

/// How the one or two extra edges at `s` are chosen for an F3 member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum F3Added {
    /// One edge from `s` to the given vertex.
    Single(usize),
    /// `s w_k` plus an edge to the given vertex.
    ViaWk(usize),
    /// Edges to the designated neighbors of the two degree-3 vertices.
    ViaXy,
    /// Edge to the designated neighbor of the single degree-3 vertex plus an
    /// edge to the given vertex.
    ViaX(usize),
    /// Two explicit endpoints.
    Explicit(usize, usize),
}

/// Builds `R` from `base`, adds the requested edges at `s`, and checks the
/// F3 conditions against the generator's own F1 witness of `R`.
pub fn generate_f3(base: &F1Params, added: &F3Added) -> Result<(Graph, F3Witness)> {
    let (r, w) = generate_f1(base)?;
    let (s, wk) = (w.s, w.wk());
    let designated = |x: usize| designated_targets(&w, x).first().map(|&(t, _)| t);
    let attachments = w.wk_attachments();
    let targets: Vec<usize> = match *added {
        F3Added::Single(v) => vec![v],
        F3Added::ViaWk(v) => vec![wk, v],
        F3Added::ViaXy => {
            let [x, y] = attachments[..] else {
                return Err(Error::InvalidParameters(format!(
                    "via-xy needs d(w_k) = 3, got {}",
                    attachments.len() + 1
                )));
            };
            vec![designated(x).unwrap(), designated(y).unwrap()]
        }
        F3Added::ViaX(v) => {
            let [x] = attachments[..] else {
                return Err(Error::InvalidParameters(format!(
                    "via-x needs d(w_k) = 2, got {}",
                    attachments.len() + 1
                )));
            };
            vec![designated(x).unwrap(), v]
        }
        F3Added::Explicit(a, b) => vec![a, b],
    };
    let mut g = r.clone();
    let mut edges = Vec::new();
    for &t in &targets {
        if t >= g.n() {
            return Err(Error::InvalidParameters(format!("vertex {t} out of range")));
        }
        g.add_edge(s, t)
            .map_err(|e| Error::InvalidParameters(format!("edge {s}-{t}: {e}")))?;
        edges.push((s, t));
    }
    edges.sort_unstable();
    let witness = f3_case(&r, w, &edges)
        .ok_or_else(|| Error::InvalidParameters("added edges violate the F3 case conditions".into()))?;
    Ok((g, witness))
}

fn f1_arcs(w: &F1Witness, arcs: &mut Vec<(usize, usize)>) {
    let mut prev = w.s;
    for &v in &w.path {
        arcs.push((v, prev));
        prev = v;
    }
    circuit_arcs(&w.cycles, arcs);
    arcs.extend(w.extra_edges.iter().map(|&(wk, x)| (x, wk)));
}

fn circuit_arcs(cycles: &[Vec<usize>], arcs: &mut Vec<(usize, usize)>) {
    for c in cycles {
        for i in 0..c.len() {
            arcs.push((c[i], c[(i + 1) % c.len()]));
        }
    }
}

/// Extremal orientation read off a witness.
///
/// F2: cycles as circuits, every hub edge into `s`. F1: the path directed
/// `w_k -> .. -> w_1 -> s`, cycles as circuits, every other edge into `w_k`.
/// F3: the F1 orientation of the base with the added edges out of `s`.
pub fn extremal_orientation_for(g: &Graph, w: &FamilyWitness) -> Result<Orientation> {
    let mut arcs = Vec::new();
    match w {
        FamilyWitness::F2(w) => {
            circuit_arcs(&w.cycles, &mut arcs);
            for c in &w.cycles {
                for &v in c {
                    if v < g.n() && g.has_edge(v, w.s) {
                        arcs.push((v, w.s));
                    }
                }
            }
        }
        FamilyWitness::F1(w) => f1_arcs(w, &mut arcs),
        FamilyWitness::F3(w) => {
            f1_arcs(&w.base, &mut arcs);
            for &(s, v) in &w.added {
                if s != w.base.s {
                    return Err(Error::InvalidWitness("added edge not at s".into()));
                }
                arcs.push((s, v));
            }
        }
    }
    Orientation::from_arcs(g, &arcs).map_err(|e| Error::InvalidWitness(e.to_string()))
}

/// A named graph together with the orientations drawn for it.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub orientations: Vec<(&'static str, Orientation)>,
}

/// `fig8`, `fig9(k)`, `k4`, `k23`, `k4_minus_e`, `paw`, `petersen`,
/// `cycle(n)`. Parameters may also be written `fig9:5`.
pub fn fixture(name: &str) -> Result<Fixture> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let (base, arg) = match name.find(['(', ':']) {
        Some(i) => {
            let arg = name[i + 1..].trim_end_matches(')');
            (&name[..i], Some(arg.parse::<usize>().map_err(|_| unknown())?))
        }
        None => (name, None),
    };
    let plain = |graph: Graph| Fixture {
        name: name.to_string(),
        graph,
        orientations: Vec::new(),
    };
    match (base, arg) {
        ("fig8", None) => fig8(),
        ("fig9", Some(k)) => fig9(k),
        ("k4", None) => Ok(plain(named::complete(4))),
        ("k23", None) => Ok(plain(named::complete_bipartite(2, 3))),
        ("k4_minus_e", None) => Ok(plain(named::k4_minus_e())),
        ("paw", None) => Ok(plain(named::paw())),
        ("petersen", None) => Ok(plain(named::petersen())),
        ("cycle", Some(n)) if (3..=64).contains(&n) => Ok(plain(named::cycle(n))),
        ("cycle", Some(n)) => Err(Error::InvalidParameters(format!("cycle length {n} outside 3..=64"))),
        _ => Err(unknown()),
    }
}

/// Hub 0 joined to every vertex of C3 (1-3), C4 (4-7) and C4 (8-11).
fn fig8() -> Result<Fixture> {
    let (g, w) = generate_f2(&[3, 4, 4], &[3, 4, 4])?;
    let left = extremal_orientation_for(&g, &FamilyWitness::F2(w.clone()))?;
    // Every hub edge out of s except the one at 11, which points into s.
    let mut arcs = Vec::new();
    circuit_arcs(&w.cycles, &mut arcs);
    for v in 1..12 {
        arcs.push(if v == 11 { (11, 0) } else { (0, v) });
    }
    let right = Orientation::from_arcs(&g, &arcs)?;
    Ok(Fixture {
        name: "fig8".into(),
        graph: g,
        orientations: vec![("left", left), ("right", right)],
    })
}

/// Path `s = 0, w_1 = 1, .., w_k = k` plus chords `w_i w_k`, `1 <= i <= k-2`.
fn fig9(k: usize) -> Result<Fixture> {
    if !(3..=63).contains(&k) {
        return Err(Error::InvalidParameters(format!("fig9 needs 3 <= k <= 63, got {k}")));
    }
    let (g, w) = generate_f1(&F1Params {
        k,
        chords: (1..=k - 2).collect(),
        ..F1Params::default()
    })?;
    let left = extremal_orientation_for(&g, &FamilyWitness::F1(w))?;
    // Same path; w_1 -> w_k, and w_k -> w_i for the other chords.
    let mut arcs: Vec<(usize, usize)> = (1..=k).map(|i| (i, i - 1)).collect();
    arcs.push((1, k));
    arcs.extend((2..=k - 2).map(|i| (k, i)));
    let right = Orientation::from_arcs(&g, &arcs)?;
    Ok(Fixture {
        name: format!("fig9({k})"),
        graph: g,
        orientations: vec![("left", left), ("right", right)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{gamma_t, minimal_total_dominating_sets};

    #[test]
    fn f2_examples() {
        let k4 = named::complete(4);
        let w = recognize_f2(&k4).unwrap();
        assert_eq!(w.s, 0);
        assert_eq!(w.cycles, [vec![1, 2, 3]]);
        assert!(recognize_f2(&fixture("fig8").unwrap().graph).is_some());
        assert!(recognize_f2(&named::cycle(5)).is_none());
        assert!(recognize_f2(&named::complete_bipartite(2, 3)).is_some());
        assert!(recognize_f2(&named::k4_minus_e()).is_some());
    }

    #[test]
    fn paw_is_f1_through_a_chord() {
        let w = recognize_f1(&named::paw()).unwrap();
        assert_eq!(w.s, 0);
        assert_eq!(w.k(), 3);
        assert!(w.cycles.is_empty());
        // w_k is the lower of the two triangle vertices off the path.
        assert_eq!(w.path, [1, 3, 2]);
        assert_eq!(w.extra_edges, [(2, 1)]);
        assert_eq!(f1_witnesses(&named::paw()).len(), 2);
    }

    #[test]
    fn f1_examples() {
        let fig9 = fixture("fig9(5)").unwrap().graph;
        let w = recognize_f1(&fig9).unwrap();
        assert!(w.cycles.is_empty());
        assert_eq!(w.path, [1, 2, 3, 4, 5]);
        assert!(recognize_f1(&named::complete(4)).is_none());
        // Cycle plus a two-edge pendant path: k = 1 with one cycle.
        let (g, _) = generate_f1(&F1Params { k: 1, cycle_lengths: vec![3], links: vec![1], chords: vec![] }).unwrap();
        let w = recognize_f1(&g).unwrap();
        assert_eq!((w.k(), w.cycles.len()), (1, 1));
        assert!(recognize_f(&g).is_some());
    }

    #[test]
    fn f3_negative_examples() {
        assert!(recognize_f3(&named::paw()).is_none());
        assert!(recognize_f3(&named::cycle(4)).is_none());
        assert!(recognize_theorem_class(&named::petersen()).is_none());
    }

    fn fig7_base() -> F1Params {
        F1Params { k: 4, cycle_lengths: vec![4, 4], links: vec![1, 1], chords: vec![] }
    }

    #[test]
    fn fig7_graphs() {
        let (left, wl) = generate_f3(&fig7_base(), &F3Added::ViaWk(2)).unwrap();
        assert_eq!(wl.case_tag, F3Case::Dwk3ViaWk);
        let (right, wr) = generate_f3(&fig7_base(), &F3Added::ViaXy).unwrap();
        assert_eq!(wr.case_tag, F3Case::Dwk3ViaXy);
        // Cycles 5-8 and 9-12, linked at 5 and 9; s joins 6 and 10.
        assert_eq!(wr.added, [(0, 6), (0, 10)]);
        for (g, w) in [(left, wl), (right, wr)] {
            let found = recognize_f3(&g).expect("F3 member");
            assert!(recognize_f1(&g).is_none());
            assert!(recognize_f2(&g).is_none());
            let d = extremal_orientation_for(&g, &FamilyWitness::F3(w)).unwrap();
            assert_eq!(gamma_t(&d).unwrap().size, g.n() - 1);
            let d = extremal_orientation_for(&g, &FamilyWitness::F3(found)).unwrap();
            assert_eq!(gamma_t(&d).unwrap().size, g.n() - 1);
        }
    }

    #[test]
    fn designated_pair_on_one_cycle() {
        // x and y share a C5; only the reversed circuit fits the added edges.
        let g = crate::graph6::parse_graph6("F@vV?").unwrap();
        let w = recognize_f3(&g).unwrap();
        assert_eq!(w.case_tag, F3Case::Dwk3ViaXy);
        let d = extremal_orientation_for(&g, &FamilyWitness::F3(w)).unwrap();
        assert_eq!(gamma_t(&d).unwrap().size, 6);
    }

    #[test]
    fn designated_neighbors_need_one_direction_per_cycle() {
        // Matches only if x and y pick opposite directions around their
        // common cycle; no extremal orientation exists.
        let g = crate::graph6::parse_graph6("ELv_").unwrap();
        assert!(recognize_theorem_class(&g).is_none());
        assert!(crate::orientations::exists_extremal_orientation(&g).unwrap().orientation.is_none());
    }

    #[test]
    fn f3_rejects_bad_cases() {
        // d(w_k) = 3 but neither s w_k nor the designated pair.
        assert!(generate_f3(&fig7_base(), &F3Added::Explicit(2, 3)).is_err());
        // Parallel edge to w_1.
        assert!(generate_f3(&fig7_base(), &F3Added::Single(1)).is_err());
        // via-xy on a graph with d(w_k) = 2.
        let p = F1Params { k: 2, cycle_lengths: vec![3], links: vec![1], chords: vec![] };
        assert!(generate_f3(&p, &F3Added::ViaXy).is_err());
        // d(w_k) >= 4 demands s w_k.
        let p = F1Params { k: 3, cycle_lengths: vec![3, 3], links: vec![2, 1], chords: vec![] };
        assert!(generate_f3(&p, &F3Added::Explicit(5, 7)).is_err());
        let (_, w) = generate_f3(&p, &F3Added::ViaWk(5)).unwrap();
        assert_eq!(w.case_tag, F3Case::DwkAtLeast4);
    }

    #[test]
    fn single_edge_to_cycle_vertex() {
        let p = F1Params { k: 2, cycle_lengths: vec![4], links: vec![2], chords: vec![] };
        let (g, w) = generate_f3(&p, &F3Added::Single(5)).unwrap();
        assert_eq!(w.case_tag, F3Case::SingleEdge);
        assert!(recognize_theorem_class(&g).is_some());
    }

    #[test]
    fn generators_match_named_graphs() {
        let (k4, _) = generate_f2(&[3], &[3]).unwrap();
        assert_eq!(k4, named::complete(4));
        let fig8 = fixture("fig8").unwrap().graph;
        assert_eq!((fig8.n(), fig8.m()), (12, 22));
        let (f9, _) = generate_f1(&F1Params { k: 5, chords: vec![1, 2, 3], ..Default::default() }).unwrap();
        assert_eq!(f9, fixture("fig9:5").unwrap().graph);
        assert_eq!((f9.n(), f9.m()), (6, 8));
        let (g, _) = generate_f1(&F1Params { k: 3, cycle_lengths: vec![4, 4], links: vec![1, 1], chords: vec![] }).unwrap();
        assert_eq!(g.n(), 12);
        assert!(recognize_f1(&g).is_some());
        let (g, _) = generate_f2(&[5], &[2]).unwrap();
        assert_eq!(g.n(), 6);
        assert!(recognize_f2(&g).is_some());
        let (paw, _) = generate_f1(&F1Params { k: 3, chords: vec![1], ..Default::default() }).unwrap();
        assert_eq!(paw, named::paw());
    }

    #[test]
    fn generator_parameter_errors() {
        assert!(generate_f1(&F1Params { k: 0, ..Default::default() }).is_err());
        assert!(generate_f1(&F1Params { k: 4, chords: vec![3], ..Default::default() }).is_err());
        assert!(generate_f1(&F1Params { k: 4, ..Default::default() }).is_err());
        assert!(generate_f1(&F1Params { k: 1, cycle_lengths: vec![2], links: vec![1], chords: vec![] }).is_err());
        assert!(generate_f2(&[3], &[1]).is_err());
        assert!(generate_f2(&[3], &[4]).is_err());
        assert!(generate_f2(&[3, 3], &[1]).is_err());
    }

    #[test]
    fn fixtures_and_their_orientations() {
        let f8 = fixture("fig8").unwrap();
        let sizes: Vec<usize> = f8.orientations.iter().map(|(_, d)| gamma_t(d).unwrap().size).collect();
        assert_eq!(sizes, [11, 3]);
        let left = &f8.orientations[0].1;
        let mut all_but_s = f8.graph.vertices();
        all_but_s.remove(0);
        assert_eq!(minimal_total_dominating_sets(left).unwrap(), [all_but_s]);
        let right = &f8.orientations[1].1;
        assert!(crate::domination::is_total_dominating(right, VertexSet::from_vertices([0, 10, 11])));

        let f9 = fixture("fig9(5)").unwrap();
        let sizes: Vec<usize> = f9.orientations.iter().map(|(_, d)| gamma_t(d).unwrap().size).collect();
        assert_eq!(sizes, [5, 3]);
        let gray = VertexSet::from_vertices([1, 2, 5]);
        assert!(minimal_total_dominating_sets(&f9.orientations[1].1).unwrap().contains(&gray));

        assert_eq!(fixture("cycle(5)").unwrap().graph, named::cycle(5));
        assert!(matches!(fixture("dodecahedron"), Err(Error::UnknownFixture(_))));
        assert!(fixture("cycle(2)").is_err());
        assert!(fixture("fig9(2)").is_err());
    }

    #[test]
    fn result1_class() {
        assert!(recognize_result1_class(&named::paw()).member);
        assert_eq!(recognize_result1_class(&named::complete_bipartite(2, 3)).special, Some("K2,3"));
        assert!(!recognize_result1_class(&named::cycle(6)).member);
        let f = recognize_f(&named::paw()).unwrap();
        assert_eq!(f.attach, 1);
        assert_eq!(f.path, [0, 1]);
        assert_eq!(f.cycle.len(), 3);
    }

    #[test]
    fn union_wrapper() {
        let g = named::cycle(3).disjoint_union(&named::paw()).unwrap();
        let w = recognize_theorem_class_union(&g).unwrap();
        assert_eq!(w.cycles, [vec![0, 1, 2]]);
        match w.core {
            FamilyWitness::F1(f) => assert_eq!(f.s, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(recognize_theorem_class_union(&named::cycle(3).disjoint_union(&named::cycle(4)).unwrap()).is_none());
        assert!(recognize_theorem_class_union(&named::paw().disjoint_union(&named::paw()).unwrap()).is_none());
    }

    #[test]
    fn witness_json() {
        let w = FamilyWitness::F2(recognize_f2(&named::complete(4)).unwrap());
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"family":"F2","s":0,"cycles":[[1,2,3]]}"#);
        let (_, w3) = generate_f3(&fig7_base(), &F3Added::ViaXy).unwrap();
        let v = serde_json::to_value(FamilyWitness::F3(w3)).unwrap();
        assert_eq!(v["case_tag"], "dwk3-via-xy");
        assert_eq!(v["added"], serde_json::json!([[0, 6], [0, 10]]));
    }

    #[test]
    fn bad_witness_is_rejected() {
        let w = FamilyWitness::F2(recognize_f2(&named::complete(4)).unwrap());
        assert!(matches!(extremal_orientation_for(&named::cycle(4), &w), Err(Error::InvalidWitness(_))));
    }
}
