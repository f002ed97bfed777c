//! Exhaustive and randomized cross-checks of the structural recognizers
//! against brute force, with JSON-lines reports.

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::domination::gamma_t;
use crate::enumerate::{enumerate_graphs, ENUMERATION_LIMIT};
use crate::error::{check_budget, Error, Result};
use crate::families::{
    extremal_orientation_for, fixture, recognize_result1_class, recognize_theorem_class,
    recognize_theorem_class_union,
};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::orientations::{domt_range, exists_extremal_orientation, verify_extremal_necessary_conditions, OrientationSearchStats};

/// Largest built-in enumeration size that runs without an explicit opt-in.
pub const DEFAULT_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Main,
    Result1,
    Result2,
    Concomp,
    Disconnected,
    Gap,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Main,
        Theorem::Result1,
        Theorem::Result2,
        Theorem::Concomp,
        Theorem::Disconnected,
        Theorem::Gap,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::Result1 => "result1",
            Theorem::Result2 => "result2",
            Theorem::Concomp => "concomp",
            Theorem::Disconnected => "disconnected",
            Theorem::Gap => "gap",
        }
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub recognizer_verdict: Option<String>,
    pub bruteforce_verdict: bool,
    pub domt_upper: Option<usize>,
    pub domt_lower: Option<usize>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationRecord {
    fn new(g: &Graph, recognizer: Option<String>, bruteforce: bool) -> Self {
        VerificationRecord {
            graph6: to_graph6(g),
            n: g.n(),
            m: g.m(),
            agree: recognizer.is_some() == bruteforce,
            recognizer_verdict: recognizer,
            bruteforce_verdict: bruteforce,
            domt_upper: None,
            domt_lower: None,
            note: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub graph_count: usize,
    /// Graphs in the source that fail the pipeline's precondition.
    pub skipped: usize,
    pub positives: usize,
    pub mismatches: Vec<VerificationRecord>,
    /// Failures of side invariants: a found extremal orientation violating
    /// a necessary condition, or a constructed one missing `n - 1`.
    pub invariant_failures: Vec<String>,
    /// Lower orientable numbers checked against the universal bound 3.
    pub lower_bound_checks: usize,
    pub prune_stats: OrientationSearchStats,
    #[serde(skip)]
    pub records: Vec<VerificationRecord>,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.invariant_failures.is_empty()
    }

    /// Summary object; wall time is left out when `timing` is false so that
    /// report files are reproducible.
    pub fn summary(&self, timing: bool) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["ok"] = json!(self.ok());
        if timing {
            v["wall_time_ms"] = json!(self.wall_time_ms as u64);
        }
        v
    }

    /// One record per line followed by `{"summary": ...}`.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for r in &self.records {
            writeln!(w, "{}", serde_json::to_string(r).expect("serializable"))?;
        }
        writeln!(w, "{}", json!({ "summary": self.summary(false) }))?;
        Ok(())
    }

    /// `graph6,n,m,dom_t,DOM_t,family_tag`; absent values are empty.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "graph6,n,m,dom_t,DOM_t,family_tag")?;
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        for r in &self.records {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                r.graph6,
                r.n,
                r.m,
                opt(r.domt_lower),
                opt(r.domt_upper),
                r.recognizer_verdict.as_deref().unwrap_or("")
            )?;
        }
        Ok(())
    }
}

/// Graphs paired with an optional claimed classification.
type ClaimedGraphs = Vec<(Graph, Option<String>)>;

/// Where the graphs come from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Every isomorphism class on `1..=max_n` vertices.
    Builtin { max_n: usize },
    Graphs(Vec<Graph>),
    /// Graphs with a recorded classification that replaces the recognizer's
    /// verdict: a family tag, or `none`.
    Claimed(Vec<(Graph, Option<String>)>),
}

impl GraphSource {
    /// One graph per line, optionally followed by a claimed classification.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn from_graph6_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut entries = Vec::new();
        let mut claimed = false;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let code = parts.next().expect("non-empty line");
            let g = parse_graph6(code).map_err(|e| Error::Io(format!("{}:{}: {e}", path.display(), i + 1)))?;
            let claim = parts.next().map(str::to_string);
            claimed |= claim.is_some();
            entries.push((g, claim));
        }
        Ok(if claimed {
            GraphSource::Claimed(entries)
        } else {
            GraphSource::Graphs(entries.into_iter().map(|(g, _)| g).collect())
        })
    }

    /// Graphs passing `keep` with their claims, plus the number dropped.
    fn collect(&self, keep: impl Fn(&Graph) -> bool + Copy) -> Result<(ClaimedGraphs, usize)> {
        let filter = |gs: ClaimedGraphs| {
            let total = gs.len();
            let kept: Vec<_> = gs.into_iter().filter(|(g, _)| keep(g)).collect();
            let skipped = total - kept.len();
            (kept, skipped)
        };
        match self {
            GraphSource::Builtin { max_n } => {
                check_budget("built-in enumeration vertex", ENUMERATION_LIMIT, *max_n)?;
                let mut out = Vec::new();
                for n in 1..=*max_n {
                    out.extend(enumerate_graphs(n, keep)?.map(|g| (g, None)));
                }
                Ok((out, 0))
            }
            GraphSource::Graphs(gs) => Ok(filter(gs.iter().map(|g| (g.clone(), None)).collect())),
            GraphSource::Claimed(gs) => Ok(filter(gs.clone())),
        }
    }
}

/// Per-graph outcome before aggregation.
struct Outcome {
    record: VerificationRecord,
    stats: OrientationSearchStats,
    failures: Vec<String>,
    lower_bound_checks: usize,
}

impl Outcome {
    fn plain(record: VerificationRecord) -> Self {
        Outcome {
            record,
            stats: OrientationSearchStats::default(),
            failures: Vec::new(),
            lower_bound_checks: 0,
        }
    }
}

fn run<F>(
    theorem: Theorem,
    graphs: ClaimedGraphs,
    skipped: usize,
    workers: usize,
    eval: F,
) -> Result<VerificationReport>
where
    F: Fn(&Graph) -> Result<Outcome> + Sync,
{
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        graphs
            .par_iter()
            .map(|(g, claim)| {
                let mut o = eval(g)?;
                if let Some(c) = claim {
                    let r = &mut o.record;
                    r.recognizer_verdict = (c != "none").then(|| c.clone());
                    r.agree = r.recognizer_verdict.is_some() == r.bruteforce_verdict;
                    r.note = Some("claimed".into());
                }
                Ok(o)
            })
            .collect::<Result<_>>()
    })?;
    let mut report = VerificationReport {
        theorem,
        graph_count: outcomes.len(),
        skipped,
        positives: 0,
        mismatches: Vec::new(),
        invariant_failures: Vec::new(),
        lower_bound_checks: 0,
        prune_stats: OrientationSearchStats::default(),
        records: Vec::with_capacity(outcomes.len()),
        wall_time_ms: 0,
    };
    for o in outcomes {
        report.prune_stats.merge(&o.stats);
        report.invariant_failures.extend(o.failures);
        report.lower_bound_checks += o.lower_bound_checks;
        if o.record.bruteforce_verdict {
            report.positives += 1;
        }
        if !o.record.agree {
            report.mismatches.push(o.record.clone());
        }
        report.records.push(o.record);
    }
    report.wall_time_ms = start.elapsed().as_millis();
    Ok(report)
}

fn connected_class_c(g: &Graph) -> bool {
    g.is_connected() && g.in_class_c()
}

/// Lower number at least 3, as every valid orientation needs three
/// dominators.
fn check_lower_bound(g: &Graph, lower: usize, failures: &mut Vec<String>) {
    if lower < 3 {
        failures.push(format!("{}: dom_t = {lower} < 3", to_graph6(g)));
    }
}

/// Theorem-class recognizer against the existence of an extremal
/// orientation, on connected class-C graphs. Cycles are negative on both
/// sides without search.
pub fn verify_theorem_main(source: &GraphSource, workers: usize) -> Result<VerificationReport> {
    let (graphs, skipped) = source.collect(connected_class_c)?;
    run(Theorem::Main, graphs, skipped, workers, |g| {
        let witness = recognize_theorem_class(g);
        let mut failures = Vec::new();
        let tag = witness.as_ref().map(|w| w.tag().to_string());
        if g.is_cycle() {
            let mut record = VerificationRecord::new(g, tag, false);
            record.domt_upper = Some(g.n());
            record.note = Some("cycle".into());
            return Ok(Outcome::plain(record));
        }
        let search = exists_extremal_orientation(g)?;
        if let Some(d) = &search.orientation {
            let violated = verify_extremal_necessary_conditions(d)?;
            if !violated.is_empty() {
                failures.push(format!("{}: extremal orientation violates {violated:?}", to_graph6(g)));
            }
            if gamma_t(d)?.size != g.n() - 1 {
                failures.push(format!("{}: search returned a non-extremal orientation", to_graph6(g)));
            }
        }
        if let Some(w) = &witness {
            let d = extremal_orientation_for(g, w)?;
            if gamma_t(&d)?.size != g.n() - 1 {
                failures.push(format!("{}: constructed orientation for {} is not extremal", to_graph6(g), w.tag()));
            }
        }
        let positive = search.orientation.is_some();
        let mut record = VerificationRecord::new(g, tag, positive);
        if positive {
            record.domt_upper = Some(g.n() - 1);
        }
        Ok(Outcome {
            record,
            stats: search.stats,
            failures,
            lower_bound_checks: 0,
        })
    })
}

/// Cycle-with-pendant-path class plus K4, K2,3, K4 - e against
/// `dom_t = n - 1`.
pub fn verify_result1(source: &GraphSource, workers: usize) -> Result<VerificationReport> {
    let (graphs, skipped) = source.collect(connected_class_c)?;
    run(Theorem::Result1, graphs, skipped, workers, |g| {
        let range = domt_range(g)?;
        let verdict = recognize_result1_class(g);
        let tag = verdict.member.then(|| verdict.special.unwrap_or("F").to_string());
        let mut record = VerificationRecord::new(g, tag, range.lower == g.n() - 1);
        record.domt_lower = Some(range.lower);
        record.domt_upper = Some(range.upper);
        let mut out = Outcome::plain(record);
        check_lower_bound(g, range.lower, &mut out.failures);
        out.lower_bound_checks = 1;
        Ok(out)
    })
}

/// Disjoint unions of cycles against `DOM_t = n`, on all class-C graphs.
pub fn verify_result2(source: &GraphSource, workers: usize) -> Result<VerificationReport> {
    let (graphs, skipped) = source.collect(Graph::in_class_c)?;
    run(Theorem::Result2, graphs, skipped, workers, |g| {
        let range = domt_range(g)?;
        let tag = g.is_disjoint_union_of_cycles().then(|| "cycles".to_string());
        let mut record = VerificationRecord::new(g, tag, range.upper == g.n());
        record.domt_lower = Some(range.lower);
        record.domt_upper = Some(range.upper);
        let mut out = Outcome::plain(record);
        check_lower_bound(g, range.lower, &mut out.failures);
        out.lower_bound_checks = 1;
        Ok(out)
    })
}

/// Cycles plus one theorem-class component against `DOM_t = n - 1`, on
/// disconnected class-C graphs.
pub fn verify_disconnected_main(source: &GraphSource, workers: usize) -> Result<VerificationReport> {
    let (graphs, skipped) = source.collect(|g| !g.is_connected() && g.in_class_c())?;
    run(Theorem::Disconnected, graphs, skipped, workers, |g| {
        let range = domt_range(g)?;
        let tag = recognize_theorem_class_union(g).map(|w| format!("cycles+{}", w.core.tag()));
        let mut record = VerificationRecord::new(g, tag, range.upper == g.n() - 1);
        record.domt_lower = Some(range.lower);
        record.domt_upper = Some(range.upper);
        let mut out = Outcome::plain(record);
        check_lower_bound(g, range.lower, &mut out.failures);
        out.lower_bound_checks = 1;
        Ok(out)
    })
}

/// Largest total edge count of a random union in [`verify_concomp`].
pub const CONCOMP_EDGE_LIMIT: usize = 16;

/// Random connected class-C graph: a random spanning tree plus
/// `extra` further edges.
pub fn random_class_c<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    assert!(n >= 3 && extra >= 1 && n - 1 + extra <= n * (n - 1) / 2);
    let mut g = Graph::empty(n).expect("n in range");
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v).expect("fresh edge");
    }
    let mut added = 0;
    while added < extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).expect("fresh edge");
            added += 1;
        }
    }
    g
}

/// Additivity of the upper number over two-component unions, on `trials`
/// seeded random pairs with total vertex count at most `max_total_n`.
pub fn verify_concomp(trials: usize, max_total_n: usize, seed: u64, workers: usize) -> Result<VerificationReport> {
    if max_total_n < 6 {
        return Err(Error::InvalidParameters("two components need at least 6 vertices".into()));
    }
    check_budget("concomp total vertex", 16, max_total_n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(trials);
    while pairs.len() < trials {
        let n1 = rng.gen_range(3..=max_total_n - 3);
        let n2 = rng.gen_range(3..=max_total_n - n1);
        let e1 = rng.gen_range(1..=3.min(n1 * (n1 - 1) / 2 - n1 + 1));
        let e2 = rng.gen_range(1..=3.min(n2 * (n2 - 1) / 2 - n2 + 1));
        if n1 + e1 - 1 + n2 + e2 - 1 > CONCOMP_EDGE_LIMIT {
            continue;
        }
        let a = random_class_c(&mut rng, n1, e1);
        let b = random_class_c(&mut rng, n2, e2);
        pairs.push((a, b));
    }
    let unions: Vec<Graph> = pairs.iter().map(|(a, b)| a.disjoint_union(b)).collect::<Result<_>>()?;
    let unions = unions.into_iter().map(|g| (g, None)).collect();
    run(Theorem::Concomp, unions, 0, workers, |u| {
        let parts = u.components().components;
        let [c1, c2] = parts[..] else {
            return Err(Error::Precondition("expected two components".into()));
        };
        let (a, _) = u.induced_subgraph(c1)?;
        let (b, _) = u.induced_subgraph(c2)?;
        let (ra, rb, ru) = (domt_range(&a)?, domt_range(&b)?, domt_range(u)?);
        let sum = ra.upper + rb.upper;
        let mut record = VerificationRecord::new(u, Some(format!("sum={sum}")), ru.upper == sum);
        record.domt_upper = Some(ru.upper);
        record.domt_lower = Some(ru.lower);
        record.note = Some(format!("{} + {}", ra.upper, rb.upper));
        let mut out = Outcome::plain(record);
        for (g, lower) in [(&a, ra.lower), (&b, rb.lower), (u, ru.lower)] {
            check_lower_bound(g, lower, &mut out.failures);
            out.lower_bound_checks += 1;
        }
        Ok(out)
    })
}

/// One row of the gap survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapRow {
    pub name: String,
    pub n: usize,
    pub dom_t: usize,
    #[serde(rename = "DOM_t")]
    pub domt_upper: usize,
    /// `enumeration` or `certified`.
    pub method: &'static str,
}

/// Exact `(n, dom_t, DOM_t)` for named fixtures.
///
/// `fig8` is certified instead of enumerated: its drawn orientations have
/// total domination numbers 11 and 3, every valid orientation has at least
/// 3, and only cycle unions reach `n`.
pub fn gap_row(name: &str) -> Result<GapRow> {
    let f = fixture(name)?;
    let g = &f.graph;
    if name == "fig8" {
        let sizes: Vec<usize> = f
            .orientations
            .iter()
            .map(|(_, d)| gamma_t(d).map(|s| s.size))
            .collect::<Result<_>>()?;
        let (hi, lo) = (sizes[0], sizes[1]);
        let cap = if g.is_disjoint_union_of_cycles() { g.n() } else { g.n() - 1 };
        if lo != 3 || hi != cap {
            return Err(Error::Precondition(format!("fig8 certificate failed: {sizes:?}")));
        }
        return Ok(GapRow {
            name: f.name,
            n: g.n(),
            dom_t: lo,
            domt_upper: hi,
            method: "certified",
        });
    }
    let r = domt_range(g)?;
    Ok(GapRow {
        name: f.name,
        n: g.n(),
        dom_t: r.lower,
        domt_upper: r.upper,
        method: "enumeration",
    })
}

pub fn gap_survey(names: &[String]) -> Result<Vec<GapRow>> {
    names.iter().map(|n| gap_row(n)).collect()
}

/// Expected values for the built-in gap instances.
fn gap_expectation(name: &str, n: usize) -> Option<(Option<usize>, usize)> {
    if name == "fig8" {
        return Some((Some(3), 11));
    }
    let k: usize = name.strip_prefix("fig9(")?.strip_suffix(')')?.parse().ok()?;
    debug_assert_eq!(n, k + 1);
    // fig9(3) is the paw; its lower number is computed, not predicted.
    Some(((k >= 4).then_some(3), k))
}

/// Gap survey over `fig9(3..=6)` and `fig8`, checked against the expected
/// values.
pub fn verify_gap(workers: usize) -> Result<VerificationReport> {
    let names: Vec<String> = (3..=6).map(|k| format!("fig9({k})")).chain(["fig8".to_string()]).collect();
    let graphs: Vec<Graph> = names.iter().map(|n| fixture(n).map(|f| f.graph)).collect::<Result<_>>()?;
    let by_code: Vec<(String, String)> = names.iter().cloned().zip(graphs.iter().map(to_graph6)).collect();
    let graphs = graphs.into_iter().map(|g| (g, None)).collect();
    run(Theorem::Gap, graphs, 0, workers, |g| {
        let code = to_graph6(g);
        let name = &by_code.iter().find(|(_, c)| *c == code).expect("fixture").0;
        let row = gap_row(name)?;
        let (lo, hi) = gap_expectation(name, row.n).expect("built-in instance");
        let matches = row.domt_upper == hi && lo.is_none_or(|lo| row.dom_t == lo);
        let mut record = VerificationRecord::new(g, Some(row.name.clone()), matches);
        record.domt_lower = Some(row.dom_t);
        record.domt_upper = Some(row.domt_upper);
        record.note = Some(row.method.to_string());
        let mut out = Outcome::plain(record);
        check_lower_bound(g, row.dom_t, &mut out.failures);
        out.lower_bound_checks = 1;
        Ok(out)
    })
}

/// Dispatch by theorem id. `concomp` uses `trials` random pairs with total
/// size at most `max_total_n`, seeded by `seed`; `gap` ignores the source.
pub struct VerifyOptions {
    pub workers: usize,
    pub trials: usize,
    pub max_total_n: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            workers: 1,
            trials: 100,
            max_total_n: 10,
            seed: 0,
        }
    }
}

pub fn verify(theorem: Theorem, source: &GraphSource, opts: &VerifyOptions) -> Result<VerificationReport> {
    match theorem {
        Theorem::Main => verify_theorem_main(source, opts.workers),
        Theorem::Result1 => verify_result1(source, opts.workers),
        Theorem::Result2 => verify_result2(source, opts.workers),
        Theorem::Disconnected => verify_disconnected_main(source, opts.workers),
        Theorem::Concomp => verify_concomp(opts.trials, opts.max_total_n, opts.seed, opts.workers),
        Theorem::Gap => verify_gap(opts.workers),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, named};

    fn graphs(gs: &[Graph]) -> GraphSource {
        GraphSource::Graphs(gs.to_vec())
    }

    fn positives(r: &VerificationReport) -> Vec<Graph> {
        r.records
            .iter()
            .filter(|r| r.bruteforce_verdict)
            .map(|r| crate::graph6::parse_graph6(&r.graph6).unwrap())
            .collect()
    }

    fn same_classes(found: &[Graph], expected: &[Graph]) -> bool {
        found.len() == expected.len()
            && expected.iter().all(|e| found.iter().any(|f| f.n() == e.n() && is_isomorphic(f, e).unwrap()))
    }

    #[test]
    fn main_at_four_vertices() {
        let r = verify_theorem_main(&GraphSource::Builtin { max_n: 4 }, 1).unwrap();
        assert_eq!(r.graph_count, 1 + 4);
        assert!(r.ok(), "{:?}", r.mismatches);
        let p4: Vec<Graph> = positives(&r).into_iter().filter(|g| g.n() == 4).collect();
        assert!(same_classes(&p4, &[named::paw(), named::k4_minus_e(), named::complete(4)]));
    }

    #[test]
    fn result1_small() {
        let r = verify_result1(&GraphSource::Builtin { max_n: 5 }, 2).unwrap();
        assert!(r.ok(), "{:?}", r.mismatches);
        let p5: Vec<Graph> = positives(&r).into_iter().filter(|g| g.n() == 5).collect();
        assert!(p5.iter().any(|g| is_isomorphic(g, &named::complete_bipartite(2, 3)).unwrap()));
        assert_eq!(p5.len(), 3);
        let r = verify_result1(&graphs(&[named::cycle(6)]), 1).unwrap();
        assert_eq!((r.positives, r.mismatches.len()), (0, 0));
    }

    #[test]
    fn result2_examples() {
        let c3c3 = named::cycle(3).disjoint_union(&named::cycle(3)).unwrap();
        let r = verify_result2(&graphs(&[c3c3, named::paw(), named::path(3)]), 1).unwrap();
        assert_eq!((r.graph_count, r.skipped, r.positives), (2, 1, 1));
        assert!(r.ok());
    }

    #[test]
    fn disconnected_examples() {
        let c3 = named::cycle(3);
        let cases = [
            (c3.disjoint_union(&named::paw()).unwrap(), true, 6),
            (c3.disjoint_union(&named::cycle(4)).unwrap(), false, 7),
            (named::paw().disjoint_union(&named::paw()).unwrap(), false, 6),
        ];
        let gs: Vec<Graph> = cases.iter().map(|c| c.0.clone()).collect();
        let r = verify_disconnected_main(&graphs(&gs), 1).unwrap();
        assert!(r.ok());
        for (rec, (_, pos, upper)) in r.records.iter().zip(&cases) {
            assert_eq!(rec.bruteforce_verdict, *pos);
            assert_eq!(rec.domt_upper, Some(*upper));
        }
    }

    #[test]
    fn concomp_is_deterministic() {
        let a = verify_concomp(5, 9, 3, 1).unwrap();
        let b = verify_concomp(5, 9, 3, 3).unwrap();
        assert!(a.ok());
        assert_eq!(a.records, b.records);
    }

    #[test]
    fn cycles_only_file() {
        let gs: Vec<Graph> = (3..=6).map(named::cycle).collect();
        let r = verify_theorem_main(&graphs(&gs), 1).unwrap();
        assert_eq!((r.positives, r.mismatches.len()), (0, 0));
    }

    #[test]
    fn gap_rows() {
        assert_eq!(gap_row("fig9(5)").unwrap(), GapRow { name: "fig9(5)".into(), n: 6, dom_t: 3, domt_upper: 5, method: "enumeration" });
        let f8 = gap_row("fig8").unwrap();
        assert_eq!((f8.n, f8.dom_t, f8.domt_upper), (12, 3, 11));
    }

    #[test]
    fn jsonl_footer_and_csv() {
        let r = verify_result2(&graphs(&[named::cycle(3), named::complete(4)]), 1).unwrap();
        let mut buf = Vec::new();
        r.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        let footer: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
        assert_eq!(footer["summary"]["graph_count"], 2);
        assert_eq!(footer["summary"]["ok"], true);
        assert!(footer["summary"].get("wall_time_ms").is_none());
        let mut csv = Vec::new();
        r.write_csv(&mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap().lines().nth(1).unwrap(), "Bw,3,3,3,3,cycles");
    }

    #[test]
    fn claimed_classification_is_audited() {
        let dir = std::env::temp_dir().join(format!("totdom-claims-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("claims.g6");
        std::fs::write(&path, "# C4 misfiled as F2\nCl F2\nC~ F2\nCx F1\n").unwrap();
        let source = GraphSource::from_graph6_file(&path).unwrap();
        let r = verify_theorem_main(&source, 1).unwrap();
        assert_eq!(r.graph_count, 3);
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.mismatches[0].graph6, "Cl");
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn theorem_ids() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!("lemma".parse::<Theorem>().is_err());
    }

    #[test]
    fn enumeration_budget_is_a_refusal() {
        assert!(matches!(
            verify_result2(&GraphSource::Builtin { max_n: 8 }, 1),
            Err(Error::Budget { .. })
        ));
    }
}
