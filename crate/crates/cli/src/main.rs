use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use totdom::families::{
    generate_f1, generate_f2, generate_f3, recognize_result1_class, recognize_theorem_class, F1Params, F3Added,
    F3Case, FamilyWitness,
};
use totdom::graph6::{parse_graph_text, to_graph6};
use totdom::verify::{verify, GraphSource, Theorem, VerificationReport, VerifyOptions, DEFAULT_MAX_N};
use totdom::{domt_range, extremal_orientation_for, fixture, gamma_t, Graph, Orientation};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "totdom", version, about = "Orientable total domination toolkit")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Total domination number of one orientation.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        /// Arc list such as `[[0,1],[1,2]]` or `0>1 1>2`, or the name of a
        /// fixture orientation (`left`, `right`).
        #[arg(long)]
        orientation: String,
    },
    /// Exact lower and upper orientable total domination numbers.
    Range {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Family membership with a witness.
    Recognize {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Cross-check a result against brute force.
    Verify(VerifyArgs),
    /// Build a family member with its extremal orientation.
    Generate {
        #[command(subcommand)]
        family: GenerateCmd,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// graph6 string or edge list such as `0-1 1-2 2-0`.
    #[arg(long)]
    graph6: Option<String>,
    /// File whose first non-empty line holds the graph.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Named graph: fig8, fig9(k), k4, k23, k4_minus_e, paw, petersen, cycle(n).
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = ["main", "result1", "result2", "concomp", "disconnected", "gap"])]
    theorem: String,
    /// graph6 file, one graph per line; defaults to built-in enumeration.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Permit built-in enumeration at n = 7.
    #[arg(long)]
    allow_n7: bool,
    #[arg(long, env = "TOTDOM_WORKERS", default_value_t = 1)]
    workers: usize,
    /// JSON-lines report: one record per graph plus a summary footer.
    #[arg(long)]
    out: Option<PathBuf>,
    /// CSV of graph6, n, m, dom_t, DOM_t, family tag.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 10)]
    max_total_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct F1Args {
    #[arg(long)]
    k: usize,
    /// Cycle lengths, comma separated.
    #[arg(long, value_delimiter = ',')]
    cycles: Vec<usize>,
    /// Per cycle, how many of its vertices are joined to w_k.
    #[arg(long, value_delimiter = ',')]
    links: Vec<usize>,
    /// Indices i with a chord w_i w_k.
    #[arg(long, value_delimiter = ',')]
    chords: Vec<usize>,
}

impl F1Args {
    fn params(&self) -> F1Params {
        F1Params {
            k: self.k,
            cycle_lengths: self.cycles.clone(),
            links: self.links.clone(),
            chords: self.chords.clone(),
        }
    }
}

#[derive(Subcommand)]
enum GenerateCmd {
    F1(F1Args),
    F2 {
        #[arg(long, value_delimiter = ',', required = true)]
        cycles: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        links: Vec<usize>,
    },
    F3 {
        #[command(flatten)]
        base: F1Args,
        /// single-edge, dwk4-plus, dwk3-via-wk, dwk3-via-xy, dwk2-via-wk,
        /// dwk2-via-x.
        #[arg(long)]
        case: String,
        /// Free endpoint of the second edge, or the endpoint of a single edge.
        #[arg(long)]
        to: Option<usize>,
    },
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<totdom::Error>() {
            Some(totdom::Error::Budget { .. }) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure { code, error }
    }
}

impl From<totdom::Error> for Failure {
    fn from(e: totdom::Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Solve { input, orientation } => solve(input, orientation, fmt),
        Command::Range { input } => range(input, fmt),
        Command::Recognize { input } => recognize(input, fmt),
        Command::Verify(args) => run_verify(args, fmt),
        Command::Generate { family } => generate(family, fmt),
    }
}

fn load(input: &GraphInput) -> anyhow::Result<(Graph, Option<totdom::families::Fixture>)> {
    if let Some(name) = &input.fixture {
        let f = fixture(name)?;
        return Ok((f.graph.clone(), Some(f)));
    }
    let text = match (&input.graph6, &input.input) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => {
            let all = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            all.lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| anyhow!("{} is empty", p.display()))?
                .to_string()
        }
        (None, None) => bail!("no input graph"),
    };
    Ok((parse_graph_text(&text)?, None))
}

/// Number pairs read in order as arcs `u -> v`.
fn parse_arcs(text: &str) -> anyhow::Result<Vec<(usize, usize)>> {
    let nums: Vec<usize> = text
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| anyhow!("bad vertex `{t}`: {e}")))
        .collect::<anyhow::Result<_>>()?;
    if !nums.len().is_multiple_of(2) {
        bail!("arc list has an odd number of endpoints");
    }
    Ok(nums.chunks(2).map(|p| (p[0], p[1])).collect())
}

fn emit(fmt: Format, value: &Value, human: impl FnOnce() -> String) {
    match fmt {
        Format::Json | Format::Csv => println!("{value}"),
        Format::Human => println!("{}", human()),
    }
}

fn solve(input: &GraphInput, spec: &str, fmt: Format) -> Result<u8, Failure> {
    let (g, fix) = load(input)?;
    let named = fix.as_ref().and_then(|f| f.orientations.iter().find(|(n, _)| *n == spec));
    let d = match named {
        Some((_, d)) => d.clone(),
        None => Orientation::from_arcs(&g, &parse_arcs(spec)?)?,
    };
    let sol = gamma_t(&d)?;
    let value = json!({ "n": g.n(), "m": g.m(), "gamma_t": sol.size, "witness": sol.witness });
    emit(fmt, &value, || format!("gamma_t = {}\nwitness = {:?}", sol.size, sol.witness.to_vec()));
    Ok(0)
}

fn range(input: &GraphInput, fmt: Format) -> Result<u8, Failure> {
    let (g, _) = load(input)?;
    let r = domt_range(&g)?;
    let value = json!({
        "n": g.n(),
        "m": g.m(),
        "dom_t": r.lower,
        "DOM_t": r.upper,
        "argmin": r.argmin,
        "argmax": r.argmax,
        "orientations": r.orientations,
    });
    emit(fmt, &value, || {
        format!("dom_t = {}\nDOM_t = {}\nvalid orientations = {}", r.lower, r.upper, r.orientations)
    });
    Ok(0)
}

fn recognize(input: &GraphInput, fmt: Format) -> Result<u8, Failure> {
    let (g, _) = load(input)?;
    let w = recognize_theorem_class(&g);
    let r1 = recognize_result1_class(&g);
    let value = json!({
        "family": w.as_ref().map(FamilyWitness::tag),
        "witness": w,
        "result1_class": r1,
    });
    emit(fmt, &value, || {
        let fam = w.as_ref().map_or("none", FamilyWitness::tag);
        let r1 = match (r1.member, r1.special) {
            (false, _) => "no".to_string(),
            (true, Some(s)) => s.to_string(),
            (true, None) => "F".to_string(),
        };
        format!("family = {fam}\nresult1 class = {r1}")
    });
    Ok(0)
}

fn run_verify(args: &VerifyArgs, fmt: Format) -> Result<u8, Failure> {
    let theorem: Theorem = args.theorem.parse()?;
    if args.workers == 0 {
        return Err(anyhow!("--workers must be at least 1").into());
    }
    if args.max_n > DEFAULT_MAX_N {
        if args.max_n == DEFAULT_MAX_N + 1 && args.allow_n7 {
            eprintln!("warning: built-in enumeration at n = 7 is slow for the range-based checks");
        } else if args.max_n == DEFAULT_MAX_N + 1 {
            return Err(anyhow!("--max-n 7 requires --allow-n7").into());
        } else {
            return Err(totdom::Error::Budget {
                what: "built-in enumeration vertex",
                limit: DEFAULT_MAX_N + 1,
                actual: args.max_n,
            }
            .into());
        }
    }
    let source = match &args.input {
        Some(p) => GraphSource::from_graph6_file(p)?,
        None => GraphSource::Builtin { max_n: args.max_n },
    };
    let opts = VerifyOptions {
        workers: args.workers,
        trials: args.trials,
        max_total_n: args.max_total_n,
        seed: args.seed,
    };
    let report = verify(theorem, &source, &opts)?;
    if let Some(p) = &args.out {
        write_file(p, |w| report.write_jsonl(w))?;
    }
    if let Some(p) = &args.csv {
        write_file(p, |w| report.write_csv(w))?;
    }
    print_report(&report, fmt)?;
    Ok(if report.ok() { 0 } else { EXIT_MISMATCH })
}

fn write_file(path: &PathBuf, f: impl FnOnce(&mut BufWriter<File>) -> totdom::Result<()>) -> anyhow::Result<()> {
    let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
    f(&mut w)?;
    w.flush()?;
    Ok(())
}

fn print_report(r: &VerificationReport, fmt: Format) -> anyhow::Result<()> {
    match fmt {
        Format::Json => println!("{}", r.summary(true)),
        Format::Csv => r.write_csv(std::io::stdout().lock())?,
        Format::Human => {
            println!(
                "{}: {} graphs ({} skipped), {} positive, {} mismatches, {} invariant failures, {} ms",
                r.theorem.id(),
                r.graph_count,
                r.skipped,
                r.positives,
                r.mismatches.len(),
                r.invariant_failures.len(),
                r.wall_time_ms
            );
            for m in &r.mismatches {
                println!(
                    "  mismatch {}: recognizer {:?}, brute force {}",
                    m.graph6, m.recognizer_verdict, m.bruteforce_verdict
                );
            }
            for f in &r.invariant_failures {
                println!("  invariant {f}");
            }
        }
    }
    Ok(())
}

fn generate(cmd: &GenerateCmd, fmt: Format) -> Result<u8, Failure> {
    let (g, w) = match cmd {
        GenerateCmd::F1(a) => {
            let (g, w) = generate_f1(&a.params())?;
            (g, FamilyWitness::F1(w))
        }
        GenerateCmd::F2 { cycles, links } => {
            let (g, w) = generate_f2(cycles, links)?;
            (g, FamilyWitness::F2(w))
        }
        GenerateCmd::F3 { base, case, to } => {
            let case = F3Case::from_tag(case).ok_or_else(|| anyhow!("unknown case `{case}`"))?;
            let need_to = || to.ok_or_else(|| anyhow!("--to is required for case {}", case.tag()));
            let added = match case {
                F3Case::SingleEdge => F3Added::Single(need_to()?),
                F3Case::DwkAtLeast4 | F3Case::Dwk3ViaWk | F3Case::Dwk2ViaWk => F3Added::ViaWk(need_to()?),
                F3Case::Dwk3ViaXy => F3Added::ViaXy,
                F3Case::Dwk2ViaX => F3Added::ViaX(need_to()?),
            };
            let (g, w) = generate_f3(&base.params(), &added)?;
            if w.case_tag != case {
                return Err(anyhow!("parameters give case {}, not {}", w.case_tag.tag(), case.tag()).into());
            }
            (g, FamilyWitness::F3(w))
        }
    };
    let d = extremal_orientation_for(&g, &w)?;
    let gamma = gamma_t(&d)?.size;
    if gamma != g.n() - 1 {
        return Err(anyhow!("constructed orientation has gamma_t {gamma}, expected {}", g.n() - 1).into());
    }
    let code = to_graph6(&g);
    let value = json!({ "graph6": code, "n": g.n(), "m": g.m(), "witness": w, "orientation": d, "gamma_t": gamma });
    emit(fmt, &value, || {
        format!("{code}\nfamily = {}\norientation = {}", w.tag(), serde_json::to_string(&d).unwrap())
    });
    Ok(0)
}
