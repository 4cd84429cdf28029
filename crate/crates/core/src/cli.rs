//! Command-line front end. Every subcommand writes JSON lines (or graph6
//! lines) to standard output. Exit codes: 0 success, 1 a checked property
//! failed, 2 usage or input error.

use std::io::{BufRead, Write};

use clap::{error::ErrorKind, Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::census::{classify_census, connected_regular_graphs, verify_characterization};
use crate::classify::{classify_regular, is_equimatchable, isolating_remainder_audit};
use crate::decomposition::{
    audit_decomposition, audit_graph, balanced_bipartition_search, build_decomposition,
    AuditOptions, AuditPlan, AuditReport, CheckStatus,
};
use crate::families::{build_family, FamilyParams, FamilySpec};
use crate::graph::Graph;
use crate::graph6;
use crate::independence::{independence_number, maximum_independent_sets};
use crate::matching::is_factor_critical;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "EQUIMATCH_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "equimatch",
    version,
    about = "Exact matching toolkit for equimatchable graphs"
)]
struct Cli {
    /// Worker threads (default: $EQUIMATCH_WORKERS, else all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify every graph6 line of FILE ("-" for stdin).
    Check { file: String },
    /// Print the graph6 line of a named graph.
    Construct(ConstructArgs),
    /// Connected r-regular graphs on n vertices, one per isomorphism class.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Emit classified JSON records instead of graph6.
        #[arg(long)]
        classify: bool,
    },
    /// Compare the equimatchable census classes with the known list.
    Verify {
        #[arg(long)]
        r: usize,
        #[arg(long = "nmax")]
        n_max: usize,
    },
    /// Build and audit the independent-set decomposition of each graph.
    Decompose(DecomposeArgs),
    /// Check the shape of G - V(M) - v over minimal isolating matchings M.
    #[command(name = "audit-thm11", visible_alias = "audit-remainders")]
    AuditRemainders {
        file: String,
        /// Minimal isolating matchings examined per vertex.
        #[arg(long, default_value_t = 200)]
        cap: usize,
    },
    /// Exit 0 iff the first graphs of the two files are isomorphic.
    Iso { file_a: String, file_b: String },
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// K, KB, C, CC, F, Petersen or Prism (or a full spec like "family=F,r=6").
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    file: String,
    /// Audit every maximum independent set, every vertex in it and several
    /// perfect matchings, instead of one decomposition.
    #[arg(long)]
    all_max_independent_sets: bool,
    /// Maximum independent sets to use.
    #[arg(long, default_value_t = 50)]
    cap: usize,
    /// Perfect matchings of G - v per (I, v).
    #[arg(long, default_value_t = 20)]
    matchings: usize,
    /// Random samples for the sampled checks.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
}

struct Io<'a> {
    pool: rayon::ThreadPool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    stdin: &'a mut dyn BufRead,
}

impl Io<'_> {
    fn emit<T: Serialize>(&mut self, value: &T) {
        let line = serde_json::to_string(value).expect("serialisable record");
        let _ = writeln!(self.out, "{line}");
    }

    /// Runs `f` on the configured worker pool.
    fn par<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        self.pool.install(f)
    }

    fn fail(&mut self, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        2
    }

    fn read(&mut self, file: &str) -> Result<String, String> {
        if file == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        } else {
            std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))
        }
    }
}

/// Non-blank lines with their 1-based line numbers.
fn graph_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn worker_count(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| std::env::var(WORKERS_ENV).ok()?.parse().ok())
        .filter(|&w| w > 0)
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run(
    argv: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if info {
                let _ = write!(stdout, "{text}");
                return 0;
            }
            let _ = write!(stderr, "{text}");
            return 2;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = worker_count(cli.workers) {
        builder = builder.num_threads(w);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start workers: {e}");
            return 2;
        }
    };
    let mut io = Io {
        pool,
        out: stdout,
        err: stderr,
        stdin,
    };
    dispatch(cli.command, &mut io)
}

fn dispatch(cmd: Command, io: &mut Io) -> i32 {
    match cmd {
        Command::Check { file } => check(&file, io),
        Command::Construct(args) => construct(&args, io),
        Command::Census { n, r, classify } => census(n, r, classify, io),
        Command::Verify { r, n_max } => verify(r, n_max, io),
        Command::Decompose(args) => decompose(&args, io),
        Command::AuditRemainders { file, cap } => audit_remainders(&file, cap, io),
        Command::Iso { file_a, file_b } => iso(&file_a, &file_b, io),
    }
}

fn check_record(line: usize, text: &str) -> Value {
    let g = match graph6::decode(text) {
        Ok(g) => g,
        Err(e) => return json!({ "line": line, "error": e.to_string() }),
    };
    let verdict = is_equimatchable(&g);
    json!({
        "line": line,
        "n": g.order(),
        "regularity": g.regularity(),
        "connected": g.is_connected(),
        "equimatchable": verdict.equimatchable,
        "nu": verdict.nu,
        "factor_critical": is_factor_critical(&g),
        "alpha": independence_number(&g).0,
        "regular_class": classify_regular(&g).to_string(),
    })
}

fn check(file: &str, io: &mut Io) -> i32 {
    let text = match io.read(file) {
        Ok(t) => t,
        Err(e) => return io.fail(e),
    };
    let lines = graph_lines(&text);
    let records: Vec<Value> =
        io.par(|| lines.par_iter().map(|&(k, l)| check_record(k, l)).collect());
    let failed = records.iter().filter(|r| r.get("error").is_some()).count();
    for r in &records {
        io.emit(r);
    }
    if !records.is_empty() && failed == records.len() {
        2
    } else {
        0
    }
}

fn construct(args: &ConstructArgs, io: &mut Io) -> i32 {
    let spec = if args.family.contains('=') {
        args.family.parse::<FamilySpec>()
    } else {
        let params = FamilyParams {
            n: args.n,
            a: args.a,
            b: args.b,
            r: args.r,
        };
        FamilySpec::from_tag(&args.family, params)
    };
    let g = match spec.and_then(|s| build_family(&s)) {
        Ok(g) => g,
        Err(e) => return io.fail(e),
    };
    match graph6::encode(&g) {
        Ok(s) => {
            let _ = writeln!(io.out, "{s}");
            0
        }
        Err(e) => io.fail(e),
    }
}

fn census(n: usize, r: usize, classify: bool, io: &mut Io) -> i32 {
    if classify {
        match io.par(|| classify_census(n, r)) {
            Ok(records) => records.iter().for_each(|rec| io.emit(rec)),
            Err(e) => return io.fail(e),
        }
    } else {
        match io.par(|| connected_regular_graphs(n, r)) {
            Ok(graphs) => {
                for g in graphs {
                    let _ = writeln!(
                        io.out,
                        "{}",
                        graph6::encode(&g).expect("census fits graph6")
                    );
                }
            }
            Err(e) => return io.fail(e),
        }
    }
    0
}

fn verify(r: usize, n_max: usize, io: &mut Io) -> i32 {
    match io.par(|| verify_characterization(r, n_max)) {
        Ok(report) => {
            io.emit(&report);
            if report.ok() {
                0
            } else {
                1
            }
        }
        Err(e) => io.fail(e),
    }
}

fn emit_report(io: &mut Io, graph: usize, context: Value, report: &AuditReport) {
    for rec in &report.checks {
        let mut v = serde_json::to_value(rec).expect("serialisable record");
        let obj = v.as_object_mut().expect("record is an object");
        obj.insert("graph".into(), json!(graph));
        if let Value::Object(ctx) = &context {
            for (k, x) in ctx {
                obj.insert(k.clone(), x.clone());
            }
        }
        io.emit(&v);
    }
}

fn decompose_one(
    g: &Graph,
    graph: usize,
    args: &DecomposeArgs,
    io: &mut Io,
) -> Result<bool, String> {
    let options = AuditOptions {
        samples: args.samples,
        seed: args.seed,
        ..AuditOptions::default()
    };
    let mut failed = false;
    if args.all_max_independent_sets {
        let plan = AuditPlan {
            max_sets_cap: args.cap,
            matchings_per_vertex: args.matchings,
            options,
        };
        let audit = io.par(|| audit_graph(g, &plan));
        for run in &audit.runs {
            let ctx = json!({ "set": run.set_index, "v": run.v, "matching": run.matching_index });
            if let Some(err) = &run.error {
                let mut rec = ctx.clone();
                rec["graph"] = json!(graph);
                rec["error"] = json!(err);
                io.emit(&rec);
                failed = true;
            }
            emit_report(io, graph, ctx, &run.report);
            failed |= !run.report.passed();
        }
        failed |= emit_split(io, graph, &audit.balanced_bipartition);
    } else {
        let set = maximum_independent_sets(g, 1)
            .pop()
            .ok_or("graph has no vertices")?;
        let v = set.first().ok_or("graph has no vertices")?;
        let d = build_decomposition(g, set, v, None).map_err(|e| e.to_string())?;
        let report = audit_decomposition(g, &d, &options).map_err(|e| e.to_string())?;
        emit_report(
            io,
            graph,
            json!({ "set": 0, "v": v, "matching": 0 }),
            &report,
        );
        failed |= !report.passed();
        failed |= emit_split(io, graph, &balanced_bipartition_search(g));
    }
    Ok(failed)
}

/// Emits the balanced-split record; returns whether it failed.
fn emit_split(io: &mut Io, graph: usize, res: &crate::decomposition::BalancedBipartition) -> bool {
    let status = if res.hypotheses_hold {
        CheckStatus::Pass
    } else {
        CheckStatus::Skipped
    };
    let mut rec = json!({
        "graph": graph,
        "check_id": "balanced-bipartition",
        "citation": "Lemma 5.2",
        "status": status,
        "witness": res.found,
    });
    if !res.hypotheses_hold {
        rec["note"] =
            json!("hypothesis unmet: needs connected equimatchable r-regular, r even >= 6");
    }
    io.emit(&rec);
    false
}

fn decompose(args: &DecomposeArgs, io: &mut Io) -> i32 {
    let text = match io.read(&args.file) {
        Ok(t) => t,
        Err(e) => return io.fail(e),
    };
    let mut any_failed = false;
    let mut errors = 0;
    let lines = graph_lines(&text);
    for &(k, line) in &lines {
        let outcome = graph6::decode(line)
            .map_err(|e| e.to_string())
            .and_then(|g| decompose_one(&g, k, args, io));
        match outcome {
            Ok(failed) => any_failed |= failed,
            Err(e) => {
                errors += 1;
                io.emit(&json!({ "graph": k, "error": e }));
            }
        }
    }
    if !lines.is_empty() && errors == lines.len() {
        2
    } else if any_failed {
        1
    } else {
        0
    }
}

fn audit_remainders(file: &str, cap: usize, io: &mut Io) -> i32 {
    let text = match io.read(file) {
        Ok(t) => t,
        Err(e) => return io.fail(e),
    };
    let lines = graph_lines(&text);
    let mut errors = 0;
    let mut any_failed = false;
    for &(k, line) in &lines {
        let g = match graph6::decode(line) {
            Ok(g) => g,
            Err(e) => {
                errors += 1;
                io.emit(&json!({ "graph": k, "error": e.to_string() }));
                continue;
            }
        };
        match io.par(|| isolating_remainder_audit(&g, cap)) {
            Ok(audit) => {
                any_failed |= !audit.passed();
                io.emit(&json!({
                    "graph": k,
                    "passed": audit.passed(),
                    "matchings_checked": audit.matchings_checked(),
                    "vertices_at_cap": audit.vertices.iter().filter(|v| v.cap_reached).count(),
                    "empty_remainders": audit.vertices.iter().map(|v| v.empty_remainders).sum::<usize>(),
                    "convention": "empty remainder counted as K_0 (t = 0)",
                    "counterexamples": audit.counterexamples,
                }));
            }
            Err(e) => {
                errors += 1;
                io.emit(&json!({ "graph": k, "error": format!("precondition: {e}") }));
            }
        }
    }
    if !lines.is_empty() && errors == lines.len() {
        2
    } else if any_failed {
        1
    } else {
        0
    }
}

fn first_graph(io: &mut Io, file: &str) -> Result<Graph, String> {
    let text = io.read(file)?;
    let (_, line) = graph_lines(&text)
        .first()
        .copied()
        .ok_or(format!("{file}: no graph"))?;
    graph6::decode(line).map_err(|e| format!("{file}: {e}"))
}

fn iso(a: &str, b: &str, io: &mut Io) -> i32 {
    let (g, h) = match (first_graph(io, a), first_graph(io, b)) {
        (Ok(g), Ok(h)) => (g, h),
        (Err(e), _) | (_, Err(e)) => return io.fail(e),
    };
    let same = crate::canon::isomorphic(&g, &h);
    io.emit(&json!({ "isomorphic": same }));
    if same {
        0
    } else {
        1
    }
}
