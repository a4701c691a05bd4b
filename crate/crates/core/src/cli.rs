//! Command-line front end. Exit codes: 0 success, 1 a checked claim failed,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::classifier::{classify, ClassificationReport};
use crate::error::{Error, Result};
use crate::families::FamilyDescriptor;
use crate::graph::census::enumerate_connected;
use crate::graph::graph6::{parse_graph6, strip_header, write_graph6};
use crate::graph::{apsp, Graph};
use crate::lab::crosscheck::family_cross_check;
use crate::lab::moments::moment_audit;
use crate::lab::report::write_report;
use crate::lab::scan::{scan_order, ScanReport, Source};
use crate::lab::verify::{run_suite, Suite};
use crate::spectra::{char_poly_exact, summarize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "distspec", version, about = "Exact distance spectra of connected graphs")]
struct Cli {
    /// Emit one JSON object per input graph.
    #[arg(long, global = true)]
    json: bool,
    /// Reporting tolerance for floats; 1e-4 prints four decimals.
    #[arg(long, global = true, default_value_t = 1e-4)]
    tol: f64,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Default)]
struct GraphInput {
    /// graph6 strings; read from standard input when none are given.
    graph6: Vec<String>,
    /// Edge list such as "0-1,1-2".
    #[arg(long)]
    edges: Option<String>,
    /// Family member: complete N | pendant S T | cone N1 N2 ...
    #[arg(long = "gen", num_args = 1.., value_name = "FAMILY PARAMS")]
    generate: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact characteristic polynomial and floating spectrum.
    Spectrum(GraphInput),
    /// Family membership or a forbidden witness, plus the exact λ₂ verdict.
    Classify(GraphInput),
    /// Print a family member, or every connected graph of an order, as graph6.
    Gen {
        /// complete N | pendant S T | cone N1 N2 ... | census N
        #[arg(num_args = 1.., required = true)]
        spec: Vec<String>,
    },
    /// Run a property suite and print a pass/fail table.
    Verify {
        /// Suite name or alias (lemma4, lemma6, lemma8, corollary7,
        /// theorem9, theorem10, theorem11), or "all".
        suite: String,
    },
    /// Check every connected graph of one order.
    Scan {
        #[arg(long)]
        order: usize,
        /// Read graphs from a graph6 file instead of the built-in enumerator.
        #[arg(long)]
        graph6: Option<PathBuf>,
        /// Worker threads (default: DISTSPEC_JOBS or all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory for the JSON and CSV reports.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairwise distinctness of family polynomials and parameter recovery.
    CrossCheck {
        #[arg(long, default_value_t = 14)]
        max_order: usize,
    },
    /// Trace identities Σλ = 0 and Σλ² = Σd².
    MomentAudit(GraphInput),
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}

fn parse_edges(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| usage(format!("edge {tok:?} is not of the form u-v")))?;
        let p = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("bad vertex {x:?} in edge {tok:?}")))
        };
        edges.push((p(a)?, p(b)?));
    }
    let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    if n == 0 {
        return Err(usage("empty edge list"));
    }
    Graph::from_edges(n, &edges)
}

fn parse_family(spec: &[String]) -> Result<FamilyDescriptor> {
    let (kind, rest) = spec.split_first().ok_or_else(|| usage("missing family"))?;
    let nums = rest
        .iter()
        .map(|s| s.parse::<usize>().map_err(|_| usage(format!("bad parameter {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    match (kind.as_str(), nums.as_slice()) {
        ("complete", [n]) => FamilyDescriptor::complete(*n),
        ("pendant", [s, t]) => FamilyDescriptor::pendant(*s, *t),
        ("cone", parts) => FamilyDescriptor::cone(parts),
        _ => Err(usage(format!(
            "expected complete N, pendant S T or cone N1 N2 ..., got {}",
            spec.join(" ")
        ))),
    }
}

fn read_graphs(input: &GraphInput) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for s in &input.graph6 {
        out.push(parse_graph6(s)?);
    }
    if let Some(e) = &input.edges {
        out.push(parse_edges(e)?);
    }
    if let Some(spec) = &input.generate {
        out.push(parse_family(spec)?.build()?);
    }
    if out.is_empty() {
        for (i, line) in io::stdin().lock().lines().enumerate() {
            let line = line?;
            if let Some(body) = strip_header(&line) {
                out.push(parse_graph6(body).map_err(|e| Error::Input {
                    path: "<stdin>".into(),
                    line: i + 1,
                    source: Box::new(e),
                })?);
            }
        }
    }
    for g in &out {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
    }
    Ok(out)
}

fn decimals(tol: f64) -> usize {
    if tol > 0.0 && tol < 1.0 {
        (-tol.log10()).round() as usize
    } else {
        0
    }
}

fn fmt_floats(xs: &[f64], d: usize) -> String {
    xs.iter()
        .map(|x| {
            // avoid printing −0.0000
            let r = format!("{x:.d$}");
            if r.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
                r.trim_start_matches('-').to_string()
            } else {
                r
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

struct Ctx<'a> {
    json: bool,
    decimals: usize,
    out: &'a mut dyn Write,
}

fn spectrum(ctx: &mut Ctx, graphs: &[Graph]) -> Result<i32> {
    for g in graphs {
        let dm = apsp(g)?;
        let p = char_poly_exact(&dm.to_rows())?;
        let s = summarize(&dm)?;
        if ctx.json {
            let v = json!({
                "graph6": write_graph6(g),
                "poly": p.to_string(),
                "key": p.key(),
                "eigenvalues": s.eigen,
                "lambda2": s.lambda2(),
                "exact": s.lambda2_exact,
            });
            writeln!(ctx.out, "{v}")?;
        } else {
            writeln!(ctx.out, "graph6: {}", write_graph6(g))?;
            writeln!(ctx.out, "poly: {p}")?;
            writeln!(ctx.out, "eigenvalues: {}", fmt_floats(&s.eigen, ctx.decimals))?;
            if let Some(v) = s.lambda2_exact {
                writeln!(ctx.out, "lambda2 vs theta: {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn classify_line(r: &ClassificationReport, d: usize) -> String {
    let exact = r.exact.map_or("n/a".to_string(), |v| v.to_string());
    match (&r.descriptor, &r.witness) {
        (Some(desc), _) => format!("family {desc}, exact: {exact}"),
        (_, Some(w)) => format!(
            "above {} on {:?} (λ₂ = {}, {} roots above θ), exact: {exact}",
            w.pattern,
            w.vertices,
            fmt_floats(&[w.lambda2], d),
            w.roots_above_theta
        ),
        _ => format!("{}, exact: {exact}", r.verdict),
    }
}

fn classify_cmd(ctx: &mut Ctx, graphs: &[Graph]) -> Result<i32> {
    for g in graphs {
        let r = classify(g)?;
        if ctx.json {
            let mut v = serde_json::to_value(&r)?;
            v["graph6"] = json!(write_graph6(g));
            writeln!(ctx.out, "{v}")?;
        } else {
            writeln!(ctx.out, "{}", classify_line(&r, ctx.decimals))?;
        }
    }
    Ok(EXIT_OK)
}

fn gen(ctx: &mut Ctx, spec: &[String]) -> Result<i32> {
    if spec[0] == "census" {
        let n = spec
            .get(1)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| usage("census needs an order"))?;
        for g in enumerate_connected(n)? {
            writeln!(ctx.out, "{}", write_graph6(&g))?;
        }
        return Ok(EXIT_OK);
    }
    let d = parse_family(spec)?;
    let g = d.build()?;
    if ctx.json {
        writeln!(ctx.out, "{}", json!({"descriptor": d, "graph6": write_graph6(&g)}))?;
    } else {
        writeln!(ctx.out, "{}", write_graph6(&g))?;
    }
    Ok(EXIT_OK)
}

fn verify(ctx: &mut Ctx, which: &str) -> Result<i32> {
    let suites = if which.eq_ignore_ascii_case("all") {
        Suite::ALL.to_vec()
    } else {
        vec![which.parse::<Suite>()?]
    };
    let mut failed = false;
    for s in suites {
        let rows = run_suite(s, ctx.decimals)?;
        for r in &rows {
            failed |= !r.passed;
            if ctx.json {
                writeln!(
                    ctx.out,
                    "{}",
                    json!({"suite": s.name(), "case": r.case, "passed": r.passed, "detail": r.detail})
                )?;
            } else {
                writeln!(
                    ctx.out,
                    "{:<20} {:<18} {}  {}",
                    s.name(),
                    r.case,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.detail
                )?;
            }
        }
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn print_scan(ctx: &mut Ctx, r: &ScanReport) -> Result<()> {
    if ctx.json {
        let v = json!({
            "order": r.order,
            "graph_count": r.graph_count,
            "duplicates": r.duplicates,
            "buckets": r.buckets.len(),
            "cospectral_classes": r.cospectral_classes().count(),
            "at_or_below": r.at_or_below,
            "family_at_or_below": r.family_at_or_below,
            "violations": r.violations,
        });
        writeln!(ctx.out, "{v}")?;
        return Ok(());
    }
    writeln!(ctx.out, "{}", r.banner)?;
    writeln!(ctx.out, "order {}: {} graphs", r.order, r.graph_count)?;
    if r.duplicates > 0 {
        writeln!(ctx.out, "isomorphic duplicates skipped: {}", r.duplicates)?;
    }
    writeln!(
        ctx.out,
        "distinct polynomials: {}, cospectral classes of size ≥ 2: {}",
        r.buckets.len(),
        r.cospectral_classes().count()
    )?;
    writeln!(
        ctx.out,
        "λ₂ ≤ θ: {} graphs, {} family members by closed form",
        r.at_or_below, r.family_at_or_below
    )?;
    writeln!(ctx.out, "violations: {}", r.violations.len())?;
    for v in &r.violations {
        writeln!(ctx.out, "  {} {} {}", v.claim.name(), v.graph6, v.detail)?;
    }
    Ok(())
}

fn scan(
    ctx: &mut Ctx,
    order: usize,
    file: Option<PathBuf>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
) -> Result<i32> {
    let source = file.map_or(Source::Builtin, Source::Graph6File);
    let r = scan_order(order, &source, jobs)?;
    print_scan(ctx, &r)?;
    if let Some(dir) = out {
        let (j, c) = write_report(&r, &dir)?;
        if !ctx.json {
            writeln!(ctx.out, "wrote {} and {}", j.display(), c.display())?;
        }
    }
    Ok(if r.passed() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cross_check(ctx: &mut Ctx, max_order: usize) -> Result<i32> {
    let r = family_cross_check(max_order);
    if ctx.json {
        writeln!(ctx.out, "{}", serde_json::to_string(&r)?)?;
    } else {
        for n in 1..=max_order {
            writeln!(ctx.out, "order {n}: {} members", r.members[n])?;
        }
        writeln!(ctx.out, "issues: {}", r.issues.len())?;
        for i in &r.issues {
            writeln!(ctx.out, "  {:?} order {}: {}", i.kind, i.order, i.detail)?;
        }
    }
    Ok(if r.passed() { EXIT_OK } else { EXIT_VIOLATION })
}

fn moments(ctx: &mut Ctx, graphs: &[Graph]) -> Result<i32> {
    let mut failed = false;
    for g in graphs {
        let a = moment_audit(g)?;
        failed |= !a.holds();
        if ctx.json {
            let mut v = serde_json::to_value(&a)?;
            v["graph6"] = json!(write_graph6(g));
            v["holds"] = json!(a.holds());
            writeln!(ctx.out, "{v}")?;
        } else {
            writeln!(
                ctx.out,
                "{}: Σλ = {}, Σλ² = {}, Σd² = {}{}{} {}",
                write_graph6(g),
                a.moment1,
                a.moment2,
                a.sum_sq,
                a.diameter2_formula.map_or(String::new(), |x| format!(", diameter-2 form {x}")),
                a.pendant_formula.map_or(String::new(), |x| format!(", pendant form {x}")),
                if a.holds() { "ok" } else { "FAIL" }
            )?;
        }
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let mut ctx = Ctx {
        json: cli.json,
        decimals: decimals(cli.tol),
        out,
    };
    match cli.cmd {
        Command::Spectrum(g) => spectrum(&mut ctx, &read_graphs(&g)?),
        Command::Classify(g) => classify_cmd(&mut ctx, &read_graphs(&g)?),
        Command::Gen { spec } => gen(&mut ctx, &spec),
        Command::Verify { suite } => verify(&mut ctx, &suite),
        Command::Scan {
            order,
            graph6,
            jobs,
            out,
        } => scan(&mut ctx, order, graph6, jobs, out),
        Command::CrossCheck { max_order } => cross_check(&mut ctx, max_order),
        Command::MomentAudit(g) => moments(&mut ctx, &read_graphs(&g)?),
    }
}

/// Runs the command line with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e @ Error::Contradiction { .. }) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VIOLATION
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let mut out = stdout.lock();
    run_with(args, &mut out, &mut io::stderr())
}
