mod input;
mod interval;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use qdist_core::exact::Partition;
use qdist_core::spectral::{quotient_spectrum, spectrum_report, ExactCounter, MatrixKind};
use qdist_core::verify::{
    check_graph, default_grid_range, run_grid, search_counterexamples, sweep_exhaustive, sweep_sampled, with_jobs,
    Context, EnumerationFilter, Instance, Status, SweepSummary, TheoremKind, EXHAUSTIVE_LIMIT,
};
use qdist_core::{graph6_encode, is_equitable, quotient_matrix, InvariantBundle, Rational, TheoremId, TheoremReport};

use input::{FamilyArgs, GraphInput, Labeled};
use interval::SymbolicInterval;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Compute(String),
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn compute(e: impl std::fmt::Display) -> Self {
        CliError::Compute(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Exact signless Laplacian eigenvalue counts, graph invariants and
/// theorem sweeps.
#[derive(Debug, Parser)]
#[command(name = "qdist", version)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Worker threads for sweeps; 0 means one per core
    #[arg(long, global = true, env = "QDIST_JOBS")]
    jobs: Option<usize>,
    /// Do not echo the invocation line on stderr
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Build a family member and print its graph6 encoding
    Family(FamilyArgs),
    /// Eigenvalues plus exact counts below every integer threshold
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        /// Use the Laplacian D - A instead of D + A
        #[arg(long)]
        laplacian: bool,
        /// Extra rational thresholds, e.g. 7/2
        #[arg(long = "threshold", value_name = "X")]
        thresholds: Vec<String>,
    },
    /// Exact number of eigenvalues in an interval such as "[0,n-3)"
    Count {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_name = "INTERVAL")]
        interval: SymbolicInterval,
        #[arg(long)]
        laplacian: bool,
    },
    /// Matching, independence and domination numbers, diameter, longest path
    Invariants {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Quotient matrix of a vertex partition such as "0|1,2|3"
    Quotient {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_name = "BLOCKS")]
        partition: String,
    },
    /// Run theorem checkers on graphs, sweeps or parameter grids
    Verify(VerifyArgs),
    /// Look for counterexamples; prints failures only
    Search {
        #[arg(long, value_name = "ID")]
        theorem: TheoremId,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = EXHAUSTIVE_LIMIT)]
        n_max: usize,
        /// Samples per order above the exhaustive limit
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Theorem ids, comma separated or repeated; `all` selects every one
    #[arg(long = "theorem", value_name = "ID", value_delimiter = ',', required = true)]
    theorems: Vec<String>,
    /// Sweep every labeled graph of each order up to N
    #[arg(long, value_name = "N", conflicts_with = "sample")]
    exhaustive: Option<usize>,
    /// Sweep COUNT random graphs of order --order
    #[arg(long, value_name = "COUNT", requires = "order")]
    sample: Option<usize>,
    #[arg(long, value_name = "N")]
    order: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Smallest order for exhaustive sweeps and grids
    #[arg(long)]
    n_min: Option<usize>,
    /// Largest order for grids
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    connected: bool,
    #[arg(long, value_name = "K")]
    min_degree: Option<usize>,
    #[arg(long, value_name = "D")]
    diameter: Option<usize>,
    #[arg(long)]
    exclude_kc5: bool,
    /// Record per-report wall time
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    input: GraphInput,
}

impl VerifyArgs {
    fn ids(&self) -> Result<Vec<TheoremId>, CliError> {
        let mut ids = Vec::new();
        for name in &self.theorems {
            if name.eq_ignore_ascii_case("all") {
                ids.extend(TheoremId::ALL);
            } else {
                ids.push(name.parse::<TheoremId>().map_err(|e| CliError::Usage(e.to_string()))?);
            }
        }
        ids.dedup();
        Ok(ids)
    }

    fn filter(&self, n: usize) -> EnumerationFilter {
        let mut f = EnumerationFilter::new(n);
        if self.connected {
            f = f.connected();
        }
        if let Some(k) = self.min_degree {
            f = f.min_degree(k);
        }
        if let Some(d) = self.diameter {
            f = f.diameter(d);
        }
        if self.exclude_kc5 {
            f = f.without_k_c5();
        }
        f
    }

    fn grid_range(&self, id: TheoremId) -> RangeInclusive<usize> {
        let default = default_grid_range(id);
        self.n_min.unwrap_or(*default.start())..=self.n_max.unwrap_or(*default.end())
    }
}

/// Buffered stdout with per-format helpers.
struct Out {
    format: Format,
    w: io::BufWriter<io::StdoutLock<'static>>,
    csv_header: Option<&'static str>,
}

impl Out {
    fn new(format: Format) -> Self {
        Out { format, w: io::BufWriter::new(io::stdout().lock()), csv_header: None }
    }

    fn line(&mut self, s: impl std::fmt::Display) -> Result<(), CliError> {
        writeln!(self.w, "{s}")?;
        Ok(())
    }

    fn json(&mut self, v: &impl Serialize) -> Result<(), CliError> {
        let s = serde_json::to_string(v).map_err(CliError::compute)?;
        self.line(s)
    }

    /// Prints `header` once before the first row under it.
    fn csv(&mut self, header: &'static str, row: impl std::fmt::Display) -> Result<(), CliError> {
        if self.csv_header != Some(header) {
            self.line(header)?;
            self.csv_header = Some(header);
        }
        self.line(row)
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Fixed-point text without a sign on values that round to zero.
fn fixed(v: f64, digits: usize) -> String {
    let s = format!("{v:.digits$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

fn matrix_kind(laplacian: bool) -> MatrixKind {
    if laplacian {
        MatrixKind::L
    } else {
        MatrixKind::Q
    }
}

fn label(item: &Labeled) -> Value {
    match &item.family {
        Some(spec) => json!(spec.to_string()),
        None => Value::Null,
    }
}

fn run_family(args: &FamilyArgs, out: &mut Out) -> Result<bool, CliError> {
    let spec = args
        .spec()?
        .ok_or_else(|| CliError::Usage("family needs --kind".into()))?;
    let g = qdist_core::make_family(&spec).map_err(|e| CliError::Input(e.to_string()))?;
    let g6 = graph6_encode(&g);
    match out.format {
        Format::Text => out.line(&g6)?,
        Format::Json => out.json(&json!({
            "family": spec,
            "name": spec.to_string(),
            "graph6": g6,
            "order": g.order(),
            "size": g.size(),
        }))?,
        Format::Csv => out.csv("name,graph6,order,size", format!("{},{g6},{},{}", csv_field(&spec.to_string()), g.order(), g.size()))?,
    }
    Ok(true)
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("`{s}` is not a rational number"));
    match s.trim().split_once('/') {
        Some((p, q)) => {
            let (p, q): (i64, i64) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p.into(), q.into()))
        }
        None => Ok(qdist_core::exact::int(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn run_spectrum(input: &GraphInput, laplacian: bool, thresholds: &[String], out: &mut Out) -> Result<bool, CliError> {
    let extra = thresholds.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    let kind = matrix_kind(laplacian);
    for item in input.load(true)? {
        let report = spectrum_report(&item.graph, kind, &extra).map_err(CliError::compute)?;
        match out.format {
            Format::Text => {
                let values: Vec<String> = report.eigenvalues.iter().map(|&v| fixed(v, 9)).collect();
                out.line(format!("{} {:?}: {}", report.graph, kind, values.join(" ")))?;
            }
            Format::Json => out.json(&report)?,
            Format::Csv => {
                for (i, v) in report.eigenvalues.iter().enumerate() {
                    out.csv("graph6,matrix,index,eigenvalue", format!("{},{kind:?},{},{}", report.graph, i + 1, fixed(*v, 12)))?;
                }
            }
        }
    }
    Ok(true)
}

fn run_count(input: &GraphInput, interval: &SymbolicInterval, laplacian: bool, out: &mut Out) -> Result<bool, CliError> {
    let kind = matrix_kind(laplacian);
    for item in input.load(true)? {
        let n = item.graph.order();
        let resolved = interval.resolve(n).map_err(CliError::Usage)?;
        let count = ExactCounter::for_kind(&item.graph, kind).count(&resolved);
        let g6 = graph6_encode(&item.graph);
        match out.format {
            Format::Text => out.line(count)?,
            Format::Json => out.json(&json!({
                "graph6": g6,
                "family": label(&item),
                "matrix": kind,
                "interval": interval.to_string(),
                "resolved": resolved.to_string(),
                "count": count,
            }))?,
            Format::Csv => out.csv(
                "graph6,matrix,interval,resolved,count",
                format!("{g6},{kind:?},{},{},{count}", csv_field(&interval.to_string()), csv_field(&resolved.to_string())),
            )?,
        }
    }
    Ok(true)
}

fn run_invariants(input: &GraphInput, out: &mut Out) -> Result<bool, CliError> {
    for item in input.load(true)? {
        let b = InvariantBundle::compute(&item.graph).map_err(|e| CliError::Input(e.to_string()))?;
        let g6 = graph6_encode(&item.graph);
        let diam = b.diam.map_or("inf".to_string(), |d| d.to_string());
        match out.format {
            Format::Text => out.line(format!(
                "{g6} nu={} alpha={} gamma={} diam={diam} longest_path={} delta={} Delta={}",
                b.nu, b.alpha, b.gamma_dom, b.longest_path_len, b.delta, b.max_degree
            ))?,
            Format::Json => {
                let mut v = serde_json::to_value(b).map_err(CliError::compute)?;
                v["graph6"] = json!(g6);
                out.json(&v)?
            }
            Format::Csv => out.csv(
                "graph6,nu,alpha,gamma_dom,diam,longest_path_len,delta,Delta",
                format!(
                    "{g6},{},{},{},{diam},{},{},{}",
                    b.nu, b.alpha, b.gamma_dom, b.longest_path_len, b.delta, b.max_degree
                ),
            )?,
        }
    }
    Ok(true)
}

fn run_quotient(input: &GraphInput, partition: &str, out: &mut Out) -> Result<bool, CliError> {
    for item in input.load(true)? {
        let g = &item.graph;
        let p = Partition::parse(g.order(), partition).map_err(|e| CliError::Usage(e.to_string()))?;
        let equitable = is_equitable(g, &p).map_err(CliError::compute)?;
        let b = quotient_matrix(g, &p).map_err(CliError::compute)?;
        let roots = quotient_spectrum(g, &p).map_err(CliError::compute)?.values;
        let g6 = graph6_encode(g);
        match out.format {
            Format::Text => {
                out.line(format!("{g6} equitable={equitable}"))?;
                let m = b.order();
                for i in 0..m {
                    let row: Vec<String> = (0..m).map(|j| b.get(i, j).to_string()).collect();
                    out.line(format!("  {}", row.join(" ")))?;
                }
                let r: Vec<String> = roots.iter().map(|&v| fixed(v, 9)).collect();
                out.line(format!("  roots: {}", r.join(" ")))?;
            }
            Format::Json => out.json(&json!({
                "graph6": g6,
                "partition": p.blocks(),
                "equitable": equitable,
                "quotient": b.to_json(),
                "roots": roots,
            }))?,
            Format::Csv => {
                let r: Vec<String> = roots.iter().map(|&v| fixed(v, 12)).collect();
                out.csv("graph6,partition,equitable,roots", format!("{g6},{},{equitable},{}", csv_field(partition), r.join(" ")))?
            }
        }
    }
    Ok(true)
}

fn instance_text(i: &Instance) -> String {
    match i {
        Instance::Graph6(s) => s.clone(),
        Instance::Family(spec) => spec.to_string(),
        Instance::Parameters(m) => Value::Object(m.clone()).to_string(),
    }
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::NotApplicable => "N/A",
    }
}

fn emit_report(r: &TheoremReport, out: &mut Out) -> Result<(), CliError> {
    match out.format {
        Format::Text => {
            let mut line = format!(
                "{} {} {} {}",
                status_text(r.status),
                r.theorem_id,
                instance_text(&r.instance),
                Value::Object(r.witness.clone())
            );
            if let Some(note) = &r.note {
                line.push_str(&format!(" ({note})"));
            }
            out.line(line)
        }
        Format::Json => out.line(r.to_json_line()),
        Format::Csv => out.csv(
            "theorem_id,instance,status",
            format!("{},{},{}", r.theorem_id, csv_field(&instance_text(&r.instance)), status_text(r.status)),
        ),
    }
}

fn emit_summary(s: &SweepSummary, out: &mut Out) -> Result<(), CliError> {
    match out.format {
        Format::Text => {
            out.line(format!(
                "{} {} n={} {}: checked={} passed={} failed={} not_applicable={}{}",
                if s.is_clean() { "PASS" } else { "FAIL" },
                s.theorem_id,
                s.n,
                s.mode,
                s.checked,
                s.passed,
                s.failed,
                s.not_applicable,
                s.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default()
            ))?;
            for f in &s.failures {
                emit_report(f, out)?;
            }
            Ok(())
        }
        Format::Json => out.json(s),
        Format::Csv => out.csv(SweepSummary::CSV_HEADER, s.csv_row()),
    }
}

fn run_verify(args: &VerifyArgs, out: &mut Out) -> Result<bool, CliError> {
    let ids = args.ids()?;
    let ctx = Context::direct();
    let mut clean = true;
    let graph_ids: Vec<TheoremId> = ids.iter().copied().filter(|id| id.kind() == TheoremKind::Graph).collect();
    for &id in ids.iter().filter(|id| id.kind() == TheoremKind::Grid) {
        for r in run_grid(id, args.grid_range(id)).map_err(|e| CliError::Usage(e.to_string()))? {
            clean &= !r.is_failure();
            emit_report(&r, out)?;
        }
    }
    if graph_ids.is_empty() {
        return Ok(clean);
    }
    if let Some(max) = args.exhaustive {
        if max > EXHAUSTIVE_LIMIT {
            return Err(CliError::Usage(format!("--exhaustive is limited to {EXHAUSTIVE_LIMIT}")));
        }
        for n in args.n_min.unwrap_or(1)..=max {
            for s in sweep_exhaustive(&graph_ids, &args.filter(n), &ctx).map_err(CliError::compute)? {
                clean &= s.is_clean();
                emit_summary(&s, out)?;
            }
        }
    } else if let Some(count) = args.sample {
        let n = args.order.expect("clap requires --order with --sample");
        let summaries = sweep_sampled(&graph_ids, &args.filter(n), count, args.seed, &ctx)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        for s in summaries {
            clean &= s.is_clean();
            emit_summary(&s, out)?;
        }
    } else {
        let graphs = args.input.load(ids.len() == graph_ids.len())?;
        if graphs.is_empty() {
            return Err(CliError::Usage(
                "graph theorems need --exhaustive, --sample or a graph input".into(),
            ));
        }
        for item in &graphs {
            for &id in &graph_ids {
                let start = Instant::now();
                let mut r = check_graph(id, &item.graph).map_err(|e| CliError::Input(e.to_string()))?;
                if args.timings {
                    r.elapsed_us = Some(start.elapsed().as_micros() as u64);
                }
                if let Some(spec) = &item.family {
                    r.instance = Instance::Family(spec.clone());
                }
                clean &= !r.is_failure();
                emit_report(&r, out)?;
            }
        }
    }
    Ok(clean)
}

fn run_search(
    id: TheoremId,
    orders: RangeInclusive<usize>,
    budget: usize,
    seed: u64,
    out: &mut Out,
) -> Result<bool, CliError> {
    let failures = search_counterexamples(id, orders, budget, seed).map_err(|e| CliError::Usage(e.to_string()))?;
    for r in &failures {
        emit_report(r, out)?;
    }
    if out.format == Format::Text {
        out.line(format!("{} failures", failures.len()))?;
    }
    Ok(failures.is_empty())
}

fn dispatch(cli: &Cli, out: &mut Out) -> Result<bool, CliError> {
    match &cli.verb {
        Verb::Family(args) => run_family(args, out),
        Verb::Spectrum { input, laplacian, thresholds } => run_spectrum(input, *laplacian, thresholds, out),
        Verb::Count { input, interval, laplacian } => run_count(input, interval, *laplacian, out),
        Verb::Invariants { input } => run_invariants(input, out),
        Verb::Quotient { input, partition } => run_quotient(input, partition, out),
        Verb::Verify(args) => run_verify(args, out),
        Verb::Search { theorem, n_min, n_max, budget, seed } => {
            if n_min > n_max {
                return Err(CliError::Usage(format!("--n-min {n_min} exceeds --n-max {n_max}")));
            }
            run_search(*theorem, *n_min..=*n_max, *budget, *seed, out)
        }
    }
}

/// The command line as typed, with the seed appended when it was defaulted.
fn invocation(cli: &Cli) -> String {
    let mut words: Vec<String> = std::env::args()
        .skip(1)
        .map(|a| if a.is_empty() || a.contains([' ', '"', '\'', '(', ')', '[', ']', '|']) { format!("'{a}'") } else { a })
        .collect();
    let seed = match &cli.verb {
        Verb::Verify(v) if v.sample.is_some() => Some(v.seed),
        Verb::Search { seed, .. } => Some(*seed),
        _ => None,
    };
    if let Some(seed) = seed {
        if !words.iter().any(|w| w == "--seed" || w.starts_with("--seed=")) {
            words.push(format!("--seed {seed}"));
        }
    }
    format!("qdist {}", words.join(" "))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.quiet {
        eprintln!("# {}", invocation(&cli));
    }
    // stdout is locked on the pool thread that writes to it
    let result = with_jobs(cli.jobs, || {
        let mut out = Out::new(cli.format);
        let clean = dispatch(&cli, &mut out)?;
        out.w.flush()?;
        Ok(clean)
    })
    .unwrap_or_else(|e| Err(CliError::Usage(e.to_string())));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // the reader went away, as with `| head`
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) | CliError::Input(_) => 2,
                CliError::Compute(_) | CliError::Io(_) => 1,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_drops_negative_zero() {
        assert_eq!(fixed(-1e-16, 9), "0.000000000");
        assert_eq!(fixed(-0.5, 2), "-0.50");
        assert_eq!(fixed(2.0, 3), "2.000");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("[0,1)"), "\"[0,1)\"");
        assert_eq!(csv_field("Dhc"), "Dhc");
    }
}
