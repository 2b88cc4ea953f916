//! Sweep drivers: run per-graph checkers over enumerated or sampled graphs.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::Case;
use super::enumerate::mask_count;
use super::grids::run_grid;
use super::report::Status;
use super::{
    sample_graphs, Context, EnumerationFilter, TheoremId, TheoremKind, TheoremReport, VerifyError,
    EXHAUSTIVE_LIMIT, SAMPLE_RANGE,
};
use crate::graph::Graph;

/// Failures kept per summary; the counters still see every one.
pub const MAX_STORED_FAILURES: usize = 64;

const CHUNK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMode::Exhaustive => "exhaustive",
            SweepMode::Sampled => "sampled",
        })
    }
}

/// Tally of one statement over one stream of graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub mode: SweepMode,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub not_applicable: u64,
    /// The first failures in stream order.
    pub failures: Vec<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SweepSummary {
    pub const CSV_HEADER: &'static str = "theorem_id,n,mode,checked,passed,failed,not_applicable";

    fn empty(theorem_id: TheoremId, n: usize, mode: SweepMode) -> Self {
        SweepSummary {
            theorem_id,
            n,
            mode,
            checked: 0,
            passed: 0,
            failed: 0,
            not_applicable: 0,
            failures: Vec::new(),
            note: None,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.theorem_id, self.n, self.mode, self.checked, self.passed, self.failed, self.not_applicable
        )
    }

    pub fn is_clean(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, status: Status, report: impl FnOnce() -> TheoremReport) {
        self.checked += 1;
        match status {
            Status::Pass => self.passed += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::Fail => {
                self.failed += 1;
                if self.failures.len() < MAX_STORED_FAILURES {
                    self.failures.push(report());
                }
            }
        }
    }

    fn merge(&mut self, other: SweepSummary) {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failed += other.failed;
        self.not_applicable += other.not_applicable;
        let room = MAX_STORED_FAILURES - self.failures.len();
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

fn graph_ids(ids: &[TheoremId]) -> Result<(), VerifyError> {
    match ids.iter().find(|id| id.kind() != TheoremKind::Graph) {
        Some(&id) => Err(VerifyError::WrongKind(id, "parameter grids")),
        None => Ok(()),
    }
}

fn tally<'g>(
    ctx: &Context,
    ids: &[TheoremId],
    n: usize,
    mode: SweepMode,
    graphs: impl Iterator<Item = &'g Graph>,
) -> Result<Vec<SweepSummary>, VerifyError> {
    let mut out: Vec<SweepSummary> = ids.iter().map(|&id| SweepSummary::empty(id, n, mode)).collect();
    for g in graphs {
        let case = Case::new(ctx, g)?;
        for (summary, &id) in out.iter_mut().zip(ids) {
            let verdict = case.run(id)?;
            summary.record(verdict.status, || case.report(id, verdict.clone()));
        }
    }
    Ok(out)
}

fn merge_all(ids: &[TheoremId], n: usize, mode: SweepMode, parts: Vec<Vec<SweepSummary>>) -> Vec<SweepSummary> {
    let mut out: Vec<SweepSummary> = ids.iter().map(|&id| SweepSummary::empty(id, n, mode)).collect();
    for part in parts {
        for (acc, s) in out.iter_mut().zip(part) {
            acc.merge(s);
        }
    }
    out
}

/// Runs every statement in `ids` on every labeled graph accepted by
/// `filter`, in parallel over bitmask chunks. Summaries and stored failures
/// are in mask order regardless of scheduling.
pub fn sweep_exhaustive(
    ids: &[TheoremId],
    filter: &EnumerationFilter,
    ctx: &Context,
) -> Result<Vec<SweepSummary>, VerifyError> {
    graph_ids(ids)?;
    let n = filter.n;
    if n > EXHAUSTIVE_LIMIT {
        return Err(VerifyError::TooLarge { n, limit: EXHAUSTIVE_LIMIT });
    }
    // tables pay off only when neighbouring graphs are looked up
    let mut orders = Vec::new();
    if ids.contains(&TheoremId::EdgeInterlacing) {
        orders.push(n);
    }
    if ids.contains(&TheoremId::VertexDeletion) {
        orders.extend([n, n.saturating_sub(1)]);
    }
    ctx.prepare(orders)?;
    let total = mask_count(n);
    let chunks: Vec<u64> = (0..total.div_ceil(CHUNK)).collect();
    let parts = chunks
        .par_iter()
        .map(|&c| {
            let graphs: Vec<Graph> = (c * CHUNK..((c + 1) * CHUNK).min(total))
                .map(|mask| Graph::from_edge_mask(n, mask))
                .filter(|g| filter.accepts(g))
                .collect();
            tally(ctx, ids, n, SweepMode::Exhaustive, graphs.iter())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(merge_all(ids, n, SweepMode::Exhaustive, parts))
}

/// Runs every statement in `ids` on `count` seeded random graphs of order
/// `filter.n`. Graph generation is sequential, so the stream depends only
/// on the seed; checking is parallel.
pub fn sweep_sampled(
    ids: &[TheoremId],
    filter: &EnumerationFilter,
    count: usize,
    seed: u64,
    ctx: &Context,
) -> Result<Vec<SweepSummary>, VerifyError> {
    graph_ids(ids)?;
    let n = filter.n;
    let graphs: Vec<Graph> = sample_graphs(n, count, seed, filter)?.collect();
    let parts = graphs
        .par_chunks(CHUNK as usize / 16)
        .map(|chunk| tally(ctx, ids, n, SweepMode::Sampled, chunk.iter()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = merge_all(ids, n, SweepMode::Sampled, parts);
    for s in &mut out {
        if s.theorem_id == TheoremId::Delta2 {
            s.note = Some("sampling does not certify the disconnected case".into());
        }
    }
    Ok(out)
}

/// Runs `f` on a thread pool with `jobs` workers, or rayon's default
/// when `jobs` is `None` or zero.
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, VerifyError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs.filter(|&j| j > 0) {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| VerifyError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// Every failure of `id` over the orders in `orders`: exhaustive up to
/// order 7, `budget` seeded samples above. Grid statements run their grid
/// restricted to `orders`.
pub fn search_counterexamples(
    id: TheoremId,
    orders: RangeInclusive<usize>,
    budget: usize,
    seed: u64,
) -> Result<Vec<TheoremReport>, VerifyError> {
    if id.kind() == TheoremKind::Grid {
        return Ok(run_grid(id, orders)?.into_iter().filter(TheoremReport::is_failure).collect());
    }
    let ctx = Context::direct();
    let mut failures = Vec::new();
    for n in orders {
        let filter = EnumerationFilter::new(n);
        let summaries = if n <= EXHAUSTIVE_LIMIT {
            sweep_exhaustive(&[id], &filter, &ctx)?
        } else if SAMPLE_RANGE.contains(&n) {
            // a distinct stream per order
            sweep_sampled(&[id], &filter, budget, seed.wrapping_add(n as u64), &ctx)?
        } else {
            return Err(VerifyError::SampleRange { n, min: *SAMPLE_RANGE.start(), max: *SAMPLE_RANGE.end() });
        };
        failures.extend(summaries.into_iter().flat_map(|s| s.failures));
    }
    Ok(failures)
}
