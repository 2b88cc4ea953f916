//! Per-graph spectral data shared by the checkers: the floating spectrum of
//! `Q(G)` and the exact counts `#{q_i < t}` and `#{q_i <= t}` at every
//! integer threshold `t ∈ [0, 2n-2]`.
//!
//! For `n <= 7` whole level tables indexed by edge mask can be precomputed,
//! so that deletion checks look up `G - e` and `G - v` instead of
//! recomputing them.

use std::cell::OnceCell;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::enumerate::EXHAUSTIVE_LIMIT;
use super::VerifyError;
use crate::eigen::{eigenvalues_sym, EigenError, SymMatrix};
use crate::graph::Graph;
use crate::spectral::{float_matrix, ExactCounter, MatrixKind};

fn thresholds(n: usize) -> usize {
    (2 * n).saturating_sub(1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    values: Vec<f64>,
    lt: Vec<u8>,
    le: Vec<u8>,
}

impl Snapshot {
    pub fn compute(g: &Graph) -> Result<Self, VerifyError> {
        let n = g.order();
        let values = eigenvalues_sym(&float_matrix(g, MatrixKind::Q))?.values;
        let counter = ExactCounter::signless(g);
        let k = thresholds(n);
        let mut lt = Vec::with_capacity(k);
        let mut le = Vec::with_capacity(k);
        for t in 0..k as i64 {
            let i = counter.inertia_at_int(t);
            lt.push(i.n_minus as u8);
            le.push((i.n_minus + i.n_zero) as u8);
        }
        Ok(Snapshot { values, lt, le })
    }

    pub fn view(&self) -> SnapView<'_> {
        SnapView {
            values: &self.values,
            lt: &self.lt,
            le: &self.le,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnapView<'a> {
    values: &'a [f64],
    lt: &'a [u8],
    le: &'a [u8],
}

impl<'a> SnapView<'a> {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Floating spectrum, nonincreasing.
    pub fn values(&self) -> &'a [f64] {
        self.values
    }

    /// `q_i` with 1-based `i`.
    pub fn q(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Exact `#{q_i < t}`. Every eigenvalue lies in `[0, 2n-2]`.
    pub fn lt(&self, t: i64) -> usize {
        if t <= 0 {
            0
        } else {
            self.lt.get(t as usize).map_or(self.order(), |&c| c as usize)
        }
    }

    /// Exact `#{q_i <= t}`.
    pub fn le(&self, t: i64) -> usize {
        if t < 0 {
            0
        } else {
            self.le.get(t as usize).map_or(self.order(), |&c| c as usize)
        }
    }

    /// `m[lo, hi)`
    pub fn m_closed_open(&self, lo: i64, hi: i64) -> usize {
        self.lt(hi).saturating_sub(self.lt(lo))
    }

    /// `m(lo, hi]`
    pub fn m_open_closed(&self, lo: i64, hi: i64) -> usize {
        self.le(hi).saturating_sub(self.le(lo))
    }

    /// `m[lo, hi]`
    pub fn m_closed(&self, lo: i64, hi: i64) -> usize {
        self.le(hi).saturating_sub(self.lt(lo))
    }

    pub fn to_owned(&self) -> Snapshot {
        Snapshot {
            values: self.values.to_vec(),
            lt: self.lt.to_vec(),
            le: self.le.to_vec(),
        }
    }
}

/// Snapshots of every labeled graph on `n` vertices, indexed by edge mask.
#[derive(Debug)]
pub struct LevelTable {
    n: usize,
    k: usize,
    values: Vec<f64>,
    lt: Vec<u8>,
    le: Vec<u8>,
}

const CHUNK: usize = 1024;

impl LevelTable {
    pub fn build(n: usize) -> Result<Self, VerifyError> {
        if n > EXHAUSTIVE_LIMIT {
            return Err(VerifyError::TooLarge {
                n,
                limit: EXHAUSTIVE_LIMIT,
            });
        }
        let count = 1usize << (n * n.saturating_sub(1) / 2);
        let k = thresholds(n);
        let mut values = vec![0.0; count * n];
        let mut lt = vec![0u8; count * k];
        let mut le = vec![0u8; count * k];
        values
            .par_chunks_mut((CHUNK * n).max(1))
            .zip(lt.par_chunks_mut((CHUNK * k).max(1)))
            .zip(le.par_chunks_mut((CHUNK * k).max(1)))
            .enumerate()
            .try_for_each(|(c, ((vals, lts), les))| -> Result<(), VerifyError> {
                let start = c * CHUNK;
                let len = if n == 0 { 1 } else { vals.len() / n };
                for off in 0..len {
                    let s = Snapshot::compute(&Graph::from_edge_mask(n, (start + off) as u64))?;
                    vals[off * n..(off + 1) * n].copy_from_slice(&s.values);
                    lts[off * k..(off + 1) * k].copy_from_slice(&s.lt);
                    les[off * k..(off + 1) * k].copy_from_slice(&s.le);
                }
                Ok(())
            })?;
        Ok(LevelTable { n, k, values, lt, le })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        1 << (self.n * self.n.saturating_sub(1) / 2)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, mask: u64) -> SnapView<'_> {
        let m = mask as usize;
        SnapView {
            values: &self.values[m * self.n..(m + 1) * self.n],
            lt: &self.lt[m * self.k..(m + 1) * self.k],
            le: &self.le[m * self.k..(m + 1) * self.k],
        }
    }
}

/// Source of snapshots: computes them directly, or reads prepared level
/// tables when the order has one.
#[derive(Debug, Default)]
pub struct Context {
    tables: [OnceLock<LevelTable>; EXHAUSTIVE_LIMIT + 1],
}

/// Spectral data of one graph: a table row, or values computed on first
/// use so that a checker pays only for the thresholds it reads.
pub(crate) enum Levels<'a> {
    Table(SnapView<'a>),
    Lazy(Box<LazyLevels>),
}

pub(crate) struct LazyLevels {
    matrix: SymMatrix,
    counter: ExactCounter,
    values: OnceCell<Result<Vec<f64>, EigenError>>,
    /// `(lt, le)` per integer threshold
    levels: Vec<OnceCell<(usize, usize)>>,
}

impl LazyLevels {
    fn new(g: &Graph) -> Self {
        LazyLevels {
            matrix: float_matrix(g, MatrixKind::Q),
            counter: ExactCounter::signless(g),
            values: OnceCell::new(),
            levels: (0..thresholds(g.order())).map(|_| OnceCell::new()).collect(),
        }
    }

    fn level(&self, t: usize) -> Option<(usize, usize)> {
        let cell = self.levels.get(t)?;
        Some(*cell.get_or_init(|| {
            let i = self.counter.inertia_at_int(t as i64);
            (i.n_minus, i.n_minus + i.n_zero)
        }))
    }
}

impl Levels<'_> {
    pub fn order(&self) -> usize {
        match self {
            Levels::Table(v) => v.order(),
            Levels::Lazy(l) => l.counter.order(),
        }
    }

    /// Exact `#{q_i < t}`.
    pub fn lt(&self, t: i64) -> usize {
        match self {
            Levels::Table(v) => v.lt(t),
            Levels::Lazy(_) if t <= 0 => 0,
            Levels::Lazy(l) => l.level(t as usize).map_or(self.order(), |p| p.0),
        }
    }

    /// Exact `#{q_i <= t}`.
    pub fn le(&self, t: i64) -> usize {
        match self {
            Levels::Table(v) => v.le(t),
            Levels::Lazy(_) if t < 0 => 0,
            Levels::Lazy(l) => l.level(t as usize).map_or(self.order(), |p| p.1),
        }
    }

    /// Floating spectrum, nonincreasing.
    pub fn values(&self) -> Result<&[f64], VerifyError> {
        match self {
            Levels::Table(v) => Ok(v.values()),
            Levels::Lazy(l) => match l.values.get_or_init(|| eigenvalues_sym(&l.matrix).map(|s| s.values)) {
                Ok(v) => Ok(v),
                Err(e) => Err(e.clone().into()),
            },
        }
    }
}

impl Context {
    /// No tables; every snapshot is computed on demand.
    pub fn direct() -> Self {
        Self::default()
    }

    /// Builds the level tables for every order in `orders` that is small
    /// enough. Call this before entering a parallel region: lookups never
    /// build tables themselves.
    pub fn prepare(&self, orders: impl IntoIterator<Item = usize>) -> Result<(), VerifyError> {
        for n in orders {
            if n <= EXHAUSTIVE_LIMIT && self.tables[n].get().is_none() {
                let table = LevelTable::build(n)?;
                let _ = self.tables[n].set(table);
            }
        }
        Ok(())
    }

    pub fn table(&self, n: usize) -> Option<&LevelTable> {
        self.tables.get(n).and_then(OnceLock::get)
    }

    pub(crate) fn levels(&self, g: &Graph) -> Levels<'_> {
        match self.table(g.order()) {
            Some(t) => Levels::Table(t.get(g.edge_mask())),
            None => Levels::Lazy(Box::new(LazyLevels::new(g))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn snapshot_counts() {
        // C4: {4, 2, 2, 0}
        let s = Snapshot::compute(&cycle(4)).unwrap();
        let v = s.view();
        assert_eq!((v.lt(0), v.le(0)), (0, 1));
        assert_eq!((v.lt(2), v.le(2)), (1, 3));
        assert_eq!(v.lt(5), 4);
        assert_eq!(v.lt(100), 4);
        assert_eq!(v.le(-1), 0);
        assert_eq!(v.m_closed_open(0, 1), 1);
        assert_eq!(v.m_open_closed(2, 6), 1);
        assert_eq!(v.m_closed(2, 2), 2);
        let one = Snapshot::compute(&Graph::empty(1)).unwrap();
        assert_eq!((one.view().lt(0), one.view().le(0), one.view().lt(1)), (0, 1, 1));
        let zero = Snapshot::compute(&Graph::empty(0)).unwrap();
        assert_eq!(zero.view().le(3), 0);
    }

    #[test]
    fn table_matches_direct() {
        let ctx = Context::direct();
        ctx.prepare(0..=4).unwrap();
        let t = ctx.table(4).unwrap();
        assert_eq!(t.len(), 64);
        for mask in 0..64u64 {
            let g = Graph::from_edge_mask(4, mask);
            assert_eq!(t.get(mask).to_owned(), Snapshot::compute(&g).unwrap());
        }
        assert!(ctx.table(5).is_none());
        let k3 = complete(3);
        assert_eq!(ctx.levels(&k3).lt(4), 2);
    }
}
