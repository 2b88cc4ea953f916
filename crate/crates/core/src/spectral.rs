//! Signless Laplacian and Laplacian builders, exact interval counts and the
//! closed-form spectra of the named graph families.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Roots;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eigen::{eigenvalues_sym, EigenError, Spectrum, SymMatrix, INEQUALITY_SLACK};
use crate::exact::{
    char_poly_eval, int, inertia, inertia_i64, is_equitable, quotient_matrix, shifted_inertia_i64, signum, Inertia,
    LinalgError, Partition, Rational, RationalMatrix, RationalSymMatrix,
};
use crate::graph::{graph6_encode, make_family, FamilySpec, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("invalid interval: {0}")]
    Interval(String),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    /// Signless Laplacian `D + A`.
    Q,
    /// Laplacian `D - A`.
    L,
}

fn integer_matrix(g: &Graph, off: i64) -> Vec<i64> {
    let n = g.order();
    let mut m = vec![0i64; n * n];
    for u in 0..n {
        m[u * n + u] = g.degree(u) as i64;
        for v in g.neighbors(u) {
            m[u * n + v] = off;
        }
    }
    m
}

pub fn signless_laplacian_i64(g: &Graph) -> Vec<i64> {
    integer_matrix(g, 1)
}

pub fn laplacian_i64(g: &Graph) -> Vec<i64> {
    integer_matrix(g, -1)
}

pub fn signless_laplacian(g: &Graph) -> RationalSymMatrix {
    RationalSymMatrix::from_integers(g.order(), &signless_laplacian_i64(g)).expect("Q(G) is symmetric")
}

pub fn laplacian(g: &Graph) -> RationalSymMatrix {
    RationalSymMatrix::from_integers(g.order(), &laplacian_i64(g)).expect("L(G) is symmetric")
}

pub fn float_matrix(g: &Graph, kind: MatrixKind) -> SymMatrix {
    let off = match kind {
        MatrixKind::Q => 1.0,
        MatrixKind::L => -1.0,
    };
    SymMatrix::from_fn(g.order(), |u, v| {
        if u == v {
            g.degree(u) as f64
        } else if g.has_edge(u, v) {
            off
        } else {
            0.0
        }
    })
}

/// Floating spectrum `q₁ ≥ … ≥ q_n` of `Q(G)`.
pub fn q_spectrum(g: &Graph) -> Result<Spectrum, EigenError> {
    eigenvalues_sym(&float_matrix(g, MatrixKind::Q))
}

pub fn l_spectrum(g: &Graph) -> Result<Spectrum, EigenError> {
    eigenvalues_sym(&float_matrix(g, MatrixKind::L))
}

/// Real interval with rational endpoints and independent closedness flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    pub fn try_new(lo: Rational, hi: Rational, lo_closed: bool, hi_closed: bool) -> Result<Self, SpectralError> {
        if lo > hi {
            return Err(SpectralError::Interval(format!("lower end {lo} exceeds upper end {hi}")));
        }
        if lo == hi && !(lo_closed && hi_closed) {
            return Err(SpectralError::Interval(format!(
                "degenerate interval at {lo} must be closed on both ends"
            )));
        }
        Ok(Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    /// `[lo, hi]`
    pub fn closed(lo: i64, hi: i64) -> Result<Self, SpectralError> {
        Self::try_new(int(lo), int(hi), true, true)
    }

    /// `[lo, hi)`
    pub fn closed_open(lo: i64, hi: i64) -> Result<Self, SpectralError> {
        Self::try_new(int(lo), int(hi), true, false)
    }

    /// `(lo, hi]`
    pub fn open_closed(lo: i64, hi: i64) -> Result<Self, SpectralError> {
        Self::try_new(int(lo), int(hi), false, true)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn contains(&self, x: f64) -> bool {
        let lo = self.lo.to_f64().unwrap_or(f64::NEG_INFINITY);
        let hi = self.hi.to_f64().unwrap_or(f64::INFINITY);
        let above = if self.lo_closed { x >= lo } else { x > lo };
        let below = if self.hi_closed { x <= hi } else { x < hi };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// Exact eigenvalue counter for one integer symmetric matrix.
#[derive(Debug, Clone)]
pub struct ExactCounter {
    n: usize,
    m: Vec<i64>,
}

impl ExactCounter {
    pub fn signless(g: &Graph) -> Self {
        ExactCounter {
            n: g.order(),
            m: signless_laplacian_i64(g),
        }
    }

    pub fn laplacian(g: &Graph) -> Self {
        ExactCounter {
            n: g.order(),
            m: laplacian_i64(g),
        }
    }

    pub fn for_kind(g: &Graph, kind: MatrixKind) -> Self {
        match kind {
            MatrixKind::Q => Self::signless(g),
            MatrixKind::L => Self::laplacian(g),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Inertia of `M - tI` for an integer `t`.
    pub fn inertia_at_int(&self, t: i64) -> Inertia {
        shifted_inertia_i64(&self.m, self.n, t, 1)
    }

    /// Inertia of `M - xI`.
    pub fn inertia_at(&self, x: &Rational) -> Inertia {
        match (x.numer().to_i64(), x.denom().to_i64()) {
            (Some(p), Some(q)) => shifted_inertia_i64(&self.m, self.n, p, q),
            _ => {
                let m = RationalSymMatrix::from_integers(self.n, &self.m).expect("symmetric");
                inertia(&m.shifted(x))
            }
        }
    }

    pub fn count_lt(&self, x: &Rational) -> usize {
        self.inertia_at(x).n_minus
    }

    pub fn count_le(&self, x: &Rational) -> usize {
        let i = self.inertia_at(x);
        i.n_minus + i.n_zero
    }

    pub fn count_lt_int(&self, t: i64) -> usize {
        self.inertia_at_int(t).n_minus
    }

    pub fn count_le_int(&self, t: i64) -> usize {
        let i = self.inertia_at_int(t);
        i.n_minus + i.n_zero
    }

    /// Multiplicity of `x` as an eigenvalue.
    pub fn multiplicity(&self, x: &Rational) -> usize {
        self.inertia_at(x).n_zero
    }

    /// Number of eigenvalues in `interval`, counted with multiplicity.
    pub fn count(&self, interval: &Interval) -> usize {
        let below = if interval.lo_closed {
            self.count_lt(&interval.lo)
        } else {
            self.count_le(&interval.lo)
        };
        let upper = if interval.hi_closed {
            self.count_le(&interval.hi)
        } else {
            self.count_lt(&interval.hi)
        };
        upper - below
    }

    pub fn inertia(&self) -> Inertia {
        inertia_i64(&self.m, self.n)
    }
}

/// `m_G I`: signless Laplacian eigenvalues of `G` in `I`, exactly.
pub fn m_count(g: &Graph, interval: &Interval) -> usize {
    ExactCounter::signless(g).count(interval)
}

/// One eigenvalue description of a closed-form spectrum.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedFormValue {
    Exact(Rational),
    /// `(p + √q) / r` when `plus`, else `(p - √q) / r`.
    Surd { p: i64, q: i64, r: i64, plus: bool },
    /// `2 + 2cos(2jπ/n)`.
    Cosine { n: usize, j: usize },
    /// Root of the characteristic polynomial of the stored quotient matrix,
    /// located numerically.
    QuotientRoot(f64),
}

impl ClosedFormValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ClosedFormValue::Exact(r) => r.to_f64().expect("finite"),
            ClosedFormValue::Surd { p, q, r, plus } => {
                let s = (*q as f64).sqrt();
                (*p as f64 + if *plus { s } else { -s }) / *r as f64
            }
            ClosedFormValue::Cosine { n, j } => {
                2.0 + 2.0 * (2.0 * std::f64::consts::PI * *j as f64 / *n as f64).cos()
            }
            ClosedFormValue::QuotientRoot(x) => *x,
        }
    }

    /// The exact value when it is rational.
    pub fn exact(&self) -> Option<Rational> {
        match self {
            ClosedFormValue::Exact(r) => Some(r.clone()),
            ClosedFormValue::Surd { p, q, r, plus } => {
                let s = q.sqrt();
                (s * s == *q).then(|| Rational::new((p + if *plus { s } else { -s }).into(), (*r).into()))
            }
            ClosedFormValue::Cosine { n, j } => {
                // 2cos(2πk/m) is rational only for m ∈ {1, 2, 3, 4, 6}
                let g = num_integer::gcd(*j % *n, *n);
                let twice_cos = match *n / g {
                    1 => 2,
                    2 => -2,
                    3 => -1,
                    4 => 0,
                    6 => 1,
                    _ => return None,
                };
                Some(int(2 + twice_cos))
            }
            ClosedFormValue::QuotientRoot(_) => None,
        }
    }
}

impl fmt::Display for ClosedFormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormValue::Exact(r) => write!(f, "{r}"),
            ClosedFormValue::Surd { p, q, r, plus } => {
                write!(f, "({p} {} sqrt({q}))/{r}", if *plus { '+' } else { '-' })
            }
            ClosedFormValue::Cosine { n, j } => write!(f, "2+2cos(2*{j}*pi/{n})"),
            ClosedFormValue::QuotientRoot(x) => write!(f, "root~{x:.12}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormSpectrum {
    entries: Vec<(ClosedFormValue, usize)>,
    quotient: Option<RationalMatrix>,
}

impl ClosedFormSpectrum {
    fn new(entries: Vec<(ClosedFormValue, usize)>) -> Self {
        ClosedFormSpectrum {
            entries: entries.into_iter().filter(|(_, m)| *m > 0).collect(),
            quotient: None,
        }
    }

    pub fn entries(&self) -> &[(ClosedFormValue, usize)] {
        &self.entries
    }

    /// The quotient matrix whose roots appear as `QuotientRoot` entries.
    pub fn quotient(&self) -> Option<&RationalMatrix> {
        self.quotient.as_ref()
    }

    /// Sum of multiplicities.
    pub fn order(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// All values with multiplicity, nonincreasing.
    pub fn values(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v.to_f64(), *m))
            .collect();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }

    /// Rational eigenvalues with their total multiplicity, ascending.
    pub fn rational_multiplicities(&self) -> Vec<(Rational, usize)> {
        let mut map: BTreeMap<Rational, usize> = BTreeMap::new();
        for (v, m) in &self.entries {
            if let Some(r) = v.exact() {
                *map.entry(r).or_default() += m;
            }
        }
        map.into_iter().collect()
    }
}

fn need(ok: bool, what: impl FnOnce() -> String) -> Result<(), SpectralError> {
    if ok {
        Ok(())
    } else {
        Err(SpectralError::Range(what()))
    }
}

pub fn cycle_spectrum(n: usize) -> Result<ClosedFormSpectrum, SpectralError> {
    need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Ok(ClosedFormSpectrum::new(
        (0..n).map(|j| (ClosedFormValue::Cosine { n, j }, 1)).collect(),
    ))
}

/// `{(3n-6 ± √(n²+4n-12))/2, (n-2)^[n-2]}`.
pub fn kn_minus_e_spectrum(n: usize) -> Result<ClosedFormSpectrum, SpectralError> {
    need(n >= 5, || format!("K_n - e needs n >= 5, got {n}"))?;
    let m = n as i64;
    let (p, q) = (3 * m - 6, m * m + 4 * m - 12);
    Ok(ClosedFormSpectrum::new(vec![
        (ClosedFormValue::Surd { p, q, r: 2, plus: true }, 1),
        (ClosedFormValue::Exact(int(m - 2)), n - 2),
        (ClosedFormValue::Surd { p, q, r: 2, plus: false }, 1),
    ]))
}

/// `{n, n-2, 2^[n-3], 0}`.
pub fn k2_bipartite_spectrum(n: usize) -> Result<ClosedFormSpectrum, SpectralError> {
    need(n >= 4, || format!("K_(2,n-2) needs n >= 4, got {n}"))?;
    let m = n as i64;
    Ok(ClosedFormSpectrum::new(vec![
        (ClosedFormValue::Exact(int(m)), 1),
        (ClosedFormValue::Exact(int(m - 2)), 1),
        (ClosedFormValue::Exact(int(2)), n - 3),
        (ClosedFormValue::Exact(int(0)), 1),
    ]))
}

/// `{2n-2, (n-2)^[n-1]}`, and `{0}` for `n = 1`.
pub fn complete_spectrum(n: usize) -> Result<ClosedFormSpectrum, SpectralError> {
    need(n >= 1, || "K_n needs n >= 1".into())?;
    let m = n as i64;
    Ok(ClosedFormSpectrum::new(vec![
        (ClosedFormValue::Exact(int(2 * m - 2)), 1),
        (ClosedFormValue::Exact(int(m - 2)), n - 1),
    ]))
}

/// Eigenvalues of a quotient matrix of `Q(G)`, computed from its symmetric
/// similar `D^{1/2} B D^{-1/2}` where `D = diag(|V_i|)`.
pub fn quotient_spectrum(g: &Graph, p: &Partition) -> Result<Spectrum, SpectralError> {
    let b = quotient_matrix(g, p)?;
    let sizes: Vec<f64> = p.blocks().iter().map(|b| b.len() as f64).collect();
    let m = b.order();
    let s = SymMatrix::from_fn(m, |i, j| {
        // b_ij |V_i| is the symmetric block total
        let total = b.get(i, j).to_f64().expect("finite") * sizes[i];
        total / (sizes[i] * sizes[j]).sqrt()
    });
    Ok(eigenvalues_sym(&s)?)
}

/// Exact sign of a characteristic polynomial at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct SignCheck {
    pub at: Rational,
    pub value: Rational,
    pub expected: i32,
}

impl SignCheck {
    fn new(b: &RationalMatrix, at: Rational, expected: i32) -> Self {
        let value = char_poly_eval(b, &at);
        SignCheck { at, value, expected }
    }

    pub fn holds(&self) -> bool {
        signum(&self.value) == self.expected
    }
}

/// Quotient data behind the spectrum of `G_{n,3,2,a}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Gn32aAnalysis {
    pub n: usize,
    pub a: usize,
    /// `a = n - 4 - a`
    pub balanced: bool,
    pub graph: Graph,
    pub partition: Partition,
    pub quotient: RationalMatrix,
    /// Quotient roots, nonincreasing.
    pub roots: Vec<f64>,
    pub sign_checks: Vec<SignCheck>,
}

impl Gn32aAnalysis {
    /// The smaller of `a` and `n - 4 - a`; the graph for `a` is the mirror
    /// image of the one for `n - 4 - a`.
    pub fn a_min(&self) -> usize {
        self.a.min(self.n - 4 - self.a)
    }

    /// Floating brackets: `a'+1 < β < n-3 < θ < n-2` with `θ = ρ₂`,
    /// `β = ρ₃` in the general case, `a < γ < a+1` for the smaller root
    /// `γ` in the balanced case. Each comparison allows `1e-8` slack.
    pub fn float_brackets_hold(&self) -> bool {
        let lt = |x: f64, y: f64| x < y + INEQUALITY_SLACK;
        let n = self.n as f64;
        if self.balanced {
            let gamma = self.roots[1];
            let a = self.a as f64;
            lt(a, gamma) && lt(gamma, a + 1.0)
        } else {
            let (theta, beta) = (self.roots[1], self.roots[2]);
            let a1 = self.a_min() as f64 + 1.0;
            lt(a1, beta) && lt(beta, n - 3.0) && lt(n - 3.0, theta) && lt(theta, n - 2.0)
        }
    }

    pub fn sign_checks_hold(&self) -> bool {
        self.sign_checks.iter().all(SignCheck::holds)
    }
}

fn gn32a_range(n: usize, a: usize) -> Result<(), SpectralError> {
    need(n >= 7 && a >= 1 && a + 5 <= n, || {
        format!("G_(n,3,2,a) needs n >= 7 and 1 <= a <= n-5, got n={n}, a={a}")
    })
}

/// Builds `G_{n,3,2,a}`, its equitable partition and quotient, and evaluates
/// the quotient polynomial exactly at the bracketing points.
pub fn gn32a_analysis(n: usize, a: usize) -> Result<Gn32aAnalysis, SpectralError> {
    gn32a_range(n, a)?;
    let g = make_family(&FamilySpec::Gndra { n, d: 3, r: 2, a })?;
    let balanced = 2 * a + 4 == n;
    let partition = if balanced {
        let rest: Vec<usize> = (1..n).filter(|&v| v != 3).collect();
        Partition::new(n, vec![vec![0, 3], rest])?
    } else {
        let mut n1: Vec<usize> = g.neighbors(0).collect();
        let mut n4: Vec<usize> = g.neighbors(3).collect();
        n1.sort_unstable();
        n4.sort_unstable();
        Partition::new(n, vec![vec![0], n1, n4, vec![3]])?
    };
    if !is_equitable(&g, &partition)? {
        return Err(SpectralError::NotEquitable);
    }
    let quotient = quotient_matrix(&g, &partition)?;
    let roots = quotient_spectrum(&g, &partition)?.values;
    let (ni, ai) = (n as i64, a.min(n - 4 - a) as i64);
    let sign_checks = if balanced {
        vec![
            SignCheck::new(&quotient, int(ai + 1), -1),
            SignCheck::new(&quotient, int(ai), 1),
        ]
    } else {
        vec![
            SignCheck::new(&quotient, int(ni - 2), -1),
            SignCheck::new(&quotient, int(ni - 3), 1),
            SignCheck::new(&quotient, int(ai + 1), -1),
        ]
    };
    Ok(Gn32aAnalysis {
        n,
        a,
        balanced,
        graph: g,
        partition,
        quotient,
        roots,
        sign_checks,
    })
}

/// `{(n-3)^[n-4]}` plus the quotient roots; in the balanced case also the
/// exact eigenvalues `n-2` and `a`.
pub fn gn32a_partial_spectrum(n: usize, a: usize) -> Result<ClosedFormSpectrum, SpectralError> {
    let an = gn32a_analysis(n, a)?;
    let ni = n as i64;
    let mut entries = vec![(ClosedFormValue::Exact(int(ni - 3)), n - 4)];
    if an.balanced {
        entries.push((ClosedFormValue::Exact(int(ni - 2)), 1));
        entries.push((ClosedFormValue::Exact(int(a as i64)), 1));
    }
    entries.extend(an.roots.iter().map(|&x| (ClosedFormValue::QuotientRoot(x), 1)));
    let mut s = ClosedFormSpectrum::new(entries);
    s.quotient = Some(an.quotient);
    Ok(s)
}

/// `q₁(P_n) < 4`, certified exactly as `count_lt(Q(P_n), 4) = n`.
pub fn path_bound_holds(n: usize) -> bool {
    let p = crate::graph::path(n);
    ExactCounter::signless(&p).count_lt_int(4) == n
}

/// Matches sorted closed-form values against sorted computed values.
pub fn max_deviation(closed: &[f64], computed: &[f64]) -> Option<f64> {
    (closed.len() == computed.len()).then(|| {
        closed
            .iter()
            .zip(computed)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub graph: String,
    pub matrix: MatrixKind,
    pub eigenvalues: Vec<f64>,
    /// Threshold (as an exact rational string) to the number of eigenvalues
    /// strictly below it.
    pub exact_counts: BTreeMap<String, usize>,
}

/// Report for `Q` or `L` with exact counts at every integer threshold in
/// `[0, 2n-2]` plus any extra thresholds.
pub fn spectrum_report(g: &Graph, kind: MatrixKind, extra: &[Rational]) -> Result<SpectrumReport, SpectralError> {
    let spectrum = eigenvalues_sym(&float_matrix(g, kind))?;
    let counter = ExactCounter::for_kind(g, kind);
    let top = (2 * g.order()).saturating_sub(2) as i64;
    let mut exact_counts = BTreeMap::new();
    for t in 0..=top {
        exact_counts.insert(t.to_string(), counter.count_lt_int(t));
    }
    for x in extra {
        exact_counts.insert(x.to_string(), counter.count_lt(x));
    }
    Ok(SpectrumReport {
        graph: graph6_encode(g),
        matrix: kind,
        eigenvalues: spectrum.values,
        exact_counts,
    })
}

/// Whether `x` is within the floating guard band of some value.
pub fn near_any(values: &[f64], x: f64, band: f64) -> bool {
    values.iter().any(|v| (v - x).abs() <= band)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::{complete, complete_bipartite, cycle, path};

    fn sorted_eq(closed: &ClosedFormSpectrum, g: &Graph) {
        let s = q_spectrum(g).unwrap();
        let dev = max_deviation(&closed.values(), &s.values).unwrap();
        assert!(dev <= 1e-8, "{dev} for {g:?}");
    }

    #[test]
    fn builders() {
        assert_eq!(
            signless_laplacian(&path(3)),
            RationalSymMatrix::from_integers(3, &[1, 1, 0, 1, 2, 1, 0, 1, 1]).unwrap()
        );
        assert_eq!(
            signless_laplacian(&complete(3)),
            RationalSymMatrix::from_integers(3, &[2, 1, 1, 1, 2, 1, 1, 1, 2]).unwrap()
        );
        assert_eq!(
            laplacian(&complete(2)),
            RationalSymMatrix::from_integers(2, &[1, -1, -1, 1]).unwrap()
        );
        let l = l_spectrum(&cycle(4)).unwrap();
        assert!(max_deviation(&l.values, &[4.0, 2.0, 2.0, 0.0]).unwrap() < 1e-9);
    }

    #[test]
    fn interval_validation_and_display() {
        assert!(Interval::closed_open(3, 2).is_err());
        assert!(Interval::closed_open(2, 2).is_err());
        assert!(Interval::closed(2, 2).is_ok());
        let i = Interval::try_new(rat(1, 2), int(3), false, true).unwrap();
        assert_eq!(i.to_string(), "(1/2,3]");
        assert!(i.contains(3.0) && !i.contains(0.5));
    }

    #[test]
    fn interval_counts() {
        assert_eq!(m_count(&cycle(5), &Interval::closed_open(0, 1).unwrap()), 2);
        assert_eq!(m_count(&complete_bipartite(2, 3), &Interval::closed_open(0, 1).unwrap()), 1);
        assert_eq!(m_count(&complete(6), &Interval::closed_open(0, 4).unwrap()), 0);
        // K4: {6, 2, 2, 2}
        let k4 = ExactCounter::signless(&complete(4));
        assert_eq!(k4.count(&Interval::closed(2, 2).unwrap()), 3);
        assert_eq!(k4.count(&Interval::open_closed(2, 6).unwrap()), 1);
        assert_eq!(k4.count(&Interval::try_new(int(2), int(6), false, false).unwrap()), 0);
        assert_eq!(k4.count(&Interval::try_new(rat(3, 2), rat(5, 2), false, false).unwrap()), 3);
    }

    #[test]
    fn kn_minus_e_counts() {
        let g = make_family(&FamilySpec::CompleteMinusEdge { n: 5 }).unwrap();
        let c = ExactCounter::signless(&g);
        assert_eq!(c.count_lt_int(3), 1);
        assert_eq!(c.count_le_int(3), 4);
        assert_eq!(c.count_lt_int(0), 0);
    }

    #[test]
    fn cycle_closed_forms() {
        let vals = |n| cycle_spectrum(n).unwrap().values();
        let approx = |a: Vec<f64>, b: &[f64]| max_deviation(&a, b).unwrap() < 1e-12;
        assert!(approx(vals(3), &[4.0, 1.0, 1.0]));
        assert!(approx(vals(4), &[4.0, 2.0, 2.0, 0.0]));
        assert!(approx(vals(6), &[4.0, 3.0, 3.0, 1.0, 1.0, 0.0]));
        let six = cycle_spectrum(6).unwrap().rational_multiplicities();
        assert_eq!(six, vec![(int(0), 1), (int(1), 2), (int(3), 2), (int(4), 1)]);
        assert!(cycle_spectrum(2).is_err());
        for n in 3..=12 {
            sorted_eq(&cycle_spectrum(n).unwrap(), &cycle(n));
        }
    }

    #[test]
    fn other_closed_forms() {
        let k5e = kn_minus_e_spectrum(5).unwrap().values();
        assert!((k5e[0] - 7.372281323269014).abs() < 1e-12);
        assert!((k5e[4] - 1.6277186767309857).abs() < 1e-12);
        let k6e = kn_minus_e_spectrum(6).unwrap().values();
        assert!((k6e[0] - 9.464101615137754).abs() < 1e-12);
        assert!((k6e[5] - 2.5358983848622456).abs() < 1e-12);
        assert_eq!(k2_bipartite_spectrum(5).unwrap().values(), vec![5.0, 3.0, 2.0, 2.0, 0.0]);
        assert_eq!(
            k2_bipartite_spectrum(4).unwrap().rational_multiplicities(),
            cycle_spectrum(4).unwrap().rational_multiplicities()
        );
        assert_eq!(complete_spectrum(4).unwrap().values(), vec![6.0, 2.0, 2.0, 2.0]);
        assert_eq!(complete_spectrum(2).unwrap().values(), vec![2.0, 0.0]);
        assert_eq!(complete_spectrum(1).unwrap().values(), vec![0.0]);
        for n in 5..=9 {
            let s = kn_minus_e_spectrum(n).unwrap();
            assert_eq!(s.order(), n);
            sorted_eq(&s, &make_family(&FamilySpec::CompleteMinusEdge { n }).unwrap());
        }
        assert!(kn_minus_e_spectrum(4).is_err());
        assert!(k2_bipartite_spectrum(3).is_err());
    }

    #[test]
    fn g6321_eigenvalue_three() {
        // spectrum {7.372, 4, 3, 3, 1.628, 1}
        let g = make_family(&FamilySpec::Gndra { n: 6, d: 3, r: 2, a: 1 }).unwrap();
        let s = q_spectrum(&g).unwrap();
        assert!((s.rho(3) - 3.0).abs() < 1e-9 && (s.rho(4) - 3.0).abs() < 1e-9);
        assert_eq!(ExactCounter::signless(&g).multiplicity(&int(3)), 2);
    }

    #[test]
    fn gn32a_cases() {
        let balanced = gn32a_analysis(8, 2).unwrap();
        assert!(balanced.balanced);
        assert!(balanced.sign_checks_hold() && balanced.float_brackets_hold());
        let c = ExactCounter::signless(&balanced.graph);
        assert_eq!(c.multiplicity(&int(6)), 1);
        assert_eq!(c.multiplicity(&int(2)), 1);
        // h(a) = 2a + 2
        assert_eq!(balanced.sign_checks[1].value, int(6));
        assert_eq!(balanced.sign_checks[0].value, int(-3));

        let general = gn32a_analysis(8, 1).unwrap();
        assert!(!general.balanced);
        assert!(general.sign_checks_hold() && general.float_brackets_hold());
        assert_eq!(general.sign_checks[1].value, int(40));

        let s = gn32a_partial_spectrum(7, 1).unwrap();
        assert_eq!(s.order(), 7);
        sorted_eq(&s, &make_family(&FamilySpec::Gndra { n: 7, d: 3, r: 2, a: 1 }).unwrap());
        let q = q_spectrum(&make_family(&FamilySpec::Gndra { n: 7, d: 3, r: 2, a: 1 }).unwrap()).unwrap();
        for i in 3..=5 {
            assert!((q.rho(i) - 4.0).abs() < 1e-9);
        }
        assert!(q.rho(6) < 4.0);
        assert!(gn32a_analysis(6, 1).is_err());
        assert!(gn32a_analysis(8, 4).is_err());
    }

    #[test]
    fn path_bound() {
        for n in 1..=64 {
            assert!(path_bound_holds(n), "n = {n}");
        }
    }

    #[test]
    fn rational_thresholds() {
        // C4 has eigenvalues {4, 2, 2, 0}
        let c = ExactCounter::signless(&cycle(4));
        assert_eq!(c.count_lt(&rat(5, 2)), 3);
        assert_eq!(c.count_le(&rat(1, 1_000_000_000_000)), 1);
        let huge = Rational::new(num_bigint::BigInt::from(10).pow(30) + 1, num_bigint::BigInt::from(10).pow(30));
        assert_eq!(c.count_lt(&huge), 1);
    }

    #[test]
    fn report_json() {
        let r = spectrum_report(&complete(3), MatrixKind::Q, &[rat(3, 2)]).unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["graph"], "Bw");
        assert_eq!(j["matrix"], "Q");
        assert_eq!(j["exact_counts"]["2"], 2);
        assert_eq!(j["exact_counts"]["3/2"], 2);
        assert_eq!(j["exact_counts"]["4"], 2);
    }
}
