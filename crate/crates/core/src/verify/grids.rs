//! Checkers for statements about parameterised families.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Instance, Verdict, Witness};
use super::{TheoremId, TheoremKind, TheoremReport, VerifyError};
use crate::eigen::INEQUALITY_SLACK;
use crate::exact::int;
use crate::graph::{cycle, make_family, path, FamilySpec, Graph};
use crate::invariants::matching_number;
use crate::spectral::{
    complete_spectrum, cycle_spectrum, gn32a_analysis, gn32a_partial_spectrum, k2_bipartite_spectrum,
    kn_minus_e_spectrum, max_deviation, q_spectrum, ClosedFormSpectrum, ExactCounter,
};

/// Families with a closed-form signless Laplacian spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFamily {
    Cycle,
    Complete,
    K2Bipartite,
    KnMinusE,
}

impl ClosedFamily {
    pub const ALL: [ClosedFamily; 4] = [
        ClosedFamily::Cycle,
        ClosedFamily::Complete,
        ClosedFamily::K2Bipartite,
        ClosedFamily::KnMinusE,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClosedFamily::Cycle => "cycle",
            ClosedFamily::Complete => "complete",
            ClosedFamily::K2Bipartite => "k2-bipartite",
            ClosedFamily::KnMinusE => "kn-minus-e",
        }
    }

    /// Smallest order the closed form covers.
    pub fn min_order(self) -> usize {
        match self {
            ClosedFamily::Cycle => 3,
            ClosedFamily::Complete => 2,
            ClosedFamily::K2Bipartite => 4,
            ClosedFamily::KnMinusE => 5,
        }
    }

    pub fn spec(self, n: usize) -> FamilySpec {
        match self {
            ClosedFamily::Cycle => FamilySpec::Cycle { n },
            ClosedFamily::Complete => FamilySpec::Complete { n },
            ClosedFamily::K2Bipartite => FamilySpec::CompleteBipartite { a: 2, b: n.saturating_sub(2) },
            ClosedFamily::KnMinusE => FamilySpec::CompleteMinusEdge { n },
        }
    }

    pub fn spectrum(self, n: usize) -> Result<ClosedFormSpectrum, VerifyError> {
        Ok(match self {
            ClosedFamily::Cycle => cycle_spectrum(n)?,
            ClosedFamily::Complete => complete_spectrum(n)?,
            ClosedFamily::K2Bipartite => k2_bipartite_spectrum(n)?,
            ClosedFamily::KnMinusE => kn_minus_e_spectrum(n)?,
        })
    }
}

impl fmt::Display for ClosedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClosedFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        ClosedFamily::ALL
            .into_iter()
            .find(|f| f.as_str() == key)
            .ok_or_else(|| format!("unknown closed-form family `{s}`"))
    }
}

/// One point of a parameter grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "grid", rename_all = "snake_case")]
pub enum GridInstance {
    CycleMatching { n: usize },
    PathBound { n: usize },
    ClosedForm { family: ClosedFamily, n: usize },
    G6321,
    Gn32a { n: usize, a: usize },
    Gndt { n: usize, d: usize, t: usize },
    Gn3t1 { n: usize, t: usize },
    Gndta { n: usize, d: usize, t: usize, a: usize },
    Dia3 { n: usize, a: Option<usize> },
    LaplacianRemark { n: usize, d: usize, t: usize },
}

impl GridInstance {
    pub fn theorem(&self) -> TheoremId {
        match self {
            GridInstance::CycleMatching { .. } => TheoremId::CycleMatching,
            GridInstance::PathBound { .. } => TheoremId::PathBound,
            GridInstance::ClosedForm { .. } => TheoremId::ClosedForms,
            GridInstance::G6321 => TheoremId::G6321,
            GridInstance::Gn32a { .. } => TheoremId::Gn32aSpectrum,
            GridInstance::Gndt { .. } => TheoremId::GndtBound,
            GridInstance::Gn3t1 { .. } => TheoremId::Gn3t1Q5,
            GridInstance::Gndta { .. } => TheoremId::GndtaBound,
            GridInstance::Dia3 { .. } => TheoremId::Dia3Equality,
            GridInstance::LaplacianRemark { .. } => TheoremId::LaplacianRemark,
        }
    }

    pub fn run(&self) -> Result<TheoremReport, VerifyError> {
        match *self {
            GridInstance::CycleMatching { n } => check_cycle_matching(n),
            GridInstance::PathBound { n } => check_path_bound(n),
            GridInstance::ClosedForm { family, n } => check_closed_form(family, n),
            GridInstance::G6321 => check_g6321(),
            GridInstance::Gn32a { n, a } => check_gn32a_spectrum(n, a),
            GridInstance::Gndt { n, d, t } => check_family_lemmas(n, d, t, None),
            GridInstance::Gn3t1 { n, t } => check_gn3t1_q5(n, t),
            GridInstance::Gndta { n, d, t, a } => check_family_lemmas(n, d, t, Some(a)),
            GridInstance::Dia3 { n, a } => check_dia3(n, a),
            GridInstance::LaplacianRemark { n, d, t } => check_laplacian_remark(n, d, t),
        }
    }
}

/// Orders swept by default for each grid statement.
pub fn default_grid_range(id: TheoremId) -> RangeInclusive<usize> {
    match id {
        TheoremId::CycleMatching => 3..=60,
        TheoremId::PathBound => 1..=64,
        TheoremId::ClosedForms => 2..=30,
        TheoremId::Gn32aSpectrum => 7..=14,
        TheoremId::G6321 => 6..=6,
        _ => 7..=12,
    }
}

/// Every legal parameter combination of the grid statement `id` whose
/// order lies in `orders`.
pub fn grid_instances(id: TheoremId, orders: RangeInclusive<usize>) -> Result<Vec<GridInstance>, VerifyError> {
    if id.kind() != TheoremKind::Grid {
        return Err(VerifyError::WrongKind(id, "graphs"));
    }
    let mut out = Vec::new();
    for n in orders {
        match id {
            TheoremId::CycleMatching if n >= 3 => out.push(GridInstance::CycleMatching { n }),
            TheoremId::PathBound if n >= 1 => out.push(GridInstance::PathBound { n }),
            TheoremId::ClosedForms => out.extend(
                ClosedFamily::ALL
                    .into_iter()
                    .filter(|f| n >= f.min_order())
                    .map(|family| GridInstance::ClosedForm { family, n }),
            ),
            TheoremId::G6321 if n == 6 => out.push(GridInstance::G6321),
            TheoremId::Gn32aSpectrum if n >= 7 => out.extend((1..=n - 5).map(|a| GridInstance::Gn32a { n, a })),
            TheoremId::GndtBound if n >= 5 => {
                for d in 2..=n - 3 {
                    out.extend((2..=d).map(|t| GridInstance::Gndt { n, d, t }));
                }
            }
            TheoremId::Gn3t1Q5 if n >= 6 => out.extend((2..=n - 4).map(|t| GridInstance::Gn3t1 { n, t })),
            TheoremId::GndtaBound if n >= 6 => {
                for d in 3..=n - 3 {
                    for t in 2..d {
                        out.extend((1..=n - d - 2).map(|a| GridInstance::Gndta { n, d, t, a }));
                    }
                }
            }
            TheoremId::Dia3Equality if n >= 7 => {
                out.push(GridInstance::Dia3 { n, a: None });
                out.extend((1..=n - 5).map(|a| GridInstance::Dia3 { n, a: Some(a) }));
            }
            TheoremId::LaplacianRemark if n >= 9 => {
                for d in 4..=n - 5 {
                    out.extend((3..d).map(|t| GridInstance::LaplacianRemark { n, d, t }));
                }
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Runs every instance of a grid in parallel; reports come back in grid order.
pub fn run_grid(id: TheoremId, orders: RangeInclusive<usize>) -> Result<Vec<TheoremReport>, VerifyError> {
    grid_instances(id, orders)?.par_iter().map(GridInstance::run).collect()
}

fn range_err(what: String) -> VerifyError {
    VerifyError::Range(what)
}

fn build(spec: FamilySpec) -> Result<(Graph, Instance), VerifyError> {
    let g = make_family(&spec)?;
    Ok((g, Instance::Family(spec)))
}

pub fn check_closed_form(family: ClosedFamily, n: usize) -> Result<TheoremReport, VerifyError> {
    if n < family.min_order() {
        return Err(range_err(format!("{family} closed form needs n >= {}, got {n}", family.min_order())));
    }
    let closed = family.spectrum(n)?;
    let (g, instance) = build(family.spec(n))?;
    let computed = q_spectrum(&g)?;
    let deviation = max_deviation(&closed.values(), &computed.values);
    let counter = ExactCounter::signless(&g);
    let mut mismatches = Vec::new();
    let mut multiplicities = Vec::new();
    for (value, m) in closed.rational_multiplicities() {
        let exact = counter.multiplicity(&value);
        if exact != m {
            mismatches.push(value.to_string());
        }
        multiplicities.push((value.to_string(), m, exact));
    }
    let ok = deviation.is_some_and(|d| d <= INEQUALITY_SLACK) && mismatches.is_empty();
    let w = Witness::new()
        .put("max_deviation", deviation)
        .put("multiplicities", multiplicities)
        .put("mismatches", mismatches);
    let w = if ok { w } else { w.put("closed", closed.values()).put("computed", &computed.values) };
    Ok(Verdict::judge(ok, w).into_report(TheoremId::ClosedForms, instance))
}

/// `m[0,1)` of a cycle against the residue formula and against `ν - 1`.
pub fn check_cycle_matching(n: usize) -> Result<TheoremReport, VerifyError> {
    if n < 3 {
        return Err(range_err(format!("cycle needs n >= 3, got {n}")));
    }
    let g = cycle(n);
    let m = ExactCounter::signless(&g).count_lt_int(1);
    let ceil = n.div_ceil(3);
    let formula = if n % 3 == 2 { ceil } else { ceil - 1 };
    let nu = matching_number(&g);
    let strict = n != 5;
    let ok = m == formula && (!strict || m < nu);
    let w = Witness::new().put("m_0_1", m).put("formula", formula).put("nu", nu);
    Ok(Verdict::judge(ok, w).into_report(TheoremId::CycleMatching, Instance::Family(FamilySpec::Cycle { n })))
}

/// `q₁(P_n) < 4`. The witness also records `m[0,2)` against `n - 2`.
pub fn check_path_bound(n: usize) -> Result<TheoremReport, VerifyError> {
    if n < 1 {
        return Err(range_err("path needs n >= 1".into()));
    }
    let counter = ExactCounter::signless(&path(n));
    let below4 = counter.count_lt_int(4);
    let m02 = counter.count_lt_int(2);
    let w = Witness::new()
        .put("count_lt_4", below4)
        .put("m_0_2", m02)
        .put("m_0_2_below_n_minus_2", m02 + 2 < n);
    Ok(Verdict::judge(below4 == n, w).into_report(TheoremId::PathBound, Instance::Family(FamilySpec::Path { n })))
}

/// `q₃ = q₄ = 3` for `G_{6,3,2,1}`.
pub fn check_g6321() -> Result<TheoremReport, VerifyError> {
    let (g, instance) = build(FamilySpec::Gndra { n: 6, d: 3, r: 2, a: 1 })?;
    let counter = ExactCounter::signless(&g);
    let (lt, le) = (counter.count_lt_int(3), counter.count_le_int(3));
    let w = Witness::new().put("count_lt_3", lt).put("count_le_3", le).put("spectrum", q_spectrum(&g)?.values);
    Ok(Verdict::judge(lt == 2 && le == 4, w).into_report(TheoremId::G6321, instance))
}

fn gn32a_range(n: usize, a: usize) -> Result<(), VerifyError> {
    if n < 7 || a < 1 || a + 5 > n {
        return Err(range_err(format!("G_(n,3,2,a) needs n >= 7 and 1 <= a <= n-5, got n={n}, a={a}")));
    }
    Ok(())
}

/// Spectral structure of `G_{n,3,2,a}`: exact counts at `n-3`, exact signs
/// of the quotient polynomial, floating root brackets, and agreement of the
/// assembled spectrum with the eigensolver.
pub fn check_gn32a_spectrum(n: usize, a: usize) -> Result<TheoremReport, VerifyError> {
    gn32a_range(n, a)?;
    let an = gn32a_analysis(n, a)?;
    let counter = ExactCounter::signless(&an.graph);
    let ni = n as i64;
    let mult = counter.multiplicity(&int(ni - 3));
    let below = counter.count_lt_int(ni - 3);
    let mut ok = mult + 4 >= n && below == 2 && an.sign_checks_hold() && an.float_brackets_hold();
    let mut w = Witness::new()
        .put("balanced", an.balanced)
        .put("multiplicity_n_minus_3", mult)
        .put("m_0_n_minus_3", below)
        .put("quotient_roots", &an.roots)
        .put(
            "sign_checks",
            an.sign_checks
                .iter()
                .map(|s| (s.at.to_string(), s.value.to_string(), s.expected))
                .collect::<Vec<_>>(),
        )
        .put("brackets_hold", an.float_brackets_hold());
    if an.balanced {
        let top = counter.multiplicity(&int(ni - 2));
        let low = counter.multiplicity(&int(a as i64));
        ok &= top >= 1 && low >= 1;
        w = w.put("multiplicity_n_minus_2", top).put("multiplicity_a", low);
    }
    let assembled = gn32a_partial_spectrum(n, a)?.values();
    let deviation = max_deviation(&assembled, &q_spectrum(&an.graph)?.values);
    ok &= deviation.is_some_and(|d| d <= INEQUALITY_SLACK);
    w = w.put("max_deviation", deviation);
    let spec = FamilySpec::Gndra { n, d: 3, r: 2, a };
    Ok(Verdict::judge(ok, w).into_report(TheoremId::Gn32aSpectrum, Instance::Family(spec)))
}

/// `m[0,n-d+1) >= d` for `G_{n,d,t}` (`a = None`) or `G_{n,d,t,a}`.
pub fn check_family_lemmas(n: usize, d: usize, t: usize, a: Option<usize>) -> Result<TheoremReport, VerifyError> {
    let (id, spec) = match a {
        None => {
            if !(2 <= t && t <= d && d + 3 <= n) {
                return Err(range_err(format!("needs 2 <= t <= d <= n-3, got n={n}, d={d}, t={t}")));
            }
            (TheoremId::GndtBound, FamilySpec::Gndt { n, d, t })
        }
        Some(a) => {
            if !(d >= 3 && d + 3 <= n && 2 <= t && t < d && a >= 1 && a + d + 2 <= n) {
                return Err(range_err(format!(
                    "needs 3 <= d <= n-3, 2 <= t <= d-1, 1 <= a <= n-d-2, got n={n}, d={d}, t={t}, a={a}"
                )));
            }
            (TheoremId::GndtaBound, FamilySpec::Gndra { n, d, r: t, a })
        }
    };
    let (g, instance) = build(spec)?;
    let threshold = (n - d + 1) as i64;
    let m = ExactCounter::signless(&g).count_lt_int(threshold);
    let w = Witness::new().put("threshold", threshold).put("m_0_threshold", m).put("d", d);
    Ok(Verdict::judge(m >= d, w).into_report(id, instance))
}

/// `q₅(G_{n,n-3,t,1}) < 4`, certified as `count_lt(4) >= n-4`.
pub fn check_gn3t1_q5(n: usize, t: usize) -> Result<TheoremReport, VerifyError> {
    if n < 6 || t < 2 || t + 4 > n {
        return Err(range_err(format!("needs n >= 6 and 2 <= t <= n-4, got n={n}, t={t}")));
    }
    let (g, instance) = build(FamilySpec::Gndra { n, d: n - 3, r: t, a: 1 })?;
    let below = ExactCounter::signless(&g).count_lt_int(4);
    let w = Witness::new().put("count_lt_4", below).put("required", n - 4);
    Ok(Verdict::judge(below + 4 >= n, w).into_report(TheoremId::Gn3t1Q5, instance))
}

/// Equality `m[0,n-3) = 2` for `G_{n,3,2}` (`a = None`) or `G_{n,3,2,a}`,
/// with the eigenvalue `n-3` of multiplicity exactly `n-4`.
pub fn check_dia3(n: usize, a: Option<usize>) -> Result<TheoremReport, VerifyError> {
    let spec = match a {
        None if n >= 7 => FamilySpec::Gndt { n, d: 3, t: 2 },
        None => return Err(range_err(format!("needs n >= 7, got {n}"))),
        Some(a) => {
            gn32a_range(n, a)?;
            FamilySpec::Gndra { n, d: 3, r: 2, a }
        }
    };
    let (g, instance) = build(spec)?;
    let counter = ExactCounter::signless(&g);
    let ni = n as i64;
    let below = counter.count_lt_int(ni - 3);
    let mult = counter.multiplicity(&int(ni - 3));
    let w = Witness::new().put("m_0_n_minus_3", below).put("multiplicity_n_minus_3", mult);
    Ok(Verdict::judge(below == 2 && mult + 4 == n, w).into_report(TheoremId::Dia3Equality, instance))
}

/// Exactly `d-1` Laplacian eigenvalues of `G_{n,d,t}` in `[0,n-d+1)`,
/// contrasted with at least `d` signless ones.
pub fn check_laplacian_remark(n: usize, d: usize, t: usize) -> Result<TheoremReport, VerifyError> {
    if !(d + 5 <= n && 3 <= t && t < d) {
        return Err(range_err(format!("needs d <= n-5 and 3 <= t <= d-1, got n={n}, d={d}, t={t}")));
    }
    let (g, instance) = build(FamilySpec::Gndt { n, d, t })?;
    let threshold = (n - d + 1) as i64;
    let lap = ExactCounter::laplacian(&g).count_lt_int(threshold);
    let sig = ExactCounter::signless(&g).count_lt_int(threshold);
    let w = Witness::new().put("threshold", threshold).put("laplacian_count", lap).put("signless_count", sig);
    Ok(Verdict::judge(lap + 1 == d && sig >= d, w).into_report(TheoremId::LaplacianRemark, instance))
}
