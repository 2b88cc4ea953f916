//! Checkers for statements quantified over arbitrary graphs.

use std::cell::OnceCell;

use super::report::{Instance, Verdict, Witness};
use super::snapshot::{Context, Levels};
use super::{TheoremId, TheoremKind, TheoremReport, VerifyError};
use crate::eigen::INEQUALITY_SLACK;
use crate::graph::Graph;
use crate::invariants::{diameter, domination_number, independence_number, longest_path_length, matching_number};

/// Floating counts are compared with exact ones only at thresholds with no
/// computed eigenvalue closer than this.
pub const GUARD_BAND: f64 = 1e-6;

/// One graph with its snapshot and lazily computed invariants.
pub(crate) struct Case<'a> {
    pub ctx: &'a Context,
    pub g: &'a Graph,
    levels: Levels<'a>,
    nu: OnceCell<usize>,
    diam: OnceCell<Option<usize>>,
}

impl<'a> Case<'a> {
    pub fn new(ctx: &'a Context, g: &'a Graph) -> Result<Self, VerifyError> {
        Ok(Case {
            ctx,
            g,
            levels: ctx.levels(g),
            nu: OnceCell::new(),
            diam: OnceCell::new(),
        })
    }

    fn s(&self) -> &Levels<'a> {
        &self.levels
    }

    fn n(&self) -> usize {
        self.g.order()
    }

    fn ni(&self) -> i64 {
        self.g.order() as i64
    }

    fn nu(&self) -> usize {
        *self.nu.get_or_init(|| matching_number(self.g))
    }

    fn diam(&self) -> Option<usize> {
        *self.diam.get_or_init(|| diameter(self.g))
    }

    fn connected(&self) -> bool {
        self.diam().is_some()
    }

    fn no_isolated(&self) -> bool {
        self.n() > 0 && !self.g.has_isolated_vertex()
    }

    pub fn report(&self, id: TheoremId, verdict: Verdict) -> TheoremReport {
        verdict.into_report(id, Instance::graph(self.g))
    }

    pub fn run(&self, id: TheoremId) -> Result<Verdict, VerifyError> {
        match id {
            TheoremId::EdgeInterlacing => self.edge_interlacing_all(),
            TheoremId::VertexDeletion => self.vertex_deletion_all(),
            TheoremId::MatchingUpper => Ok(self.matching_upper()),
            TheoremId::Delta2 => Ok(self.delta2()),
            TheoremId::DominationBound => self.domination_bound(),
            TheoremId::M02Bound => Ok(self.m02_bound()),
            TheoremId::AlphaSandwich => self.alpha_sandwich(),
            TheoremId::LongestPath => self.longest_path(),
            TheoremId::DiameterMain => Ok(self.diameter_main()),
            TheoremId::HighIndexBound => self.high_index_bound(),
            TheoremId::IntroBounds => Ok(self.intro_bounds()),
            TheoremId::Dia3 => Ok(self.dia3()),
            TheoremId::SolverAgreement => self.solver_agreement(),
            other => Err(VerifyError::WrongKind(other, "parameter grids")),
        }
    }

    pub fn edge_interlacing(&self, u: usize, v: usize) -> Result<Verdict, VerifyError> {
        let h = self.g.remove_edge(u, v)?;
        let hq = self.ctx.levels(&h);
        let gq = self.s();
        let n = self.n();
        let (q, p) = (gq.values()?, hq.values()?);
        let float_bad = (0..n).find(|&i| p[i] > q[i] + INEQUALITY_SLACK || (i + 1 < n && p[i] < q[i + 1] - INEQUALITY_SLACK));
        let top = (2 * n).saturating_sub(2) as i64;
        // removing an edge moves each count up by at most one
        let exact_bad = (0..=top).find(|&t| {
            let (a, b) = (gq.lt(t), hq.lt(t));
            let (c, d) = (gq.le(t), hq.le(t));
            b < a || b > a + 1 || d < c || d > c + 1
        });
        let ok = float_bad.is_none() && exact_bad.is_none();
        let mut w = Witness::new().put("edge", [u, v]);
        if !ok {
            w = w
                .put("q_g", q)
                .put("q_g_minus_e", p)
                .put("float_violation_index", float_bad.map(|i| i + 1))
                .put("exact_violation_threshold", exact_bad);
            if let Some(t) = exact_bad {
                w = w
                    .put("lt_g", gq.lt(t))
                    .put("lt_g_minus_e", hq.lt(t))
                    .put("le_g", gq.le(t))
                    .put("le_g_minus_e", hq.le(t));
            }
        }
        let mut verdict = Verdict::judge(ok, w);
        if float_bad.is_some() && exact_bad.is_none() {
            verdict = verdict.note("floating chain violated; exact counts are consistent");
        }
        Ok(verdict)
    }

    fn edge_interlacing_all(&self) -> Result<Verdict, VerifyError> {
        let edges: Vec<(usize, usize)> = self.g.edges().collect();
        if edges.is_empty() {
            return Ok(Verdict::not_applicable("no edges"));
        }
        for &(u, v) in &edges {
            let verdict = self.edge_interlacing(u, v)?;
            if verdict.status != super::Status::Pass {
                return Ok(verdict);
            }
        }
        Ok(Verdict::judge(true, Witness::new().put("edges_checked", edges.len())))
    }

    pub fn vertex_deletion(&self, v: usize) -> Result<Verdict, VerifyError> {
        let n = self.n();
        if n < 2 {
            return Ok(Verdict::not_applicable("needs n >= 2"));
        }
        let h = self.g.delete_vertex(v)?;
        let hq = self.ctx.levels(&h);
        let gq = self.s();
        let (q, p) = (gq.values()?, hq.values()?);
        let float_bad = (1..n).find(|&i| q[i] > p[i - 1] + 1.0 + INEQUALITY_SLACK);
        let top = (2 * n).saturating_sub(2) as i64;
        // q_{i+1}(G) <= q_i(G-v) + 1 gives #{q(G) < t} >= #{q(G-v) < t-1}
        let exact_bad = (1..=top).find(|&t| gq.lt(t) < hq.lt(t - 1) || gq.le(t) < hq.le(t - 1));
        let ok = float_bad.is_none() && exact_bad.is_none();
        let mut w = Witness::new().put("vertex", v);
        if !ok {
            w = w
                .put("q_g", q)
                .put("q_g_minus_v", p)
                .put("float_violation_index", float_bad)
                .put("exact_violation_threshold", exact_bad);
        }
        let mut verdict = Verdict::judge(ok, w);
        if float_bad.is_some() && exact_bad.is_none() {
            verdict = verdict.note("floating chain violated; exact counts are consistent");
        }
        Ok(verdict)
    }

    fn vertex_deletion_all(&self) -> Result<Verdict, VerifyError> {
        if self.n() < 2 {
            return Ok(Verdict::not_applicable("needs n >= 2"));
        }
        for v in 0..self.n() {
            let verdict = self.vertex_deletion(v)?;
            if verdict.status != super::Status::Pass {
                return Ok(verdict);
            }
        }
        Ok(Verdict::judge(true, Witness::new().put("vertices_checked", self.n())))
    }

    fn delta2_applies(&self) -> bool {
        self.n() > 0 && self.g.min_degree() >= 2 && !self.g.is_k_c5()
    }

    /// `m[0,1) <= ν`, tightened to `ν - 1` when the minimum degree is at
    /// least 2 and the graph is not a union of 5-cycles.
    pub fn matching_upper(&self) -> Verdict {
        if !self.no_isolated() {
            return Verdict::not_applicable("graph has an isolated vertex");
        }
        let m = self.s().lt(1);
        let nu = self.nu();
        let strengthened = self.delta2_applies();
        let bound = if strengthened { nu - 1 } else { nu };
        Verdict::judge(
            m <= bound,
            Witness::new()
                .put("m_0_1", m)
                .put("nu", nu)
                .put("strengthened", strengthened)
                .put("bound", bound),
        )
    }

    fn delta2(&self) -> Verdict {
        if self.n() == 0 || self.g.min_degree() < 2 {
            return Verdict::not_applicable("minimum degree below 2");
        }
        if self.g.is_k_c5() {
            return Verdict::not_applicable("graph is a union of 5-cycles");
        }
        let m = self.s().lt(1);
        let nu = self.nu();
        Verdict::judge(m < nu, Witness::new().put("m_0_1", m).put("nu", nu))
    }

    fn domination_bound(&self) -> Result<Verdict, VerifyError> {
        if !self.no_isolated() {
            return Ok(Verdict::not_applicable("graph has an isolated vertex"));
        }
        let m = self.s().lt(1);
        let gamma = domination_number(self.g)?;
        Ok(Verdict::judge(m <= gamma, Witness::new().put("m_0_1", m).put("gamma", gamma)))
    }

    fn m02_bound(&self) -> Verdict {
        if !self.no_isolated() {
            return Verdict::not_applicable("graph has an isolated vertex");
        }
        let m = self.s().lt(2);
        let nu = self.nu();
        Verdict::judge(
            m + nu <= self.n(),
            Witness::new().put("m_0_2", m).put("nu", nu).put("n", self.n()),
        )
    }

    fn alpha_sandwich(&self) -> Result<Verdict, VerifyError> {
        if self.n() == 0 {
            return Ok(Verdict::not_applicable("empty vertex set"));
        }
        let s = self.s();
        let alpha = independence_number(self.g)?;
        let (delta, big) = (self.g.min_degree() as i64, self.g.max_degree() as i64);
        let upper = self.n() - s.lt(delta);
        let lower = s.le(big);
        Ok(Verdict::judge(
            alpha <= upper && alpha <= lower,
            Witness::new()
                .put("alpha", alpha)
                .put("m_delta_top", upper)
                .put("m_0_max_degree", lower)
                .put("delta", delta)
                .put("max_degree", big),
        ))
    }

    fn longest_path(&self) -> Result<Verdict, VerifyError> {
        if self.n() == 0 || !self.connected() {
            return Ok(Verdict::not_applicable("graph is not connected"));
        }
        let ell = longest_path_length(self.g)?;
        // every eigenvalue is at most 2n-2, so m(2, 2n-2] = n - #{q <= 2}
        let m = self.n() - self.s().le(2);
        Ok(Verdict::judge(m >= ell / 2, Witness::new().put("m_2_top", m).put("ell", ell)))
    }

    fn diameter_main(&self) -> Verdict {
        let Some(d) = self.diam().filter(|_| self.n() > 0) else {
            return Verdict::not_applicable("graph is not connected");
        };
        let (n, di) = (self.ni(), d as i64);
        let s = self.s();
        let first = s.lt(n - 2);
        let mut ok = first as i64 >= di - 1;
        let mut w = Witness::new().put("d", d).put("m_0_n_minus_2", first);
        if 3 <= di && di <= n - 3 {
            let need = if di <= n - 5 { di } else { di - 1 };
            let second = s.lt(n - di + 1);
            ok &= second as i64 >= need;
            w = w
                .put("m_0_n_minus_d_plus_1", second)
                .put("required", need)
                .put("branch", if di <= n - 5 { "d<=n-5" } else { "n-4<=d<=n-3" });
        }
        Verdict::judge(ok, w)
    }

    fn high_index_bound(&self) -> Result<Verdict, VerifyError> {
        if self.n() == 0 || !self.connected() {
            return Ok(Verdict::not_applicable("graph is not connected"));
        }
        let (n, delta) = (self.n(), self.g.min_degree());
        if delta + 2 > n.saturating_sub(1) {
            return Ok(Verdict::not_applicable("index range is empty"));
        }
        let s = self.s();
        let le = s.le(n as i64 - 3);
        let need = n - delta - 1;
        let q = s.values()?;
        let float_ok = (delta + 2..n).all(|i| q[i - 1] <= n as f64 - 3.0 + INEQUALITY_SLACK);
        Ok(Verdict::judge(
            le >= need && float_ok,
            Witness::new()
                .put("delta", delta)
                .put("count_le_n_minus_3", le)
                .put("required", need)
                .put("float_ok", float_ok),
        ))
    }

    fn intro_bounds(&self) -> Verdict {
        let n = self.n();
        if n < 2 {
            return Verdict::not_applicable("needs n >= 2");
        }
        let s = self.s();
        let le = s.le(n as i64 - 2);
        let mut ok = le + 1 >= n;
        let mut w = Witness::new().put("count_le_n_minus_2", le);
        if !self.g.is_complete() {
            let delta = self.g.min_degree();
            let at_least = n - s.lt(delta as i64);
            ok &= at_least >= 2;
            w = w.put("delta", delta).put("count_ge_delta", at_least);
        }
        Verdict::judge(ok, w)
    }

    fn dia3(&self) -> Verdict {
        if self.n() < 7 || self.diam() != Some(3) {
            return Verdict::not_applicable("needs a connected graph of diameter 3 with n >= 7");
        }
        let m = self.s().lt(self.ni() - 3);
        Verdict::judge(m >= 2, Witness::new().put("m_0_n_minus_3", m).put("equality", m == 2))
    }

    fn solver_agreement(&self) -> Result<Verdict, VerifyError> {
        let n = self.ni();
        let s = self.s();
        let values = s.values()?;
        let mut thresholds: Vec<i64> = vec![0, 1, 2, n - 3, n - 2];
        thresholds.retain(|&t| t >= 0);
        thresholds.sort_unstable();
        thresholds.dedup();
        let mut guarded = 0;
        let mut bad = None;
        for &t in &thresholds {
            let x = t as f64;
            if values.iter().any(|v| (v - x).abs() <= GUARD_BAND) {
                guarded += 1;
                continue;
            }
            let float = values.iter().filter(|&&v| v < x).count();
            if float != s.lt(t) {
                bad = Some((t, float, s.lt(t)));
                break;
            }
        }
        let mut w = Witness::new().put("thresholds", &thresholds).put("guarded", guarded);
        if let Some((t, float, exact)) = bad {
            w = w.put("threshold", t).put("float_count", float).put("exact_count", exact).put("spectrum", values);
        }
        Ok(Verdict::judge(bad.is_none(), w))
    }
}

fn one(id: TheoremId, g: &Graph, f: impl FnOnce(&Case) -> Result<Verdict, VerifyError>) -> Result<TheoremReport, VerifyError> {
    let ctx = Context::direct();
    let case = Case::new(&ctx, g)?;
    Ok(case.report(id, f(&case)?))
}

/// Runs one per-graph statement on `g`.
pub fn check_graph(id: TheoremId, g: &Graph) -> Result<TheoremReport, VerifyError> {
    if id.kind() != TheoremKind::Graph {
        return Err(VerifyError::WrongKind(id, "parameter grids"));
    }
    one(id, g, |c| c.run(id))
}

/// Edge-deletion interlacing for one edge: the floating chain with `1e-8`
/// slack, and exactly at every integer threshold in `[0, 2n-2]`.
pub fn check_edge_interlacing(g: &Graph, e: (usize, usize)) -> Result<TheoremReport, VerifyError> {
    one(TheoremId::EdgeInterlacing, g, |c| c.edge_interlacing(e.0, e.1))
}

/// `q_{i+1}(G) <= q_i(G-v) + 1` for one vertex.
pub fn check_vertex_deletion(g: &Graph, v: usize) -> Result<TheoremReport, VerifyError> {
    if v >= g.order() {
        return Err(crate::graph::GraphError::VertexOutOfRange { vertex: v, n: g.order() }.into());
    }
    one(TheoremId::VertexDeletion, g, |c| c.vertex_deletion(v))
}

pub fn check_matching_upper(g: &Graph) -> Result<TheoremReport, VerifyError> {
    one(TheoremId::MatchingUpper, g, |c| Ok(c.matching_upper()))
}

pub fn check_domination_bound(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::DominationBound, g)
}

pub fn check_m02_bound(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::M02Bound, g)
}

pub fn check_alpha_sandwich(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::AlphaSandwich, g)
}

pub fn check_longest_path(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::LongestPath, g)
}

pub fn check_diameter_main(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::DiameterMain, g)
}

pub fn check_high_index_bound(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::HighIndexBound, g)
}

pub fn check_intro_bounds(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::IntroBounds, g)
}

pub fn check_dia3_graph(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::Dia3, g)
}

pub fn check_solver_agreement(g: &Graph) -> Result<TheoremReport, VerifyError> {
    check_graph(TheoremId::SolverAgreement, g)
}

#[cfg(test)]
mod tests {
    use super::super::Status;
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, make_family, path, star, FamilySpec};

    fn witness_u(r: &TheoremReport, key: &str) -> u64 {
        r.witness[key].as_u64().unwrap()
    }

    #[test]
    fn edge_interlacing_examples() {
        for (u, v) in complete(4).edges() {
            assert!(check_edge_interlacing(&complete(4), (u, v)).unwrap().passed);
        }
        let r = check_edge_interlacing(&cycle(6), (0, 5)).unwrap();
        assert!(r.passed);
        assert!(check_edge_interlacing(&path(4), (0, 2)).is_err());
    }

    #[test]
    fn vertex_deletion_examples() {
        for v in 0..5 {
            assert!(check_vertex_deletion(&complete(5), v).unwrap().passed);
        }
        assert!(check_vertex_deletion(&complete(2), 0).unwrap().passed);
        assert!(check_vertex_deletion(&complete(2), 2).is_err());
    }

    #[test]
    fn matching_examples() {
        let c5 = check_matching_upper(&cycle(5)).unwrap();
        assert!(c5.passed);
        assert_eq!(witness_u(&c5, "m_0_1"), 2);
        assert_eq!(witness_u(&c5, "nu"), 2);
        assert_eq!(c5.witness["strengthened"], false);
        let d2 = check_graph(TheoremId::Delta2, &cycle(5)).unwrap();
        assert_eq!(d2.status, Status::NotApplicable);
        let k24 = check_matching_upper(&complete_bipartite(2, 4)).unwrap();
        assert!(k24.passed);
        assert_eq!(witness_u(&k24, "m_0_1"), 1);
        assert_eq!(witness_u(&k24, "bound"), 1);
        assert_eq!(check_matching_upper(&Graph::empty(3)).unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn bound_examples() {
        let c5 = check_domination_bound(&cycle(5)).unwrap();
        assert!(c5.passed);
        assert_eq!(witness_u(&c5, "gamma"), 2);
        assert!(check_domination_bound(&complete(6)).unwrap().passed);

        let p6 = check_m02_bound(&path(6)).unwrap();
        assert!(p6.passed);
        assert_eq!(witness_u(&p6, "m_0_2"), 3);

        let k23 = check_alpha_sandwich(&complete_bipartite(2, 3)).unwrap();
        assert!(k23.passed);
        assert_eq!(witness_u(&k23, "alpha"), 3);
        assert_eq!(witness_u(&k23, "m_delta_top"), 4);
        // spectrum {5, 3, 2, 2, 0}: four eigenvalues in [0, 3]
        assert_eq!(witness_u(&k23, "m_0_max_degree"), 4);

        let p6 = check_longest_path(&path(6)).unwrap();
        assert!(p6.passed);
        assert_eq!(witness_u(&p6, "m_2_top"), 2);
        let k4 = check_longest_path(&complete(4)).unwrap();
        assert_eq!(witness_u(&k4, "m_2_top"), 1);
    }

    #[test]
    fn diameter_examples() {
        let k6 = check_diameter_main(&complete(6)).unwrap();
        assert!(k6.passed);
        assert_eq!(witness_u(&k6, "m_0_n_minus_2"), 0);
        let k6e = make_family(&FamilySpec::CompleteMinusEdge { n: 6 }).unwrap();
        let r = check_diameter_main(&k6e).unwrap();
        assert!(r.passed);
        assert_eq!(witness_u(&r, "m_0_n_minus_2"), 1);
        let g = make_family(&FamilySpec::Gndt { n: 9, d: 3, t: 2 }).unwrap();
        let r = check_diameter_main(&g).unwrap();
        assert!(r.passed);
        assert_eq!(r.witness["branch"], "d<=n-5");
        let g = make_family(&FamilySpec::Gndt { n: 7, d: 3, t: 2 }).unwrap();
        let r = check_diameter_main(&g).unwrap();
        assert!(r.passed);
        assert_eq!(r.witness["branch"], "n-4<=d<=n-3");
        assert_eq!(check_diameter_main(&Graph::empty(3)).unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn high_index_examples() {
        assert_eq!(check_high_index_bound(&complete(5)).unwrap().status, Status::NotApplicable);
        let s = check_high_index_bound(&star(5)).unwrap();
        assert!(s.passed);
        assert_eq!(witness_u(&s, "required"), 4);
    }

    #[test]
    fn dia3_graph_examples() {
        let g = make_family(&FamilySpec::Gndt { n: 7, d: 3, t: 2 }).unwrap();
        let r = check_dia3_graph(&g).unwrap();
        assert!(r.passed);
        assert_eq!(r.witness["equality"], true);
        assert_eq!(check_dia3_graph(&path(4)).unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn grid_ids_are_rejected() {
        assert!(matches!(
            check_graph(TheoremId::LaplacianRemark, &path(3)),
            Err(VerifyError::WrongKind(..))
        ));
    }
}
