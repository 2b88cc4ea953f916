use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::VerifyError;

/// Whether a statement quantifies over arbitrary graphs or over a family
/// parameter grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremKind {
    Graph,
    Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `q₁(G) ≥ q₁(G-e) ≥ q₂(G) ≥ … ≥ q_n(G) ≥ q_n(G-e)`.
    EdgeInterlacing,
    /// `q_{i+1}(G) ≤ q_i(G-v) + 1`.
    VertexDeletion,
    /// `m[0,1) ≤ ν` without isolated vertices.
    MatchingUpper,
    /// `m[0,1) ≤ ν - 1` when `δ ≥ 2` and `G` is not `kC₅`.
    Delta2,
    /// `m[0,1) ≤ γ` without isolated vertices.
    DominationBound,
    /// `m[0,2) ≤ n - ν` without isolated vertices.
    M02Bound,
    /// `α ≤ min(m[δ, 2n-2], m[0, Δ])`.
    AlphaSandwich,
    /// `m(2, 2n-2] ≥ ⌊ℓ/2⌋` for connected graphs.
    LongestPath,
    /// `m[0,n-2) ≥ d-1`, and the `m[0,n-d+1)` bound for `3 ≤ d ≤ n-3`.
    DiameterMain,
    /// `q_i ≤ n-3` for `δ+2 ≤ i ≤ n-1`, connected graphs.
    HighIndexBound,
    /// `q₂ ≤ n-2`, and `q₂ ≥ δ` for non-complete graphs.
    IntroBounds,
    /// `m[0,n-3) ≥ 2` for connected graphs of diameter 3, `n ≥ 7`.
    Dia3,
    /// Floating counts below a threshold equal exact counts outside the
    /// guard band.
    SolverAgreement,
    /// `m_{C_n}[0,1)` residue formula, and `≤ ν(C_n) - 1` for `n ≠ 5`.
    CycleMatching,
    /// `q₁(P_n) < 4`.
    PathBound,
    /// Closed-form spectra of `C_n`, `K_n`, `K_{2,n-2}` and `K_n - e`.
    ClosedForms,
    /// `q₃ = q₄ = 3` for `G_{6,3,2,1}`.
    G6321,
    /// Multiplicity and root brackets of the spectrum of `G_{n,3,2,a}`.
    Gn32aSpectrum,
    /// `m_{G_{n,d,t}}[0,n-d+1) ≥ d` for `2 ≤ t ≤ d ≤ n-3`.
    GndtBound,
    /// `q₅(G_{n,n-3,t,1}) < 4`.
    Gn3t1Q5,
    /// `m_{G_{n,d,t,a}}[0,n-d+1) ≥ d`.
    GndtaBound,
    /// `m[0,n-3) = 2` for `G_{n,3,2}` and `G_{n,3,2,a}`.
    Dia3Equality,
    /// Exactly `d-1` Laplacian eigenvalues of `G_{n,d,t}` in `[0,n-d+1)`.
    LaplacianRemark,
}

impl TheoremId {
    pub const ALL: [TheoremId; 23] = [
        TheoremId::EdgeInterlacing,
        TheoremId::VertexDeletion,
        TheoremId::MatchingUpper,
        TheoremId::Delta2,
        TheoremId::DominationBound,
        TheoremId::M02Bound,
        TheoremId::AlphaSandwich,
        TheoremId::LongestPath,
        TheoremId::DiameterMain,
        TheoremId::HighIndexBound,
        TheoremId::IntroBounds,
        TheoremId::Dia3,
        TheoremId::SolverAgreement,
        TheoremId::CycleMatching,
        TheoremId::PathBound,
        TheoremId::ClosedForms,
        TheoremId::G6321,
        TheoremId::Gn32aSpectrum,
        TheoremId::GndtBound,
        TheoremId::Gn3t1Q5,
        TheoremId::GndtaBound,
        TheoremId::Dia3Equality,
        TheoremId::LaplacianRemark,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::EdgeInterlacing => "edge_interlacing",
            TheoremId::VertexDeletion => "vertex_deletion",
            TheoremId::MatchingUpper => "matching_upper",
            TheoremId::Delta2 => "delta2",
            TheoremId::DominationBound => "domination_bound",
            TheoremId::M02Bound => "m02_bound",
            TheoremId::AlphaSandwich => "alpha_sandwich",
            TheoremId::LongestPath => "longest_path",
            TheoremId::DiameterMain => "diameter_main",
            TheoremId::HighIndexBound => "high_index_bound",
            TheoremId::IntroBounds => "intro_bounds",
            TheoremId::Dia3 => "dia3",
            TheoremId::SolverAgreement => "solver_agreement",
            TheoremId::CycleMatching => "cycle_matching",
            TheoremId::PathBound => "path_bound",
            TheoremId::ClosedForms => "closed_forms",
            TheoremId::G6321 => "g6321",
            TheoremId::Gn32aSpectrum => "gn32a_spectrum",
            TheoremId::GndtBound => "gndt_bound",
            TheoremId::Gn3t1Q5 => "gn3t1_q5",
            TheoremId::GndtaBound => "gndta_bound",
            TheoremId::Dia3Equality => "dia3_equality",
            TheoremId::LaplacianRemark => "laplacian_remark",
        }
    }

    pub fn kind(self) -> TheoremKind {
        use TheoremId::*;
        match self {
            EdgeInterlacing | VertexDeletion | MatchingUpper | Delta2 | DominationBound | M02Bound
            | AlphaSandwich | LongestPath | DiameterMain | HighIndexBound | IntroBounds | Dia3
            | SolverAgreement => TheoremKind::Graph,
            _ => TheoremKind::Grid,
        }
    }

    /// One-line statement, for listings.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::EdgeInterlacing => "q1(G) >= q1(G-e) >= q2(G) >= ... >= qn(G) >= qn(G-e) for every edge e",
            TheoremId::VertexDeletion => "q_{i+1}(G) <= q_i(G-v) + 1 for every vertex v",
            TheoremId::MatchingUpper => "m[0,1) <= nu when there is no isolated vertex",
            TheoremId::Delta2 => "m[0,1) <= nu - 1 when min degree >= 2 and G is not kC5",
            TheoremId::DominationBound => "m[0,1) <= domination number when there is no isolated vertex",
            TheoremId::M02Bound => "m[0,2) <= n - nu when there is no isolated vertex",
            TheoremId::AlphaSandwich => "alpha <= min(m[delta,2n-2], m[0,Delta])",
            TheoremId::LongestPath => "m(2,2n-2] >= floor(l/2) for connected G, l = longest path length",
            TheoremId::DiameterMain => "m[0,n-2) >= d-1; m[0,n-d+1) >= d (3<=d<=n-5) or d-1 (n-4<=d<=n-3)",
            TheoremId::HighIndexBound => "q_i <= n-3 for delta+2 <= i <= n-1, connected G",
            TheoremId::IntroBounds => "q2 <= n-2, and q2 >= delta for non-complete G",
            TheoremId::Dia3 => "m[0,n-3) >= 2 for connected G of diameter 3, n >= 7",
            TheoremId::SolverAgreement => "floating counts below t equal exact counts outside the guard band",
            TheoremId::CycleMatching => "m_{C_n}[0,1) = ceil(n/3) - [n mod 3 != 2], and <= nu(C_n) - 1 for n != 5",
            TheoremId::PathBound => "q1(P_n) < 4",
            TheoremId::ClosedForms => "closed-form spectra of C_n, K_n, K_{2,n-2}, K_n - e",
            TheoremId::G6321 => "q3 = q4 = 3 for G_{6,3,2,1}",
            TheoremId::Gn32aSpectrum => "G_{n,3,2,a}: n-3 with multiplicity n-4, m[0,n-3) = 2, root brackets",
            TheoremId::GndtBound => "m[0,n-d+1) >= d for G_{n,d,t}, 2 <= t <= d <= n-3",
            TheoremId::Gn3t1Q5 => "q5 < 4 for G_{n,n-3,t,1}",
            TheoremId::GndtaBound => "m[0,n-d+1) >= d for G_{n,d,t,a}, 2 <= t <= d-1 <= n-4",
            TheoremId::Dia3Equality => "m[0,n-3) = 2 for G_{n,3,2} and G_{n,3,2,a}",
            TheoremId::LaplacianRemark => "exactly d-1 Laplacian eigenvalues of G_{n,d,t} in [0,n-d+1)",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    /// Hyphens and underscores are interchangeable.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == key)
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
            assert_eq!(serde_json::to_value(id).unwrap(), id.as_str());
        }
        assert_eq!("diameter-main".parse::<TheoremId>().unwrap(), TheoremId::DiameterMain);
        assert_eq!("Edge-Interlacing".parse::<TheoremId>().unwrap(), TheoremId::EdgeInterlacing);
        assert!(matches!("nope".parse::<TheoremId>(), Err(VerifyError::UnknownTheorem(_))));
    }

    #[test]
    fn kinds() {
        assert_eq!(TheoremId::Delta2.kind(), TheoremKind::Graph);
        assert_eq!(TheoremId::LaplacianRemark.kind(), TheoremKind::Grid);
    }
}
