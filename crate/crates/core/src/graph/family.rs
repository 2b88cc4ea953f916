//! Named graph families.
//!
//! For the two path-plus-clique families the diametral path `v₁ … v_{d+1}`
//! always occupies labels `0..=d`, so `v_i` is vertex `i - 1`. Clique vertices
//! follow; in `G_{n,d,r,a}` the `a` vertices attached further left come first.

use super::{complete, complete_bipartite, cycle, path, Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteMinusEdge,
    Gndt,
    Gndra,
    KCopies,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::CompleteMinusEdge,
        FamilyKind::Gndt,
        FamilyKind::Gndra,
        FamilyKind::KCopies,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete-bipartite",
            FamilyKind::CompleteMinusEdge => "complete-minus-edge",
            FamilyKind::Gndt => "gndt",
            FamilyKind::Gndra => "gndra",
            FamilyKind::KCopies => "k-copies",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == key || k.as_str().replace('-', "") == key)
            .ok_or_else(|| format!("unknown family kind `{s}`"))
    }
}

/// A member of one of the named families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `K_n - e` with the edge `{0, 1}` removed.
    CompleteMinusEdge { n: usize },
    /// Path `v₁…v_{d+1}` plus `K_{n-d-1}` joined to `v_{t-1}, v_t, v_{t+1}`.
    Gndt { n: usize, d: usize, t: usize },
    /// Path `v₁…v_{d+1}` plus `K_{n-d-1}`: `a` clique vertices joined to
    /// `v_{r-1}, v_r, v_{r+1}`, the others to `v_r, v_{r+1}, v_{r+2}`.
    Gndra { n: usize, d: usize, r: usize, a: usize },
    KCopies { base: Box<FamilySpec>, k: usize },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            FamilySpec::CompleteMinusEdge { .. } => FamilyKind::CompleteMinusEdge,
            FamilySpec::Gndt { .. } => FamilyKind::Gndt,
            FamilySpec::Gndra { .. } => FamilyKind::Gndra,
            FamilySpec::KCopies { .. } => FamilyKind::KCopies,
        }
    }

    /// Number of vertices of the described graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::CompleteMinusEdge { n }
            | FamilySpec::Gndt { n, .. }
            | FamilySpec::Gndra { n, .. } => *n,
            FamilySpec::CompleteBipartite { a, b } => a + b,
            FamilySpec::KCopies { base, k } => base.order() * k,
        }
    }

    /// Checks the parameter ranges; the error names the violated constraint.
    pub fn validate(&self) -> Result<(), GraphError> {
        let fail = |family: &'static str, constraint: String| {
            Err(GraphError::FamilyRange { family, constraint })
        };
        match *self {
            FamilySpec::Path { n } if n < 1 => fail("path", format!("n >= 1 (got n={n})")),
            FamilySpec::Cycle { n } if n < 3 => fail("cycle", format!("n >= 3 (got n={n})")),
            FamilySpec::Complete { n } if n < 1 => fail("complete", format!("n >= 1 (got n={n})")),
            FamilySpec::CompleteBipartite { a, b } if a < 1 || b < 1 => {
                fail("complete-bipartite", format!("a >= 1 and b >= 1 (got a={a}, b={b})"))
            }
            FamilySpec::CompleteMinusEdge { n } if n < 2 => {
                fail("complete-minus-edge", format!("n >= 2 (got n={n})"))
            }
            FamilySpec::Gndt { n, d, t } => {
                if d < 2 || d + 2 > n {
                    fail("gndt", format!("2 <= d <= n-2 (got n={n}, d={d})"))
                } else if t < 2 || t > d {
                    fail("gndt", format!("2 <= t <= d (got d={d}, t={t})"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Gndra { n, d, r, a } => {
                if d < 3 || d + 2 > n {
                    fail("gndra", format!("3 <= d <= n-2 (got n={n}, d={d})"))
                } else if r < 2 || r + 1 > d {
                    fail("gndra", format!("2 <= r <= d-1 (got d={d}, r={r})"))
                } else if a < 1 || a + d + 2 > n {
                    fail("gndra", format!("1 <= a <= n-d-2 (got n={n}, d={d}, a={a})"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::KCopies { ref base, k } => {
                if k < 1 {
                    fail("k-copies", format!("k >= 1 (got k={k})"))
                } else {
                    base.validate()
                }
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "K_{{{a},{b}}}"),
            FamilySpec::CompleteMinusEdge { n } => write!(f, "K_{n}-e"),
            FamilySpec::Gndt { n, d, t } => write!(f, "G_{{{n},{d},{t}}}"),
            FamilySpec::Gndra { n, d, r, a } => write!(f, "G_{{{n},{d},{r},{a}}}"),
            FamilySpec::KCopies { base, k } => write!(f, "{k}({base})"),
        }
    }
}

/// Constructs the family member described by `spec`.
pub fn make_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path { n } => path(*n),
        FamilySpec::Cycle { n } => cycle(*n),
        FamilySpec::Complete { n } => complete(*n),
        FamilySpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
        FamilySpec::CompleteMinusEdge { n } => complete(*n).remove_edge(0, 1)?,
        FamilySpec::Gndt { n, d, t } => path_plus_clique(*n, *d, |_| [t - 2, t - 1, *t]),
        FamilySpec::Gndra { n, d, r, a } => path_plus_clique(*n, *d, |i| {
            if i < *a {
                [r - 2, r - 1, *r]
            } else {
                [r - 1, *r, r + 1]
            }
        }),
        FamilySpec::KCopies { base, k } => make_family(base)?.k_copies(*k)?,
    })
}

/// Path on labels `0..=d` plus a clique on `d+1..n`; clique vertex `i`
/// (counted from zero) is joined to the three path labels `attach(i)`.
fn path_plus_clique(n: usize, d: usize, attach: impl Fn(usize) -> [usize; 3]) -> Graph {
    let mut g = path(d + 1).disjoint_union(&complete(n - d - 1));
    for i in 0..n - d - 1 {
        for p in attach(i) {
            g.set(d + 1 + i, p, true);
        }
    }
    g
}
