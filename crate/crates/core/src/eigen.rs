//! Floating-point symmetric eigenvalues by cyclic Jacobi rotations, plus the
//! Weyl and Cauchy-interlacing inequality checkers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Slack used by every floating inequality check.
pub const INEQUALITY_SLACK: f64 = 1e-8;
/// Relative off-diagonal residual the solver must reach.
pub const RESIDUAL_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 50;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("row subset must be nonempty")]
    EmptySubset,
}

/// Dense symmetric matrix of floats, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Accepts entries that are symmetric to within `1e-12` relative to the
    /// matrix scale.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, EigenError> {
        if data.len() != n * n {
            return Err(EigenError::Shape {
                expected: n * n,
                got: data.len(),
            });
        }
        let scale = 1.0 + frobenius(&data);
        for i in 0..n {
            for j in i + 1..n {
                if (data[i * n + j] - data[j * n + i]).abs() > RESIDUAL_TOLERANCE * scale {
                    return Err(EigenError::Asymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        SymMatrix { n, data }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, |i, j| if i == j { values[i] } else { 0.0 })
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius(&self) -> f64 {
        frobenius(&self.data)
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Principal submatrix on `rows` (in the given order).
    pub fn principal_submatrix(&self, rows: &[usize]) -> SymMatrix {
        let p = rows.len();
        let mut data = Vec::with_capacity(p * p);
        for &i in rows {
            for &j in rows {
                data.push(self.get(i, j));
            }
        }
        SymMatrix { n: p, data }
    }
}

fn frobenius(data: &[f64]) -> f64 {
    data.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Eigenvalues sorted nonincreasingly (`values[0]` is `ρ₁`), with the final
/// off-diagonal Frobenius norm of the Jacobi iteration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub residual: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `ρ_i` with 1-based `i`.
    pub fn rho(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn count_below(&self, x: f64) -> usize {
        self.values.iter().filter(|&&v| v < x).count()
    }

    pub fn count_at_most(&self, x: f64) -> usize {
        self.values.iter().filter(|&&v| v <= x).count()
    }

    /// Whether some eigenvalue lies within `band` of `x`.
    pub fn near(&self, x: f64, band: f64) -> bool {
        self.values.iter().any(|v| (v - x).abs() <= band)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi eigenvalue iteration. Sweeps visit every pair `(p, q)`
/// with `p < q` in row order and annihilate `a_pq` with one rotation; the
/// loop stops once the off-diagonal Frobenius norm is at most
/// `1e-12 * (1 + ‖M‖_F)`.
pub fn eigenvalues_sym(m: &SymMatrix) -> Result<Spectrum, EigenError> {
    let n = m.n;
    let mut a = m.data.clone();
    let target = RESIDUAL_TOLERANCE * (1.0 + m.frobenius());
    let mut residual = off_norm(&a, n);
    let mut sweeps = 0;
    while residual > target {
        if sweeps == MAX_SWEEPS {
            return Err(EigenError::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        sweeps += 1;
        residual = off_norm(&a, n);
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { values, residual })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeylWitness {
    pub holds: bool,
    /// `ρ_{i+j-1}(A+B)`
    pub lhs: f64,
    /// `ρ_i(A)`
    pub rho_a: f64,
    /// `ρ_j(B)`
    pub rho_b: f64,
}

/// `ρ_{i+j-1}(A+B) <= ρ_i(A) + ρ_j(B)` for 1-based `i, j` with
/// `i + j - 1 <= n`.
pub fn weyl_check(a: &SymMatrix, b: &SymMatrix, i: usize, j: usize) -> Result<WeylWitness, EigenError> {
    let n = a.n;
    if b.n != n {
        return Err(EigenError::Shape {
            expected: n * n,
            got: b.n * b.n,
        });
    }
    if i < 1 || j < 1 || i + j - 1 > n {
        return Err(EigenError::IndexOutOfRange(format!("i={i}, j={j}, n={n}")));
    }
    let sa = eigenvalues_sym(a)?;
    let sb = eigenvalues_sym(b)?;
    let sab = eigenvalues_sym(&a.add(b))?;
    Ok(weyl_from_spectra(&sa, &sb, &sab, i, j))
}

pub(crate) fn weyl_from_spectra(sa: &Spectrum, sb: &Spectrum, sab: &Spectrum, i: usize, j: usize) -> WeylWitness {
    let lhs = sab.rho(i + j - 1);
    let (rho_a, rho_b) = (sa.rho(i), sb.rho(j));
    WeylWitness {
        holds: lhs <= rho_a + rho_b + INEQUALITY_SLACK,
        lhs,
        rho_a,
        rho_b,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterlacingWitness {
    pub holds: bool,
    /// Spectrum of the full matrix.
    pub outer: Vec<f64>,
    /// Spectrum of the principal submatrix.
    pub inner: Vec<f64>,
    /// 1-based indices `i` at which `ρ_{n-p+i}(M) <= ρ_i(B) <= ρ_i(M)` fails.
    pub violations: Vec<usize>,
}

/// Cauchy interlacing for the principal submatrix of `m` on `rows`.
pub fn interlacing_check(m: &SymMatrix, rows: &[usize]) -> Result<InterlacingWitness, EigenError> {
    if rows.is_empty() {
        return Err(EigenError::EmptySubset);
    }
    let n = m.n;
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != rows.len() || sorted.last().is_some_and(|&r| r >= n) {
        return Err(EigenError::IndexOutOfRange(format!("rows {rows:?} for order {n}")));
    }
    let outer = eigenvalues_sym(m)?;
    let inner = eigenvalues_sym(&m.principal_submatrix(&sorted))?;
    let p = sorted.len();
    let violations: Vec<usize> = (1..=p)
        .filter(|&i| {
            let lo = outer.rho(n - p + i);
            let hi = outer.rho(i);
            let mid = inner.rho(i);
            lo > mid + INEQUALITY_SLACK || mid > hi + INEQUALITY_SLACK
        })
        .collect();
    Ok(InterlacingWitness {
        holds: violations.is_empty(),
        outer: outer.values,
        inner: inner.values,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    fn random_sym(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
        let vals: Vec<f64> = (0..n * n).map(|_| rng.random_range(-3.0..3.0)).collect();
        SymMatrix::from_fn(n, |i, j| vals[i * n + j])
    }

    #[test]
    fn complete_graph_q() {
        // Q(K4) = 2I + J
        let q = SymMatrix::from_fn(4, |i, j| if i == j { 3.0 } else { 1.0 });
        let s = eigenvalues_sym(&q).unwrap();
        assert!(close(&s.values, &[6.0, 2.0, 2.0, 2.0], 1e-9), "{:?}", s.values);
    }

    #[test]
    fn five_cycle() {
        let q = SymMatrix::from_fn(5, |i, j| {
            if i == j {
                2.0
            } else if (i + 1) % 5 == j || (j + 1) % 5 == i {
                1.0
            } else {
                0.0
            }
        });
        let s = eigenvalues_sym(&q).unwrap();
        let c1 = 2.0 + 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        let c2 = 2.0 + 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        assert!(close(&s.values, &[4.0, c1, c1, c2, c2], 1e-9), "{:?}", s.values);
    }

    #[test]
    fn diagonal_is_sorted() {
        let s = eigenvalues_sym(&SymMatrix::diagonal(&[1.0, -2.0, 5.0, 0.5])).unwrap();
        assert_eq!(s.values, vec![5.0, 1.0, 0.5, -2.0]);
        assert_eq!(s.residual, 0.0);
        assert!(eigenvalues_sym(&SymMatrix::diagonal(&[])).unwrap().is_empty());
    }

    #[test]
    fn trace_and_residual_postconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=12 {
            let m = random_sym(&mut rng, n);
            let s = eigenvalues_sym(&m).unwrap();
            assert!(s.residual <= RESIDUAL_TOLERANCE * (1.0 + m.frobenius()));
            assert!((s.sum() - m.trace()).abs() <= 1e-9 * n as f64);
            assert!(s.values.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(
            SymMatrix::new(2, vec![1.0, 2.0, 2.5, 1.0]),
            Err(EigenError::Asymmetric(0, 1))
        );
        assert!(SymMatrix::new(2, vec![1.0, 2.0, 2.0 + 1e-14, 1.0]).is_ok());
    }

    #[test]
    fn weyl_identity() {
        let id = SymMatrix::identity(3);
        let w = weyl_check(&id, &id, 1, 1).unwrap();
        assert!(w.holds);
        assert!((w.lhs - 2.0).abs() < 1e-12);
        assert!(weyl_check(&id, &id, 2, 3).is_err());
        assert!(weyl_check(&id, &id, 0, 1).is_err());
    }

    #[test]
    fn weyl_path_plus_degree_boost() {
        // Q(P4) plus a diagonal boost, every admissible (i, j)
        let q = SymMatrix::from_fn(4, |i, j| {
            if i == j {
                if i == 0 || i == 3 { 1.0 } else { 2.0 }
            } else if i.abs_diff(j) == 1 {
                1.0
            } else {
                0.0
            }
        });
        let boost = SymMatrix::diagonal(&[2.0, 0.0, 1.0, 3.0]);
        for i in 1..=4 {
            for j in 1..=5 - i {
                assert!(weyl_check(&q, &boost, i, j).unwrap().holds);
            }
        }
        assert!(weyl_check(&q, &boost, 2, 1).unwrap().holds);
    }

    #[test]
    fn interlacing_k3() {
        let q = SymMatrix::from_fn(3, |i, j| if i == j { 2.0 } else { 1.0 });
        let w = interlacing_check(&q, &[0, 1]).unwrap();
        assert!(w.holds);
        assert!(close(&w.inner, &[3.0, 1.0], 1e-12));
        let all = interlacing_check(&q, &[0, 1, 2]).unwrap();
        assert!(all.holds);
        assert!(interlacing_check(&q, &[]).is_err());
        assert!(interlacing_check(&q, &[0, 3]).is_err());
    }
}
