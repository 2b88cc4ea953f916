//! Exact rational matrices: inertia by symmetric congruence, characteristic
//! polynomial evaluation and quotient matrices of vertex partitions.
//!
//! Inertia is the exact eigenvalue counter used everywhere a count is
//! compared against a rational threshold: the number of eigenvalues of `M`
//! below `x` is the number of negative eigenvalues of `M - xI`, and Sylvester's
//! law makes that count computable by elimination without any rounding.

mod bareiss;
mod quotient;

pub use quotient::{is_equitable, quotient_matrix, Partition};

pub(crate) use bareiss::inertia_i64;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = BigRational;

/// `num / den` as a rational in lowest terms.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("expected {expected} entries for order {order}, got {got}")]
    Shape {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

/// Counts of negative, zero and positive eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_minus: usize,
    pub n_zero: usize,
    pub n_plus: usize,
}

impl Inertia {
    pub fn new(n_minus: usize, n_zero: usize, n_plus: usize) -> Self {
        Inertia { n_minus, n_zero, n_plus }
    }

    pub fn order(&self) -> usize {
        self.n_minus + self.n_zero + self.n_plus
    }
}

/// Dense symmetric matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSymMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl RationalSymMatrix {
    /// Row-major entries; fails unless the matrix is square and symmetric.
    pub fn new(order: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != order * order {
            return Err(LinalgError::Shape {
                order,
                expected: order * order,
                got: entries.len(),
            });
        }
        for i in 0..order {
            for j in i + 1..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(LinalgError::Asymmetric(i, j));
                }
            }
        }
        Ok(RationalSymMatrix { order, entries })
    }

    pub fn from_integers(order: usize, entries: &[i64]) -> Result<Self, LinalgError> {
        Self::new(order, entries.iter().map(|&v| int(v)).collect())
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> Rational) -> Result<Self, LinalgError> {
        let entries = (0..order * order).map(|k| f(k / order, k % order)).collect();
        Self::new(order, entries)
    }

    pub fn zeros(order: usize) -> Self {
        RationalSymMatrix {
            order,
            entries: vec![Rational::zero(); order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `M - xI`.
    pub fn shifted(&self, x: &Rational) -> RationalSymMatrix {
        let mut out = self.clone();
        for i in 0..self.order {
            out.entries[i * self.order + i] -= x;
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.order).map(|i| self.get(i, i).clone()).sum()
    }

    /// `PᵀMP`; `p` is row-major `order x order`.
    pub fn congruent(&self, p: &[Rational]) -> RationalSymMatrix {
        let n = self.order;
        assert_eq!(p.len(), n * n);
        let mut mp = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    mp[i * n + j] += a * &p[k * n + j];
                }
            }
        }
        let mut out = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &p[k * n + i];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * &mp[k * n + j];
                }
            }
        }
        RationalSymMatrix { order: n, entries: out }
    }

    /// Scales by the least common denominator, giving an integer matrix with
    /// the same inertia.
    fn to_integer_rows(&self) -> Vec<BigInt> {
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        self.entries
            .iter()
            .map(|r| r.numer() * (&lcm / r.denom()))
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Exact JSON rendering: an array of rows of strings such as `"3/2"`.
    pub fn to_json(&self) -> serde_json::Value {
        rows_json(&self.entries, self.order, self.order)
    }
}

fn rows_json(entries: &[Rational], rows: usize, cols: usize) -> serde_json::Value {
    serde_json::Value::Array(
        (0..rows)
            .map(|i| {
                serde_json::Value::Array(
                    (0..cols)
                        .map(|j| serde_json::Value::String(entries[i * cols + j].to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Exact inertia of a symmetric rational matrix.
pub fn inertia(m: &RationalSymMatrix) -> Inertia {
    bareiss::inertia_big(m.to_integer_rows(), m.order)
}

/// Number of eigenvalues strictly below `x`.
pub fn count_lt(m: &RationalSymMatrix, x: &Rational) -> usize {
    inertia(&m.shifted(x)).n_minus
}

/// Number of eigenvalues at most `x`.
pub fn count_le(m: &RationalSymMatrix, x: &Rational) -> usize {
    let i = inertia(&m.shifted(x));
    i.n_minus + i.n_zero
}

/// Inertia of `qM - pI` for an integer matrix `M`, i.e. of `M - (p/q)I`
/// scaled by `q > 0`.
pub(crate) fn shifted_inertia_i64(m: &[i64], n: usize, p: i64, q: i64) -> Inertia {
    debug_assert!(q > 0);
    let scaled: Option<Vec<i64>> = (0..n * n)
        .map(|k| {
            let v = m[k].checked_mul(q)?;
            if k / n == k % n {
                v.checked_sub(p)
            } else {
                Some(v)
            }
        })
        .collect();
    match scaled {
        Some(s) => inertia_i64(&s, n),
        None => {
            let big = (0..n * n)
                .map(|k| {
                    let v = BigInt::from(m[k]) * q;
                    if k / n == k % n {
                        v - p
                    } else {
                        v
                    }
                })
                .collect();
            bareiss::inertia_big(big, n)
        }
    }
}

/// Dense square rational matrix, not necessarily symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(order: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != order * order {
            return Err(LinalgError::Shape {
                order,
                expected: order * order,
                got: entries.len(),
            });
        }
        Ok(RationalMatrix { order, entries })
    }

    pub fn from_integers(order: usize, entries: &[i64]) -> Result<Self, LinalgError> {
        Self::new(order, entries.iter().map(|&v| int(v)).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn to_json(&self) -> serde_json::Value {
        rows_json(&self.entries, self.order, self.order)
    }
}

impl From<RationalSymMatrix> for RationalMatrix {
    fn from(m: RationalSymMatrix) -> Self {
        RationalMatrix {
            order: m.order,
            entries: m.entries,
        }
    }
}

/// Exact `det(xI - M)` by fraction-free elimination.
pub fn char_poly_eval(m: &RationalMatrix, x: &Rational) -> Rational {
    let n = m.order;
    let shifted: Vec<Rational> = (0..n * n)
        .map(|k| {
            let v = -m.entries[k].clone();
            if k / n == k % n {
                v + x
            } else {
                v
            }
        })
        .collect();
    let lcm = shifted.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = shifted.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let det = bareiss::det_big(ints, n);
    Rational::new(det, num_traits::pow(lcm, n))
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(order: usize, v: &[i64]) -> RationalSymMatrix {
        RationalSymMatrix::from_integers(order, v).unwrap()
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(inertia(&RationalSymMatrix::zeros(4)), Inertia::new(0, 4, 0));
    }

    #[test]
    fn shifted_k3() {
        // Q(K3) has spectrum {4, 1, 1}
        let q = sym(3, &[2, 1, 1, 1, 2, 1, 1, 1, 2]);
        assert_eq!(inertia(&q.shifted(&int(1))), Inertia::new(0, 2, 1));
        assert_eq!(count_lt(&q, &int(1)), 0);
        assert_eq!(count_le(&q, &int(1)), 2);
        assert_eq!(count_lt(&q, &rat(9, 2)), 3);
    }

    #[test]
    fn shifted_c4() {
        // Q(C4) has spectrum {4, 2, 2, 0}
        let q = sym(4, &[2, 1, 0, 1, 1, 2, 1, 0, 0, 1, 2, 1, 1, 0, 1, 2]);
        assert_eq!(inertia(&q.shifted(&int(2))), Inertia::new(1, 2, 1));
    }

    #[test]
    fn rational_entries() {
        let m = RationalSymMatrix::new(2, vec![rat(1, 2), rat(1, 3), rat(1, 3), rat(-1, 5)]).unwrap();
        // det < 0: one of each sign
        assert_eq!(inertia(&m), Inertia::new(1, 0, 1));
    }

    #[test]
    fn asymmetric_rejected() {
        assert_eq!(
            RationalSymMatrix::from_integers(2, &[1, 2, 3, 4]),
            Err(LinalgError::Asymmetric(0, 1))
        );
        assert!(matches!(RationalSymMatrix::from_integers(2, &[1, 2, 3]), Err(LinalgError::Shape { .. })));
    }

    #[test]
    fn scaled_integer_shift_matches_rational_path() {
        let q = [2i64, 1, 1, 1, 2, 1, 1, 1, 2];
        let m = sym(3, &q);
        for (p, d) in [(0, 1), (1, 1), (3, 2), (4, 1), (9, 2), (-1, 3)] {
            assert_eq!(shifted_inertia_i64(&q, 3, p, d), inertia(&m.shifted(&rat(p, d))));
        }
    }

    #[test]
    fn char_poly_small() {
        let m = RationalMatrix::from_integers(1, &[7]).unwrap();
        assert_eq!(char_poly_eval(&m, &int(7)), int(0));
        assert_eq!(char_poly_eval(&m, &int(9)), int(2));
        // x^2 - 5x + 4 for [[2,1],[2,3]] (eigenvalues 1 and 4)
        let m = RationalMatrix::from_integers(2, &[2, 1, 2, 3]).unwrap();
        assert_eq!(char_poly_eval(&m, &int(0)), int(4));
        assert_eq!(char_poly_eval(&m, &rat(5, 2)), rat(-9, 4));
    }

    #[test]
    fn json_rendering() {
        let m = RationalSymMatrix::new(1, vec![rat(3, 2)]).unwrap();
        assert_eq!(m.to_json().to_string(), r#"[["3/2"]]"#);
    }
}
