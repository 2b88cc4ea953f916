//! Fraction-free elimination over the integers.
//!
//! Both routines keep every stored entry equal to a minor of the input, so
//! each division is exact and intermediate growth is bounded by Hadamard's
//! inequality. The generic kernels report overflow with `None`; callers
//! retry with a wider type.

use super::Inertia;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

pub(crate) trait ExactInt:
    Clone + Ord + Zero + One + Signed + Integer + CheckedMul + CheckedSub + CheckedAdd
{
}

impl<T> ExactInt for T where
    T: Clone + Ord + Zero + One + Signed + Integer + CheckedMul + CheckedSub + CheckedAdd
{
}

#[inline]
fn exact_div<T: ExactInt>(num: T, den: &T) -> T {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "inexact division in fraction-free elimination");
    q
}

/// Inertia of the symmetric integer matrix `m` (row-major, `n x n`) by
/// symmetric congruence.
///
/// Stored entries are `D * S` where `S` is the current Schur complement and
/// `D` the determinant of the eliminated principal block. A nonzero diagonal
/// entry is used as a 1x1 pivot (smallest magnitude first); when the whole
/// remaining diagonal is zero, a nonzero off-diagonal `b` gives the 2x2 pivot
/// `[[0, b], [b, 0]]`, which has one positive and one negative eigenvalue.
pub(crate) fn inertia_kernel<T: ExactInt>(m: &mut [T], n: usize) -> Option<Inertia> {
    debug_assert_eq!(m.len(), n * n);
    let mut alive: Vec<usize> = (0..n).collect();
    let mut denom = T::one();
    let (mut minus, mut plus, mut zero) = (0, 0, 0);

    while !alive.is_empty() {
        let pivot = alive
            .iter()
            .enumerate()
            .filter(|&(_, &i)| !m[i * n + i].is_zero())
            .min_by(|&(_, &a), &(_, &b)| m[a * n + a].abs().cmp(&m[b * n + b].abs()));

        if let Some((slot, i)) = pivot.map(|(s, &i)| (s, i)) {
            let p = m[i * n + i].clone();
            if p.is_positive() == denom.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            alive.remove(slot);
            for (a, &r) in alive.iter().enumerate() {
                for &s in &alive[a..] {
                    let v = p
                        .checked_mul(&m[r * n + s])?
                        .checked_sub(&m[r * n + i].checked_mul(&m[i * n + s])?)?;
                    let v = exact_div(v, &denom);
                    m[s * n + r] = v.clone();
                    m[r * n + s] = v;
                }
            }
            denom = p;
            continue;
        }

        let hyperbolic = alive.iter().enumerate().find_map(|(a, &r)| {
            alive[a + 1..]
                .iter()
                .find(|&&s| !m[r * n + s].is_zero())
                .map(|&s| (r, s))
        });
        let Some((r, s)) = hyperbolic else {
            zero += alive.len();
            break;
        };
        plus += 1;
        minus += 1;
        let b = m[r * n + s].clone();
        alive.retain(|&x| x != r && x != s);
        let b2 = b.checked_mul(&b)?;
        for (a, &u) in alive.iter().enumerate() {
            for &v in &alive[a..] {
                let cross = m[u * n + r]
                    .checked_mul(&m[s * n + v])?
                    .checked_add(&m[u * n + s].checked_mul(&m[r * n + v])?)?;
                let val = b.checked_mul(&cross)?.checked_sub(&b2.checked_mul(&m[u * n + v])?)?;
                let val = exact_div(exact_div(val, &denom), &denom);
                m[v * n + u] = val.clone();
                m[u * n + v] = val;
            }
        }
        denom = exact_div(-b2, &denom);
    }
    Some(Inertia {
        n_minus: minus,
        n_zero: zero,
        n_plus: plus,
    })
}

/// Inertia of a symmetric `i64` matrix, widening to `i128` and then to
/// arbitrary precision on overflow.
pub(crate) fn inertia_i64(m: &[i64], n: usize) -> Inertia {
    let mut work = m.to_vec();
    if let Some(r) = inertia_kernel(&mut work, n) {
        return r;
    }
    let mut wide: Vec<i128> = m.iter().map(|&x| x as i128).collect();
    if let Some(r) = inertia_kernel(&mut wide, n) {
        return r;
    }
    let mut big: Vec<BigInt> = m.iter().map(|&x| BigInt::from(x)).collect();
    inertia_kernel(&mut big, n).expect("arbitrary precision cannot overflow")
}

pub(crate) fn inertia_big(mut m: Vec<BigInt>, n: usize) -> Inertia {
    let small: Option<Vec<i64>> = m.iter().map(|x| i64::try_from(x).ok()).collect();
    if let Some(small) = small {
        return inertia_i64(&small, n);
    }
    inertia_kernel(&mut m, n).expect("arbitrary precision cannot overflow")
}

/// Determinant of a square integer matrix by Bareiss elimination with row
/// pivoting.
pub(crate) fn det_big(mut m: Vec<BigInt>, n: usize) -> BigInt {
    debug_assert_eq!(m.len(), n * n);
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                m.swap(k * n + c, r * n + c);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = exact_div(v, &prev);
            }
        }
        prev = m[k * n + k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { prev };
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inertia(rows: &[&[i64]]) -> Inertia {
        let n = rows.len();
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        inertia_i64(&flat, n)
    }

    #[test]
    fn small_cases() {
        assert_eq!(inertia(&[]), Inertia::new(0, 0, 0));
        assert_eq!(inertia(&[&[0]]), Inertia::new(0, 1, 0));
        assert_eq!(inertia(&[&[-3]]), Inertia::new(1, 0, 0));
        assert_eq!(inertia(&[&[0, 2], &[2, 0]]), Inertia::new(1, 0, 1));
        assert_eq!(inertia(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]), Inertia::new(0, 2, 1));
        // zero diagonal with a trailing block after the hyperbolic pivot
        assert_eq!(
            inertia(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]),
            Inertia::new(2, 0, 1) // adjacency of K3: {2, -1, -1}
        );
    }

    #[test]
    fn negative_definite_sequence() {
        // eigenvalues {-1, -3} and {1, -3}
        assert_eq!(inertia(&[&[-2, 1], &[1, -2]]), Inertia::new(2, 0, 0));
        assert_eq!(inertia(&[&[-1, 2], &[2, -1]]), Inertia::new(1, 0, 1));
    }

    #[test]
    fn widening_paths_agree() {
        // Hilbert-like integer matrix with large entries forces i64 overflow
        let n = 6;
        let m: Vec<i64> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                1_000_000_007 / (i + j + 1) as i64
            })
            .collect();
        let fast = inertia_i64(&m, n);
        let big = {
            let mut b: Vec<BigInt> = m.iter().map(|&x| BigInt::from(x)).collect();
            inertia_kernel(&mut b, n).unwrap()
        };
        assert_eq!(fast, big);
        assert_eq!(fast.order(), n);
    }

    #[test]
    fn determinants() {
        let m = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(det_big(m(&[]), 0), BigInt::from(1));
        assert_eq!(det_big(m(&[0, 1, 1, 0]), 2), BigInt::from(-1));
        assert_eq!(det_big(m(&[2, 0, 1, 1, 3, 2, 1, 1, 2]), 3), BigInt::from(6));
        assert_eq!(det_big(m(&[1, 2, 2, 4]), 2), BigInt::from(0));
        assert_eq!(det_big(m(&[0, 0, 1, 0, 1, 0, 1, 0, 0]), 3), BigInt::from(-1));
    }
}
