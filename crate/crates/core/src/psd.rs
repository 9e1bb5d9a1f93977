//! Exact positive-semidefiniteness test by symmetric fraction-free elimination.
//!
//! Each step pivots on a strictly positive diagonal entry of the current Schur
//! complement. A negative diagonal entry, or a zero diagonal entry whose row is
//! not identically zero, proves the matrix is not PSD. When no positive
//! diagonal remains, every remaining row is zero and counts towards the
//! nullity. Bareiss division by the previous pivot keeps all intermediate
//! values integral (they are bordered principal minors).
//!
//! Arithmetic runs in checked `i128` first and restarts in `BigInt` on overflow.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactspec::{Relation, SpectralVerdict, Witness};
use crate::matrix::ExactSymMatrix;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inertia {
    /// Some step exposed a negative direction.
    NotPsd {
        pivots: usize,
    },
    Psd {
        rank: usize,
        nullity: usize,
    },
}

impl Inertia {
    pub fn is_psd(&self) -> bool {
        matches!(self, Inertia::Psd { .. })
    }

    /// Relation of `lambda_min` to zero.
    pub fn relation(&self) -> Relation {
        match self {
            Inertia::NotPsd { .. } => Relation::Below,
            Inertia::Psd { nullity, .. } if *nullity > 0 => Relation::Equal,
            Inertia::Psd { .. } => Relation::Above,
        }
    }
}

trait Scalar: Clone {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i8;
    /// `(a*b - c*d) / e`, exact; `None` on overflow.
    fn bareiss(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i8 {
        i128::signum(*self) as i8
    }
    fn bareiss(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?;
        let y = c.checked_mul(*d)?;
        let z = x.checked_sub(y)?;
        debug_assert_eq!(z % e, 0);
        Some(z / e)
    }
}

impl Scalar for BigInt {
    fn one() -> Self {
        <BigInt as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> i8 {
        if Zero::is_zero(self) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
    fn bareiss(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some((a * b - c * d) / e)
    }
}

fn eliminate<T: Scalar>(mut a: Vec<T>, n: usize) -> Option<Inertia> {
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut prev = T::one();
    let mut pivots = 0usize;
    let mut nullity = 0usize;
    loop {
        let mut k_pos = None;
        let mut zero_rows = Vec::new();
        for (idx, &i) in remaining.iter().enumerate() {
            match a[i * n + i].signum() {
                -1 => return Some(Inertia::NotPsd { pivots }),
                0 => {
                    if remaining.iter().any(|&j| !a[i * n + j].is_zero()) {
                        return Some(Inertia::NotPsd { pivots });
                    }
                    zero_rows.push(idx);
                }
                _ => {
                    if k_pos.is_none() {
                        k_pos = Some(idx);
                    }
                }
            }
        }
        // zero rows stay zero under later Schur complements
        nullity += zero_rows.len();
        let k = k_pos.map(|p| remaining[p]);
        for idx in zero_rows.into_iter().rev() {
            remaining.remove(idx);
        }
        let Some(k) = k else {
            debug_assert!(remaining.is_empty());
            return Some(Inertia::Psd {
                rank: pivots,
                nullity,
            });
        };
        remaining.retain(|&i| i != k);
        let pivot = a[k * n + k].clone();
        for (x, &i) in remaining.iter().enumerate() {
            let aik = a[i * n + k].clone();
            for &j in &remaining[x..] {
                let v = T::bareiss(&pivot, &a[i * n + j], &aik, &a[k * n + j], &prev)?;
                a[j * n + i] = v.clone();
                a[i * n + j] = v;
            }
        }
        prev = pivot;
        pivots += 1;
    }
}

/// Inertia class of a symmetric integer matrix given row-major.
pub fn classify_integer(entries: &[BigInt], n: usize) -> Inertia {
    assert_eq!(entries.len(), n * n);
    let small: Option<Vec<i128>> = entries.iter().map(|e| e.to_i128()).collect();
    if let Some(small) = small {
        if let Some(res) = eliminate(small, n) {
            return res;
        }
    }
    eliminate(entries.to_vec(), n).expect("BigInt elimination cannot overflow")
}

pub fn classify_i64(entries: &[i64], n: usize) -> Inertia {
    assert_eq!(entries.len(), n * n);
    let small: Vec<i128> = entries.iter().map(|&e| e as i128).collect();
    if let Some(res) = eliminate(small, n) {
        return res;
    }
    eliminate(entries.iter().map(|&e| BigInt::from(e)).collect(), n)
        .expect("BigInt elimination cannot overflow")
}

pub fn classify(m: &ExactSymMatrix) -> Inertia {
    let (ints, _) = m.to_scaled_integers();
    classify_integer(&ints, m.order())
}

/// Compares `lambda_min(m)` with `q` by testing `m - qI` for semidefiniteness.
pub fn lambda_min_cmp_ldl(m: &ExactSymMatrix, q: &Rational) -> SpectralVerdict {
    let shifted = m.shifted(&-q.clone());
    let inertia = classify(&shifted);
    SpectralVerdict::new(inertia.relation(), Some(Witness::Inertia(inertia)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn cls(rows: &[Vec<i64>]) -> Inertia {
        let n = rows.len();
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        classify_i64(&flat, n)
    }

    #[test]
    fn definite_semidefinite_indefinite() {
        assert_eq!(
            cls(&[vec![2, 1], vec![1, 2]]),
            Inertia::Psd {
                rank: 2,
                nullity: 0
            }
        );
        assert_eq!(
            cls(&[vec![1, 1], vec![1, 1]]),
            Inertia::Psd {
                rank: 1,
                nullity: 1
            }
        );
        assert!(!cls(&[vec![1, 2], vec![2, 1]]).is_psd());
        assert!(!cls(&[vec![0, 1], vec![1, 0]]).is_psd());
        assert!(!cls(&[vec![0, 0], vec![0, -1]]).is_psd());
        assert_eq!(
            cls(&[]),
            Inertia::Psd {
                rank: 0,
                nullity: 0
            }
        );
        assert_eq!(
            cls(&[vec![0, 0], vec![0, 0]]),
            Inertia::Psd {
                rank: 0,
                nullity: 2
            }
        );
    }

    #[test]
    fn negative_direction_hidden_behind_pivots() {
        // [[1,2,0],[2,1,0],[0,0,5]]: eigenvalues 3, -1, 5
        assert!(!cls(&[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 5]]).is_psd());
    }

    #[test]
    fn all_ones_minus_identity() {
        // J - I on 6 points: eigenvalues 5, -1 (x5); shift by +1 -> J, PSD of rank 1
        let m = ExactSymMatrix::from_fn(6, |i, j| if i == j { int(0) } else { int(1) });
        let v = lambda_min_cmp_ldl(&m, &int(-1));
        assert_eq!(v.relation, Relation::Equal);
        assert_eq!(lambda_min_cmp_ldl(&m, &int(-2)).relation, Relation::Above);
        assert_eq!(lambda_min_cmp_ldl(&m, &int(0)).relation, Relation::Below);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Large diagonally dominant matrix forces i128 overflow in products.
        let n = 6;
        let big = 1i64 << 62;
        let mut flat = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                flat[i * n + j] = if i == j { big } else { big / 8 };
            }
        }
        assert!(classify_i64(&flat, n).is_psd());
    }
}
