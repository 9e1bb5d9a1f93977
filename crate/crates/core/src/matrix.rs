//! Dense exact matrices.
//!
//! [`ExactSymMatrix`] carries the symmetric matrices of the crate (Seidel
//! matrices, their shifts, Gram matrices). [`RatMatrix`] is the general square
//! rational matrix, used for quotient matrices of equitable partitions, which
//! are not symmetric in general.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, format_rational, scale_to_int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSymMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl ExactSymMatrix {
    /// Row-major entries; fails unless `entries` is `order x order` and symmetric.
    pub fn new(order: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::Dimension(format!(
                "{} entries for order {order}",
                entries.len()
            )));
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::Domain(format!("entry ({i},{j}) breaks symmetry")));
                }
            }
        }
        Ok(Self { order, entries })
    }

    /// Builds from `f(i, j)` evaluated on the upper triangle and mirrored.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = vec![Rational::zero(); order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                entries[j * order + i] = v.clone();
                entries[i * order + j] = v;
            }
        }
        Self { order, entries }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| Rational::from_integer(BigInt::from(v))))
            .collect();
        Self::new(n, entries)
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
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

    /// `self + shift * I`.
    pub fn shifted(&self, shift: &Rational) -> Self {
        let mut out = self.clone();
        for i in 0..self.order {
            out.entries[i * self.order + i] += shift;
        }
        out
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.order) {
            return Err(Error::Index {
                vertex: bad,
                n: self.order,
            });
        }
        Ok(Self::from_fn(indices.len(), |a, b| {
            self.get(indices[a], indices[b]).clone()
        }))
    }

    pub fn to_rat_matrix(&self) -> RatMatrix {
        RatMatrix {
            order: self.order,
            entries: self.entries.clone(),
        }
    }

    /// Integer matrix `d * self` with `d` the least common denominator.
    pub fn to_scaled_integers(&self) -> (Vec<BigInt>, BigInt) {
        scaled_integers(&self.entries)
    }

    pub fn is_seidel(&self) -> bool {
        let one = Rational::one();
        (0..self.order).all(|i| {
            (0..self.order).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_zero()
                } else {
                    *e == one || *e == -one.clone()
                }
            })
        })
    }

    pub fn det(&self) -> Rational {
        self.to_rat_matrix().det()
    }
}

impl fmt::Display for ExactSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.order, &self.entries)
    }
}

/// Square rational matrix without a symmetry requirement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(order: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::Dimension(format!(
                "{} entries for order {order}",
                entries.len()
            )));
        }
        Ok(Self { order, entries })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self { order, entries }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self::from_fn(n, |i, j| {
            Rational::from_integer(BigInt::from(rows[i][j]))
        }))
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

    pub fn shifted(&self, shift: &Rational) -> Self {
        let mut out = self.clone();
        for i in 0..self.order {
            out.entries[i * self.order + i] += shift;
        }
        out
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Deletes row and column `k`.
    pub fn minor_matrix(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.order).filter(|&i| i != k).collect();
        Self::from_fn(keep.len(), |a, b| self.get(keep[a], keep[b]).clone())
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.order, |i, j| self.get(perm[i], perm[j]).clone())
    }

    pub fn to_scaled_integers(&self) -> (Vec<BigInt>, BigInt) {
        scaled_integers(&self.entries)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn det(&self) -> Rational {
        let n = self.order;
        if n == 0 {
            return Rational::one();
        }
        let (ints, d) = self.to_scaled_integers();
        let det_int = bareiss_det(ints, n);
        // det(d*M) = d^n det(M)
        Rational::new(det_int, num_traits::pow(d, n))
    }

    pub fn rank(&self) -> usize {
        let (ints, _) = self.to_scaled_integers();
        bareiss_rank(ints, self.order, self.order)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.order, &self.entries)
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, order: usize, entries: &[Rational]) -> fmt::Result {
    for i in 0..order {
        let row: Vec<String> = entries[i * order..(i + 1) * order]
            .iter()
            .map(format_rational)
            .collect();
        writeln!(f, "{}", row.join(" "))?;
    }
    Ok(())
}

fn scaled_integers(entries: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = common_denominator(entries);
    (entries.iter().map(|e| scale_to_int(e, &d)).collect(), d)
}

/// Fraction-free Gaussian elimination with row pivoting.
pub(crate) fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            for c in 0..n {
                a.swap(p * n + c, k * n + c);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k].clone();
        for i in (k + 1)..n {
            let aik = a[i * n + k].clone();
            for j in (k + 1)..n {
                let v = (&pivot * &a[i * n + j] - &aik * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = a[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Rank of an integer `rows x cols` matrix by fraction-free row echelon form.
pub(crate) fn bareiss_rank(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c].clone();
        for i in (rank + 1)..rows {
            let aic = a[i * cols + c].clone();
            for j in (c + 1)..cols {
                let v = (&pivot * &a[i * cols + j] - &aic * &a[rank * cols + j]) / &prev;
                a[i * cols + j] = v;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
