//! Equitable partitions, quotient matrices and strongly regular parameter
//! feasibility.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactspec::{char_poly, char_poly_general};
use crate::matrix::{ExactSymMatrix, RatMatrix};
use crate::poly::IntPoly;
use crate::rational::{format_rational, frac, int, Rational};

/// Ordered partition of `{0..n-1}` into non-empty cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::Domain("partition has an empty cell".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::Index { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::Domain(format!("index {v} lies in two cells")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::Domain(format!("index {v} is not covered")));
        }
        Ok(Self { cells, n })
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            cells: (0..n).map(|v| vec![v]).collect(),
            n,
        }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Cells reordered so that new cell `i` is old cell `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        Self::new(
            self.n,
            perm.iter().map(|&i| self.cells[i].clone()).collect(),
        )
    }
}

fn check_size(m: &ExactSymMatrix, pi: &Partition) -> Result<()> {
    if m.order() != pi.n {
        return Err(Error::Dimension(format!(
            "partition of {} indices for a matrix of order {}",
            pi.n,
            m.order()
        )));
    }
    Ok(())
}

fn block_row_sum(m: &ExactSymMatrix, row: usize, cell: &[usize]) -> Rational {
    cell.iter().map(|&j| m.get(row, j)).sum()
}

/// Block row sums, or `None` if some block has non-constant row sums.
fn row_sums(m: &ExactSymMatrix, pi: &Partition) -> Option<RatMatrix> {
    let r = pi.len();
    let mut q = Vec::with_capacity(r * r);
    for a in &pi.cells {
        for b in &pi.cells {
            let s = block_row_sum(m, a[0], b);
            if a[1..].iter().any(|&i| block_row_sum(m, i, b) != s) {
                return None;
            }
            q.push(s);
        }
    }
    Some(RatMatrix::new(r, q).expect("square"))
}

pub fn is_equitable(m: &ExactSymMatrix, pi: &Partition) -> Result<bool> {
    check_size(m, pi)?;
    Ok(row_sums(m, pi).is_some())
}

/// Matrix of block row sums of an equitable partition.
pub fn quotient_matrix(m: &ExactSymMatrix, pi: &Partition) -> Result<RatMatrix> {
    check_size(m, pi)?;
    row_sums(m, pi).ok_or_else(|| Error::Domain("partition is not equitable".into()))
}

/// Checks that every eigenvalue of the quotient is an eigenvalue of `m`: the
/// square-free part of the quotient's characteristic polynomial divides that
/// of `m`.
pub fn quotient_spectrum_contained(m: &ExactSymMatrix, pi: &Partition) -> Result<bool> {
    let q = quotient_matrix(m, pi)?;
    let pq = char_poly_general(&q).to_int_poly().squarefree_part();
    let pm = char_poly(m).to_int_poly();
    Ok(pm.divisible_by(&pq))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        if k <= mu {
            return Err(Error::Domain(format!(
                "need k > mu, got k = {k}, mu = {mu}"
            )));
        }
        if k >= n {
            return Err(Error::Domain(format!("need n > k, got n = {n}, k = {k}")));
        }
        Ok(Self { n, k, lambda, mu })
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Real quadratic number `(a + b sqrt(d)) / 2` with `d` square-free part
/// not a perfect square, or a rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eigenvalue {
    Rational(Rational),
    Surd { a: BigInt, b: i8, d: BigInt },
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Rational(r) => f.write_str(&format_rational(r)),
            Eigenvalue::Surd { a, b, d } => {
                let sign = if *b < 0 { '-' } else { '+' };
                write!(f, "({a} {sign} sqrt({d}))/2")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgEigenData {
    pub theta: Eigenvalue,
    pub tau: Eigenvalue,
    /// `None` when the multiplicity is irrational.
    pub m_theta: Option<Rational>,
    pub m_tau: Option<Rational>,
    pub feasible: bool,
}

fn is_nonneg_integer(r: &Option<Rational>) -> bool {
    r.as_ref()
        .is_some_and(|r| r.is_integer() && !r.is_negative())
}

/// Restricted eigenvalues of a strongly regular graph, the roots of
/// `x^2 - (lambda - mu) x - (k - mu)`, with their multiplicities.
pub fn srg_eigen_data(p: SrgParams) -> Result<SrgEigenData> {
    let p = SrgParams::new(p.n, p.k, p.lambda, p.mu)?;
    let n = BigInt::from(p.n);
    let k = BigInt::from(p.k);
    let diff = BigInt::from(p.lambda) - BigInt::from(p.mu);
    let disc: BigInt = &diff * &diff + BigInt::from(4) * (&k - BigInt::from(p.mu));
    let root = disc.sqrt();
    let n1 = Rational::from_integer(&n - BigInt::from(1));
    let kr = Rational::from_integer(k.clone());
    if &root * &root == disc {
        let theta = Rational::new(&diff + &root, BigInt::from(2));
        let tau = Rational::new(&diff - &root, BigInt::from(2));
        let m_theta = -(&n1 * &tau + &kr) / (&theta - &tau);
        let m_tau = &n1 - &m_theta;
        let (m_theta, m_tau) = (Some(m_theta), Some(m_tau));
        let feasible = is_nonneg_integer(&m_theta) && is_nonneg_integer(&m_tau);
        return Ok(SrgEigenData {
            theta: Eigenvalue::Rational(theta),
            tau: Eigenvalue::Rational(tau),
            m_theta,
            m_tau,
            feasible,
        });
    }
    // m_theta = (n-1)/2 - ((n-1)(lambda-mu) + 2k) / (2 sqrt(D)): rational only
    // in the balanced case
    let balanced = ((&n - BigInt::from(1)) * &diff + BigInt::from(2) * &k).is_zero();
    let (m_theta, m_tau) = if balanced {
        let half = &n1 * frac(1, 2);
        (Some(half.clone()), Some(half))
    } else {
        (None, None)
    };
    let feasible = is_nonneg_integer(&m_theta);
    Ok(SrgEigenData {
        theta: Eigenvalue::Surd {
            a: diff.clone(),
            b: 1,
            d: disc.clone(),
        },
        tau: Eigenvalue::Surd {
            a: diff,
            b: -1,
            d: disc,
        },
        m_theta,
        m_tau,
        feasible,
    })
}

/// Adjacency characteristic polynomial a graph with parameters `p` must have,
/// when the parameters are eigen-feasible.
pub fn srg_char_poly(p: SrgParams) -> Result<Option<IntPoly>> {
    let data = srg_eigen_data(p)?;
    if !data.feasible {
        return Ok(None);
    }
    let top = IntPoly::linear_root(&int(p.k as i64));
    let to_usize = |m: &Rational| m.to_integer().try_into().expect("small multiplicity");
    let mt: usize = to_usize(data.m_theta.as_ref().expect("feasible"));
    let mu: usize = to_usize(data.m_tau.as_ref().expect("feasible"));
    let rest = match (&data.theta, &data.tau) {
        (Eigenvalue::Rational(t), Eigenvalue::Rational(u)) => IntPoly::linear_root(t)
            .pow(mt)
            .mul(&IntPoly::linear_root(u).pow(mu)),
        _ => {
            let quad = IntPoly::from_i64(&[
                -(p.k as i64 - p.mu as i64),
                -(p.lambda as i64 - p.mu as i64),
                1,
            ]);
            quad.pow(mt)
        }
    };
    Ok(Some(top.mul(&rest)))
}
