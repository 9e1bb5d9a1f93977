//! Univariate integer polynomials, Sturm sequences and exact real-root location.
//!
//! Polynomials are stored with ascending coefficients and no trailing zeros.
//! Real roots are never approximated in floating point: every comparison goes
//! through sign evaluations at rational points and Sturm variation counts.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{common_denominator, scale_to_int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Positive multiple of a rational polynomial with coprime integer
    /// coefficients; the sign of every coefficient is preserved.
    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        let d = common_denominator(coeffs);
        Self::new(coeffs.iter().map(|c| scale_to_int(c, &d)).collect()).primitive_keep_sign()
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x - r` scaled to integers: `den * x - num`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial counted as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn primitive_keep_sign(self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self;
        }
        Self::new(self.coeffs.into_iter().map(|x| x / &c).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.clone().primitive_keep_sign();
        if p.leading().is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&-other.clone())
    }

    /// Remainder of `self` by `b` up to a positive constant factor.
    pub fn positive_prem(&self, b: &Self) -> Self {
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.deg();
        let lb = b.leading();
        let lb_abs = lb.abs();
        let sb = if lb.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let mut a = self.coeffs.clone();
        while a.len() > db && !a.is_empty() {
            let la = a.last().cloned().unwrap();
            let shift = a.len() - 1 - db;
            for c in a.iter_mut() {
                *c *= &lb_abs;
            }
            let f = &sb * &la;
            for (j, bc) in b.coeffs.iter().enumerate() {
                a[shift + j] -= &f * bc;
            }
            while a.last().is_some_and(Zero::is_zero) {
                a.pop();
            }
        }
        Self::new(a).primitive_keep_sign()
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_prem(&b);
            a = b;
            b = r.normalized();
        }
        a.normalized()
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem_q(&self, b: &Self) -> (Vec<Rational>, Vec<Rational>) {
        assert!(!b.is_zero(), "division by zero polynomial");
        let mut r: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let db = b.deg();
        let lb = Rational::from_integer(b.leading());
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        while r.len() > db {
            let top = r.last().cloned().unwrap();
            let shift = r.len() - 1 - db;
            let f = &top / &lb;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &f * Rational::from_integer(bc.clone());
            }
            q[shift] = f;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (q, r)
    }

    /// `self / b` up to a constant, when `b` divides `self` over the rationals.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_q(b);
        if !r.is_empty() {
            return None;
        }
        Some(Self::from_rationals(&q))
    }

    /// `true` iff `b` divides `self` over the rationals.
    pub fn divisible_by(&self, b: &Self) -> bool {
        self.div_rem_q(b).1.is_empty()
    }

    /// Squarefree factors with multiplicities: `self = c * prod f_i^{m_i}`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let f = self.normalized();
        if f.is_constant() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut c = f.gcd(&f.derivative());
        let mut w = f.div_exact(&c).expect("gcd divides");
        let mut i = 1;
        while !w.is_constant() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y).expect("gcd divides");
            if !z.is_constant() {
                out.push((z.normalized(), i));
            }
            i += 1;
            c = c.div_exact(&y).expect("gcd divides");
            w = y;
        }
        out
    }

    pub fn squarefree_part(&self) -> Self {
        let f = self.normalized();
        if f.is_constant() {
            return f;
        }
        f.div_exact(&f.gcd(&f.derivative()))
            .expect("gcd divides")
            .normalized()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `self(x)` using homogenised integer Horner evaluation.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let Some(n) = self.degree() else { return 0 };
        let (p, q) = (x.numer(), x.denom());
        let mut acc = self.coeffs[n].clone();
        let mut qpow = BigInt::one();
        for c in self.coeffs[..n].iter().rev() {
            qpow *= q;
            acc = acc * p + c * &qpow;
        }
        // q > 0 so the sign of q^n p(x) is the sign of p(x)
        big_sign(&acc)
    }

    pub fn sign_at_pos_inf(&self) -> i8 {
        big_sign(&self.leading())
    }

    pub fn sign_at_neg_inf(&self) -> i8 {
        let s = big_sign(&self.leading());
        if self.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// Positive multiple of `self(a*x + b)`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Self {
        let mut acc: Vec<Rational> = Vec::new();
        for c in self.coeffs.iter().rev() {
            // acc := acc * (a x + b) + c
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (i, v) in acc.iter().enumerate() {
                next[i] += v * b;
                next[i + 1] += v * a;
            }
            next[0] += Rational::from_integer(c.clone());
            acc = next;
        }
        while acc.last().is_some_and(Zero::is_zero) {
            acc.pop();
        }
        Self::from_rationals(&acc)
    }

    /// Positive multiple of `self(x + s)`.
    pub fn taylor_shift(&self, s: &Rational) -> Self {
        self.compose_linear(&Rational::one(), s)
    }

    /// Integer roots (each listed once).
    pub fn integer_roots(&self) -> Vec<BigInt> {
        let f = self.normalized();
        if f.is_constant() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut f0 = f.clone();
        let mut zero_mult = 0;
        while f0.coeff(0).is_zero() && !f0.is_constant() {
            f0 = Self::new(f0.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push(BigInt::zero());
        }
        if f0.is_constant() {
            return roots;
        }
        // candidates divide the constant term and lie below the Cauchy bound;
        // larger roots are left to the caller's full factorisation
        let limit = cauchy_bound(&f0).ceil().to_integer();
        let c0 = f0.coeff(0).abs();
        let cap = BigInt::from(1u64 << 20);
        let top = if limit < cap { limit } else { cap };
        let mut found = Vec::new();
        let mut d = BigInt::one();
        while d <= top {
            if (&c0 % &d).is_zero() {
                for cand in [d.clone(), -d.clone()] {
                    if f0.sign_at(&Rational::from_integer(cand.clone())) == 0 {
                        found.push(cand);
                    }
                }
            }
            d += 1;
        }
        roots.extend(found);
        roots.sort();
        roots
    }

    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || !a.is_one() {
                s.push_str(&a.to_string());
            }
            s.push_str(&mono);
        }
        s
    }
}

impl std::ops::Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("x"))
    }
}

fn big_sign(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Strict upper bound on the absolute value of every complex root.
pub fn cauchy_bound(p: &IntPoly) -> Rational {
    let lead = Rational::from_integer(p.leading().abs());
    let m = p.coeffs[..p.deg()]
        .iter()
        .map(|c| Rational::from_integer(c.abs()) / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + m
}

/// Sturm sequence of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Self {
        let p0 = p.squarefree_part();
        let mut seq = vec![p0.clone()];
        if p0.is_constant() {
            return Self { seq };
        }
        let mut a = p0;
        let mut b = a.derivative().primitive_keep_sign();
        while !b.is_zero() {
            let r = -a.positive_prem(&b);
            seq.push(b.clone());
            a = b;
            b = r;
        }
        Self { seq }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.seq[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn var_at(&self, x: Option<&Rational>, upper: bool) -> usize {
        match x {
            Some(x) => Self::variations(self.seq.iter().map(|p| p.sign_at(x))),
            None if upper => Self::variations(self.seq.iter().map(|p| p.sign_at_pos_inf())),
            None => Self::variations(self.seq.iter().map(|p| p.sign_at_neg_inf())),
        }
    }

    /// Distinct real roots in `(lo, hi]`; `None` bounds mean infinity.
    pub fn count(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
        if self.seq[0].is_constant() {
            return 0;
        }
        let a = self.var_at(lo, false);
        let b = self.var_at(hi, true);
        a.saturating_sub(b)
    }

    pub fn count_real(&self) -> usize {
        self.count(None, None)
    }

    /// Distinct real roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        let c = self.count(Some(lo), Some(hi));
        if self.seq[0].sign_at(hi) == 0 {
            c - 1
        } else {
            c
        }
    }
}

/// Open interval `(lo, hi)` holding exactly one root; both ends are non-roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

/// Point of `(lo, hi)` avoiding the roots of `p`.
fn split_point(p: &IntPoly, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    let width = hi - lo;
    let mid = (lo + hi) / &two;
    if p.sign_at(&mid) != 0 {
        return mid;
    }
    let mut step = width / Rational::from_integer(BigInt::from(6));
    loop {
        let cand = &mid + &step;
        if p.sign_at(&cand) != 0 {
            return cand;
        }
        step /= Rational::from_integer(BigInt::from(3));
    }
}

/// Isolates all real roots of `p` (in increasing order).
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RootInterval> {
    let sturm = Sturm::new(p);
    let sq = sturm.poly().clone();
    if sq.is_constant() {
        return Vec::new();
    }
    let r = cauchy_bound(&sq);
    let mut out = Vec::new();
    let mut stack = vec![(-r.clone(), r)];
    while let Some((lo, hi)) = stack.pop() {
        let c = sturm.count_open(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let m = split_point(&sq, &lo, &hi);
        // upper half first so the lower half is processed next
        stack.push((m.clone(), hi));
        stack.push((lo, m));
    }
    out
}

/// A real root of the product of several polynomials, tagged with the
/// polynomials that vanish there.
#[derive(Clone, Debug)]
pub struct MergedRoot {
    pub interval: RootInterval,
    pub member: Vec<bool>,
}

/// Common isolation of the real roots of `polys`, in increasing order.
pub fn merged_roots(polys: &[&IntPoly]) -> Vec<MergedRoot> {
    let prod = polys
        .iter()
        .filter(|p| !p.is_zero())
        .fold(IntPoly::one(), |acc, p| acc.mul(&p.squarefree_part()));
    let sturms: Vec<Sturm> = polys.iter().map(|p| Sturm::new(p)).collect();
    isolate_real_roots(&prod)
        .into_iter()
        .map(|iv| {
            let member = sturms
                .iter()
                .map(|s| s.count_open(&iv.lo, &iv.hi) > 0)
                .collect();
            MergedRoot {
                interval: iv,
                member,
            }
        })
        .collect()
}

/// Orders the smallest real roots of `a` and `b`.
///
/// Panics if either polynomial has no real root.
pub fn cmp_smallest_roots(a: &IntPoly, b: &IntPoly) -> Ordering {
    let roots = merged_roots(&[a, b]);
    let ia = roots
        .iter()
        .position(|r| r.member[0])
        .expect("no real root");
    let ib = roots
        .iter()
        .position(|r| r.member[1])
        .expect("no real root");
    ia.cmp(&ib)
}

/// Orders the largest real roots of `a` and `b`.
pub fn cmp_largest_roots(a: &IntPoly, b: &IntPoly) -> Ordering {
    let roots = merged_roots(&[a, b]);
    let ia = roots
        .iter()
        .rposition(|r| r.member[0])
        .expect("no real root");
    let ib = roots
        .iter()
        .rposition(|r| r.member[1])
        .expect("no real root");
    ia.cmp(&ib)
}

/// Real-root counting with multiplicity through a squarefree decomposition.
#[derive(Clone, Debug)]
pub struct RootCounter {
    parts: Vec<(Sturm, usize)>,
    degree: usize,
}

impl RootCounter {
    pub fn new(p: &IntPoly) -> Self {
        let parts = p
            .squarefree_decomposition()
            .into_iter()
            .map(|(f, m)| (Sturm::new(&f), m))
            .collect();
        Self {
            parts,
            degree: p.deg(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Real roots counted with multiplicity.
    pub fn real_roots(&self) -> usize {
        self.parts.iter().map(|(s, m)| s.count_real() * m).sum()
    }

    /// Roots `<= x`, with multiplicity.
    pub fn count_le(&self, x: &Rational) -> usize {
        self.parts
            .iter()
            .map(|(s, m)| s.count(None, Some(x)) * m)
            .sum()
    }

    /// Roots `< x`, with multiplicity.
    pub fn count_lt(&self, x: &Rational) -> usize {
        self.count_le(x) - self.multiplicity(x)
    }

    pub fn multiplicity(&self, x: &Rational) -> usize {
        self.parts
            .iter()
            .filter(|(s, _)| s.poly().sign_at(x) == 0)
            .map(|(_, m)| m)
            .sum()
    }
}

/// Orders the smallest root of `p` against `q`.
pub fn cmp_smallest_root_with(p: &IntPoly, q: &Rational) -> Ordering {
    let rc = RootCounter::new(p);
    if rc.count_lt(q) > 0 {
        Ordering::Less
    } else if rc.multiplicity(q) > 0 {
        Ordering::Equal
    } else {
        Ordering::Greater
    }
}
