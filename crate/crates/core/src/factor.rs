//! Factorisation of monic integer polynomials into irreducibles over the
//! integers: squarefree split, Cantor-Zassenhaus modulo a small prime,
//! Hensel lifting and recombination of the lifted factors.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Polynomial over `F_p`, ascending coefficients, no trailing zeros.
type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn fp_add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lb = inv(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lb % p;
        q[shift] = c;
        for (j, &y) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * y % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn fp_rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    fp_divrem(a, b, p).1
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|&c| c * li % p).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// `s, t` with `s a + t b = 1` for coprime `a, b`.
fn fp_xgcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "inputs must be coprime");
    let c = inv(r0[0], p);
    let scale = |v: &Fp| trim(v.iter().map(|&x| x * c % p).collect());
    (scale(&s0), scale(&t0))
}

fn fp_powmod(base: &Fp, e: &BigUint, m: &Fp, p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let b = fp_rem(base, m, p);
    for i in (0..e.bits()).rev() {
        result = fp_rem(&fp_mul(&result, &result, p), m, p);
        if e.bit(i) {
            result = fp_rem(&fp_mul(&result, &b, p), m, p);
        }
    }
    result
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn reduce(f: &IntPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                u64::try_from(r).expect("reduced below p")
            })
            .collect(),
    )
}

/// Groups of irreducible factors by degree.
fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 0;
    while f.len() > 2 * (d + 1) {
        d += 1;
        h = fp_powmod(&h, &pe, &f, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            out.push((g.clone(), d));
            f = fp_divrem(&f, &g, p).0;
            h = fp_rem(&h, &f, p);
        }
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((fp_monic(&f, p), deg));
    }
    out
}

/// Splits a product of distinct monic irreducibles of degree `d`.
fn equal_degree(f: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.clone()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, f, p), &vec![1], p);
        let g = fp_gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let rest = fp_monic(&fp_divrem(f, &g, p).0, p);
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&rest, d, p, rng));
            return out;
        }
    }
}

fn factor_mod_p(f: &Fp, p: u64) -> Vec<Fp> {
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    distinct_degree(f, p)
        .into_iter()
        .flat_map(|(g, d)| equal_degree(&g, d, p, &mut rng))
        .collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn lift_poly(a: &Fp) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zmod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

/// Lifts `f = g h (mod p)` with monic `g, h` to a factorisation modulo
/// `p^k`.
fn hensel(f: &[BigInt], g: &Fp, h: &Fp, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (s, t) = fp_xgcd(g, h, p);
    let pb = BigInt::from(p);
    let mut gz = lift_poly(g);
    let mut hz = lift_poly(h);
    let mut m = pb.clone();
    for _ in 1..k {
        let gh = zmul(&gz, &hz);
        let n = f.len().max(gh.len());
        let e: Vec<BigInt> = (0..n)
            .map(|i| {
                let fi = f.get(i).cloned().unwrap_or_default();
                let gi = gh.get(i).cloned().unwrap_or_default();
                let d = fi - gi;
                debug_assert!((&d % &m).is_zero());
                d / &m
            })
            .collect();
        let ep = trim(
            zmod(&e, &pb)
                .into_iter()
                .map(|c| u64::try_from(c).expect("reduced"))
                .collect(),
        );
        let (q, dg) = fp_divrem(&fp_mul(&t, &ep, p), g, p);
        let dh = fp_add(&fp_mul(&s, &ep, p), &fp_mul(&q, h, p), p);
        for (i, c) in dg.iter().enumerate() {
            gz[i] += &m * BigInt::from(*c);
        }
        for (i, c) in dh.iter().enumerate() {
            hz[i] += &m * BigInt::from(*c);
        }
        m *= &pb;
    }
    (zmod(&gz, &m), zmod(&hz, &m))
}

fn lift_all(f: &[BigInt], factors: &[Fp], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![zmod(f, &BigInt::from(p).pow(k))];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Fp]| fs.iter().fold(vec![1u64], |acc, g| fp_mul(&acc, g, p));
    let (gz, hz) = hensel(f, &prod(left), &prod(right), p, k);
    let mut out = lift_all(&gz, left, p, k);
    out.extend(lift_all(&hz, right, p, k));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        a.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Subset products tried before giving up on certifying the remaining part.
const RECOMBINATION_BUDGET: usize = 200_000;

/// Irreducible factors of a monic squarefree polynomial; the flag is false
/// when recombination ran out of budget and the last factor is uncertified.
fn factor_squarefree(f: &IntPoly) -> (Vec<IntPoly>, bool) {
    let n = f.deg();
    if n <= 1 {
        return (vec![f.clone()], true);
    }
    // a prime keeping f squarefree, preferring few modular factors
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in (1009u64..).filter(|&p| is_prime(p)) {
        let fp = reduce(f, p);
        if fp.len() != n + 1 || fp_gcd(&fp, &fp_derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let fs = factor_mod_p(&fp, p);
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried == 4 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps f squarefree");
    if modular.len() == 1 {
        return (vec![f.clone()], true);
    }
    // coefficient bound for factors: 2^n * |f|_1
    let norm: BigInt = f.coeffs().iter().map(|c| c.abs()).sum();
    let bound = (BigInt::one() << n) * norm * 2;
    let pb = BigInt::from(p);
    let mut k = 1;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let mut lifted = lift_all(f.coeffs(), &modular, p, k);
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    let mut budget = RECOMBINATION_BUDGET;
    'outer: while 2 * size <= lifted.len() {
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if budget == 0 {
                out.push(rest);
                return (out, false);
            }
            budget -= 1;
            let prod = idx.iter().fold(vec![BigInt::one()], |acc, &i| {
                zmod(&zmul(&acc, &lifted[i]), &m)
            });
            let cand = symmetric(&prod, &m);
            if let Some(q) = exact_quotient(&rest, &cand) {
                out.push(cand);
                rest = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            // next combination of `size` indices out of `r`
            let mut i = size;
            while i > 0 && idx[i - 1] == r - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
        size += 1;
    }
    out.push(rest);
    (out, true)
}

/// `a / b` when `b` is monic and divides `a` over the integers.
fn exact_quotient(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    if b.deg() == 0 || b.deg() >= a.deg() || !b.leading().is_one() {
        return None;
    }
    let a0 = a.coeff(0);
    let b0 = b.coeff(0);
    if !a0.is_zero() && (b0.is_zero() || !(&a0 % &b0).is_zero()) {
        return None;
    }
    let (q, r) = a.div_rem_q(b);
    if !r.is_empty() {
        return None;
    }
    Some(IntPoly::new(
        q.into_iter().map(|c| c.to_integer()).collect(),
    ))
}

/// Factorisation `f = prod g_i^{m_i}` into monic irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(IntPoly, usize)>,
    /// False when some factor could not be certified irreducible within the
    /// search budget.
    pub certified: bool,
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(g, m)| {
                let base = format!("({g})");
                if *m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn factor_monic(f: &IntPoly) -> Result<Factorization> {
    if f.is_zero() || !f.leading().is_one() {
        return Err(Error::Domain(
            "factorisation needs a monic polynomial".into(),
        ));
    }
    let mut factors = Vec::new();
    let mut certified = true;
    for (g, mult) in f.squarefree_decomposition() {
        // squarefree parts of a monic polynomial are monic up to sign
        let g = if g.leading().is_negative() { -g } else { g };
        let (parts, ok) = factor_squarefree(&g);
        certified &= ok;
        factors.extend(parts.into_iter().map(|h| (h, mult)));
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(Factorization { factors, certified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn product(fz: &Factorization) -> IntPoly {
        fz.factors
            .iter()
            .fold(IntPoly::one(), |acc, (g, m)| acc.mul(&g.pow(*m)))
    }

    #[test]
    fn small_cases() {
        // (x-1)^2 (x+2) (x^2+1)
        let f = IntPoly::linear_root(&int(1))
            .pow(2)
            .mul(&IntPoly::linear_root(&int(-2)))
            .mul(&IntPoly::from_i64(&[1, 0, 1]));
        let fz = factor_monic(&f).unwrap();
        assert!(fz.certified);
        assert_eq!(product(&fz), f);
        assert_eq!(fz.to_string(), "(x - 1)^2 (x + 2) (x^2 + 1)");
        assert!(factor_monic(&IntPoly::from_i64(&[1, 2])).is_err());
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
        let f = IntPoly::from_i64(&[1, 0, -10, 0, 1]);
        let fz = factor_monic(&f).unwrap();
        assert_eq!(fz.factors, vec![(f, 1)]);
        // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
        let g = IntPoly::from_i64(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fz = factor_monic(&g).unwrap();
        assert_eq!(fz.factors.len(), 4);
        assert_eq!(product(&fz), g);
    }

    #[test]
    fn large_coefficients() {
        let a = IntPoly::from_i64(&[-1_000_003, 7, 1]);
        let b = IntPoly::from_i64(&[999_983, 0, -5, 1]);
        let f = a.mul(&b).mul(&a.taylor_shift(&int(3)));
        let fz = factor_monic(&f).unwrap();
        assert_eq!(fz.factors.len(), 3);
        assert_eq!(product(&fz), f);
    }
}
