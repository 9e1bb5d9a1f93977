//! Spectral reduction for a core graph padded with isolated vertices, `K2`
//! copies and `P3` copies.
//!
//! The partition {core singletons, isolated vertices, `K2` vertices, `P3`
//! ends, `P3` centres} is equitable for the Seidel matrix. Vectors that sum to
//! zero on every padding cell are eigenvectors with eigenvalues fixed by the
//! padding type:
//!
//! | cell       | eigenvalue     | multiplicity |
//! |------------|----------------|--------------|
//! | isolated   | -1             | t1 - 1       |
//! | K2         | -3             | t2 - 1       |
//! | K2         | +1             | t2           |
//! | P3         | -1             | t3           |
//! | P3         | -1 +- 2 sqrt2  | t3 - 1 each  |
//!
//! The rest of the spectrum is that of the quotient matrix.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactspec::{
    char_poly_general, cmp_value, CharPoly, Relation, SpectralVerdict, Witness,
};
use crate::graphs::Graph;
use crate::matrix::RatMatrix;
use crate::rational::{int, Rational};
use crate::seidel::seidel_entry;

/// Equitable reduction of `S(pad(core, t1, t2, t3))`.
#[derive(Clone, Debug)]
pub struct PaddedReduction {
    core: Graph,
    t: [usize; 3],
}

impl PaddedReduction {
    pub fn new(core: &Graph, t1: usize, t2: usize, t3: usize) -> Self {
        Self {
            core: core.clone(),
            t: [t1, t2, t3],
        }
    }

    /// Padding cells present, as (size, kind) with kind 0 isolated, 1 `K2`,
    /// 2 `P3` ends, 3 `P3` centres.
    fn cells(&self) -> Vec<(usize, usize)> {
        let [t1, t2, t3] = self.t;
        let mut cells = Vec::new();
        if t1 > 0 {
            cells.push((t1, 0));
        }
        if t2 > 0 {
            cells.push((2 * t2, 1));
        }
        if t3 > 0 {
            cells.push((2 * t3, 2));
            cells.push((t3, 3));
        }
        cells
    }

    /// Row sum of `S` from a vertex of padding kind `from` into cell `into`.
    fn padding_block(from: usize, into: usize, size: usize) -> i64 {
        let s = size as i64;
        match (from, into) {
            (a, b) if a != b && !(a >= 2 && b >= 2) => s,
            (0, 0) => s - 1,
            // partner is adjacent
            (1, 1) => s - 3,
            // other end of the same path is non-adjacent, own centre adjacent
            (2, 2) => s - 1,
            (2, 3) => s - 2,
            (3, 2) => s - 4,
            (3, 3) => s - 1,
            _ => unreachable!(),
        }
    }

    pub fn quotient(&self) -> RatMatrix {
        let nc = self.core.n();
        let cells = self.cells();
        let r = nc + cells.len();
        RatMatrix::from_fn(r, |i, j| {
            let v = match (i < nc, j < nc) {
                (true, true) => seidel_entry(&self.core, i, j),
                (true, false) => cells[j - nc].0 as i64,
                (false, true) => 1,
                (false, false) => {
                    let (size, into) = cells[j - nc];
                    Self::padding_block(cells[i - nc].1, into, size)
                }
            };
            int(v)
        })
    }

    /// Order of the reduced matrix.
    pub fn order(&self) -> usize {
        self.core.n() + self.cells().len()
    }

    /// Linear eigenvalues carried by the padding with multiplicities; the
    /// `P3` pair `-1 +- 2 sqrt2` is reported separately.
    pub fn internal_rational(&self) -> Vec<(i64, usize)> {
        let [t1, t2, t3] = self.t;
        let mut out = Vec::new();
        if t1 > 1 {
            out.push((-1, t1 - 1));
        }
        if t2 > 0 {
            if t2 > 1 {
                out.push((-3, t2 - 1));
            }
            out.push((1, t2));
        }
        if t3 > 0 {
            out.push((-1, t3));
        }
        out
    }

    /// Multiplicity of each root of `x^2 + 2x - 7`.
    pub fn internal_quadratic(&self) -> usize {
        self.t[2].saturating_sub(1)
    }

    pub fn char_poly(&self) -> CharPoly {
        let mut p = char_poly_general(&self.quotient());
        for (e, m) in self.internal_rational() {
            let lin = CharPoly {
                coeffs: vec![int(-e), int(1)],
            };
            for _ in 0..m {
                p = p.mul(&lin);
            }
        }
        let quad = CharPoly {
            coeffs: vec![int(-7), int(2), int(1)],
        };
        for _ in 0..self.internal_quadratic() {
            p = p.mul(&quad);
        }
        p
    }
}

/// Characteristic polynomial of `S(pad(core, t1, t2, t3))` from the reduction.
pub fn padded_char_poly(core: &Graph, t1: usize, t2: usize, t3: usize) -> CharPoly {
    PaddedReduction::new(core, t1, t2, t3).char_poly()
}

/// Relation of the smaller root `-1 - 2 sqrt2` of `x^2 + 2x - 7` to `q <= -1`.
fn cmp_p3_root(q: &Rational) -> Relation {
    // for q + 1 < 0: -1 - 2 sqrt2 < q iff (q + 1)^2 < 8
    let s = q + Rational::one();
    let sq = &s * &s;
    if sq < int(8) {
        Relation::Below
    } else {
        Relation::Above
    }
}

/// Compares `lambda_min(S(pad(core, t1, t2, t3)))` with `q <= -3` on the
/// reduced quotient matrix.
pub fn lambda_min_cmp_padded(
    core: &Graph,
    t1: usize,
    t2: usize,
    t3: usize,
    q: &Rational,
) -> Result<SpectralVerdict> {
    if *q > int(-3) {
        return Err(Error::Domain(format!(
            "padded reduction needs a threshold <= -3, got {q}"
        )));
    }
    let red = PaddedReduction::new(core, t1, t2, t3);
    let quotient = red.quotient();
    let cp = char_poly_general(&quotient);
    // the quotient is similar to a symmetric matrix, hence real-rooted
    debug_assert_eq!(
        crate::poly::RootCounter::new(&cp.to_int_poly()).real_roots(),
        cp.degree()
    );
    let v = cp.cmp_min_root(q);
    let mut relation = v.relation;
    for (e, _) in red.internal_rational() {
        relation = relation.min(cmp_value(&int(e), q));
    }
    if red.internal_quadratic() > 0 {
        relation = relation.min(cmp_p3_root(q));
    }
    Ok(SpectralVerdict::new(
        relation,
        Some(Witness::Reduced {
            order: red.order(),
            inner: Box::new(v.witness.expect("sign witness")),
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactspec::{char_poly, lambda_min_cmp};
    use crate::graphs::{build_family, pad, Family, FamilySpec};
    use crate::seidel::seidel_of;

    fn fam(f: Family, p: &[usize]) -> Graph {
        build_family(&FamilySpec::new(f, p.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn star_quotient_matches_closed_form() {
        // K_{1,r}(s,t): cells centre, leaves, isolated, K2
        let (r, s, t) = (5i64, 3i64, 2i64);
        let star = fam(Family::CompleteMultipartite, &[1, r as usize]);
        let red = PaddedReduction::new(&star, s as usize, t as usize, 0);
        let q = red.quotient();
        assert_eq!(q.order(), 3 + r as usize);
        // collapse leaves: row of the centre sums to -r over the leaves
        let centre_to_leaves: Rational = (1..=r as usize).map(|j| q.get(0, j).clone()).sum();
        assert_eq!(centre_to_leaves, int(-r));
        assert_eq!(*q.get(0, 1 + r as usize), int(s));
        assert_eq!(*q.get(0, 2 + r as usize), int(2 * t));
        // K2 row into its own cell: 2t - 3
        assert_eq!(*q.get(2 + r as usize, 2 + r as usize), int(2 * t - 3));
    }

    #[test]
    fn char_poly_matches_direct_expansion() {
        let core = fam(Family::B1, &[]);
        for (t1, t2, t3) in [
            (0, 0, 0),
            (3, 0, 0),
            (0, 2, 0),
            (0, 0, 2),
            (2, 1, 1),
            (1, 3, 2),
        ] {
            let direct = char_poly(&seidel_of(&pad(&core, t1, t2, t3)));
            assert_eq!(
                padded_char_poly(&core, t1, t2, t3),
                direct,
                "{t1} {t2} {t3}"
            );
        }
    }

    #[test]
    fn table_boundary() {
        let e8p = fam(Family::ETildePlus, &[8]);
        let v = lambda_min_cmp_padded(&e8p, 2477, 0, 0, &int(-5)).unwrap();
        assert_eq!(v.relation, Relation::Below);
        let v = lambda_min_cmp_padded(&e8p, 2476, 0, 0, &int(-5)).unwrap();
        assert!(v.relation.is_at_least());
    }

    #[test]
    fn star_k14_never_below() {
        let star = fam(Family::CompleteMultipartite, &[1, 4]);
        for (s, t) in [(0, 1), (50, 0), (100, 30), (7, 7)] {
            let v = lambda_min_cmp_padded(&star, s, t, 0, &int(-5)).unwrap();
            assert!(v.relation.is_at_least());
        }
    }

    #[test]
    fn agrees_with_direct_on_small_cases() {
        let core = fam(Family::CompleteMultipartite, &[2, 3]);
        for t1 in 0..4 {
            for t2 in 0..3 {
                for t3 in 0..3 {
                    let direct = lambda_min_cmp(&seidel_of(&pad(&core, t1, t2, t3)), &int(-3));
                    let red = lambda_min_cmp_padded(&core, t1, t2, t3, &int(-3)).unwrap();
                    assert_eq!(direct.relation, red.relation, "{t1} {t2} {t3}");
                }
            }
        }
    }

    #[test]
    fn rejects_large_threshold() {
        let core = fam(Family::B1, &[]);
        assert!(lambda_min_cmp_padded(&core, 1, 0, 0, &int(-2)).is_err());
    }
}
