//! Exact spectral predicates.
//!
//! Every verdict is decided in exact arithmetic: characteristic polynomials
//! by Faddeev–LeVerrier over the integers, threshold tests by the sign
//! pattern of the shifted polynomial or by semidefiniteness of the shifted
//! matrix, and root comparisons by Sturm sequences.

mod padded;
mod smith;

pub use padded::{lambda_min_cmp_padded, padded_char_poly, PaddedReduction};
pub use smith::{
    is_minimal_rho_above2, smith_classify, smith_labels, SmithClass, SmithFamily, MINIMAL_ABOVE2,
};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::matrix::{bareiss_rank, ExactSymMatrix, RatMatrix};
use crate::poly::{merged_roots, IntPoly, RootCounter};
use crate::psd::{self, Inertia};
use crate::rational::{common_denominator, int, scale_to_int, Rational};
use crate::seidel::seidel_entry;

/// Largest order for which characteristic polynomials are expanded directly.
pub const MAX_CHARPOLY_ORDER: usize = 64;

/// Position of `lambda_min` (or another extreme eigenvalue) relative to a
/// threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Below,
    Equal,
    Above,
}

impl Relation {
    /// The relation of the minimum of two spectra.
    pub fn min(self, other: Relation) -> Relation {
        std::cmp::min(self, other)
    }

    pub fn is_at_least(self) -> bool {
        self != Relation::Below
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Below => "<",
            Relation::Equal => "=",
            Relation::Above => ">",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Outcome of fraction-free elimination on the shifted matrix.
    Inertia(Inertia),
    /// Sign pattern of the shifted characteristic polynomial: index of the
    /// first negative elementary symmetric function, and the multiplicity of
    /// the threshold as an eigenvalue.
    ElementarySigns {
        first_negative: Option<usize>,
        multiplicity: usize,
    },
    /// Verdict obtained on a reduced matrix of the given order.
    Reduced { order: usize, inner: Box<Witness> },
    /// Exact determinant of the shifted matrix.
    Determinant(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralVerdict {
    pub relation: Relation,
    pub witness: Option<Witness>,
}

impl SpectralVerdict {
    pub fn new(relation: Relation, witness: Option<Witness>) -> Self {
        Self { relation, witness }
    }
}

/// Monic characteristic polynomial `det(xI - M)`, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<Rational>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.last() != Some(&Rational::one()) {
            return Err(Error::Domain(
                "characteristic polynomial must be monic".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::from_rationals(&self.coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CharPoly { coeffs: out }
    }

    /// Multiplicity of `q` as a root.
    pub fn multiplicity(&self, q: &Rational) -> usize {
        let mut p = self.to_int_poly();
        let lin = IntPoly::linear_root(q);
        let mut m = 0;
        while !p.is_constant() {
            match p.div_exact(&lin) {
                Some(next) if p.sign_at(q) == 0 => {
                    p = next;
                    m += 1;
                }
                _ => break,
            }
        }
        m
    }

    /// Coefficients of `p(x + q)`, exact.
    pub fn shifted_coeffs(&self, q: &Rational) -> Vec<Rational> {
        let n = self.degree();
        // synthetic Taylor shift
        let mut c = self.coeffs.clone();
        for i in 0..n {
            for j in (i..n).rev() {
                let t = &c[j + 1] * q;
                c[j] += t;
            }
        }
        c
    }

    /// Compares the smallest root with `q`, assuming all roots are real.
    ///
    /// With `p(x + q) = sum (-1)^k e_k x^(n-k)` every root is `>= q` iff every
    /// `e_k >= 0`; `q` itself is a root iff `e_n = 0`.
    pub fn cmp_min_root(&self, q: &Rational) -> SpectralVerdict {
        let n = self.degree();
        let c = self.shifted_coeffs(q);
        let mut first_negative = None;
        for k in 0..=n {
            let ek = if k % 2 == 0 {
                c[n - k].clone()
            } else {
                -c[n - k].clone()
            };
            if ek.is_negative() {
                first_negative = Some(k);
                break;
            }
        }
        let multiplicity = if first_negative.is_none() {
            c.iter().take_while(|v| v.is_zero()).count()
        } else {
            0
        };
        let relation = match (first_negative, multiplicity) {
            (Some(_), _) => Relation::Below,
            (None, 0) => Relation::Above,
            (None, _) => Relation::Equal,
        };
        SpectralVerdict::new(
            relation,
            Some(Witness::ElementarySigns {
                first_negative,
                multiplicity,
            }),
        )
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.to_integer()).collect();
            return write!(f, "{}", IntPoly::new(ints));
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})x^{i}"))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

trait Ring: Clone {
    fn zero() -> Self;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div_small(&self, k: usize) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_small(&self, k: usize) -> Option<Self> {
        debug_assert_eq!(self % k as i128, 0);
        Some(self / k as i128)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_small(&self, k: usize) -> Option<Self> {
        Some(self / BigInt::from(k))
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Faddeev–LeVerrier on an integer matrix; ascending monic coefficients.
fn faddeev_leverrier<T: Ring>(a: &[BigInt], n: usize) -> Option<Vec<BigInt>> {
    let a: Vec<T> = a.iter().map(T::from_big).collect::<Option<_>>()?;
    let mut coeffs = vec![T::zero(); n + 1];
    let one = T::from_big(&BigInt::one())?;
    coeffs[n] = one.clone();
    // m holds M_k; start with M_1 = I
    let mut m = vec![T::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = one.clone();
    }
    for k in 1..=n {
        let mut am = vec![T::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = &a[i * n + l];
                if ail.to_big().is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = ail.mul(&m[l * n + j])?;
                    am[i * n + j] = am[i * n + j].add(&t)?;
                }
            }
        }
        let mut tr = T::zero();
        for i in 0..n {
            tr = tr.add(&am[i * n + i])?;
        }
        let c = tr.div_small(k)?.neg()?;
        coeffs[n - k] = c.clone();
        if k < n {
            for i in 0..n {
                am[i * n + i] = am[i * n + i].add(&c)?;
            }
            m = am;
        }
    }
    Some(coeffs.iter().map(Ring::to_big).collect())
}

/// Characteristic polynomial of an integer matrix given row-major.
pub fn char_poly_integer(a: &[BigInt], n: usize) -> Vec<BigInt> {
    if let Some(c) = faddeev_leverrier::<i128>(a, n) {
        return c;
    }
    faddeev_leverrier::<BigInt>(a, n).expect("BigInt arithmetic cannot overflow")
}

fn char_poly_scaled(ints: &[BigInt], d: &BigInt, n: usize) -> CharPoly {
    // p_M(x) = d^-n p_{dM}(d x): coefficient k is c_k / d^(n-k)
    let c = char_poly_integer(ints, n);
    let coeffs = c
        .into_iter()
        .enumerate()
        .map(|(k, ck)| Rational::new(ck, num_traits::pow(d.clone(), n - k)))
        .collect();
    CharPoly { coeffs }
}

pub fn char_poly(m: &ExactSymMatrix) -> CharPoly {
    let (ints, d) = m.to_scaled_integers();
    char_poly_scaled(&ints, &d, m.order())
}

/// Characteristic polynomial of a general square rational matrix.
pub fn char_poly_general(m: &RatMatrix) -> CharPoly {
    let (ints, d) = m.to_scaled_integers();
    char_poly_scaled(&ints, &d, m.order())
}

/// Compares `lambda_min(M)` with `q`.
///
/// Orders up to [`MAX_CHARPOLY_ORDER`] use the sign pattern of the shifted
/// characteristic polynomial; larger matrices use elimination on `M - qI`.
pub fn lambda_min_cmp(m: &ExactSymMatrix, q: &Rational) -> SpectralVerdict {
    if m.order() <= MAX_CHARPOLY_ORDER {
        char_poly(m).cmp_min_root(q)
    } else {
        psd::lambda_min_cmp_ldl(m, q)
    }
}

/// Compares the spectral radius of `g` with `q` by testing `qI - A`.
pub fn spectral_radius_cmp(g: &Graph, q: &Rational) -> SpectralVerdict {
    let n = g.n();
    if n == 0 {
        // empty spectrum: treat the radius as 0
        let rel = match crate::rational::sign(q) {
            1 => Relation::Below,
            0 => Relation::Equal,
            _ => Relation::Above,
        };
        return SpectralVerdict::new(rel, None);
    }
    let d = common_denominator([q]);
    let qd = scale_to_int(q, &d);
    let mut ints = vec![<BigInt as num_traits::Zero>::zero(); n * n];
    for i in 0..n {
        ints[i * n + i] = qd.clone();
        for &j in g.neighbours(i) {
            ints[i * n + j] = -d.clone();
        }
    }
    let inertia = psd::classify_integer(&ints, n);
    // qI - A PSD iff rho <= q; singular iff q is an eigenvalue
    let relation = match inertia {
        Inertia::NotPsd { .. } => Relation::Above,
        Inertia::Psd { nullity, .. } if nullity > 0 => Relation::Equal,
        Inertia::Psd { .. } => Relation::Below,
    };
    SpectralVerdict::new(relation, Some(Witness::Inertia(inertia)))
}

/// Multiplicity of `q` as an eigenvalue of `M`.
pub fn eigen_multiplicity(m: &ExactSymMatrix, q: &Rational) -> usize {
    if m.order() <= MAX_CHARPOLY_ORDER {
        char_poly(m).multiplicity(q)
    } else {
        // symmetric: algebraic = geometric multiplicity
        let (ints, _) = m.shifted(&-q.clone()).to_scaled_integers();
        m.order() - bareiss_rank(ints, m.order(), m.order())
    }
}

/// Checks that the spectrum of `c` interlaces that of `b`:
/// `eta_{n-m+i}(B) <= eta_i(C) <= eta_i(B)` with eigenvalues in
/// non-increasing order.
pub fn interlace_check(b: &ExactSymMatrix, c: &ExactSymMatrix) -> Result<bool> {
    if c.order() > b.order() {
        return Err(Error::Dimension(format!(
            "submatrix order {} exceeds matrix order {}",
            c.order(),
            b.order()
        )));
    }
    Ok(spectra_interlace(
        &char_poly(b).to_int_poly(),
        &char_poly(c).to_int_poly(),
    ))
}

/// [`interlace_check`] for the principal submatrix of `b` on `indices`.
pub fn interlace_check_indices(b: &ExactSymMatrix, indices: &[usize]) -> Result<bool> {
    let c = b.principal_submatrix(indices)?;
    interlace_check(b, &c)
}

/// Interlacing of two real-rooted polynomials given by their roots with
/// multiplicity; decided by counting roots at one rational point in every
/// gap of the merged root set.
pub fn spectra_interlace(pb: &IntPoly, pc: &IntPoly) -> bool {
    let rb = RootCounter::new(pb);
    let rc = RootCounter::new(pc);
    let (n, m) = (rb.degree(), rc.degree());
    if rb.real_roots() != n || rc.real_roots() != m {
        return false;
    }
    let roots = merged_roots(&[pb, pc]);
    let mut points: Vec<Rational> = roots.iter().map(|r| r.interval.hi.clone()).collect();
    if let Some(first) = roots.first() {
        points.push(first.interval.lo.clone());
    } else {
        points.push(Rational::zero());
    }
    // #{C >= x} <= #{B >= x} and #{C <= x} <= #{B <= x} on every gap; both
    // step functions are constant on gaps and continuous from the gap side
    points.iter().all(|x| {
        let (bl, cl) = (rb.count_le(x), rc.count_le(x));
        let (bg, cg) = (n - rb.count_lt(x), m - rc.count_lt(x));
        cl <= bl && cg <= bg
    })
}

/// Twin-class reduction of the Seidel matrix of a graph.
///
/// Vertices with equal open neighbourhoods (pairwise non-adjacent) or equal
/// closed neighbourhoods (pairwise adjacent) form cells. A cell of size `k`
/// contributes the eigenvalue `-1` (open) or `+1` (closed) with multiplicity
/// `k - 1`; the remaining eigenvalues are those of the cell quotient.
#[derive(Clone, Debug)]
pub struct TwinReduction {
    pub cells: Vec<Vec<usize>>,
    /// Seidel entry within each cell (`+1` open twins, `-1` closed twins;
    /// `0` for singletons).
    pub inner: Vec<i64>,
    /// Seidel entry between cells, row-major over cells.
    pub between: Vec<i64>,
}

impl TwinReduction {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut by_open: HashMap<&[usize], Vec<usize>> = HashMap::new();
        for v in 0..n {
            by_open.entry(g.neighbours(v)).or_default().push(v);
        }
        let mut cell_of = vec![usize::MAX; n];
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut inner = Vec::new();
        for v in 0..n {
            if cell_of[v] != usize::MAX {
                continue;
            }
            let group = &by_open[g.neighbours(v)];
            if group.len() > 1 {
                for &w in group {
                    cell_of[w] = cells.len();
                }
                cells.push(group.clone());
                inner.push(1);
            }
        }
        let mut by_closed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (v, &c) in cell_of.iter().enumerate() {
            if c == usize::MAX {
                let mut key = g.neighbours(v).to_vec();
                let pos = key.binary_search(&v).unwrap_err();
                key.insert(pos, v);
                by_closed.entry(key).or_default().push(v);
            }
        }
        for v in 0..n {
            if cell_of[v] != usize::MAX {
                continue;
            }
            let mut key = g.neighbours(v).to_vec();
            let pos = key.binary_search(&v).unwrap_err();
            key.insert(pos, v);
            let group = by_closed[&key].clone();
            for &w in &group {
                cell_of[w] = cells.len();
            }
            inner.push(if group.len() > 1 { -1 } else { 0 });
            cells.push(group);
        }
        let r = cells.len();
        let mut between = vec![0i64; r * r];
        for a in 0..r {
            for b in 0..r {
                if a != b {
                    between[a * r + b] = seidel_entry(g, cells[a][0], cells[b][0]);
                }
            }
        }
        Self {
            cells,
            inner,
            between,
        }
    }

    pub fn order(&self) -> usize {
        self.cells.len()
    }

    /// Integer matrix congruent (by a positive diagonal) to
    /// `b * (Q - (a/b) I)`, `Q` the cell quotient.
    fn shifted_weighted(&self, q: &Rational) -> Vec<BigInt> {
        let r = self.order();
        let (a, b) = (q.numer(), q.denom());
        let mut w = vec![<BigInt as num_traits::Zero>::zero(); r * r];
        for i in 0..r {
            let ki = BigInt::from(self.cells[i].len());
            for j in 0..r {
                let kj = BigInt::from(self.cells[j].len());
                w[i * r + j] = if i == j {
                    let diag = (&ki - 1u32) * BigInt::from(self.inner[i]) * b - a;
                    &ki * diag
                } else {
                    &ki * &kj * BigInt::from(self.between[i * r + j]) * b
                };
            }
        }
        w
    }

    /// Eigenvalues carried by the cells, with multiplicity.
    pub fn internal_eigenvalues(&self) -> Vec<(i64, usize)> {
        self.cells
            .iter()
            .zip(&self.inner)
            .filter(|(c, _)| c.len() > 1)
            .map(|(c, &s)| (-s, c.len() - 1))
            .collect()
    }

    /// Quotient matrix of the cell partition (not symmetric in general).
    pub fn quotient(&self) -> RatMatrix {
        let r = self.order();
        RatMatrix::from_fn(r, |i, j| {
            if i == j {
                int((self.cells[i].len() as i64 - 1) * self.inner[i])
            } else {
                int(self.cells[j].len() as i64 * self.between[i * r + j])
            }
        })
    }

    /// Characteristic polynomial of the full Seidel matrix.
    pub fn char_poly(&self) -> CharPoly {
        let mut p = char_poly_general(&self.quotient());
        for (e, m) in self.internal_eigenvalues() {
            let lin = CharPoly {
                coeffs: vec![int(-e), int(1)],
            };
            for _ in 0..m {
                p = p.mul(&lin);
            }
        }
        p
    }
}

/// Relation of the constant eigenvalue `e` to `q`.
pub(crate) fn cmp_value(e: &Rational, q: &Rational) -> Relation {
    match e.cmp(q) {
        std::cmp::Ordering::Less => Relation::Below,
        std::cmp::Ordering::Equal => Relation::Equal,
        std::cmp::Ordering::Greater => Relation::Above,
    }
}

/// Compares `lambda_min(S(g))` with `q` on the twin-class reduction.
pub fn lambda_min_cmp_graph(g: &Graph, q: &Rational) -> SpectralVerdict {
    let red = TwinReduction::new(g);
    let r = red.order();
    if r == 0 {
        return SpectralVerdict::new(Relation::Above, None);
    }
    let w = red.shifted_weighted(q);
    let inertia = psd::classify_integer(&w, r);
    let mut relation = inertia.relation();
    for (e, _) in red.internal_eigenvalues() {
        relation = relation.min(cmp_value(&int(e), q));
    }
    SpectralVerdict::new(
        relation,
        Some(Witness::Reduced {
            order: r,
            inner: Box::new(Witness::Inertia(inertia)),
        }),
    )
}

/// Characteristic polynomial of `S(g)`, via the twin reduction.
pub fn seidel_char_poly(g: &Graph) -> CharPoly {
    TwinReduction::new(g).char_poly()
}

/// Characteristic polynomial of the adjacency matrix of `g`.
pub fn adjacency_char_poly(g: &Graph) -> CharPoly {
    let n = g.n();
    let mut a = vec![<BigInt as num_traits::Zero>::zero(); n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = BigInt::one();
        a[v * n + u] = BigInt::one();
    }
    char_poly_scaled(&a, &BigInt::one(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_family, disjoint_union, pad, Family, FamilySpec};
    use crate::rational::frac;
    use crate::seidel::seidel_of;

    fn fam(f: Family, p: &[usize]) -> Graph {
        build_family(&FamilySpec::new(f, p.to_vec()).unwrap()).unwrap()
    }

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn two_triangles() -> Graph {
        let c3 = fam(Family::Cycle, &[3]);
        disjoint_union(&c3, &c3)
    }

    #[test]
    fn char_poly_examples() {
        let zero = ExactSymMatrix::from_i64_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(char_poly(&zero).to_string(), "x^2");
        let k2 = build_family(&FamilySpec::complete(2)).unwrap();
        assert_eq!(char_poly(&seidel_of(&k2)).to_string(), "x^2 - 1");
        let expected = ip(&[5, 1]).mul(&ip(&[-1, 1]).pow(5));
        assert_eq!(
            char_poly(&seidel_of(&two_triangles())).to_int_poly(),
            expected
        );
        assert_eq!(seidel_char_poly(&two_triangles()).to_int_poly(), expected);
    }

    #[test]
    fn rational_char_poly() {
        let m = ExactSymMatrix::new(2, vec![frac(1, 2), frac(1, 3), frac(1, 3), int(0)]).unwrap();
        // x^2 - x/2 - 1/9
        let p = char_poly(&m);
        assert_eq!(p.coeffs(), &[frac(-1, 9), frac(-1, 2), int(1)]);
    }

    #[test]
    fn lambda_min_examples() {
        let star = fam(Family::CompleteMultipartite, &[1, 5]);
        let s40 = seidel_of(&pad(&star, 40, 0, 0));
        // det(Q + 5I) = 160 - 4s on the star quotient
        assert_eq!(lambda_min_cmp(&s40, &int(-5)).relation, Relation::Equal);
        let s39 = seidel_of(&pad(&star, 39, 0, 0));
        assert_eq!(lambda_min_cmp(&s39, &int(-5)).relation, Relation::Above);
        let s41 = seidel_of(&pad(&star, 41, 0, 0));
        assert_eq!(lambda_min_cmp(&s41, &int(-5)).relation, Relation::Below);
        let e = seidel_of(&Graph::empty(7));
        assert_eq!(lambda_min_cmp(&e, &int(-1)).relation, Relation::Equal);
        assert_eq!(
            lambda_min_cmp_graph(&pad(&star, 41, 0, 0), &int(-5)).relation,
            Relation::Below
        );
        assert_eq!(
            lambda_min_cmp_graph(&pad(&star, 40, 0, 0), &int(-5)).relation,
            Relation::Equal
        );
        assert_eq!(
            lambda_min_cmp_graph(&Graph::empty(7), &int(-1)).relation,
            Relation::Equal
        );
        assert_eq!(
            lambda_min_cmp_graph(&two_triangles(), &int(-5)).relation,
            Relation::Equal
        );
    }

    #[test]
    fn spectral_radius_examples() {
        assert_eq!(
            spectral_radius_cmp(&fam(Family::Cycle, &[3]), &int(2)).relation,
            Relation::Equal
        );
        assert_eq!(
            spectral_radius_cmp(&fam(Family::Path, &[4]), &int(2)).relation,
            Relation::Below
        );
        let k4 = build_family(&FamilySpec::complete(4)).unwrap();
        assert_eq!(spectral_radius_cmp(&k4, &int(2)).relation, Relation::Above);
        assert_eq!(spectral_radius_cmp(&k4, &int(3)).relation, Relation::Equal);
    }

    #[test]
    fn multiplicities() {
        let tt = two_triangles();
        assert_eq!(eigen_multiplicity(&seidel_of(&tt), &int(-5)), 1);
        let three = disjoint_union(&tt, &fam(Family::Cycle, &[3]));
        assert_eq!(eigen_multiplicity(&seidel_of(&three), &int(-5)), 2);
        let k2 = build_family(&FamilySpec::complete(2)).unwrap();
        assert_eq!(eigen_multiplicity(&seidel_of(&k2), &int(-5)), 0);
    }

    #[test]
    fn interlacing_examples() {
        let b = seidel_of(&build_family(&FamilySpec::complete(3)).unwrap());
        let c = seidel_of(&build_family(&FamilySpec::complete(2)).unwrap());
        assert!(interlace_check(&b, &b).unwrap());
        assert!(interlace_check(&b, &c).unwrap());
        assert!(interlace_check(&c, &b).is_err());
        // diag(3, 0) does not interlace diag(1, 2)
        let big = ExactSymMatrix::from_i64_rows(&[vec![1, 0], vec![0, 2]]).unwrap();
        let small = ExactSymMatrix::from_i64_rows(&[vec![3]]).unwrap();
        assert!(!interlace_check(&big, &small).unwrap());
        let inside = ExactSymMatrix::from_i64_rows(&[vec![2]]).unwrap();
        assert!(interlace_check(&big, &inside).unwrap());
    }

    #[test]
    fn twin_reduction_counts_cells() {
        let g = pad(&fam(Family::ETildePlus, &[8]), 2477, 0, 0);
        let red = TwinReduction::new(&g);
        assert!(red.order() <= 11);
        assert_eq!(lambda_min_cmp_graph(&g, &int(-5)).relation, Relation::Below);
        let g = pad(&fam(Family::ETildePlus, &[8]), 2476, 0, 0);
        assert!(lambda_min_cmp_graph(&g, &int(-5)).relation.is_at_least());
    }
}
