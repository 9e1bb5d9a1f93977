//! Pillar and gallery machinery around a 4-clique base, the rank lower bound,
//! and replays of the terminal counting arguments.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::catalog::{
    edge_neighbour_threshold, min_padding_to_forbidden, padded_threshold_predicate, PaddedCore,
};
use crate::error::{Error, Result};
use crate::exactspec::{Relation, SpectralVerdict, Witness, MINIMAL_ABOVE2};
use crate::graphs::{
    build_family, independence_number, pad, parse_graph_expr, Family, FamilySpec, Graph,
};
use crate::matrix::RatMatrix;
use crate::psd::classify_integer;
use crate::rational::{frac, int, Rational};
use crate::report::ClaimReport;
use crate::seidel::{seidel_of, switch};

/// Multiplicities of the four row types of the pillar block against the two
/// remaining base vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PillarCounts {
    pub a00: u32,
    pub a01: u32,
    pub a10: u32,
    pub a11: u32,
}

impl PillarCounts {
    pub fn new(a00: u32, a01: u32, a10: u32, a11: u32) -> Self {
        Self { a00, a01, a10, a11 }
    }

    pub fn beta1(&self) -> i64 {
        self.a00 as i64 + 4 * self.a11 as i64
    }

    pub fn beta2(&self) -> i64 {
        self.a01 as i64 + self.a10 as i64
    }

    pub fn total(&self) -> u32 {
        self.a00 + self.a01 + self.a10 + self.a11
    }

    fn as_i64(&self) -> [i64; 4] {
        [self.a00, self.a01, self.a10, self.a11].map(i64::from)
    }
}

impl fmt::Display for PillarCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a00, self.a01, self.a10, self.a11)
    }
}

/// Scaled-by-3 entries of the pillar rows against the two outer base
/// vertices, by row type.
const ROW_TYPES: [(i64, i64); 4] = [(2, 2), (2, -4), (-4, 2), (-4, -4)];

/// The 6x6 quotient of the Gram matrix over the partition into the four row
/// types and the two outer base vertices.
pub fn pillar41_quotient(c: PillarCounts) -> RatMatrix {
    let a = c.as_i64();
    let mut rows = vec![vec![0i64; 6]; 6];
    for (i, &(p, q)) in ROW_TYPES.iter().enumerate() {
        rows[i][i] = 12;
        rows[i][4] = p;
        rows[i][5] = q;
        rows[4][i] = p * a[i];
        rows[5][i] = q * a[i];
    }
    rows[4][4] = 12;
    rows[5][5] = 12;
    rows[4][5] = -4;
    rows[5][4] = -4;
    RatMatrix::from_i64_rows(&rows)
        .expect("square")
        .scaled(&frac(1, 3))
}

fn delete_index(m: &RatMatrix, k: usize) -> RatMatrix {
    let keep: Vec<usize> = (0..m.order()).filter(|&i| i != k).collect();
    RatMatrix::from_fn(keep.len(), |i, j| m.get(keep[i], keep[j]).clone())
}

/// `(det Q5, det Q6, det Q)`, where `Qi` deletes the `i`-th row and column
/// (1-based).
pub fn pillar41_dets(c: PillarCounts) -> (Rational, Rational, Rational) {
    let q = pillar41_quotient(c);
    (
        delete_index(&q, 4).det(),
        delete_index(&q, 5).det(),
        q.det(),
    )
}

/// Left-hand side of the determinant inequality for the full quotient.
pub fn pillar41_det_form(c: PillarCounts) -> i64 {
    let (b1, b2) = (c.beta1(), c.beta2());
    3 * c.a01 as i64 * c.a10 as i64 + (3 * b1 - 44) * b2 - 32 * (b1 - 12)
}

/// All eigenvalues of the pillar quotient are non-negative.
pub fn pillar41_feasible(c: PillarCounts) -> bool {
    let [a00, a01, a10, a11] = c.as_i64();
    a00 + 4 * a01 + a10 + 4 * a11 <= 36
        && a00 + a01 + 4 * a10 + 4 * a11 <= 36
        && pillar41_det_form(c) >= 0
}

/// Every count vector with total at most `cap`.
pub fn pillar41_tuples(cap: u32) -> impl Iterator<Item = PillarCounts> {
    (0..=cap).flat_map(move |a00| {
        (0..=cap - a00).flat_map(move |a01| {
            (0..=cap - a00 - a01).flat_map(move |a10| {
                (0..=cap - a00 - a01 - a10).map(move |a11| PillarCounts::new(a00, a01, a10, a11))
            })
        })
    })
}

/// Enumeration cap; the two linear inequalities already force a total of at
/// most 36.
pub const PILLAR41_CAP: u32 = 40;

/// Largest feasible pillar size and every count vector attaining it.
pub fn pillar41_enumerate() -> (u32, Vec<PillarCounts>) {
    let mut best = 0;
    let mut argmax = Vec::new();
    for c in pillar41_tuples(PILLAR41_CAP).filter(|&c| pillar41_feasible(c)) {
        let p = c.total();
        if p > best {
            best = p;
            argmax.clear();
        }
        if p == best {
            argmax.push(c);
        }
    }
    (best, argmax)
}

/// Positive semidefiniteness of the full Gram matrix (scaled by 3) of the
/// pillar vectors together with the two outer base vectors.
pub fn pillar41_gram_psd(c: PillarCounts) -> bool {
    let p = c.total() as usize;
    let n = p + 2;
    let mut rows: Vec<(i64, i64)> = Vec::with_capacity(p);
    let a = c.as_i64();
    for (i, &t) in ROW_TYPES.iter().enumerate() {
        rows.extend(std::iter::repeat_n(t, a[i] as usize));
    }
    let mut m = vec![BigInt::from(0); n * n];
    for i in 0..p {
        m[i * n + i] = BigInt::from(12);
        let (x, y) = rows[i];
        m[i * n + p] = BigInt::from(x);
        m[p * n + i] = BigInt::from(x);
        m[i * n + p + 1] = BigInt::from(y);
        m[(p + 1) * n + i] = BigInt::from(y);
    }
    m[p * n + p] = BigInt::from(12);
    m[(p + 1) * n + p + 1] = BigInt::from(12);
    m[p * n + p + 1] = BigInt::from(-4);
    m[(p + 1) * n + p] = BigInt::from(-4);
    classify_integer(&m, n).is_psd()
}

/// Neighbours of the star centre in the overlap configuration.
pub const STAR_OVERLAP_LEAVES: usize = 13;

/// A centre joined to 13 independent vertices, a second centre joined to the
/// first `t` of them, and two disjoint edges.
pub fn star_overlap_graph(t: usize) -> Result<Graph> {
    if t > STAR_OVERLAP_LEAVES {
        return Err(Error::Domain(format!(
            "overlap t = {t} exceeds {STAR_OVERLAP_LEAVES}"
        )));
    }
    let y = STAR_OVERLAP_LEAVES + 1;
    let mut g = Graph::empty(y + 1);
    for leaf in 1..=STAR_OVERLAP_LEAVES {
        g.add_edge(0, leaf)?;
    }
    for leaf in 1..=t {
        g.add_edge(y, leaf)?;
    }
    Ok(pad(&g, 0, 2, 0))
}

/// Sign of `det(S + 5I)` for the overlap configuration, reported as the
/// relation of the determinant to zero.
pub fn star_overlap_condition(t: usize) -> Result<SpectralVerdict> {
    let g = star_overlap_graph(t)?;
    let d = seidel_of(&g).shifted(&int(5)).det();
    let relation = if d.is_zero() {
        Relation::Equal
    } else if d.is_negative() {
        Relation::Below
    } else {
        Relation::Above
    };
    Ok(SpectralVerdict::new(
        relation,
        Some(Witness::Determinant(d)),
    ))
}

/// `n - n_h (1 + d_max) + 2 eps_h + alpha_h`, a lower bound on the rank of
/// `S + 5I` given an induced subgraph with spectral radius above 2.
pub fn rank_lower_bound(n: i64, n_h: i64, d_max: i64, eps_h: i64, alpha_h: i64) -> i64 {
    n - n_h * (1 + d_max) + 2 * eps_h + alpha_h
}

/// Vertices adjacent to neither endpoint of `x1 x2`.
pub fn gallery_vertices(g: &Graph, x1: usize, x2: usize) -> Result<Vec<usize>> {
    for x in [x1, x2] {
        if x >= g.n() {
            return Err(Error::Index {
                vertex: x,
                n: g.n(),
            });
        }
    }
    if x1 == x2 || !g.has_edge(x1, x2) {
        return Err(Error::Domain(format!("{x1} and {x2} are not adjacent")));
    }
    if let Some(&w) = g.neighbours(x1).iter().find(|&&w| g.has_edge(w, x2)) {
        return Err(Error::Domain(format!(
            "{x1} and {x2} have common neighbour {w}"
        )));
    }
    Ok((0..g.n())
        .filter(|&y| y != x1 && y != x2 && !g.has_edge(y, x1) && !g.has_edge(y, x2))
        .collect())
}

/// Split of a gallery by adjacency to the ends of an edge `uv` inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallerySplit {
    pub u: usize,
    pub v: usize,
    /// Adjacent to `u` only.
    pub w_u: Vec<usize>,
    /// Adjacent to `v` only.
    pub w_v: Vec<usize>,
    /// Adjacent to neither.
    pub w_empty: Vec<usize>,
    /// Adjacent to both; these close a 5-clique after switching, so the set
    /// is empty when the clique number of the class is 4.
    pub w_both: Vec<usize>,
}

impl GallerySplit {
    /// `{u, v}` and the three pillar sets cover the gallery.
    pub fn is_partition(&self) -> bool {
        self.w_both.is_empty()
    }
}

/// Base vertices adjacent to `y`, as a bitmask over `base`, normalised to
/// the smaller side under switching `y` (ties keep `base[0]`).
fn pillar_mask(g: &Graph, base: &[usize; 4], y: usize) -> u8 {
    let mut mask = 0u8;
    for (i, &b) in base.iter().enumerate() {
        if g.has_edge(y, b) {
            mask |= 1 << i;
        }
    }
    let ones = mask.count_ones();
    if ones > 2 || (ones == 2 && mask & 1 == 0) {
        mask ^= 0b1111;
    }
    mask
}

/// Splits the gallery of `x1 x2` by the edge `uv`, and checks each part
/// against the pillars of the base `{u, v, x1, x2}` in the graph switched
/// with respect to `{x1, x2}`.
pub fn gallery_decompose(
    g: &Graph,
    x1: usize,
    x2: usize,
    u: usize,
    v: usize,
) -> Result<GallerySplit> {
    let gallery = gallery_vertices(g, x1, x2)?;
    for w in [u, v] {
        if !gallery.contains(&w) {
            return Err(Error::Domain(format!(
                "{w} is not in the gallery of {x1} {x2}"
            )));
        }
    }
    if u == v || !g.has_edge(u, v) {
        return Err(Error::Domain(format!("{u} and {v} are not adjacent")));
    }
    let mut split = GallerySplit {
        u,
        v,
        w_u: Vec::new(),
        w_v: Vec::new(),
        w_empty: Vec::new(),
        w_both: Vec::new(),
    };
    let switched = switch(g, &[x1, x2])?;
    let base = [u, v, x1, x2];
    for &y in gallery.iter().filter(|&&y| y != u && y != v) {
        let (set, expected) = match (g.has_edge(y, u), g.has_edge(y, v)) {
            (true, false) => (&mut split.w_u, 0b0010),
            (false, true) => (&mut split.w_v, 0b0001),
            (false, false) => (&mut split.w_empty, 0b0011),
            (true, true) => (&mut split.w_both, 0b0000),
        };
        let got = pillar_mask(&switched, &base, y);
        if got != expected {
            return Err(Error::Domain(format!(
                "vertex {y} lies in pillar {got:04b}, expected {expected:04b}"
            )));
        }
        set.push(y);
    }
    Ok(split)
}

fn graph(expr: &str) -> Graph {
    parse_graph_expr(expr).expect("built-in expression")
}

fn k1(r: usize) -> Graph {
    build_family(&FamilySpec::new(Family::CompleteMultipartite, vec![1, r]).expect("star"))
        .expect("star")
}

/// Largest `2 + s1 + s2 + 2t` with `t <= t_cap` under the edge-neighbourhood
/// threshold.
fn edge_sum_max(t_cap: usize) -> usize {
    let mut best = 0;
    for t in 0..=t_cap.min(9) {
        for s1 in 0..=12 {
            for s2 in 0..=12 {
                if edge_neighbour_threshold(s1, s2, t) {
                    best = best.max(2 + s1 + s2 + 2 * t);
                }
            }
        }
    }
    best
}

/// Most vertices in a disjoint union of paths on at most 3 vertices whose
/// padding of `core` stays at or above -5.
fn path_union_max(core: PaddedCore) -> usize {
    let b = core.bound();
    let mut best = 0;
    for t1 in 0..=b {
        for t2 in 0..=b / 4 {
            for t3 in 0..=b / 10 {
                if padded_threshold_predicate(core, t1, t2, t3) {
                    best = best.max(t1 + 2 * t2 + 3 * t3);
                }
            }
        }
    }
    best
}

fn max_order(pred: impl Fn(&Graph) -> bool) -> usize {
    MINIMAL_ABOVE2
        .iter()
        .map(|e| graph(e))
        .filter(|g| pred(g))
        .map(|g| g.n())
        .max()
        .unwrap_or(0)
}

/// Worst case of the rank bound over connected subgraphs of order at most
/// `n_cap`, as the amount subtracted from `n`.
fn rank_deficit(n_cap: i64, d: i64) -> i64 {
    (1..=n_cap)
        .map(|n_h| -rank_lower_bound(0, n_h, d, n_h - 1, 1))
        .max()
        .unwrap_or(0)
}

/// Premises taken as stated: bounds whose derivation is prose.
const D_MAX_CAP: usize = 47;
const ALPHA_CAP: usize = 28;
const ALPHA_PILLAR_CAP: usize = 26;
const RANK_D_CAP: i64 = 16;

/// Recomputes the terminal arithmetic chains from their ingredients and
/// compares them with the stated totals.
pub fn counting_replays() -> Vec<ClaimReport> {
    match counting_inner() {
        Ok(r) => r,
        Err(e) => vec![ClaimReport::error("counting", &e)],
    }
}

fn counting_inner() -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    let mut claim = |id: &str, expected: usize, actual: usize, witness: String| {
        out.push(ClaimReport::compare(
            format!("counting.{id}"),
            expected,
            actual,
            Some(witness),
        ));
    };

    let pad15 = min_padding_to_forbidden(&k1(5))?;
    let pad17 = min_padding_to_forbidden(&k1(7))?;
    let pad23 = min_padding_to_forbidden(&graph("K(2,3)"))?;
    let total = 1 + D_MAX_CAP + 2 * (pad15 - 1) * 2 + 2 * (pad17 - 1);
    claim(
        "star_split_240",
        240,
        total,
        format!(
            "1+{D_MAX_CAP}+2*{}+2*{}+2*{}",
            pad15 - 1,
            pad15 - 1,
            pad17 - 1
        ),
    );

    let r_k23 = 2 * (pad23 - 1);
    claim("k23_remainder_36", 36, r_k23, format!("2*{}", pad23 - 1));

    let k23 = graph("K(2,3)");
    let tf = k23.n() * (D_MAX_CAP + 1) - 2 * k23.edge_count() + r_k23;
    claim(
        "triangle_free_264",
        264,
        tf,
        format!(
            "{}*({D_MAX_CAP}+1)-{}+{r_k23}",
            k23.n(),
            2 * k23.edge_count()
        ),
    );

    // rank bound chains: subgraph orders taken from the minimal list
    let n_cubic = max_order(|g| g.max_degree() <= 3);
    let n_wide = max_order(|g| g.max_degree() >= 4);
    claim(
        "rank_cubic_21",
        21,
        rank_deficit(n_cubic as i64, 3) as usize,
        format!("n_H<={n_cubic}, d=3"),
    );
    claim(
        "rank_wide_91",
        91,
        rank_deficit(n_wide as i64, RANK_D_CAP) as usize,
        format!("n_H<={n_wide}, d<={RANK_D_CAP}"),
    );

    // (4,1)-pillar: beta2 <= 10 since 3 beta2 - 32 < 0, then 4 beta1 + beta2 <= 48
    let beta2_cap = (32 - 1) / 3;
    let bound19 = (48 + 3 * beta2_cap) / 4;
    claim(
        "pillar41_bound_19",
        19,
        bound19,
        format!("floor((48+3*{beta2_cap})/4)"),
    );
    let (max_p, argmax) = pillar41_enumerate();
    claim(
        "pillar41_enumeration_19",
        19,
        max_p as usize,
        format!(
            "argmax {}",
            argmax
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
    );

    let sum20 = edge_sum_max(usize::MAX);
    let sum14 = edge_sum_max(1);
    claim("edge_sum_20", 20, sum20, "max 2+s1+s2+2t".into());
    claim("edge_sum_14", 14, sum14, "max 2+s1+s2+2t, t<=1".into());

    let r_i = path_union_max(PaddedCore::K23);
    let r_ii = path_union_max(PaddedCore::K16);
    let r_iii = path_union_max(PaddedCore::B3);
    let a_low = 6;
    let n1 = 6 * sum14 - 5 * a_low - 12;
    claim(
        "no_domino_63",
        63,
        7 + n1 + r_ii,
        format!("7+(6*{sum14}-5*{a_low}-12)+{r_ii}"),
    );
    let b3 = build_family(&FamilySpec::new(Family::B3, vec![])?)?;
    let n2 = 3 * sum20 - 2 * b3.edge_count();
    claim(
        "domino_68",
        68,
        b3.n() + n2 + r_iii,
        format!("{}+(3*{sum20}-2*{})+{r_iii}", b3.n(), b3.edge_count()),
    );
    let d4 = graph("Dt+(4)");
    let a_d4 = independence_number(&d4)?;
    let n3 = d4.n() + (d4.n() * 4 - 2 * d4.edge_count()) + (2 * ALPHA_PILLAR_CAP - 2 * a_d4);
    claim(
        "low_degree_64",
        64,
        n3,
        format!(
            "{}+({}*4-2*{})+(2*{ALPHA_PILLAR_CAP}-2*{a_d4})",
            d4.n(),
            d4.n(),
            d4.edge_count()
        ),
    );
    let k15 = k1(5);
    let a_k15 = independence_number(&k15)?;
    let n4 = k15.n() + k15.n() * 5 - 2 * k15.edge_count() + 2 * ALPHA_PILLAR_CAP - 2 * a_k15;
    claim(
        "star_68",
        68,
        n4,
        format!(
            "{}+{}*5-2*{}+{}-2*{a_k15}",
            k15.n(),
            k15.n(),
            k15.edge_count(),
            2 * ALPHA_PILLAR_CAP
        ),
    );
    let p42 = [7 + n1 + r_ii, b3.n() + n2 + r_iii, n3, n4]
        .into_iter()
        .max()
        .expect("non-empty");

    // gallery: a 5-vertex subgraph with 6 edges, its neighbourhood, and a
    // remainder bounded by the K(2,3) padding
    let kappa = 5 * sum20 + 5 - 2 * 6 - 2 + r_i;
    claim("gallery_105", 105, kappa, format!("5*{sum20}+5-14+{r_i}"));

    claim(
        "base_264",
        264,
        4 + 2 * ALPHA_CAP + 3 * p42,
        format!("4+2*{ALPHA_CAP}+3*{p42}"),
    );
    let p_uv = kappa - 2 * sum20;
    claim(
        "final_275",
        275,
        4 * kappa / 2 + p_uv,
        format!("4*{kappa}/2+{p_uv}"),
    );
    claim(
        "final_276",
        276,
        4 * (kappa - 1) / 2 + p42,
        format!("4*{}/2+{p42}", kappa - 1),
    );
    Ok(out)
}
