//! Minimal forbidden graphs for smallest Seidel eigenvalue `-5`: minimality
//! certificates, minimal paddings and the closed-form padding thresholds.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactspec::{
    lambda_min_cmp_graph, lambda_min_cmp_padded, seidel_char_poly, spectral_radius_cmp, Relation,
    TwinReduction,
};
use crate::graphs::{
    build_family, cone, induced_subgraph, pad, parse_graph_expr, Family, FamilySpec, Graph,
};
use crate::matrix::RatMatrix;
use crate::poly::cmp_smallest_roots;
use crate::rational::{int, Rational};
use crate::report::{timed, ClaimReport};

/// The eigenvalue bound every check in this module is taken against.
pub const LAMBDA: i64 = -5;

fn lambda() -> Rational {
    int(LAMBDA)
}

/// Outcome of the vertex-deletion minimality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimality {
    /// `lambda_min(S(g)) < -5`.
    pub below: bool,
    /// A vertex whose deletion still leaves `lambda_min < -5`.
    pub failing_deletion: Option<usize>,
    /// Number of non-isomorphic deletions examined.
    pub deletions_checked: usize,
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        self.below && self.failing_deletion.is_none()
    }
}

/// Vertex-deletion certificate for membership in the minimal forbidden set.
/// Deleting twins gives isomorphic graphs, so one vertex per twin cell is
/// enough.
pub fn minimality(g: &Graph) -> Minimality {
    let q = lambda();
    let below = lambda_min_cmp_graph(g, &q).relation == Relation::Below;
    if !below {
        return Minimality {
            below,
            failing_deletion: None,
            deletions_checked: 0,
        };
    }
    let reps: Vec<usize> = TwinReduction::new(g).cells.iter().map(|c| c[0]).collect();
    let mut checked = 0;
    for &v in &reps {
        checked += 1;
        let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
        let h = induced_subgraph(g, &keep).expect("in range");
        if lambda_min_cmp_graph(&h, &q).relation == Relation::Below {
            return Minimality {
                below,
                failing_deletion: Some(v),
                deletions_checked: checked,
            };
        }
    }
    Minimality {
        below,
        failing_deletion: None,
        deletions_checked: checked,
    }
}

pub fn is_forbidden_minimal(g: &Graph) -> bool {
    minimality(g).is_minimal()
}

/// Largest padding tried before giving up.
const MAX_PADDING: usize = 1 << 24;

/// Smallest `s` with `lambda_min(S(core + s K1)) < -5`.
pub fn min_padding_to_forbidden(core: &Graph) -> Result<usize> {
    if spectral_radius_cmp(core, &int(2)).relation != Relation::Above {
        return Err(Error::Divergence(
            "spectral radius of the core is at most 2".into(),
        ));
    }
    let q = lambda();
    let below = |s: usize| -> Result<bool> {
        Ok(lambda_min_cmp_padded(core, s, 0, 0, &q)?.relation == Relation::Below)
    };
    if below(0)? {
        return Ok(0);
    }
    // invariant: lo passes, hi fails
    let mut lo = 0;
    let mut hi = 1;
    while !below(hi)? {
        lo = hi;
        hi *= 2;
        if hi > MAX_PADDING {
            return Err(Error::Divergence(format!(
                "no forbidden padding up to {MAX_PADDING}"
            )));
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if below(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

fn check_star_params(r: i64, s: i64, t: i64) -> Result<()> {
    if r < 2 || s < 0 || t < 0 {
        return Err(Error::Domain(format!(
            "need r >= 2 and s, t >= 0, got ({r}, {s}, {t})"
        )));
    }
    Ok(())
}

/// Closed form for `lambda_min(S(K_{1,r}(s, t))) >= -5`.
pub fn star_padding_predicate(r: i64, s: i64, t: i64) -> Result<bool> {
    check_star_params(r, s, t)?;
    Ok((r - 4) * (s + 4 * t - 4) <= 36)
}

/// Quotient of `S(K_{1,r}(s, t))` on the cells centre, leaves, isolated
/// vertices, `K2` vertices.
pub fn star_quotient(r: i64, s: i64, t: i64) -> RatMatrix {
    RatMatrix::from_i64_rows(&[
        vec![0, -r, s, 2 * t],
        vec![-1, r - 1, s, 2 * t],
        vec![1, r, s - 1, 2 * t],
        vec![1, r, s, 2 * t - 3],
    ])
    .expect("square")
}

/// `(det(Q + 3I), det(Q + 5I))` for the star quotient, checked against
/// `-16 t (r - 1)` and `-8((r - 4)(s + 4t - 4) - 36)`.
pub fn star_det_identities(r: i64, s: i64, t: i64) -> Result<(Rational, Rational)> {
    check_star_params(r, s, t)?;
    let q = star_quotient(r, s, t);
    let d3 = q.shifted(&int(3)).det();
    let d5 = q.shifted(&int(5)).det();
    let want3 = int(-16 * t * (r - 1));
    let want5 = int(-8 * ((r - 4) * (s + 4 * t - 4) - 36));
    if d3 != want3 || d5 != want5 {
        return Err(Error::Domain(format!(
            "determinant identity fails at ({r}, {s}, {t}): got {d3}, {d5}"
        )));
    }
    Ok((d3, d5))
}

/// `lambda_min(S(cone(g)(s, t))) <= lambda_min(S(K_{1,r}(s, t)))` with
/// `r = n(g)`, compared exactly on the characteristic polynomials.
pub fn cone_domination_check(g: &Graph, s: usize, t: usize) -> Result<bool> {
    let r = g.n();
    if r < 2 || s + t < 1 {
        return Err(Error::Domain(format!(
            "need at least 2 vertices and s + t >= 1, got n = {r}, s = {s}, t = {t}"
        )));
    }
    let star = build_family(&FamilySpec::new(Family::CompleteMultipartite, vec![1, r])?)?;
    let a = seidel_char_poly(&pad(&cone(g), s, t, 0)).to_int_poly();
    let b = seidel_char_poly(&pad(&star, s, t, 0)).to_int_poly();
    Ok(cmp_smallest_roots(&a, &b) != Ordering::Greater)
}

/// Cores with a closed-form threshold on `t1 + 4 t2 + 10 t3`, each carrying a
/// fixed number of extra `K2` copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PaddedCore {
    K23,
    K16,
    B3,
}

impl PaddedCore {
    pub const ALL: [PaddedCore; 3] = [PaddedCore::K23, PaddedCore::K16, PaddedCore::B3];

    pub fn core(self) -> Graph {
        let spec = match self {
            PaddedCore::K23 => FamilySpec::new(Family::CompleteMultipartite, vec![2, 3]),
            PaddedCore::K16 => FamilySpec::new(Family::CompleteMultipartite, vec![1, 6]),
            PaddedCore::B3 => FamilySpec::new(Family::B3, vec![]),
        };
        build_family(&spec.expect("valid")).expect("valid")
    }

    /// `K2` copies always present in addition to `t2`.
    pub fn extra_k2(self) -> usize {
        match self {
            PaddedCore::K23 => 1,
            PaddedCore::K16 | PaddedCore::B3 => 2,
        }
    }

    pub fn bound(self) -> usize {
        match self {
            PaddedCore::K23 | PaddedCore::K16 => 14,
            PaddedCore::B3 => 16,
        }
    }
}

impl fmt::Display for PaddedCore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PaddedCore::K23 => "K23",
            PaddedCore::K16 => "K16",
            PaddedCore::B3 => "B3",
        })
    }
}

/// Closed form for `lambda_min >= -5` on `core(t1, t2 + extra, t3)`.
pub fn padded_threshold_predicate(core: PaddedCore, t1: usize, t2: usize, t3: usize) -> bool {
    t1 + 4 * t2 + 10 * t3 <= core.bound()
}

/// Exact `lambda_min >= -5` on `core(t1, t2 + extra, t3)`.
pub fn padded_threshold_exact(core: PaddedCore, t1: usize, t2: usize, t3: usize) -> Result<bool> {
    let v = lambda_min_cmp_padded(&core.core(), t1, t2 + core.extra_k2(), t3, &lambda())?;
    Ok(v.relation.is_at_least())
}

/// Closed form for `lambda_min(S(M(s1, s2, t) + 2 K2)) >= -5`.
pub fn edge_neighbour_threshold(s1: usize, s2: usize, t: usize) -> bool {
    3 * s1 + 3 * s2 + 4 * t <= 36
}

/// Exact `lambda_min(S(M(s1, s2, t) + 2 K2)) >= -5`.
pub fn edge_neighbour_exact(s1: usize, s2: usize, t: usize) -> Result<bool> {
    let m = build_family(&FamilySpec::new(Family::M, vec![s1, s2, t])?)?;
    Ok(lambda_min_cmp_graph(&pad(&m, 0, 2, 0), &lambda())
        .relation
        .is_at_least())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    MinimalForbidden,
    MinPadding(usize),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::MinimalForbidden => f.write_str("minimal_forbidden"),
            Claim::MinPadding(s) => write!(f, "min_padding={s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub expr: String,
    pub claim: Claim,
}

pub const DEFAULT_CATALOG: &str = include_str!("../../data/catalog.tsv");

/// Parses `id<TAB>expr<TAB>claim` lines; blank lines and `#` comments are
/// skipped. Expressions are parsed eagerly and ids must be unique.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let bad = |message: String| Error::Format { line, message };
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != 3 {
            return Err(bad(format!(
                "expected 3 tab-separated fields, got {}",
                fields.len()
            )));
        }
        let id = fields[0].trim();
        if id.is_empty() {
            return Err(bad("empty id".into()));
        }
        if out.iter().any(|e| e.id == id) {
            return Err(bad(format!("duplicate id {id}")));
        }
        let expr = fields[1].trim();
        crate::graphs::parse_expr(expr)
            .and_then(|e| e.size())
            .map_err(|e| bad(e.to_string()))?;
        let claim = match fields[2].trim() {
            "minimal_forbidden" => Claim::MinimalForbidden,
            c => match c.strip_prefix("min_padding=") {
                Some(s) => {
                    Claim::MinPadding(s.parse().map_err(|_| bad(format!("bad padding {s:?}")))?)
                }
                None => return Err(bad(format!("unknown claim {c:?}"))),
            },
        };
        out.push(CatalogEntry {
            id: id.to_string(),
            expr: expr.to_string(),
            claim,
        });
    }
    Ok(out)
}

pub fn default_catalog() -> Vec<CatalogEntry> {
    parse_catalog(DEFAULT_CATALOG).expect("shipped catalog parses")
}

fn minimality_actual(m: &Minimality) -> String {
    match (m.below, m.failing_deletion) {
        (false, _) => "not_below".to_string(),
        (true, Some(v)) => format!("not_minimal(deleting {v} stays below)"),
        (true, None) => "minimal_forbidden".to_string(),
    }
}

fn verify_entry_inner(entry: &CatalogEntry) -> Result<ClaimReport> {
    let g = parse_graph_expr(&entry.expr)?;
    match entry.claim {
        Claim::MinimalForbidden => {
            let m = minimality(&g);
            Ok(ClaimReport::compare(
                &entry.id,
                &entry.claim,
                minimality_actual(&m),
                Some(format!(
                    "order {}, deletions {}",
                    g.n(),
                    m.deletions_checked
                )),
            ))
        }
        Claim::MinPadding(_) => {
            let s = min_padding_to_forbidden(&g)?;
            let m = minimality(&pad(&g, s, 0, 0));
            let actual = if m.is_minimal() {
                Claim::MinPadding(s).to_string()
            } else {
                format!("min_padding={s} but {}", minimality_actual(&m))
            };
            Ok(ClaimReport::compare(
                &entry.id,
                &entry.claim,
                actual,
                Some(format!(
                    "order {}, deletions {}",
                    g.n() + s,
                    m.deletions_checked
                )),
            ))
        }
    }
}

pub fn verify_entry(entry: &CatalogEntry, timings: bool) -> ClaimReport {
    timed(timings, || {
        verify_entry_inner(entry).unwrap_or_else(|e| ClaimReport::error(&entry.id, &e))
    })
}

pub fn verify_entries(entries: &[CatalogEntry], timings: bool) -> Vec<ClaimReport> {
    entries.iter().map(|e| verify_entry(e, timings)).collect()
}

pub fn verify_catalog() -> Vec<ClaimReport> {
    verify_entries(&default_catalog(), false)
}

/// Sign of `det(Q + 5I)` for the star quotient.
pub fn star_det5_sign(r: i64, s: i64, t: i64) -> i8 {
    let d = star_quotient(r, s, t).shifted(&int(5)).det();
    if d.is_zero() {
        0
    } else if d > Rational::zero() {
        1
    } else {
        -1
    }
}
