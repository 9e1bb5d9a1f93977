//! Connected graphs of adjacency spectral radius 2 and the minimal graphs
//! above 2.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactspec::{spectral_radius_cmp, Relation};
use crate::graphs::{build_family, induced_subgraph, Family, FamilySpec, Graph};
use crate::rational::int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SmithFamily {
    ATilde(usize),
    DTilde(usize),
    ETilde(usize),
}

impl SmithFamily {
    pub fn spec(self) -> FamilySpec {
        let (f, n) = match self {
            SmithFamily::ATilde(n) => (Family::ATilde, n),
            SmithFamily::DTilde(n) => (Family::DTilde, n),
            SmithFamily::ETilde(n) => (Family::ETilde, n),
        };
        FamilySpec::new(f, vec![n]).expect("valid Smith family")
    }
}

impl fmt::Display for SmithFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmithFamily::ATilde(n) => write!(f, "At({n})"),
            SmithFamily::DTilde(n) => write!(f, "Dt({n})"),
            SmithFamily::ETilde(n) => write!(f, "Et({n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SmithClass {
    RhoBelow2,
    RhoEqual2(SmithFamily),
    RhoAbove2,
}

impl fmt::Display for SmithClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmithClass::RhoBelow2 => f.write_str("rho < 2"),
            SmithClass::RhoEqual2(fam) => write!(f, "rho = 2 ({fam})"),
            SmithClass::RhoAbove2 => f.write_str("rho > 2"),
        }
    }
}

/// Expressions for the 18 minimal connected graphs with spectral radius
/// above 2.
pub const MINIMAL_ABOVE2: [&str; 18] = [
    "At+(2)", "At+(3)", "At+(4)", "At+(5)", "At+(6)", "At+(7)", "K(2,1,1)", "K(4)", "K(2,3)",
    "K(1,5)", "Dt+(4)", "Dt+(5)", "Dt+(6)", "Dt+(7)", "Dt+(8)", "Et+(6)", "Et+(7)", "Et+(8)",
];

/// Candidate family from vertex count and degree multiset.
fn fingerprint(g: &Graph) -> Option<SmithFamily> {
    let n = g.n();
    let mut deg = g.degrees();
    deg.sort_unstable();
    let count = |d: usize| deg.iter().filter(|&&x| x == d).count();
    if n >= 3 && deg.iter().all(|&d| d == 2) {
        return Some(SmithFamily::ATilde(n - 1));
    }
    if g.edge_count() + 1 != n {
        return None;
    }
    if n == 5 && count(4) == 1 && count(1) == 4 {
        return Some(SmithFamily::DTilde(4));
    }
    if n >= 6 && count(3) == 2 && count(1) == 4 && count(2) == n - 6 {
        return Some(SmithFamily::DTilde(n - 1));
    }
    if count(3) == 1 && count(1) == 3 && count(2) == n - 4 && (7..=9).contains(&n) {
        return Some(SmithFamily::ETilde(n - 1));
    }
    None
}

/// Backtracking isomorphism test for small graphs.
pub(crate) fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    // visit g in BFS order so every vertex after the first of its component
    // has a mapped neighbour
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            for &v in g.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
            i += 1;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let u = order[k];
        for c in 0..h.n() {
            if used[c] || h.degree(c) != g.degree(u) {
                continue;
            }
            let ok = order[..k]
                .iter()
                .all(|&w| g.has_edge(u, w) == h.has_edge(c, map[w]));
            if !ok {
                continue;
            }
            map[u] = c;
            used[c] = true;
            if go(k + 1, order, g, h, map, used) {
                return true;
            }
            used[c] = false;
            map[u] = usize::MAX;
        }
        false
    }
    go(0, &order, g, h, &mut map, &mut used)
}

/// Classifies a connected graph by its spectral radius relative to 2, naming
/// the family when it equals 2.
pub fn smith_classify(g: &Graph) -> Result<SmithClass> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Domain(
            "classification needs a connected graph".into(),
        ));
    }
    match spectral_radius_cmp(g, &int(2)).relation {
        Relation::Below => Ok(SmithClass::RhoBelow2),
        Relation::Above => Ok(SmithClass::RhoAbove2),
        Relation::Equal => {
            let fam = fingerprint(g).ok_or_else(|| {
                Error::Domain("spectral radius 2 but no matching family fingerprint".into())
            })?;
            let model = build_family(&fam.spec())?;
            if !isomorphic(g, &model) {
                return Err(Error::Domain(format!(
                    "spectral radius 2, fingerprint {fam}, but not isomorphic to it"
                )));
            }
            Ok(SmithClass::RhoEqual2(fam))
        }
    }
}

/// `true` iff `rho(g) > 2` and every vertex-deleted subgraph has `rho <= 2`.
pub fn is_minimal_rho_above2(g: &Graph) -> bool {
    if spectral_radius_cmp(g, &int(2)).relation != Relation::Above {
        return false;
    }
    (0..g.n()).all(|v| {
        let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
        let h = induced_subgraph(g, &keep).expect("in range");
        spectral_radius_cmp(&h, &int(2)).relation != Relation::Above
    })
}

/// Positive integer eigenvector for eigenvalue 2 of each family, indexed by
/// the vertex layout of [`build_family`].
pub fn smith_labels(fam: SmithFamily) -> Vec<i64> {
    match fam {
        SmithFamily::ATilde(n) => vec![1; n + 1],
        SmithFamily::DTilde(n) => {
            // path 0..=n-2 and leaves n-1, n
            let mut v = vec![2; n + 1];
            for leaf in [0, n - 2, n - 1, n] {
                v[leaf] = 1;
            }
            v
        }
        SmithFamily::ETilde(6) => vec![1, 2, 3, 2, 1, 2, 1],
        SmithFamily::ETilde(7) => vec![1, 2, 3, 4, 3, 2, 1, 2],
        SmithFamily::ETilde(8) => vec![2, 4, 6, 5, 4, 3, 2, 1, 3],
        SmithFamily::ETilde(k) => panic!("no E~{k}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Family, p: &[usize]) -> Graph {
        build_family(&FamilySpec::new(f, p.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            smith_classify(&fam(Family::DTilde, &[4])).unwrap(),
            SmithClass::RhoEqual2(SmithFamily::DTilde(4))
        );
        assert_eq!(
            smith_classify(&fam(Family::Path, &[7])).unwrap(),
            SmithClass::RhoBelow2
        );
        assert_eq!(
            smith_classify(&fam(Family::CompleteMultipartite, &[2, 3])).unwrap(),
            SmithClass::RhoAbove2
        );
        assert!(smith_classify(&Graph::empty(2)).is_err());
    }

    #[test]
    fn minimal_examples() {
        assert!(is_minimal_rho_above2(
            &build_family(&FamilySpec::complete(4)).unwrap()
        ));
        assert!(is_minimal_rho_above2(&fam(Family::ATildePlus, &[2])));
        assert!(!is_minimal_rho_above2(
            &build_family(&FamilySpec::complete(5)).unwrap()
        ));
        assert!(!is_minimal_rho_above2(&fam(Family::Cycle, &[5])));
    }

    #[test]
    fn labels_are_eigenvectors() {
        let mut fams = vec![
            SmithFamily::ETilde(6),
            SmithFamily::ETilde(7),
            SmithFamily::ETilde(8),
        ];
        fams.extend((2..12).map(SmithFamily::ATilde));
        fams.extend((4..12).map(SmithFamily::DTilde));
        for f in fams {
            let g = build_family(&f.spec()).unwrap();
            let v = smith_labels(f);
            for u in 0..g.n() {
                let s: i64 = g.neighbours(u).iter().map(|&w| v[w]).sum();
                assert_eq!(s, 2 * v[u], "{f} vertex {u}");
            }
        }
    }

    #[test]
    fn minimal_list() {
        for e in MINIMAL_ABOVE2 {
            let g = crate::graphs::parse_graph_expr(e).unwrap();
            assert!(g.is_connected(), "{e}");
            assert!(is_minimal_rho_above2(&g), "{e}");
        }
    }

    #[test]
    fn isomorphism() {
        let c6 = fam(Family::Cycle, &[6]);
        let relabelled =
            Graph::from_edges(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        assert!(isomorphic(&c6, &relabelled));
        let two_c3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!isomorphic(&c6, &two_c3));
    }
}
