//! Finite simple graphs, the families they are built from, and the textual
//! graph-expression language.

mod clique;
mod expr;
mod family;

pub use clique::{
    clique_number, clique_number_with_limit, independence_number, independence_number_with_limit,
    DEFAULT_SEARCH_LIMIT,
};
pub use expr::{parse_expr, parse_graph_expr, Atom, GraphExpr, Term, MAX_EXPR_VERTICES};
pub use family::{build_family, Family, FamilySpec};

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds from an edge list; repeated pairs collapse, loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::Index { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Domain(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edges += 1;
                Ok(true)
            }
        }
    }

    /// In-place disjoint union with `other` (its vertices shifted by `n`).
    pub(crate) fn append(&mut self, other: &Graph) {
        let off = self.n();
        self.adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&v| v + off).collect::<Vec<_>>()),
        );
        self.edges += other.edges;
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut edges = 0;
        for (u, row) in adj.iter_mut().enumerate() {
            for v in 0..n {
                if v != u && !self.has_edge(u, v) {
                    row.push(v);
                    if v > u {
                        edges += 1;
                    }
                }
            }
        }
        Self { adj, edges }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Renders the line format: `n m` then one `u v` line per edge.
    pub fn to_lines(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Parses the line format written by [`Graph::to_lines`].
    ///
    /// Blank lines and lines starting with `#` are skipped.
    pub fn from_lines(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let fmt_err = |line: usize, message: String| Error::Format { line, message };
        let (hline, header) = lines
            .next()
            .ok_or_else(|| fmt_err(1, "missing header line".into()))?;
        let nums = parse_pair(header).ok_or_else(|| fmt_err(hline, "expected `n m`".into()))?;
        let (n, m) = nums;
        if n > MAX_EXPR_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                actual: n,
                limit: MAX_EXPR_VERTICES,
            });
        }
        let mut g = Self::empty(n);
        let mut seen = 0;
        for (line, l) in lines {
            let (u, v) = parse_pair(l).ok_or_else(|| fmt_err(line, "expected `u v`".into()))?;
            if u >= n || v >= n {
                return Err(fmt_err(line, format!("vertex out of range for n = {n}")));
            }
            if u == v {
                return Err(fmt_err(line, format!("self-loop at {u}")));
            }
            if !g.add_edge(u, v)? {
                return Err(fmt_err(line, format!("repeated edge {u} {v}")));
            }
            seen += 1;
        }
        if seen != m {
            return Err(fmt_err(
                hline,
                format!("header declares {m} edges, found {seen}"),
            ));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let mut out = g1.clone();
    out.append(g2);
    out
}

/// `g` together with `t1` isolated vertices, `t2` copies of `K2` and `t3`
/// copies of `P3`, appended in that order.
pub fn pad(g: &Graph, t1: usize, t2: usize, t3: usize) -> Graph {
    let n = g.n() + t1 + 2 * t2 + 3 * t3;
    let mut out = g.clone();
    out.adj.resize(n, Vec::new());
    let mut base = g.n() + t1;
    for _ in 0..t2 {
        out.add_edge(base, base + 1).expect("fresh vertices");
        base += 2;
    }
    for _ in 0..t3 {
        out.add_edge(base, base + 1).expect("fresh vertices");
        out.add_edge(base + 1, base + 2).expect("fresh vertices");
        base += 3;
    }
    out
}

/// Kneser graph on the 2-subsets of a 5-set.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut g = Graph::empty(pairs.len());
    for (i, p) in pairs.iter().enumerate() {
        for (j, q) in pairs.iter().enumerate().skip(i + 1) {
            if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

/// New last vertex joined to every vertex of `g`.
pub fn cone(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = g.clone();
    out.adj.push(Vec::new());
    for v in 0..n {
        out.add_edge(v, n).expect("fresh vertex");
    }
    out
}

/// Subgraph induced on `vertices`, re-indexed in the given order.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        if v >= n {
            return Err(Error::Index { vertex: v, n });
        }
        if index[v] != usize::MAX {
            return Err(Error::Domain(format!("vertex {v} listed twice")));
        }
        index[v] = i;
    }
    let mut out = Graph::empty(vertices.len());
    for (i, &v) in vertices.iter().enumerate() {
        for &w in g.neighbours(v) {
            let j = index[w];
            if j != usize::MAX && i < j {
                out.add_edge(i, j).expect("distinct vertices");
            }
        }
    }
    Ok(out)
}

/// Splits the vertices outside `h` into those with a neighbour in `h` and
/// the rest: returns `(N(h), R(h))`, both sorted.
pub fn split_by_neighbourhood(g: &Graph, h: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut in_h = vec![false; n];
    for &v in h {
        if v >= n {
            return Err(Error::Index { vertex: v, n });
        }
        in_h[v] = true;
    }
    let mut near = BTreeSet::new();
    for &v in h {
        for &w in g.neighbours(v) {
            if !in_h[w] {
                near.insert(w);
            }
        }
    }
    let rest = (0..n).filter(|&v| !in_h[v] && !near.contains(&v)).collect();
    Ok((near.into_iter().collect(), rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        build_family(&FamilySpec::complete(n)).unwrap()
    }

    #[test]
    fn union_and_padding() {
        let k2 = k(2);
        let u = disjoint_union(&k2, &k2);
        assert_eq!((u.n(), u.edge_count()), (4, 2));
        let e3 = Graph::empty(3);
        assert_eq!(disjoint_union(&e3, &Graph::empty(0)), e3);
        let c3 = build_family(&FamilySpec::new(Family::Cycle, vec![3]).unwrap()).unwrap();
        let two = disjoint_union(&c3, &c3);
        assert_eq!(
            (two.n(), two.edge_count(), two.components().len()),
            (6, 6, 2)
        );

        let p = pad(&k(4), 5, 0, 0);
        assert_eq!((p.n(), p.edge_count()), (9, 6));
        assert_eq!(pad(&Graph::empty(0), 0, 0, 0), Graph::empty(0));
        let k23 = build_family(&FamilySpec::new(Family::CompleteMultipartite, vec![2, 3]).unwrap())
            .unwrap();
        let p = pad(&k23, 14, 1, 0);
        assert_eq!((p.n(), p.edge_count()), (21, 7));
        let p = pad(&Graph::empty(0), 0, 1, 2);
        assert_eq!((p.n(), p.edge_count()), (8, 5));
    }

    #[test]
    fn cones() {
        let star = cone(&Graph::empty(5));
        assert_eq!((star.n(), star.edge_count(), star.degree(5)), (6, 5, 5));
        assert_eq!(cone(&k(3)), k(4));
        assert_eq!(cone(&k(2)), k(3));
    }

    #[test]
    fn induced() {
        assert_eq!(induced_subgraph(&k(4), &[0, 2, 3]).unwrap(), k(3));
        assert_eq!(induced_subgraph(&k(4), &[]).unwrap(), Graph::empty(0));
        let k23 = build_family(&FamilySpec::new(Family::CompleteMultipartite, vec![2, 3]).unwrap())
            .unwrap();
        assert_eq!(induced_subgraph(&k23, &[2, 3, 4]).unwrap(), Graph::empty(3));
        assert!(matches!(
            induced_subgraph(&k(3), &[0, 7]),
            Err(Error::Index { vertex: 7, n: 3 })
        ));
    }

    #[test]
    fn neighbourhood_split() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            split_by_neighbourhood(&p3, &[1]).unwrap(),
            (vec![0, 2], vec![])
        );
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            split_by_neighbourhood(&two, &[0, 1]).unwrap(),
            (vec![], vec![2, 3])
        );
        let star = cone(&Graph::empty(5));
        let (near, rest) = split_by_neighbourhood(&star, &[5]).unwrap();
        assert_eq!((near.len(), rest.len()), (5, 0));
    }

    #[test]
    fn line_format_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4), (1, 3)]).unwrap();
        let text = g.to_lines();
        assert_eq!(text, "5 3\n0 1\n1 3\n3 4\n");
        assert_eq!(Graph::from_lines(&text).unwrap(), g);
        assert!(Graph::from_lines("3 1\n0 0\n").is_err());
        assert!(Graph::from_lines("3 2\n0 1\n1 0\n").is_err());
        assert!(Graph::from_lines("3 2\n0 1\n").is_err());
        assert!(Graph::from_lines("2 1\n0 5\n").is_err());
        assert!(Graph::from_lines("").is_err());
    }

    #[test]
    fn complement_and_components() {
        let c = k(4).complement();
        assert_eq!((c.n(), c.edge_count()), (4, 0));
        assert_eq!(c.components().len(), 4);
        assert!(k(4).is_connected());
        assert!(Graph::empty(0).is_connected());
    }
}
