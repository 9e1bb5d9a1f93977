//! Seidel matrices, switching, switching graphs and shifted ranks.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graphs::{
    clique_number_with_limit, independence_number_with_limit, Graph, DEFAULT_SEARCH_LIMIT,
};
use crate::matrix::{bareiss_rank, ExactSymMatrix};
use crate::rational::{common_denominator, int, scale_to_int, Rational};

/// Seidel entry: 0 on the diagonal, -1 for an edge, +1 otherwise.
pub fn seidel_entry(g: &Graph, i: usize, j: usize) -> i64 {
    if i == j {
        0
    } else if g.has_edge(i, j) {
        -1
    } else {
        1
    }
}

/// Row-major integer Seidel matrix.
pub fn seidel_i64(g: &Graph) -> Vec<i64> {
    let n = g.n();
    let mut s = vec![1i64; n * n];
    for i in 0..n {
        s[i * n + i] = 0;
        for &j in g.neighbours(i) {
            s[i * n + j] = -1;
        }
    }
    s
}

/// `S = J - I - 2A`.
pub fn seidel_of(g: &Graph) -> ExactSymMatrix {
    ExactSymMatrix::from_fn(g.n(), |i, j| int(seidel_entry(g, i, j)))
}

/// Graph whose Seidel matrix is `S`; fails unless `S` is a Seidel matrix.
pub fn graph_of_seidel(s: &ExactSymMatrix) -> Result<Graph> {
    if !s.is_seidel() {
        return Err(Error::Domain("not a Seidel matrix".into()));
    }
    let n = s.order();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if *s.get(i, j) == int(-1) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

fn membership(n: usize, u: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; n];
    for &v in u {
        if v >= n {
            return Err(Error::Index { vertex: v, n });
        }
        inside[v] = true;
    }
    Ok(inside)
}

/// Complements the edges between `u` and its complement.
pub fn switch(g: &Graph, u: &[usize]) -> Result<Graph> {
    let n = g.n();
    let inside = membership(n, u)?;
    let mut out = Graph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let crossing = inside[i] != inside[j];
            if g.has_edge(i, j) != crossing {
                out.add_edge(i, j)?;
            }
        }
    }
    Ok(out)
}

/// Graph on `2n` vertices with Seidel matrix `[[S, I - S], [I - S, S]]`;
/// vertex `i + n` is the copy of `i`.
pub fn switching_graph(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Domain(format!(
            "switching graph needs at least 2 vertices, got {n}"
        )));
    }
    let mut out = Graph::empty(2 * n);
    for i in 0..n {
        for j in (i + 1)..n {
            // S_ij = -1 on the diagonal blocks, (I - S)_ij = -1 off them
            if g.has_edge(i, j) {
                out.add_edge(i, j)?;
                out.add_edge(i + n, j + n)?;
            } else {
                out.add_edge(i, j + n)?;
                out.add_edge(j, i + n)?;
            }
        }
    }
    Ok(out)
}

/// `(alpha, omega)` of the switching class of `g`, computed on its
/// switching graph.
pub fn class_alpha_omega(g: &Graph) -> Result<(usize, usize)> {
    class_alpha_omega_with_limit(g, DEFAULT_SEARCH_LIMIT)
}

pub fn class_alpha_omega_with_limit(g: &Graph, limit: usize) -> Result<(usize, usize)> {
    let sw = switching_graph(g)?;
    Ok((
        independence_number_with_limit(&sw, limit)?,
        clique_number_with_limit(&sw, limit)?,
    ))
}

/// Exact rank of `S + shift * I`.
pub fn rank_shifted(s: &ExactSymMatrix, shift: &Rational) -> usize {
    let m = s.shifted(shift);
    let (ints, _) = m.to_scaled_integers();
    bareiss_rank(ints, m.order(), m.order())
}

/// [`rank_shifted`] on the Seidel matrix of `g` without building rationals.
pub fn rank_shifted_graph(g: &Graph, shift: &Rational) -> usize {
    let n = g.n();
    let d = common_denominator([shift]);
    let sd = scale_to_int(shift, &d);
    let s = seidel_i64(g);
    let mut ints: Vec<BigInt> = s.iter().map(|&v| BigInt::from(v) * &d).collect();
    for i in 0..n {
        ints[i * n + i] += &sd;
    }
    bareiss_rank(ints, n, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_family, disjoint_union, Family, FamilySpec};

    fn fam(f: Family, p: &[usize]) -> Graph {
        build_family(&FamilySpec::new(f, p.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn seidel_matrices() {
        let k2 = build_family(&FamilySpec::complete(2)).unwrap();
        assert_eq!(
            seidel_of(&k2),
            ExactSymMatrix::from_i64_rows(&[vec![0, -1], vec![-1, 0]]).unwrap()
        );
        let e = seidel_of(&Graph::empty(3));
        assert!(e.is_seidel());
        assert_eq!(*e.get(0, 1), int(1));
        let g = fam(Family::B2, &[]);
        assert_eq!(graph_of_seidel(&seidel_of(&g)).unwrap(), g);
    }

    #[test]
    fn switching_examples() {
        let g = fam(Family::B3, &[]);
        assert_eq!(switch(&g, &[]).unwrap(), g);
        assert_eq!(switch(&g, &(0..6).collect::<Vec<_>>()).unwrap(), g);
        // star K_{1,5}: centre is vertex 0
        let star = fam(Family::CompleteMultipartite, &[1, 5]);
        assert_eq!(switch(&star, &[0]).unwrap(), Graph::empty(6));
        assert!(switch(&star, &[9]).is_err());
    }

    #[test]
    fn switching_graph_examples() {
        let k2 = build_family(&FamilySpec::complete(2)).unwrap();
        let sw = switching_graph(&k2).unwrap();
        assert_eq!((sw.n(), sw.edge_count()), (4, 2));
        assert_eq!(class_alpha_omega(&k2).unwrap(), (2, 2));
        assert_eq!(class_alpha_omega(&Graph::empty(2)).unwrap(), (2, 2));
        let sw3 = switching_graph(&Graph::empty(3)).unwrap();
        assert_eq!(sw3.edge_count(), 6);
        assert_eq!(class_alpha_omega(&Graph::empty(3)).unwrap().0, 3);
        let k4 = build_family(&FamilySpec::complete(4)).unwrap();
        assert_eq!(class_alpha_omega(&k4).unwrap().1, 4);
        assert!(switching_graph(&Graph::empty(1)).is_err());
    }

    #[test]
    fn shifted_ranks() {
        let j_minus_i = seidel_of(&Graph::empty(6));
        assert_eq!(rank_shifted(&j_minus_i, &int(5)), 6);
        assert_eq!(rank_shifted(&j_minus_i, &int(1)), 1);
        let c3 = fam(Family::Cycle, &[3]);
        let two = disjoint_union(&c3, &c3);
        assert_eq!(rank_shifted(&seidel_of(&two), &int(5)), 5);
        assert_eq!(rank_shifted_graph(&two, &int(5)), 5);
        let k2 = build_family(&FamilySpec::complete(2)).unwrap();
        assert_eq!(rank_shifted(&seidel_of(&k2), &int(1)), 1);
        assert_eq!(rank_shifted(&seidel_of(&k2), &int(5)), 2);
    }
}
