//! Exact maximum clique / independent set by branch and bound.
//!
//! Candidate sets are bitsets; the bound at each node is a greedy colouring
//! of the candidates, and vertices are expanded in reverse colour order.

use crate::error::{Error, Result};
use crate::graphs::Graph;

pub const DEFAULT_SEARCH_LIMIT: usize = 50;

type Bits = Vec<u64>;

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn unset(b: &mut Bits, i: usize) {
    b[i / 64] &= !(1 << (i % 64));
}

fn count(b: &Bits) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

fn and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn members(b: &Bits) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + t)
        })
    })
}

struct Search {
    adj: Vec<Bits>,
    best: usize,
}

impl Search {
    /// Greedy colouring of `cand`: vertices in colour order with their colour.
    fn colour(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut uncoloured = cand.clone();
        let mut out = Vec::with_capacity(count(cand));
        let mut colour = 0;
        while count(&uncoloured) > 0 {
            colour += 1;
            let mut avail = uncoloured.clone();
            loop {
                let Some(v) = members(&avail).next() else {
                    break;
                };
                unset(&mut avail, v);
                unset(&mut uncoloured, v);
                for (a, n) in avail.iter_mut().zip(&self.adj[v]) {
                    *a &= !n;
                }
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, size: usize, mut cand: Bits) {
        let order = self.colour(&cand);
        for &(v, c) in order.iter().rev() {
            if size + c <= self.best {
                return;
            }
            let next = and(&cand, &self.adj[v]);
            if count(&next) == 0 {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(size + 1, next);
            }
            unset(&mut cand, v);
        }
    }
}

fn max_clique(adj: Vec<Bits>, n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut all = vec![0u64; words(n)];
    for v in 0..n {
        set(&mut all, v);
    }
    let mut s = Search { adj, best: 0 };
    s.expand(0, all);
    s.best
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::Capacity {
            what: "vertex count for exact clique search",
            actual: g.n(),
            limit,
        });
    }
    Ok(())
}

fn adjacency_bits(g: &Graph, complement: bool) -> Vec<Bits> {
    let n = g.n();
    (0..n)
        .map(|u| {
            let mut b = vec![0u64; words(n)];
            for v in 0..n {
                if v != u && g.has_edge(u, v) != complement {
                    set(&mut b, v);
                }
            }
            b
        })
        .collect()
}

pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    check_limit(g, limit)?;
    Ok(max_clique(adjacency_bits(g, false), g.n()))
}

pub fn independence_number_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    check_limit(g, limit)?;
    Ok(max_clique(adjacency_bits(g, true), g.n()))
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    clique_number_with_limit(g, DEFAULT_SEARCH_LIMIT)
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with_limit(g, DEFAULT_SEARCH_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_family, Family, FamilySpec};

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|u| {
                    (u + 1..n)
                        .all(|v| !(mask >> u & 1 == 1 && mask >> v & 1 == 1 && g.has_edge(u, v)))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_families() {
        let k4 = build_family(&FamilySpec::complete(4)).unwrap();
        assert_eq!(independence_number(&k4).unwrap(), 1);
        assert_eq!(clique_number(&k4).unwrap(), 4);
        let k23 = build_family(&FamilySpec::new(Family::CompleteMultipartite, vec![2, 3]).unwrap())
            .unwrap();
        assert_eq!(independence_number(&k23).unwrap(), 3);
        let c5 = build_family(&FamilySpec::new(Family::Cycle, vec![5]).unwrap()).unwrap();
        assert_eq!(independence_number(&c5).unwrap(), 2);
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=12);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            assert_eq!(independence_number(&g).unwrap(), brute_alpha(&g));
            assert_eq!(clique_number(&g.complement()).unwrap(), brute_alpha(&g));
        }
    }

    #[test]
    fn limit_is_enforced() {
        let g = Graph::empty(51);
        assert!(matches!(
            independence_number(&g),
            Err(Error::Capacity { .. })
        ));
        assert_eq!(independence_number_with_limit(&g, 64).unwrap(), 51);
    }

    #[test]
    fn wide_bitsets() {
        // 70 vertices spans two words; two disjoint cliques of 35
        let mut g = Graph::empty(70);
        for u in 0..70 {
            for v in (u + 1)..70 {
                if (u < 35) == (v < 35) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        assert_eq!(clique_number_with_limit(&g, 70).unwrap(), 35);
        assert_eq!(independence_number_with_limit(&g, 70).unwrap(), 2);
    }
}
