//! Named graph families.
//!
//! The small forbidden graphs `B1`, `B2`, `B3` are shipped as fixed adjacency
//! lists; every other family is generated from its parameters.

use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    CompleteMultipartite,
    Path,
    Cycle,
    ATilde,
    DTilde,
    ETilde,
    ATildePlus,
    DTildePlus,
    ETildePlus,
    B1,
    B2,
    B3,
    M,
    Isolated,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::CompleteMultipartite => "CompleteMultipartite",
            Family::Path => "Path",
            Family::Cycle => "Cycle",
            Family::ATilde => "ATilde",
            Family::DTilde => "DTilde",
            Family::ETilde => "ETilde",
            Family::ATildePlus => "ATildePlus",
            Family::DTildePlus => "DTildePlus",
            Family::ETildePlus => "ETildePlus",
            Family::B1 => "B1",
            Family::B2 => "B2",
            Family::B3 => "B3",
            Family::M => "M",
            Family::Isolated => "Isolated",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bowtie: two triangles sharing vertex 0.
pub const B1_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)];

/// Diamond on 0..4 (0 and 2 of degree 3) with two pendants 4, 5 at vertex 0.
pub const B2_EDGES: [(usize, usize); 7] = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (0, 4), (0, 5)];

/// Domino: the 2x3 ladder with rungs 0-1, 2-3, 4-5.
pub const B3_EDGES: [(usize, usize); 7] = [(0, 1), (2, 3), (4, 5), (0, 2), (1, 3), (2, 4), (3, 5)];

/// A family name with its integer parameters, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self> {
        let bad = |reason: String| Error::Parameter {
            family: family.name().to_string(),
            reason,
        };
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(format!(
                    "expected {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match family {
            Family::CompleteMultipartite => {
                if params.contains(&0) {
                    return Err(bad("empty part".into()));
                }
            }
            Family::Path => {
                arity(1)?;
                if params[0] < 1 {
                    return Err(bad("path needs n >= 1".into()));
                }
            }
            Family::Cycle => {
                arity(1)?;
                if params[0] < 3 {
                    return Err(bad("cycle needs n >= 3".into()));
                }
            }
            Family::ATilde | Family::ATildePlus => {
                arity(1)?;
                if params[0] < 2 {
                    return Err(bad("needs n >= 2".into()));
                }
            }
            Family::DTilde | Family::DTildePlus => {
                arity(1)?;
                if params[0] < 4 {
                    return Err(bad("needs n >= 4".into()));
                }
            }
            Family::ETilde | Family::ETildePlus => {
                arity(1)?;
                if !(6..=8).contains(&params[0]) {
                    return Err(bad("index must be 6, 7 or 8".into()));
                }
            }
            Family::B1 | Family::B2 | Family::B3 => arity(0)?,
            Family::M => arity(3)?,
            Family::Isolated => arity(1)?,
        }
        Ok(Self { family, params })
    }

    /// Complete graph `K_n` as the multipartite graph with `n` singleton parts.
    pub fn complete(n: usize) -> Self {
        Self {
            family: Family::CompleteMultipartite,
            params: vec![1; n],
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    /// Vertex count of the graph this spec builds.
    pub fn order(&self) -> usize {
        let p = &self.params;
        match self.family {
            Family::CompleteMultipartite => p.iter().fold(0usize, |a, &b| a.saturating_add(b)),
            Family::Path | Family::Cycle | Family::Isolated => p[0],
            Family::ATilde | Family::DTilde | Family::ETilde => p[0].saturating_add(1),
            Family::ATildePlus | Family::DTildePlus | Family::ETildePlus => p[0].saturating_add(2),
            Family::B1 => 5,
            Family::B2 | Family::B3 => 6,
            Family::M => p[2]
                .saturating_mul(2)
                .saturating_add(p[0])
                .saturating_add(p[1])
                .saturating_add(2),
        }
    }
}

fn path_edges(start: usize, len: usize) -> Vec<(usize, usize)> {
    (1..len).map(|i| (start + i - 1, start + i)).collect()
}

fn cycle_edges(len: usize) -> Vec<(usize, usize)> {
    let mut e = path_edges(0, len);
    e.push((len - 1, 0));
    e
}

/// `D~_n`: path `0..=n-2` with extra leaves on vertices 1 and `n-3`.
fn d_tilde_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = path_edges(0, n - 1);
    e.push((1, n - 1));
    e.push((n - 3, n));
    e
}

/// `E~_k` as a long path with one branch; returns edges and the end vertex of
/// the longest arm.
fn e_tilde_edges(k: usize) -> (Vec<(usize, usize)>, usize) {
    match k {
        // path 0..=4, arm 5-6 hanging at 2
        6 => {
            let mut e = path_edges(0, 5);
            e.extend([(2, 5), (5, 6)]);
            (e, 4)
        }
        // path 0..=6, pendant 7 at 3
        7 => {
            let mut e = path_edges(0, 7);
            e.push((3, 7));
            (e, 6)
        }
        // path 0..=7, pendant 8 at 2
        8 => {
            let mut e = path_edges(0, 8);
            e.push((2, 8));
            (e, 7)
        }
        _ => unreachable!("validated index"),
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    let n = spec.order();
    let edges: Vec<(usize, usize)> = match spec.family {
        Family::CompleteMultipartite => {
            let mut part = Vec::with_capacity(n);
            for (i, &size) in p.iter().enumerate() {
                part.extend(std::iter::repeat_n(i, size));
            }
            let mut e = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if part[u] != part[v] {
                        e.push((u, v));
                    }
                }
            }
            e
        }
        Family::Path => path_edges(0, p[0]),
        Family::Cycle | Family::ATilde => cycle_edges(n),
        Family::ATildePlus => {
            let mut e = cycle_edges(n - 1);
            e.push((0, n - 1));
            e
        }
        Family::DTilde => d_tilde_edges(p[0]),
        Family::DTildePlus => {
            let mut e = d_tilde_edges(p[0]);
            e.push((p[0] - 2, n - 1));
            e
        }
        Family::ETilde => e_tilde_edges(p[0]).0,
        Family::ETildePlus => {
            let (mut e, end) = e_tilde_edges(p[0]);
            e.push((end, n - 1));
            e
        }
        Family::B1 => B1_EDGES.to_vec(),
        Family::B2 => B2_EDGES.to_vec(),
        Family::B3 => B3_EDGES.to_vec(),
        Family::M => {
            // x = 0, y = 1, then t rungs a_i-b_i, then s1 pendants of x and
            // s2 pendants of y
            let (s1, s2, t) = (p[0], p[1], p[2]);
            let mut e = vec![(0, 1)];
            for i in 0..t {
                let a = 2 + 2 * i;
                e.extend([(a, a + 1), (0, a), (1, a + 1)]);
            }
            let base = 2 + 2 * t;
            e.extend((0..s1).map(|j| (0, base + j)));
            e.extend((0..s2).map(|j| (1, base + s1 + j)));
            e
        }
        Family::Isolated => Vec::new(),
    };
    Graph::from_edges(n, &edges)
}
