//! Graph-expression language.
//!
//! ```text
//! expr := term { "+" term }
//! term := [ INT "*" ] atom
//! atom := NAME [ "(" INT { "," INT } ")" ] | "cone" "(" expr ")" | "(" expr ")"
//! ```
//!
//! `+` is disjoint union, `k*atom` is `k` disjoint copies, `iso(s)` is `s`
//! isolated vertices. `K(n)` is the complete graph and `K(a,b,...)` the
//! complete multipartite graph. Whitespace is ignored between tokens.

use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::{build_family, cone, Family, FamilySpec, Graph};

/// Largest vertex count an expression may evaluate to.
pub const MAX_EXPR_VERTICES: usize = 200_000;
/// Largest edge count an expression may evaluate to.
pub const MAX_EXPR_EDGES: usize = 2_000_000;
const MAX_DEPTH: usize = 64;

const NAMES: [&str; 14] = [
    "K", "P", "C", "At", "At+", "Dt", "Dt+", "Et", "Et+", "B1", "B2", "B3", "M", "iso",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphExpr {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub count: Option<u64>,
    pub atom: Atom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Named {
        name: String,
        params: Option<Vec<u64>>,
    },
    Cone(Box<GraphExpr>),
    Group(Box<GraphExpr>),
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.count {
            write!(f, "{k}*")?;
        }
        write!(f, "{}", self.atom)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Named { name, params } => {
                f.write_str(name)?;
                if let Some(ps) = params {
                    let ps: Vec<String> = ps.iter().map(u64::to_string).collect();
                    write!(f, "({})", ps.join(","))?;
                }
                Ok(())
            }
            Atom::Cone(e) => write!(f, "cone({e})"),
            Atom::Group(e) => write!(f, "({e})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| Error::Syntax {
            offset: start,
            message: "integer too large".into(),
        })
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a graph name, `cone` or `(`"));
        }
        Ok(String::from_utf8(self.src[start..self.pos].to_vec()).expect("ascii"))
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        self.depth -= 1;
        Ok(GraphExpr { terms })
    }

    fn term(&mut self) -> Result<Term> {
        let count = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let k = self.int()?;
                self.expect(b'*')?;
                Some(k)
            }
            _ => None,
        };
        Ok(Term {
            count,
            atom: self.atom()?,
        })
    }

    fn atom(&mut self) -> Result<Atom> {
        if self.eat(b'(') {
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(Atom::Group(Box::new(e)));
        }
        let start = {
            self.skip_ws();
            self.pos
        };
        let mut name = self.ident()?;
        if name == "cone" {
            self.expect(b'(')?;
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(Atom::Cone(Box::new(e)));
        }
        // the affine families always take parameters, so a following `+`
        // belongs to the name
        if matches!(name.as_str(), "At" | "Dt" | "Et") && self.eat(b'+') {
            name.push('+');
        }
        if !NAMES.contains(&name.as_str()) {
            return Err(Error::Syntax {
                offset: start,
                message: format!("unknown graph name `{name}`"),
            });
        }
        let params = if self.eat(b'(') {
            let mut ps = vec![self.int()?];
            while self.eat(b',') {
                ps.push(self.int()?);
            }
            self.expect(b')')?;
            Some(ps)
        } else {
            None
        };
        Ok(Atom::Named { name, params })
    }
}

/// Parses an expression into its syntax tree without evaluating it.
pub fn parse_expr(text: &str) -> Result<GraphExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

fn spec_of(name: &str, params: &Option<Vec<u64>>) -> Result<FamilySpec> {
    let ps: Vec<usize> = params
        .iter()
        .flatten()
        .map(|&v| {
            usize::try_from(v)
                .ok()
                .filter(|&v| v <= MAX_EXPR_VERTICES)
                .ok_or(Error::Capacity {
                    what: "graph parameter",
                    actual: usize::try_from(v).unwrap_or(usize::MAX),
                    limit: MAX_EXPR_VERTICES,
                })
        })
        .collect::<Result<_>>()?;
    let family = match name {
        "K" => {
            if ps.len() == 1 {
                return Ok(FamilySpec::complete(ps[0]));
            }
            if ps.is_empty() {
                return Err(Error::Parameter {
                    family: Family::CompleteMultipartite.name().into(),
                    reason: "K needs at least one parameter".into(),
                });
            }
            Family::CompleteMultipartite
        }
        "P" => Family::Path,
        "C" => Family::Cycle,
        "At" => Family::ATilde,
        "At+" => Family::ATildePlus,
        "Dt" => Family::DTilde,
        "Dt+" => Family::DTildePlus,
        "Et" => Family::ETilde,
        "Et+" => Family::ETildePlus,
        "B1" => Family::B1,
        "B2" => Family::B2,
        "B3" => Family::B3,
        "M" => Family::M,
        "iso" => Family::Isolated,
        _ => unreachable!("names are checked by the parser"),
    };
    FamilySpec::new(family, ps)
}

fn edge_count_of(spec: &FamilySpec) -> u128 {
    let p: Vec<u128> = spec.params().iter().map(|&v| v as u128).collect();
    match spec.family() {
        Family::CompleteMultipartite => {
            let n: u128 = p.iter().sum();
            (n * n - p.iter().map(|x| x * x).sum::<u128>()) / 2
        }
        Family::Path => p[0] - 1,
        Family::Cycle => p[0],
        Family::ATilde => p[0] + 1,
        Family::ATildePlus => p[0] + 2,
        Family::DTilde | Family::ETilde => p[0],
        Family::DTildePlus | Family::ETildePlus => p[0] + 1,
        Family::B1 => 6,
        Family::B2 | Family::B3 => 7,
        Family::M => 1 + 3 * p[2] + p[0] + p[1],
        Family::Isolated => 0,
    }
}

impl GraphExpr {
    /// Vertex and edge counts, computed without building the graph.
    pub fn size(&self) -> Result<(u128, u128)> {
        let mut n = 0u128;
        let mut m = 0u128;
        for t in &self.terms {
            let (an, am) = t.atom.size()?;
            let k = t.count.unwrap_or(1) as u128;
            check_size(k, 0)?;
            n = n.saturating_add(k.saturating_mul(an));
            m = m.saturating_add(k.saturating_mul(am));
            check_size(n, m)?;
        }
        Ok((n, m))
    }

    pub fn eval(&self) -> Result<Graph> {
        self.size()?;
        self.eval_unchecked()
    }

    fn eval_unchecked(&self) -> Result<Graph> {
        let mut g = Graph::empty(0);
        for t in &self.terms {
            let a = t.atom.eval_unchecked()?;
            for _ in 0..t.count.unwrap_or(1) {
                g.append(&a);
            }
        }
        Ok(g)
    }
}

fn check_size(n: u128, m: u128) -> Result<()> {
    if n > MAX_EXPR_VERTICES as u128 {
        return Err(Error::Capacity {
            what: "expression vertex count",
            actual: usize::try_from(n).unwrap_or(usize::MAX),
            limit: MAX_EXPR_VERTICES,
        });
    }
    if m > MAX_EXPR_EDGES as u128 {
        return Err(Error::Capacity {
            what: "expression edge count",
            actual: usize::try_from(m).unwrap_or(usize::MAX),
            limit: MAX_EXPR_EDGES,
        });
    }
    Ok(())
}

impl Atom {
    fn size(&self) -> Result<(u128, u128)> {
        match self {
            Atom::Named { name, params } => {
                let spec = spec_of(name, params)?;
                let n = spec.order() as u128;
                let m = edge_count_of(&spec);
                check_size(n, m)?;
                Ok((n, m))
            }
            Atom::Cone(e) => {
                let (n, m) = e.size()?;
                check_size(n + 1, m + n)?;
                Ok((n + 1, m + n))
            }
            Atom::Group(e) => e.size(),
        }
    }

    fn eval_unchecked(&self) -> Result<Graph> {
        match self {
            Atom::Named { name, params } => build_family(&spec_of(name, params)?),
            Atom::Cone(e) => Ok(cone(&e.eval_unchecked()?)),
            Atom::Group(e) => e.eval_unchecked(),
        }
    }
}

/// Parses and evaluates a graph expression.
pub fn parse_graph_expr(text: &str) -> Result<Graph> {
    parse_expr(text)?.eval()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ne(text: &str) -> (usize, usize) {
        let g = parse_graph_expr(text).unwrap();
        (g.n(), g.edge_count())
    }

    #[test]
    fn padded_and_union_expressions() {
        assert_eq!(ne("K(1,5) + iso(41)"), (47, 5));
        assert_eq!(ne("Et+(8) + iso(2477)").0, 2487);
        assert_eq!(ne("2*K(2) + B3"), (10, 9));
        assert_eq!(ne("K(4)"), (4, 6));
        assert_eq!(ne("K(2,1,1)"), (4, 5));
        assert_eq!(ne("cone(iso(5))"), (6, 5));
        assert_eq!(ne("cone(K(3))"), (4, 6));
        assert_eq!(ne(" 3 * ( K(2) + iso(1) ) "), (9, 3));
        assert_eq!(ne("At+(2)"), (4, 4));
        assert_eq!(ne("Dt + (4)"), (6, 5));
        assert_eq!(ne("M(3,2,3)"), (13, 15));
        assert_eq!(ne("P(4) + C(5)"), (9, 8));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        for (text, offset) in [
            ("K(1,", 4),
            ("Q(3)", 0),
            ("K(2) +", 6),
            ("2*", 2),
            ("K(2))", 4),
            ("", 0),
            ("cone K(2)", 5),
        ] {
            match parse_expr(text) {
                Err(Error::Syntax { offset: o, .. }) => assert_eq!(o, offset, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(
            parse_graph_expr("At(1)"),
            Err(Error::Parameter { .. })
        ));
        assert!(matches!(
            parse_graph_expr("Et+(9)"),
            Err(Error::Parameter { .. })
        ));
        assert!(matches!(
            parse_graph_expr("M(1,2)"),
            Err(Error::Parameter { .. })
        ));
        assert!(matches!(
            parse_graph_expr("iso(999999999)"),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            parse_graph_expr("K(5000)"),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            parse_graph_expr("100000*iso(100000)"),
            Err(Error::Capacity { .. })
        ));
        let deep = "(".repeat(100) + "K(1)" + &")".repeat(100);
        assert!(matches!(parse_graph_expr(&deep), Err(Error::Syntax { .. })));
    }

    #[test]
    fn canonical_display() {
        let e = parse_expr("2 * K(1 ,5)+cone( Et+(6) )+(B1+iso(3))").unwrap();
        assert_eq!(e.to_string(), "2*K(1,5) + cone(Et+(6)) + (B1 + iso(3))");
        assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }
}
