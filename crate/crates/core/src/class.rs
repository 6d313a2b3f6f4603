//! Parameterised graph families and their canonical labelled graphs.
//!
//! Text syntax (used by the CLI):
//!
//! ```text
//! path:N  cycle:N  complete:N  star:N  bipartite:M,N  empty:N  paw  diamond
//! join(SPEC,SPEC)  union(SPEC,SPEC,...)
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star with `n` leaves (order `n + 1`), centre at index `n`.
    Star(usize),
    CompleteBipartite(usize, usize),
    Join(Box<ClassSpec>, Box<ClassSpec>),
    DisjointUnion(Vec<ClassSpec>),
    Raw(Graph),
}

impl ClassSpec {
    pub fn join(a: ClassSpec, b: ClassSpec) -> Self {
        ClassSpec::Join(Box::new(a), Box::new(b))
    }

    /// Triangle `0,1,2` with pendant vertex 3 attached to 2, i.e. the path
    /// `0-1-2-3` plus the edge `0-2`.
    pub fn paw() -> Self {
        ClassSpec::Raw(Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2)]).expect("paw"))
    }

    /// `K_4` minus the edge `{0, 2}`.
    pub fn diamond() -> Self {
        ClassSpec::Raw(
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).expect("diamond"),
        )
    }

    pub fn order(&self) -> usize {
        match self {
            ClassSpec::Path(n) | ClassSpec::Cycle(n) | ClassSpec::Complete(n) => *n,
            ClassSpec::Star(n) => n + 1,
            ClassSpec::CompleteBipartite(m, n) => m + n,
            ClassSpec::Join(a, b) => a.order() + b.order(),
            ClassSpec::DisjointUnion(parts) => parts.iter().map(ClassSpec::order).sum(),
            ClassSpec::Raw(g) => g.order(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parameter(msg));
        match self {
            ClassSpec::Path(0) => bad("path needs n >= 1".into()),
            ClassSpec::Complete(0) => bad("complete graph needs n >= 1".into()),
            ClassSpec::Cycle(n) if *n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            ClassSpec::CompleteBipartite(m, n) if *m == 0 || *n == 0 => {
                bad(format!("complete bipartite needs m, n >= 1, got ({m},{n})"))
            }
            ClassSpec::DisjointUnion(parts) if parts.is_empty() => {
                bad("disjoint union of no graphs".into())
            }
            ClassSpec::Join(a, b) => {
                a.validate()?;
                b.validate()
            }
            ClassSpec::DisjointUnion(parts) => parts.iter().try_for_each(ClassSpec::validate),
            _ => Ok(()),
        }
    }
}

/// Canonical labelled graph for a family instance.
pub fn build_class(spec: &ClassSpec) -> Result<Graph> {
    spec.validate()?;
    Ok(build_unchecked(spec))
}

fn build_unchecked(spec: &ClassSpec) -> Graph {
    let from = |n, edges: Vec<(usize, usize)>| Graph::from_edges(n, &edges).expect("family edges");
    match spec {
        ClassSpec::Path(n) => from(*n, (1..*n).map(|i| (i - 1, i)).collect()),
        ClassSpec::Cycle(n) => {
            let mut e: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            e.push((0, n - 1));
            from(*n, e)
        }
        ClassSpec::Complete(n) => Graph::empty(*n).complement(),
        ClassSpec::Star(n) => from(n + 1, (0..*n).map(|i| (i, *n)).collect()),
        ClassSpec::CompleteBipartite(m, n) => Graph::empty(*m).join(&Graph::empty(*n)),
        ClassSpec::Join(a, b) => build_unchecked(a).join(&build_unchecked(b)),
        ClassSpec::DisjointUnion(parts) => {
            let gs: Vec<Graph> = parts.iter().map(build_unchecked).collect();
            Graph::disjoint_union(&gs)
        }
        ClassSpec::Raw(g) => g.clone(),
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Path(n) => write!(f, "path:{n}"),
            ClassSpec::Cycle(n) => write!(f, "cycle:{n}"),
            ClassSpec::Complete(n) => write!(f, "complete:{n}"),
            ClassSpec::Star(n) => write!(f, "star:{n}"),
            ClassSpec::CompleteBipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            ClassSpec::Join(a, b) => write!(f, "join({a},{b})"),
            ClassSpec::DisjointUnion(parts) => {
                let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "union({})", inner.join(","))
            }
            ClassSpec::Raw(g) => {
                if Some(g) == raw_of(&ClassSpec::paw()) {
                    f.write_str("paw")
                } else if Some(g) == raw_of(&ClassSpec::diamond()) {
                    f.write_str("diamond")
                } else if g.edge_count() == 0 {
                    write!(f, "empty:{}", g.order())
                } else {
                    write!(f, "raw(n={},m={})", g.order(), g.edge_count())
                }
            }
        }
    }
}

fn raw_of(spec: &ClassSpec) -> Option<&Graph> {
    match spec {
        ClassSpec::Raw(g) => Some(g),
        _ => None,
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = SpecParser {
            src: compact.as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

struct SpecParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::format(self.pos, format!("class spec: {msg}"))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphabetic() || b == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a family name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).to_ascii_lowercase())
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected a number"))
    }

    /// Numbers after `:`, separated by `,` or `x`. A comma followed by a
    /// letter belongs to an enclosing list.
    fn args(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        if !self.eat(b':') {
            return Ok(out);
        }
        out.push(self.number()?);
        while matches!(self.peek(), Some(b',') | Some(b'x'))
            && self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit)
        {
            self.pos += 1;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<ClassSpec> {
        let name = self.ident()?;
        if name == "join" || name == "union" {
            if !self.eat(b'(') {
                return Err(self.err("expected '('"));
            }
            let mut parts = vec![self.spec()?];
            while self.eat(b',') {
                parts.push(self.spec()?);
            }
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            return if name == "join" {
                match <[ClassSpec; 2]>::try_from(parts) {
                    Ok([a, b]) => Ok(ClassSpec::join(a, b)),
                    Err(_) => Err(self.err("join takes exactly two graphs")),
                }
            } else {
                Ok(ClassSpec::DisjointUnion(parts))
            };
        }
        let args = self.args()?;
        let one = |args: &[usize]| match args {
            [n] => Ok(*n),
            _ => Err(self.err(&format!("{name} takes one parameter"))),
        };
        Ok(match name.as_str() {
            "path" | "p" => ClassSpec::Path(one(&args)?),
            "cycle" | "c" => ClassSpec::Cycle(one(&args)?),
            "complete" | "k" => ClassSpec::Complete(one(&args)?),
            "star" | "s" => ClassSpec::Star(one(&args)?),
            "empty" => ClassSpec::Raw(Graph::empty(one(&args)?)),
            "bipartite" | "kmn" => match args[..] {
                [m, n] => ClassSpec::CompleteBipartite(m, n),
                _ => return Err(self.err("bipartite takes two parameters")),
            },
            "paw" if args.is_empty() => ClassSpec::paw(),
            "diamond" if args.is_empty() => ClassSpec::diamond(),
            _ => return Err(self.err(&format!("unknown family {name:?}"))),
        })
    }
}
