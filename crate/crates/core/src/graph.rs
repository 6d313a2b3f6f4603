//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is stored as a dense bit matrix so membership queries are O(1)
//! and, for graphs of order at most 64, a whole neighbourhood fits in one
//! machine word. Graphs are values: every editor returns a new graph.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices (the complement of `K_n`).
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            bits: vec![0; stride * n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Parameter(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::Parameter(format!("repeated edge {{{u},{v}}}")));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let row = &self.bits[u * self.stride..(u + 1) * self.stride];
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.bits[u * self.stride..(u + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Neighbourhood of `u` as a bit mask. Only meaningful for order <= 64.
    #[inline]
    pub fn row_mask(&self, u: Vertex) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[u * self.stride]
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// `self ∨ other`: own vertices first, then `other`'s shifted by
    /// `self.order()`, then every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let m = self.n;
        let mut g = Graph::disjoint_union(&[self.clone(), other.clone()]);
        for u in 0..m {
            for v in 0..other.n {
                g.set(u, m + v, true);
            }
        }
        g
    }

    /// Concatenates vertex ranges with no edges between the parts.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let total = parts.iter().map(|g| g.n).sum();
        let mut g = Graph::empty(total);
        let mut base = 0;
        for part in parts {
            for (u, v) in part.edges() {
                g.set(base + u, base + v, true);
            }
            base += part.n;
        }
        g
    }

    /// Copy of the graph without the edge `{u, v}`; the edge must exist.
    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::Precondition(format!("{{{u},{v}}} is not an edge")));
        }
        let mut g = self.clone();
        g.set(u, v, false);
        Ok(g)
    }

    /// Copy of the graph with the edge `{u, v}` added; the pair must be a non-edge.
    pub fn add_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || self.has_edge(u, v) {
            return Err(Error::Precondition(format!(
                "{{{u},{v}}} is not a non-edge"
            )));
        }
        let mut g = self.clone();
        g.set(u, v, true);
        Ok(g)
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        g
    }

    /// Parses the edge-list text format: a header line `n m`, then `m`
    /// lines `u v` with 0-based endpoints. Blank lines and `#` comments are
    /// ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut records = text.lines().enumerate().filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        });
        let (hline, header) = records
            .next()
            .ok_or_else(|| Error::format(0, "missing header line \"n m\"").at_line(1))?;
        let (n, m) = parse_pair(header).map_err(|e| e.at_line(hline))?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in records {
            let (u, v) = parse_pair(body).map_err(|e| e.at_line(line))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parameter(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edge_count);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(Error::Parameter(format!(
                "vertex {v} out of range for order {}",
                self.n
            )));
        }
        Ok(())
    }

    pub(crate) fn set(&mut self, u: Vertex, v: Vertex, on: bool) {
        debug_assert!(u != v);
        if self.has_edge(u, v) == on {
            return;
        }
        for (a, b) in [(u, v), (v, u)] {
            let word = &mut self.bits[a * self.stride + b / 64];
            *word ^= 1 << (b % 64);
        }
        if on {
            self.edge_count += 1;
        } else {
            self.edge_count -= 1;
        }
    }
}

fn parse_pair(body: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::format(
            0,
            format!("expected two integers, got {body:?}"),
        ));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::format(0, format!("not a nonnegative integer: {s:?}")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: BTreeSet<(Vertex, Vertex)> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}
