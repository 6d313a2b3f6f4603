use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A shortest-path length, or the explicit marker for pairs in different
/// components. `Finite(_) < Unreachable`, so maxima propagate unreachability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Unreachable => s.serialize_none(),
        }
    }
}

/// All-pairs unweighted shortest-path distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> Distance {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[Distance] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance between any pair, `None` for graphs of order 0.
    pub fn max_finite(&self) -> Option<usize> {
        self.dist.iter().filter_map(|d| d.finite()).max()
    }
}

/// One BFS per source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![Distance::Unreachable; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = Distance::Finite(0);
        queue.clear();
        queue.push_back((s, 0));
        while let Some((u, du)) = queue.pop_front() {
            for v in g.neighbors(u) {
                if row[v] == Distance::Unreachable {
                    row[v] = Distance::Finite(du + 1);
                    queue.push_back((v, du + 1));
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}

/// `max d_G(u, v)` over pairs of `x`, measured in the host graph.
pub fn induced_diameter(d: &DistanceMatrix, x: &[Vertex]) -> Result<Distance> {
    if x.is_empty() {
        return Err(Error::Precondition(
            "diameter of an empty vertex set".into(),
        ));
    }
    if let Some(&v) = x.iter().find(|&&v| v >= d.order()) {
        return Err(Error::Parameter(format!("vertex {v} out of range")));
    }
    let mut best = Distance::Finite(0);
    for (i, &u) in x.iter().enumerate() {
        for &v in &x[i + 1..] {
            best = best.max(d.get(u, v));
        }
    }
    Ok(best)
}
