//! Mutual-visibility tests and per-graph statistics.
//!
//! For a source `u` of a candidate set `X`, vertices are visited in
//! nondecreasing distance from `u`. A vertex `w` is *clear* when some
//! shortest `u`-`w` path has no internal vertex in `X`: either `w = u`, or
//! `w` has a clear neighbour one layer closer that is not itself in
//! `X \ {u}`. `X` is a mutual-visibility set iff every member is clear from
//! every other member. Pairs in different components are never visible.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::distance::{all_pairs_distances, Distance, DistanceMatrix};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::MAX_ENUMERATION_ORDER;

/// Mutual-visibility test for an arbitrary vertex list, any graph order.
pub fn is_mutual_visibility_set(g: &Graph, d: &DistanceMatrix, x: &[Vertex]) -> Result<bool> {
    let n = g.order();
    if d.order() != n {
        return Err(Error::Parameter(format!(
            "distance matrix of order {} for graph of order {n}",
            d.order()
        )));
    }
    let mut in_x = vec![false; n];
    for &v in x {
        g.check_vertex(v)?;
        in_x[v] = true;
    }
    if x.len() <= 1 {
        return Ok(true);
    }
    let mut clear = vec![false; n];
    let mut by_layer: Vec<Vec<Vertex>> = Vec::new();
    for &u in x {
        let row = d.row(u);
        if x.iter().any(|&v| !row[v].is_finite()) {
            return Ok(false);
        }
        by_layer.iter_mut().for_each(Vec::clear);
        for (w, dw) in row.iter().enumerate() {
            if let Distance::Finite(l) = *dw {
                if by_layer.len() <= l {
                    by_layer.resize_with(l + 1, Vec::new);
                }
                by_layer[l].push(w);
            }
        }
        clear.iter_mut().for_each(|c| *c = false);
        clear[u] = true;
        for (l, layer) in by_layer.iter().enumerate().skip(1) {
            for &w in layer {
                clear[w] = g
                    .neighbors(w)
                    .any(|p| row[p] == Distance::Finite(l - 1) && clear[p] && (p == u || !in_x[p]));
            }
        }
        if x.iter().any(|&v| !clear[v]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Precomputed distance layers for repeated tests on one graph of order at
/// most 64; vertex sets are bit masks.
#[derive(Clone, Debug)]
pub struct VisibilityTester {
    n: usize,
    adj: Vec<u64>,
    layers: Vec<Vec<u64>>,
    reach: Vec<u64>,
}

impl VisibilityTester {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n > MAX_ENUMERATION_ORDER {
            return Err(Error::Guardrail {
                engine: "bit-mask",
                order: n,
                limit: MAX_ENUMERATION_ORDER,
                suggestion: "use a closed form",
            });
        }
        let d = all_pairs_distances(g);
        let adj = (0..n).map(|u| g.row_mask(u)).collect();
        let mut layers = Vec::with_capacity(n);
        let mut reach = Vec::with_capacity(n);
        for u in 0..n {
            let mut ls: Vec<u64> = Vec::new();
            let mut r = 0u64;
            for (w, dw) in d.row(u).iter().enumerate() {
                if let Distance::Finite(l) = *dw {
                    if ls.len() <= l {
                        ls.resize(l + 1, 0);
                    }
                    ls[l] |= 1 << w;
                    r |= 1 << w;
                }
            }
            layers.push(ls);
            reach.push(r);
        }
        Ok(VisibilityTester {
            n,
            adj,
            layers,
            reach,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Vertices at distance `l` from `u`.
    pub fn layer(&self, u: Vertex, l: usize) -> u64 {
        self.layers[u].get(l).copied().unwrap_or(0)
    }

    pub fn is_mv(&self, x: u64) -> bool {
        if x.count_ones() <= 1 {
            return true;
        }
        let mut sources = x;
        while sources != 0 {
            let u = sources.trailing_zeros() as usize;
            sources &= sources - 1;
            // Visibility is symmetric, so only later members are targets.
            let targets = sources;
            if targets == 0 {
                break;
            }
            if targets & !self.reach[u] != 0 {
                return false;
            }
            let blocked = x & !(1u64 << u);
            let mut passable = 1u64 << u;
            let mut remaining = targets;
            for layer in &self.layers[u][1..] {
                let mut frontier = 0u64;
                let mut p = passable;
                while p != 0 {
                    frontier |= self.adj[p.trailing_zeros() as usize];
                    p &= p - 1;
                }
                let clear = layer & frontier;
                let here = remaining & layer;
                if here & !clear != 0 {
                    return false;
                }
                remaining &= !layer;
                if remaining == 0 {
                    break;
                }
                passable = clear & !blocked;
                if passable == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Largest distance from `v` to a member of `set`, assuming all members
    /// are reachable from `v`.
    pub fn eccentricity_within(&self, v: Vertex, set: u64) -> usize {
        let ls = &self.layers[v];
        (0..ls.len()).rev().find(|&l| ls[l] & set != 0).unwrap_or(0)
    }
}

/// `c_k` for every `k` from 0 to the clique number; `c_0 = 1`.
pub fn clique_counts(g: &Graph) -> Vec<u64> {
    fn extend(g: &Graph, size: usize, cands: &[Vertex], out: &mut Vec<u64>) {
        for (i, &v) in cands.iter().enumerate() {
            if out.len() <= size + 1 {
                out.push(0);
            }
            out[size + 1] += 1;
            let next: Vec<Vertex> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            extend(g, size + 1, &next, out);
        }
    }
    let mut out = vec![1];
    let all: Vec<Vertex> = (0..g.order()).collect();
    extend(g, 0, &all, &mut out);
    out
}

/// Number of `k`-subsets inducing a complete subgraph.
pub fn clique_count(g: &Graph, k: usize) -> Result<u64> {
    if k > g.order() {
        return Err(Error::Parameter(format!(
            "clique size {k} exceeds order {}",
            g.order()
        )));
    }
    Ok(clique_counts(g).get(k).copied().unwrap_or(0))
}

/// `μ(K_{m,n}) = m + n - 2`, known for `m, n >= 3`.
pub fn mu_complete_bipartite(m: usize, n: usize) -> Result<usize> {
    if m < 3 || n < 3 {
        return Err(Error::Parameter(format!(
            "mu(K_{{m,n}}) = m + n - 2 needs m, n >= 3, got ({m},{n})"
        )));
    }
    Ok(m + n - 2)
}

/// μ, r_μ, Θ_{k,d} and clique counts of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisStats {
    pub order: usize,
    pub k_max: usize,
    pub mu: usize,
    pub r_mu: u64,
    /// `(k, d) -> Θ_{k,d}` for `1 <= k <= k_max`, nonzero entries only.
    pub theta: BTreeMap<(usize, usize), u64>,
    /// `k -> c_k` for `1 <= k <= k_max`.
    pub cliques: BTreeMap<usize, u64>,
}

impl VisStats {
    pub fn theta(&self, k: usize, d: usize) -> u64 {
        self.theta.get(&(k, d)).copied().unwrap_or(0)
    }

    pub fn clique(&self, k: usize) -> u64 {
        if k == 0 {
            return 1;
        }
        self.cliques.get(&k).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export {
            mu: usize,
            r_mu: u64,
            theta: Vec<[u64; 3]>,
            cliques: Vec<[u64; 2]>,
        }
        let export = Export {
            mu: self.mu,
            r_mu: self.r_mu,
            theta: self
                .theta
                .iter()
                .map(|(&(k, d), &c)| [k as u64, d as u64, c])
                .collect(),
            cliques: self.cliques.iter().map(|(&k, &c)| [k as u64, c]).collect(),
        };
        serde_json::to_value(export).expect("stats serialise")
    }
}

/// Full enumeration of mutual-visibility sets, classified by size and
/// host-graph diameter, plus clique counts, truncated at `k_max`.
pub fn compute_stats(g: &Graph, k_max: usize) -> Result<VisStats> {
    let n = g.order();
    if k_max > n {
        return Err(Error::Parameter(format!("k_max {k_max} exceeds order {n}")));
    }
    let census = enumerate::census(g)?;
    let mu = census.counts.len() - 1;
    let r_mu = *census.counts.last().expect("empty set always counted");
    let theta = census
        .theta
        .into_iter()
        .filter(|&((k, _), c)| k <= k_max && c > 0)
        .collect();
    let counts = clique_counts(g);
    let cliques = (1..=k_max)
        .map(|k| (k, counts.get(k).copied().unwrap_or(0)))
        .collect();
    Ok(VisStats {
        order: n,
        k_max,
        mu,
        r_mu,
        theta,
        cliques,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{build_class, ClassSpec};

    fn g(spec: ClassSpec) -> Graph {
        build_class(&spec).unwrap()
    }

    fn mask(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |m, &v| m | 1 << v)
    }

    fn both(graph: &Graph, x: &[usize]) -> bool {
        let d = all_pairs_distances(graph);
        let slow = is_mutual_visibility_set(graph, &d, x).unwrap();
        let fast = VisibilityTester::new(graph).unwrap().is_mv(mask(x));
        assert_eq!(slow, fast, "{x:?} on {graph:?}");
        slow
    }

    #[test]
    fn complete_graph_is_visible() {
        assert!(both(&g(ClassSpec::Complete(6)), &[0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn star_centre_blocks_leaves() {
        let s = g(ClassSpec::Star(3));
        assert!(!both(&s, &[3, 0, 1]));
        assert!(both(&s, &[0, 1, 2]));
        assert!(both(&s, &[3, 0]));
    }

    #[test]
    fn c4_three_subsets_are_visible() {
        let c4 = g(ClassSpec::Cycle(4));
        assert!(both(&c4, &[0, 1, 2]));
        assert!(both(&c4, &[1, 2, 3]));
        assert!(!both(&c4, &[0, 1, 2, 3]));
    }

    #[test]
    fn cross_component_pairs_fail() {
        let u = g(ClassSpec::DisjointUnion(vec![
            ClassSpec::Path(2),
            ClassSpec::Path(2),
        ]));
        assert!(!both(&u, &[0, 2]));
        assert!(both(&u, &[0, 1]));
        assert!(both(&u, &[3]));
        assert!(both(&u, &[]));
    }

    #[test]
    fn path_interior_blocks() {
        let p = g(ClassSpec::Path(5));
        assert!(!both(&p, &[0, 2, 4]));
        assert!(both(&p, &[0, 4]));
    }

    #[test]
    fn out_of_range_vertex() {
        let k3 = g(ClassSpec::Complete(3));
        let d = all_pairs_distances(&k3);
        assert!(matches!(
            is_mutual_visibility_set(&k3, &d, &[0, 3]),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn clique_counts_of_small_graphs() {
        let c6 = g(ClassSpec::Cycle(6));
        assert_eq!(clique_counts(&c6), vec![1, 6, 6]);
        assert_eq!(clique_count(&c6, 3).unwrap(), 0);
        assert_eq!(clique_count(&c6, 0).unwrap(), 1);
        assert!(clique_count(&c6, 7).is_err());
        let paw = g(ClassSpec::paw());
        assert_eq!(clique_count(&paw, 3).unwrap(), 1);
        assert_eq!(clique_count(&paw, 2).unwrap(), paw.edge_count() as u64);
        assert_eq!(
            clique_counts(&g(ClassSpec::Complete(5))),
            vec![1, 5, 10, 10, 5, 1]
        );
    }

    #[test]
    fn stats_of_c6_and_paw() {
        let s = compute_stats(&g(ClassSpec::Cycle(6)), 6).unwrap();
        assert_eq!(s.clique(1), 6);
        assert_eq!(s.clique(2), 6);
        assert_eq!(s.clique(3), 0);
        assert_eq!(s.theta(2, 2), 6);
        assert_eq!(s.theta(3, 2), 2);
        assert_eq!(s.theta(1, 2), 0);
        assert_eq!((s.mu, s.r_mu), (3, 14));

        let p = compute_stats(&g(ClassSpec::paw()), 4).unwrap();
        assert_eq!(p.clique(3), 1);
        assert_eq!(p.theta(3, 2), 1);
        assert_eq!(p.theta(2, 2), 2);

        let k5 = compute_stats(&g(ClassSpec::Complete(5)), 5).unwrap();
        assert_eq!((k5.mu, k5.r_mu), (5, 1));
    }

    #[test]
    fn stats_respect_k_max() {
        let s = compute_stats(&g(ClassSpec::Cycle(6)), 2).unwrap();
        assert!(s.theta.keys().all(|&(k, _)| k <= 2));
        assert_eq!(s.cliques.keys().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(s.mu, 3);
        assert!(compute_stats(&g(ClassSpec::Cycle(6)), 7).is_err());
    }

    #[test]
    fn stats_json_shape() {
        let s = compute_stats(&g(ClassSpec::Complete(2)), 2).unwrap();
        let v = s.to_json();
        assert_eq!(
            v,
            serde_json::json!({
                "mu": 2, "r_mu": 1,
                "theta": [[1, 0, 2], [2, 1, 1]],
                "cliques": [[1, 2], [2, 1]]
            })
        );
    }

    #[test]
    fn bipartite_mu() {
        assert_eq!(mu_complete_bipartite(3, 3).unwrap(), 4);
        assert_eq!(mu_complete_bipartite(3, 4).unwrap(), 5);
        assert_eq!(mu_complete_bipartite(6, 6).unwrap(), 10);
        assert!(mu_complete_bipartite(2, 5).is_err());
    }
}
