//! Reference implementations shared by the integration tests. Nothing here
//! calls into the library's distance or visibility code.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use visipoly::{parse_graph6, Graph, Polynomial};

/// Floyd–Warshall over the adjacency relation; `None` is unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
        for v in g.neighbors(u) {
            row[v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Every shortest `u`-`v` path, as full vertex sequences.
pub fn all_shortest_paths(
    g: &Graph,
    d: &[Vec<Option<usize>>],
    u: usize,
    v: usize,
) -> Vec<Vec<usize>> {
    let Some(len) = d[u][v] else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut path = vec![u];
    extend(g, d, v, len, &mut path, &mut out);
    out
}

fn extend(
    g: &Graph,
    d: &[Vec<Option<usize>>],
    target: usize,
    len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let cur = *path.last().unwrap();
    if cur == target {
        out.push(path.clone());
        return;
    }
    let left = len - (path.len() - 1);
    for w in 0..g.order() {
        if g.has_edge(cur, w) && d[w][target] == Some(left - 1) {
            path.push(w);
            extend(g, d, target, len, path, out);
            path.pop();
        }
    }
}

pub fn oracle_is_mv(g: &Graph, d: &[Vec<Option<usize>>], x: &[usize]) -> bool {
    for (i, &u) in x.iter().enumerate() {
        for &v in &x[i + 1..] {
            let visible = all_shortest_paths(g, d, u, v)
                .iter()
                .any(|p| p[1..p.len() - 1].iter().all(|w| !x.contains(w)));
            if !visible {
                return false;
            }
        }
    }
    true
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// `r_i` for every `i`, by testing all `2^n` subsets with the oracle.
pub fn oracle_counts(g: &Graph) -> Vec<u64> {
    let n = g.order();
    assert!(n <= 16, "oracle is exponential");
    let d = floyd(g);
    let mut r = vec![0u64; n + 1];
    for mask in 0u64..1 << n {
        let x = members(mask);
        if oracle_is_mv(g, &d, &x) {
            r[x.len()] += 1;
        }
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

pub fn oracle_polynomial(g: &Graph) -> Polynomial {
    Polynomial::from_counts(&oracle_counts(g))
}

pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Orders `1..=max_n`, densities from sparse (often disconnected) to
/// nearly complete.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    const DENSITIES: [f64; 6] = [0.15, 0.3, 0.45, 0.6, 0.75, 0.9];
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_n);
            gnp(&mut rng, n, DENSITIES[i % DENSITIES.len()])
        })
        .collect()
}

pub fn corpus_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(format!("connected_n{n}.g6"))
}

pub fn corpus_lines(n: usize) -> Vec<String> {
    let path = corpus_path(n);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

pub fn corpus(n: usize) -> Vec<Graph> {
    corpus_lines(n)
        .iter()
        .map(|l| parse_graph6(l).unwrap())
        .collect()
}

/// Brute-force isomorphism test by trying every vertex permutation.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
