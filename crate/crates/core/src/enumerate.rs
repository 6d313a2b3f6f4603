//! Visibility polynomial by subset enumeration.
//!
//! [`polynomial_bruteforce`] tests every subset, size by size.
//! [`polynomial_pruned`] walks the set-enumeration tree: a node is a
//! mutual-visibility set `S` and its children are `S ∪ {v}` for
//! `v > max(S)`. Non-MV children are cut with their whole subtree, which is
//! sound because the property is hereditary.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::visibility::VisibilityTester;

pub const DEFAULT_BRUTEFORCE_LIMIT: usize = 25;

/// Below this order the pruned walk stays on the calling thread.
const PARALLEL_MIN_ORDER: usize = 20;

pub fn polynomial_bruteforce(g: &Graph) -> Result<Polynomial> {
    polynomial_bruteforce_with_limit(g, DEFAULT_BRUTEFORCE_LIMIT)
}

/// Counts mutual-visibility sets of each size `k = 1..n` over all
/// `C(n, k)` subsets. `limit` may be raised up to 62.
pub fn polynomial_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<Polynomial> {
    let n = g.order();
    if n > limit.min(62) {
        return Err(Error::Guardrail {
            engine: "bruteforce",
            order: n,
            limit: limit.min(62),
            suggestion: "use the pruned or closed-form engine",
        });
    }
    let tester = VisibilityTester::new(g)?;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for (k, slot) in counts.iter_mut().enumerate().skip(1) {
        // Gosper's hack: k-subsets of 0..n in increasing numeric order.
        let mut s: u64 = (1u64 << k) - 1;
        while s < 1u64 << n {
            if tester.is_mv(s) {
                *slot += 1;
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    Ok(Polynomial::from_counts(&counts))
}

pub fn polynomial_pruned(g: &Graph) -> Result<Polynomial> {
    let tester = VisibilityTester::new(g)?;
    let mut tally = Tally::new(g.order(), false);
    walk(&tester, &mut tally);
    Ok(Polynomial::from_counts(&tally.counts))
}

/// `(k, d) -> Θ_{k,d}` for every `k >= 1`, nonzero entries only.
pub fn count_by_size_and_diameter(g: &Graph) -> Result<BTreeMap<(usize, usize), u64>> {
    Ok(census(g)?.theta)
}

/// Per-size counts and diameter classification from one pruned walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    /// `counts[k]` = number of MV sets of size `k`, trailing zeros trimmed.
    pub counts: Vec<u64>,
    pub theta: BTreeMap<(usize, usize), u64>,
}

impl Census {
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_counts(&self.counts)
    }
}

pub fn census(g: &Graph) -> Result<Census> {
    let tester = VisibilityTester::new(g)?;
    let mut tally = Tally::new(g.order(), true);
    walk(&tester, &mut tally);
    let mut counts = tally.counts;
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    let mut theta = BTreeMap::new();
    for (k, row) in tally.theta.iter().enumerate() {
        for (d, &c) in row.iter().enumerate() {
            if c > 0 {
                theta.insert((k, d), c);
            }
        }
    }
    Ok(Census { counts, theta })
}

struct Tally {
    counts: Vec<u64>,
    /// `theta[k][d]`; empty when diameters are not tracked.
    theta: Vec<Vec<u64>>,
}

impl Tally {
    fn new(n: usize, diameters: bool) -> Self {
        let mut counts = vec![0; n + 1];
        counts[0] = 1;
        let theta = if diameters {
            vec![vec![0; n.max(1)]; n + 1]
        } else {
            Vec::new()
        };
        Tally { counts, theta }
    }

    fn tracks_diameter(&self) -> bool {
        !self.theta.is_empty()
    }

    fn record(&mut self, size: usize, diameter: usize) {
        self.counts[size] += 1;
        if self.tracks_diameter() {
            self.theta[size][diameter] += 1;
        }
    }

    fn merge(&mut self, other: Tally) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        for (ra, rb) in self.theta.iter_mut().zip(other.theta) {
            for (a, b) in ra.iter_mut().zip(rb) {
                *a += b;
            }
        }
    }
}

fn walk(tester: &VisibilityTester, tally: &mut Tally) {
    let n = tester.order();
    let subtree = |v: usize, t: &mut Tally| {
        t.record(1, 0);
        descend(tester, 1u64 << v, 1, 0, t);
    };
    if n < PARALLEL_MIN_ORDER {
        for v in 0..n {
            subtree(v, tally);
        }
        return;
    }
    let track = tally.tracks_diameter();
    let parts: Vec<Tally> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut t = Tally::new(n, track);
            t.counts[0] = 0;
            subtree(v, &mut t);
            t
        })
        .collect();
    for part in parts {
        tally.merge(part);
    }
}

fn descend(tester: &VisibilityTester, set: u64, size: usize, diameter: usize, tally: &mut Tally) {
    let n = tester.order();
    let top = 63 - set.leading_zeros() as usize;
    for v in (top + 1)..n {
        let next = set | 1u64 << v;
        if !tester.is_mv(next) {
            continue;
        }
        let d = if tally.tracks_diameter() {
            diameter.max(tester.eccentricity_within(v, set))
        } else {
            0
        };
        tally.record(size + 1, d);
        descend(tester, next, size + 1, d, tally);
    }
}
