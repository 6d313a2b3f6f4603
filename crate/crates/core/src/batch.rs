//! Grouping graph6 streams by visibility polynomial.
//!
//! Records are decoded in input order, polynomials are computed on a worker
//! pool, and counts are merged into maps keyed by canonical polynomial
//! strings. All output is sorted, so reports do not depend on input order
//! or worker count.

use std::collections::BTreeMap;
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::polynomial_pruned;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, HEADER};
use crate::polynomial::Polynomial;

pub const THREADS_ENV: &str = "VISIPOLY_THREADS";

#[derive(Clone, Debug, Default)]
pub struct BatchOptions {
    /// Skip malformed records instead of aborting.
    pub skip_bad: bool,
    /// Worker count; falls back to `VISIPOLY_THREADS`, then all cores.
    pub threads: Option<usize>,
}

impl BatchOptions {
    pub fn thread_count(&self) -> usize {
        self.threads
            .or_else(|| std::env::var(THREADS_ENV).ok()?.trim().parse().ok())
            .filter(|&t| t > 0)
            .unwrap_or_else(|| {
                std::thread::available_parallelism()
                    .map(|n| n.get())
                    .unwrap_or(1)
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialGroup {
    pub polynomial: String,
    pub count: usize,
}

/// Collision statistics for the graphs of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub order: usize,
    pub total_graphs: usize,
    pub group_count: usize,
    pub max_group_size: usize,
    /// Every polynomial shared by `max_group_size` graphs, sorted.
    pub max_group_polynomials: Vec<String>,
    /// All groups, largest first, ties by polynomial string.
    pub groups: Vec<PolynomialGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchReport {
    pub orders: Vec<OrderReport>,
    /// 1-based line numbers of malformed records skipped with `skip_bad`.
    pub skipped_lines: Vec<usize>,
}

impl BatchReport {
    pub fn order(&self, n: usize) -> Option<&OrderReport> {
        self.orders.iter().find(|r| r.order == n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:>3} {:>9} {:>7} {:>5}  {}\n",
            "n", "T(n)", "groups", "M(n)", "polynomial"
        );
        for r in &self.orders {
            for (i, key) in r.max_group_polynomials.iter().enumerate() {
                let pretty = key
                    .parse::<Polynomial>()
                    .map(|p| p.pretty())
                    .unwrap_or_else(|_| key.clone());
                if i == 0 {
                    out.push_str(&format!(
                        "{:>3} {:>9} {:>7} {:>5}  {}\n",
                        r.order, r.total_graphs, r.group_count, r.max_group_size, pretty
                    ));
                } else {
                    out.push_str(&format!(
                        "{:>3} {:>9} {:>7} {:>5}  {}\n",
                        "", "", "", "", pretty
                    ));
                }
            }
        }
        if !self.skipped_lines.is_empty() {
            out.push_str(&format!(
                "skipped {} malformed records\n",
                self.skipped_lines.len()
            ));
        }
        out
    }
}

/// Reads graph6 records, one per line. Blank lines are ignored.
pub fn run_batch<R: BufRead>(reader: R, opts: &BatchOptions) -> Result<BatchReport> {
    let mut graphs = Vec::new();
    let mut skipped = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let record = line.trim();
        let record = record.strip_prefix(HEADER).unwrap_or(record);
        if record.is_empty() {
            continue;
        }
        match parse_graph6(record) {
            Ok(g) => graphs.push(g),
            Err(_) if opts.skip_bad => skipped.push(i + 1),
            Err(e) => return Err(e.at_line(i + 1)),
        }
    }
    let mut report = group_graphs(&graphs, opts)?;
    report.skipped_lines = skipped;
    Ok(report)
}

/// Groups already-decoded graphs.
pub fn group_graphs(graphs: &[Graph], opts: &BatchOptions) -> Result<BatchReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.thread_count())
        .build()
        .map_err(|e| Error::Io(format!("worker pool: {e}")))?;
    let keys: Vec<(usize, String)> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| Ok((g.order(), polynomial_pruned(g)?.to_canonical_string())))
            .collect::<Result<_>>()
    })?;
    let mut by_order: BTreeMap<usize, BTreeMap<String, usize>> = BTreeMap::new();
    for (n, key) in keys {
        *by_order.entry(n).or_default().entry(key).or_default() += 1;
    }
    let orders = by_order
        .into_iter()
        .map(|(order, groups)| summarize(order, groups))
        .collect();
    Ok(BatchReport {
        orders,
        skipped_lines: Vec::new(),
    })
}

fn summarize(order: usize, groups: BTreeMap<String, usize>) -> OrderReport {
    let total_graphs = groups.values().sum();
    let max_group_size = groups.values().copied().max().unwrap_or(0);
    let max_group_polynomials = groups
        .iter()
        .filter(|(_, &c)| c == max_group_size)
        .map(|(k, _)| k.clone())
        .collect();
    let mut groups: Vec<PolynomialGroup> = groups
        .into_iter()
        .map(|(polynomial, count)| PolynomialGroup { polynomial, count })
        .collect();
    groups.sort_by(|a, b| {
        b.count
            .cmp(&a.count)
            .then_with(|| a.polynomial.cmp(&b.polynomial))
    });
    OrderReport {
        order,
        total_graphs,
        group_count: groups.len(),
        max_group_size,
        max_group_polynomials,
        groups,
    }
}
