//! Closed form versus pruned versus exhaustive enumeration, per instance.

use serde::Serialize;

use crate::class::{build_class, ClassSpec};
use crate::closed_form::resolve_class;
use crate::enumerate::{polynomial_bruteforce, polynomial_pruned, DEFAULT_BRUTEFORCE_LIMIT};
use crate::error::{Error, Result};
use crate::MAX_ENUMERATION_ORDER;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyEntry {
    pub spec: String,
    pub order: usize,
    pub route: String,
    pub closed_form: String,
    pub pruned: String,
    /// Absent above the exhaustive engine's guardrail.
    pub bruteforce: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

pub fn run_verify(specs: &[ClassSpec]) -> Result<VerifyReport> {
    let mut entries = Vec::with_capacity(specs.len());
    for spec in specs {
        let g = build_class(spec)?;
        if g.order() > MAX_ENUMERATION_ORDER {
            return Err(Error::Guardrail {
                engine: "verify",
                order: g.order(),
                limit: MAX_ENUMERATION_ORDER,
                suggestion: "verification needs an enumerable instance",
            });
        }
        let (closed, route) = resolve_class(spec)?;
        let pruned = polynomial_pruned(&g)?;
        let brute = if g.order() <= DEFAULT_BRUTEFORCE_LIMIT {
            Some(polynomial_bruteforce(&g)?)
        } else {
            None
        };
        let pass = closed == pruned && brute.as_ref().is_none_or(|b| *b == pruned);
        entries.push(VerifyEntry {
            spec: spec.to_string(),
            order: g.order(),
            route: route.to_string(),
            closed_form: closed.to_canonical_string(),
            pruned: pruned.to_canonical_string(),
            bruteforce: brute.map(|b| b.to_canonical_string()),
            pass,
        });
    }
    Ok(VerifyReport { entries })
}

/// The paw joined with `C_6`.
pub fn join_example() -> ClassSpec {
    ClassSpec::join(ClassSpec::paw(), ClassSpec::Cycle(6))
}

pub fn cycle_sweep() -> Vec<ClassSpec> {
    (3..=12).map(ClassSpec::Cycle).collect()
}

/// Family instances at desk scale: complete graphs, stars, paths, cycles,
/// complete bipartite graphs, disjoint unions of these, and the worked
/// join example.
pub fn family_suite() -> Vec<ClassSpec> {
    let mut specs = Vec::new();
    specs.extend((1..=10).map(ClassSpec::Complete));
    specs.extend((0..=9).map(ClassSpec::Star));
    specs.extend((1..=12).map(ClassSpec::Path));
    specs.extend(cycle_sweep());
    for m in 3..=6 {
        for n in m..=6 {
            specs.push(ClassSpec::CompleteBipartite(m, n));
        }
    }
    specs.extend(union_suite());
    specs.push(join_example());
    specs
}

/// Disjoint unions of family instances with at most 12 vertices in total.
pub fn union_suite() -> Vec<ClassSpec> {
    use ClassSpec::*;
    let u = DisjointUnion;
    vec![
        u(vec![Path(2), Path(2)]),
        u(vec![Path(3), Path(2)]),
        u(vec![Complete(1)]),
        u(vec![Complete(1), Complete(1), Complete(1)]),
        u(vec![Cycle(5), Path(4)]),
        u(vec![Complete(4), Star(3)]),
        u(vec![Cycle(6), Cycle(6)]),
        u(vec![CompleteBipartite(3, 3), Complete(3), Path(3)]),
        u(vec![Star(5), Cycle(4), Path(2)]),
        u(vec![CompleteBipartite(3, 4), Cycle(5)]),
        u(vec![Complete(5), Complete(5), Complete(2)]),
        u(vec![Path(1), Star(0), Cycle(3), Complete(2), Path(5)]),
    ]
}
