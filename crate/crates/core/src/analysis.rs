//! Single-graph polynomial computation with engine selection.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::class::ClassSpec;
use crate::closed_form::resolve_class;
use crate::enumerate::{polynomial_bruteforce, polynomial_pruned};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Closed form where one applies, pruned enumeration otherwise.
    Auto,
    Bruteforce,
    Pruned,
    /// Closed forms and composition laws only; refuses otherwise.
    ClosedForm,
}

#[derive(Clone, Debug)]
pub enum GraphSource {
    Graph(Graph),
    Class(ClassSpec),
}

impl GraphSource {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            GraphSource::Graph(g) => Ok(g.clone()),
            GraphSource::Class(spec) => crate::class::build_class(spec),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PolyReport {
    pub polynomial: Polynomial,
    pub method: String,
    pub elapsed: Duration,
}

impl PolyReport {
    /// μ(G), the degree.
    pub fn mu(&self) -> usize {
        self.polynomial.degree().max(0) as usize
    }

    /// r_μ(G), the leading coefficient.
    pub fn r_mu(&self) -> BigUint {
        self.polynomial.leading_coefficient()
    }
}

pub fn run_poly(source: &GraphSource, engine: Engine) -> Result<PolyReport> {
    let start = Instant::now();
    let (polynomial, method) = match (engine, source) {
        (Engine::Bruteforce, s) => (
            polynomial_bruteforce(&s.graph()?)?,
            "bruteforce".to_string(),
        ),
        (Engine::Pruned, s) => (polynomial_pruned(&s.graph()?)?, "pruned".to_string()),
        (Engine::Auto, GraphSource::Graph(g)) => (polynomial_pruned(g)?, "pruned".to_string()),
        (Engine::Auto, GraphSource::Class(spec)) => {
            let (p, route) = resolve_class(spec)?;
            (p, route.to_string())
        }
        (Engine::ClosedForm, GraphSource::Graph(_)) => {
            return Err(Error::Dispatch(
                "an explicit graph has no family closed form; use --engine pruned".into(),
            ))
        }
        (Engine::ClosedForm, GraphSource::Class(spec)) => {
            let (p, route) = resolve_class(spec)?;
            if route.uses_enumeration() {
                return Err(Error::Dispatch(format!(
                    "{spec} is outside every closed form's hypotheses; use --engine pruned"
                )));
            }
            (p, route.to_string())
        }
    };
    Ok(PolyReport {
        polynomial,
        method,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engines_agree_on_cycle() {
        let src = GraphSource::Class(ClassSpec::Cycle(7));
        for e in [
            Engine::Auto,
            Engine::Bruteforce,
            Engine::Pruned,
            Engine::ClosedForm,
        ] {
            let r = run_poly(&src, e).unwrap();
            assert_eq!(r.polynomial.to_canonical_string(), "[1,7,21,14]");
            assert_eq!((r.mu(), r.r_mu()), (3, BigUint::from(14u32)));
        }
    }

    #[test]
    fn closed_form_refusals() {
        let raw = GraphSource::Graph(Graph::empty(3));
        assert!(matches!(
            run_poly(&raw, Engine::ClosedForm),
            Err(Error::Dispatch(_))
        ));
        let k25 = GraphSource::Class(ClassSpec::CompleteBipartite(2, 5));
        assert!(matches!(
            run_poly(&k25, Engine::ClosedForm),
            Err(Error::Dispatch(_))
        ));
        assert!(run_poly(&k25, Engine::Auto).is_ok());
    }

    #[test]
    fn bruteforce_guardrail() {
        let big = GraphSource::Class(ClassSpec::Cycle(30));
        assert!(matches!(
            run_poly(&big, Engine::Bruteforce),
            Err(Error::Guardrail { .. })
        ));
        assert!(run_poly(&big, Engine::Auto).is_ok());
    }
}
