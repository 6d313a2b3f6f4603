//! Closed-form visibility polynomials and composition laws.
//!
//! Every formula is applied only inside the hypotheses it was proved under;
//! outside them [`poly_for_class`] builds the graph and enumerates.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::class::{build_class, ClassSpec};
use crate::enumerate::polynomial_pruned;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::{binomial, Polynomial};
use crate::visibility::{compute_stats, VisStats};

/// `1 + n x + C(n,2) x^2`.
pub fn poly_path(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::Parameter("path needs n >= 1".into()));
    }
    Ok(Polynomial::new(vec![
        BigUint::from(1u32),
        BigUint::from(n),
        binomial(n, 2),
    ]))
}

/// `(1 + x)^n`.
pub fn poly_complete(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::Parameter("complete graph needs n >= 1".into()));
    }
    Ok(Polynomial::binomial_power(n))
}

/// `x + n x^2 + (1 + x)^n` for the star with `n` leaves. Also exact for the
/// degenerate stars `K_1` (n = 0) and `K_2` (n = 1).
pub fn poly_star(n: usize) -> Polynomial {
    let mut c = Polynomial::binomial_power(n).coeffs().to_vec();
    c.resize(c.len().max(3), BigUint::zero());
    c[1] += 1u32;
    c[2] += BigUint::from(n);
    Polynomial::new(c)
}

/// Number of maximum mutual-visibility sets of `C_n`: `n(n^2-1)/24` for odd
/// `n`, `(n-2)n(n+8)/24` for even `n`.
pub fn r_mu_cycle(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    let big = BigUint::from(n);
    let num = if n % 2 == 1 {
        &big * (&big * &big - 1u32)
    } else {
        (&big - 2u32) * &big * (&big + 8u32)
    };
    Ok(num / 24u32)
}

pub fn poly_cycle(n: usize) -> Result<Polynomial> {
    let r3 = r_mu_cycle(n)?;
    Ok(Polynomial::new(vec![
        BigUint::from(1u32),
        BigUint::from(n),
        binomial(n, 2),
        r3,
    ]))
}

/// `K_{m,n}` for `min(m, n) >= 3`; the parts may be given in either order.
pub fn poly_complete_bipartite(m: usize, n: usize) -> Result<Polynomial> {
    let (m, n) = (m.min(n), m.max(n));
    if m < 3 {
        return Err(Error::Dispatch(format!(
            "K_{{{m},{n}}} is outside m, n >= 3; use the star formula for m = 1 or enumeration for m = 2"
        )));
    }
    let total = m + n;
    let coeffs = (0..=total - 2)
        .map(|i| {
            let mut r = binomial(total, i as isize);
            if i >= m + 2 {
                r -= binomial(n, i as isize - m as isize);
            }
            if i >= n + 2 {
                r -= binomial(m, i as isize - n as isize);
            }
            r
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// `K_{n,n}`, via the general bipartite routine.
pub fn poly_balanced_bipartite(n: usize) -> Result<Polynomial> {
    poly_complete_bipartite(n, n)
}

/// `V(G_1) + ... + V(G_m) - (m - 1)`.
pub fn poly_disconnected(polys: &[Polynomial]) -> Result<Polynomial> {
    let Some((first, rest)) = polys.split_first() else {
        return Err(Error::Parameter("disjoint union of no graphs".into()));
    };
    let sum = rest.iter().fold(first.clone(), |acc, p| acc.add(p));
    sum.subtract_scalar(BigUint::from(rest.len()))
}

/// One side of a join together with its visibility statistics.
#[derive(Clone, Debug)]
pub struct JoinOperand {
    order: usize,
    complete: bool,
    stats: VisStats,
}

impl JoinOperand {
    pub fn new(g: &Graph) -> Result<Self> {
        let stats = compute_stats(g, g.order())?;
        Ok(JoinOperand {
            order: g.order(),
            complete: g.is_complete(),
            stats,
        })
    }

    /// Accepts precomputed stats after checking they describe `g`.
    pub fn with_stats(g: &Graph, stats: VisStats) -> Result<Self> {
        let n = g.order();
        let consistent = stats.order == n
            && stats.k_max + 1 >= n
            && (n == 0 || stats.clique(1) == n as u64)
            && (n < 2 || stats.clique(2) == g.edge_count() as u64)
            && stats.theta.keys().all(|&(k, _)| k <= n);
        if !consistent {
            return Err(Error::Precondition(
                "statistics do not match the operand graph".into(),
            ));
        }
        Ok(JoinOperand {
            order: n,
            complete: g.is_complete(),
            stats,
        })
    }

    pub fn stats(&self) -> &VisStats {
        &self.stats
    }

    /// `c_k + Θ_{k,2}`: the number of `B` that keep the other side's full
    /// vertex set plus `B` mutually visible.
    fn completions(&self, k: usize) -> BigUint {
        BigUint::from(self.stats.clique(k)) + BigUint::from(self.stats.theta(k, 2))
    }
}

/// `V(G ∨ H)` for two non-complete operands of order at least 2, from their
/// clique counts and diameter-2 MV counts.
pub fn poly_join_formula(g: &JoinOperand, h: &JoinOperand) -> Result<Polynomial> {
    let (g, h) = if g.order <= h.order { (g, h) } else { (h, g) };
    if g.complete || h.complete {
        return Err(Error::Dispatch(
            "join formula needs two non-complete graphs; enumerate the join instead".into(),
        ));
    }
    if g.order < 2 {
        return Err(Error::Dispatch(
            "join formula needs operands of order >= 2; enumerate the join instead".into(),
        ));
    }
    let (m, n) = (g.order, h.order);
    let mixed = |i: usize, from: usize| -> BigUint {
        (from..m)
            .map(|k| binomial(m, k as isize) * binomial(n, i as isize - k as isize))
            .sum()
    };
    let coeffs = (0..m + n)
        .map(|i| {
            if i <= m {
                binomial(m + n, i as isize)
            } else if i <= n {
                mixed(i, 0) + h.completions(i - m)
            } else {
                mixed(i, i - n + 1) + h.completions(i - m) + g.completions(i - n)
            }
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// Which evaluator produced a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    Path,
    Complete,
    Star,
    Cycle,
    CompleteBipartite,
    DisjointUnion(Vec<Route>),
    JoinProduct,
    JoinFormula,
    Enumeration,
}

impl Route {
    /// True if any part of the result came from enumeration.
    pub fn uses_enumeration(&self) -> bool {
        match self {
            Route::Enumeration => true,
            Route::DisjointUnion(parts) => parts.iter().any(Route::uses_enumeration),
            _ => false,
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Path => f.write_str("path formula"),
            Route::Complete => f.write_str("complete formula"),
            Route::Star => f.write_str("star formula"),
            Route::Cycle => f.write_str("cycle formula"),
            Route::CompleteBipartite => f.write_str("complete bipartite formula"),
            Route::DisjointUnion(parts) => {
                let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "union law [{}]", inner.join("; "))
            }
            Route::JoinProduct => f.write_str("complete join product"),
            Route::JoinFormula => f.write_str("join formula"),
            Route::Enumeration => f.write_str("enumeration"),
        }
    }
}

/// `V(G ∨ H)`: product law for two complete graphs, the clique/Θ formula for
/// two non-complete graphs, enumeration of the built join otherwise.
pub fn poly_join(g: &Graph, h: &Graph) -> Result<Polynomial> {
    Ok(join_traced(g, h)?.0)
}

fn join_traced(g: &Graph, h: &Graph) -> Result<(Polynomial, Route)> {
    if g.is_complete() && h.is_complete() {
        let p =
            Polynomial::binomial_power(g.order()).multiply(&Polynomial::binomial_power(h.order()));
        return Ok((p, Route::JoinProduct));
    }
    if !g.is_complete() && !h.is_complete() {
        let p = poly_join_formula(&JoinOperand::new(g)?, &JoinOperand::new(h)?)?;
        return Ok((p, Route::JoinFormula));
    }
    Ok((polynomial_pruned(&g.join(h))?, Route::Enumeration))
}

/// The true visibility polynomial of a family instance.
pub fn poly_for_class(spec: &ClassSpec) -> Result<Polynomial> {
    Ok(resolve_class(spec)?.0)
}

/// Like [`poly_for_class`], also reporting the evaluator used.
pub fn resolve_class(spec: &ClassSpec) -> Result<(Polynomial, Route)> {
    spec.validate()?;
    Ok(match spec {
        ClassSpec::Path(n) => (poly_path(*n)?, Route::Path),
        ClassSpec::Complete(n) => (poly_complete(*n)?, Route::Complete),
        ClassSpec::Star(n) => (poly_star(*n), Route::Star),
        ClassSpec::Cycle(n) => (poly_cycle(*n)?, Route::Cycle),
        ClassSpec::CompleteBipartite(m, n) => match (*m).min(*n) {
            1 => (poly_star((*m).max(*n)), Route::Star),
            2 => enumerate_spec(spec)?,
            _ => (poly_complete_bipartite(*m, *n)?, Route::CompleteBipartite),
        },
        ClassSpec::DisjointUnion(parts) => {
            let (polys, routes): (Vec<_>, Vec<_>) = parts
                .iter()
                .map(resolve_class)
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .unzip();
            (poly_disconnected(&polys)?, Route::DisjointUnion(routes))
        }
        ClassSpec::Join(a, b) => join_traced(&build_class(a)?, &build_class(b)?)?,
        ClassSpec::Raw(_) => enumerate_spec(spec)?,
    })
}

fn enumerate_spec(spec: &ClassSpec) -> Result<(Polynomial, Route)> {
    Ok((polynomial_pruned(&build_class(spec)?)?, Route::Enumeration))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[u64]) -> Polynomial {
        Polynomial::from_counts(c)
    }

    #[test]
    fn paths() {
        assert_eq!(poly_path(2).unwrap(), poly(&[1, 2, 1]));
        assert_eq!(poly_path(6).unwrap(), poly(&[1, 6, 15]));
        assert_eq!(poly_path(1).unwrap(), poly(&[1, 1]));
        assert!(poly_path(0).is_err());
    }

    #[test]
    fn complete() {
        assert_eq!(poly_complete(4).unwrap(), poly(&[1, 4, 6, 4, 1]));
        assert_eq!(poly_complete(1).unwrap(), poly(&[1, 1]));
        assert!(poly_complete(0).is_err());
    }

    #[test]
    fn stars() {
        assert_eq!(poly_star(3), poly(&[1, 4, 6, 1]));
        assert_eq!(poly_star(4), poly(&[1, 5, 10, 4, 1]));
        assert_eq!(poly_star(0), poly(&[1, 1]));
        assert_eq!(poly_star(1), poly(&[1, 2, 1]));
        assert_eq!(poly_star(5), poly(&[1, 6, 15, 10, 5, 1]));
    }

    #[test]
    fn cycles() {
        let r = |n| r_mu_cycle(n).unwrap();
        assert_eq!(r(5), BigUint::from(5u32));
        assert_eq!(r(6), BigUint::from(14u32));
        assert_eq!(r(7), BigUint::from(14u32));
        assert_eq!(r(4), BigUint::from(4u32));
        assert_eq!(poly_cycle(3).unwrap(), poly_complete(3).unwrap());
        assert!(poly_cycle(2).is_err());
    }

    #[test]
    fn complete_bipartite() {
        assert_eq!(
            poly_complete_bipartite(3, 3).unwrap(),
            poly(&[1, 6, 15, 20, 15])
        );
        assert_eq!(
            poly_complete_bipartite(3, 4).unwrap(),
            poly(&[1, 7, 21, 35, 35, 15])
        );
        assert_eq!(poly_complete_bipartite(4, 3), poly_complete_bipartite(3, 4));
        assert_eq!(poly_complete_bipartite(3, 3).unwrap().degree(), 4);
        assert!(matches!(
            poly_complete_bipartite(2, 5),
            Err(Error::Dispatch(_))
        ));
    }

    #[test]
    fn unions() {
        let p2 = poly_path(2).unwrap();
        assert_eq!(
            poly_disconnected(&[p2.clone(), p2.clone()]).unwrap(),
            poly(&[1, 4, 2])
        );
        assert_eq!(poly_disconnected(std::slice::from_ref(&p2)).unwrap(), p2);
        let p3 = poly_path(3).unwrap();
        assert_eq!(poly_disconnected(&[p3, p2]).unwrap(), poly(&[1, 5, 4]));
        assert!(poly_disconnected(&[]).is_err());
    }

    #[test]
    fn join_worked_example() {
        let paw = build_class(&ClassSpec::paw()).unwrap();
        let c6 = build_class(&ClassSpec::Cycle(6)).unwrap();
        let p = poly_join(&paw, &c6).unwrap();
        for i in 0..=4 {
            assert_eq!(p.coefficient(i), binomial(10, i as isize));
        }
        let tail: Vec<BigUint> = (5..=9).map(|i| p.coefficient(i)).collect();
        let want: Vec<BigUint> = [252u32, 207, 102, 30, 2].map(BigUint::from).to_vec();
        assert_eq!(tail, want);
        assert_eq!(p.degree(), 9);
        // operand order does not matter
        assert_eq!(poly_join(&c6, &paw).unwrap(), p);
    }

    #[test]
    fn join_of_complete_graphs() {
        let k3 = build_class(&ClassSpec::Complete(3)).unwrap();
        let k2 = build_class(&ClassSpec::Complete(2)).unwrap();
        assert_eq!(poly_join(&k3, &k2).unwrap(), Polynomial::binomial_power(5));
    }

    #[test]
    fn join_formula_rejects_complete_operands() {
        let k3 = build_class(&ClassSpec::Complete(3)).unwrap();
        let p3 = build_class(&ClassSpec::Path(3)).unwrap();
        let a = JoinOperand::new(&k3).unwrap();
        let b = JoinOperand::new(&p3).unwrap();
        assert!(matches!(poly_join_formula(&a, &b), Err(Error::Dispatch(_))));
        // falls back to enumeration instead
        let (_, route) =
            resolve_class(&ClassSpec::join(ClassSpec::Complete(3), ClassSpec::Path(3))).unwrap();
        assert_eq!(route, Route::Enumeration);
    }

    #[test]
    fn verified_stats_bypass() {
        let c6 = build_class(&ClassSpec::Cycle(6)).unwrap();
        let paw = build_class(&ClassSpec::paw()).unwrap();
        let s = compute_stats(&c6, 6).unwrap();
        assert!(JoinOperand::with_stats(&c6, s.clone()).is_ok());
        assert!(JoinOperand::with_stats(&paw, s).is_err());
        let short = compute_stats(&c6, 3).unwrap();
        assert!(JoinOperand::with_stats(&c6, short).is_err());
    }

    #[test]
    fn dispatch_routes() {
        assert_eq!(resolve_class(&ClassSpec::Cycle(9)).unwrap().1, Route::Cycle);
        let (p, route) = resolve_class(&ClassSpec::CompleteBipartite(2, 5)).unwrap();
        assert_eq!(route, Route::Enumeration);
        assert_eq!(
            p,
            polynomial_pruned(&build_class(&ClassSpec::CompleteBipartite(2, 5)).unwrap()).unwrap()
        );
        assert_eq!(
            resolve_class(&ClassSpec::CompleteBipartite(1, 4))
                .unwrap()
                .1,
            Route::Star
        );
        let (p, route) = resolve_class(&ClassSpec::DisjointUnion(vec![
            ClassSpec::Path(3),
            ClassSpec::Path(2),
        ]))
        .unwrap();
        assert_eq!(route, Route::DisjointUnion(vec![Route::Path, Route::Path]));
        assert_eq!(p, poly(&[1, 5, 4]));
    }
}
