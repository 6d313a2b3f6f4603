//! Exact polynomials with nonnegative integer coefficients.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient vector indexed by degree, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    coeffs: Vec<BigUint>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(1u32)
    }

    pub fn constant(c: impl Into<BigUint>) -> Self {
        Polynomial::new(vec![c.into()])
    }

    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_counts<T: Into<BigUint> + Copy>(counts: &[T]) -> Self {
        Polynomial::new(counts.iter().map(|&c| c.into()).collect())
    }

    /// `(1 + x)^n`.
    pub fn binomial_power(n: usize) -> Self {
        Polynomial::new(binomial_row(n))
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coefficient(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> BigUint {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) + other.coefficient(i))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Subtracts `k` from the constant term, which must be at least `k`.
    pub fn subtract_scalar(&self, k: impl Into<BigUint>) -> Result<Polynomial> {
        let k = k.into();
        let c0 = self.coefficient(0);
        if c0 < k {
            return Err(Error::Arithmetic(format!(
                "constant term {c0} is smaller than {k}"
            )));
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            return Ok(Polynomial::zero());
        }
        coeffs[0] = c0 - k;
        Ok(Polynomial::new(coeffs))
    }

    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Horner evaluation at an integer point.
    pub fn evaluate(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + BigInt::from(c.clone()))
    }

    /// `[c0,c1,...,ck]`: decimal, ascending degree, no whitespace.
    pub fn to_canonical_string(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", body.join(","))
    }

    /// Human form such as `1 + 4x + 6x^2 + 4x^3`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.is_one() && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the canonical bracketed form.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::format(0, "expected [c0,c1,...]"))?;
        if inner.is_empty() {
            return Ok(Polynomial::zero());
        }
        let mut coeffs = Vec::new();
        let mut offset = 1;
        for field in inner.split(',') {
            if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::format(offset, format!("bad coefficient {field:?}")));
            }
            coeffs.push(field.parse::<BigUint>().expect("digits"));
            offset += field.len() + 1;
        }
        let p = Polynomial::new(coeffs);
        if p.to_canonical_string() != s {
            return Err(Error::format(0, "not in canonical form"));
        }
        Ok(p)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs)
    }
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 0..n {
        let next = row[k].clone() * BigUint::from(n - k) / BigUint::from(k + 1);
        row.push(next);
    }
    row
}

/// `C(n, k)`, zero when `k > n` or `k < 0`.
pub fn binomial(n: usize, k: isize) -> BigUint {
    if k < 0 || k as usize > n {
        return BigUint::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
