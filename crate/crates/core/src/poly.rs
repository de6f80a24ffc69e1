//! Sparse multivariate polynomials over exact rationals.
//!
//! Exponent keys are trailing-zero trimmed, so a polynomial does not fix the
//! number of ambient variables; `x₁·x₂` is the same value in any dimension
//! that contains both variables. This keeps `zero`/`one` nullary and lets the
//! form layer own the ambient dimension.

use crate::scalar::{Rational, Scalar};
use num::traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector with trailing zeros trimmed.
type Exponents = Vec<u32>;

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Polynomial { terms }
    }

    pub fn from_int(v: i64) -> Self {
        Polynomial::constant(Rational::from_integer(v.into()))
    }

    /// The coordinate variable `x_j` (1-based).
    pub fn var(j: usize) -> Self {
        assert!(j >= 1, "variables are 1-based");
        let mut exps = vec![0; j];
        exps[j - 1] = 1;
        Polynomial::monomial(exps, Rational::one())
    }

    /// A single monomial `c · x^α`.
    pub fn monomial(exponents: Vec<u32>, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(trim(exponents), coeff);
        }
        Polynomial { terms }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest variable index actually used (1-based); 0 for constants.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Exponents, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, coeff);
            }
            Some(existing) => {
                let sum = existing + coeff;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
        }
    }

    /// Exact partial derivative with respect to `x_j` (1-based).
    pub fn partial(&self, j: usize) -> Polynomial {
        assert!(j >= 1, "variables are 1-based");
        let mut out = Polynomial::zero();
        for (exps, coeff) in &self.terms {
            if exps.len() < j || exps[j - 1] == 0 {
                continue;
            }
            let e = exps[j - 1];
            let mut reduced = exps.clone();
            reduced[j - 1] -= 1;
            out.add_term(trim(reduced), coeff * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        let mut out = Polynomial::zero();
        for (exps, coeff) in &self.terms {
            out.add_term(exps.clone(), coeff * factor);
        }
        out
    }

    /// Substitute `x_{j+1} := images[j]`, expanding exactly. Every variable
    /// occurring in `self` must have an image.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert!(
            self.max_var() <= images.len(),
            "substitution images missing for some variables"
        );
        // Cache successive powers of each image.
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(), p.clone()]).collect();
        let mut out = Polynomial::zero();
        for (exps, coeff) in &self.terms {
            let mut prod = Polynomial::constant(coeff.clone());
            for (var, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[var];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().clone() * cache[1].clone();
                    cache.push(next);
                }
                prod = prod * cache[e as usize].clone();
            }
            out = out + prod;
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (var, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[var];
                }
            }
            acc += term;
        }
        acc
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        let mut out = self;
        for (exps, coeff) in rhs.terms {
            out.add_term(exps, coeff);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let len = ea.len().max(eb.len());
                let mut exps = vec![0u32; len];
                for (i, e) in ea.iter().enumerate() {
                    exps[i] += e;
                }
                for (i, e) in eb.iter().enumerate() {
                    exps[i] += e;
                }
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::constant(Rational::one())
    }
}

impl Scalar for Polynomial {
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (exps, coeff)) in self.terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}")?;
            for (var, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "·x{}", var + 1)?,
                    _ => write!(f, "·x{}^{}", var + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn arithmetic_is_exact() {
        let x1 = Polynomial::var(1);
        let x2 = Polynomial::var(2);
        let p = (x1.clone() + x2.clone()) * (x1.clone() - x2.clone());
        let expect = x1.clone() * x1.clone() - x2.clone() * x2.clone();
        assert_eq!(p, expect);
        assert!((p.clone() - expect).is_zero());
    }

    #[test]
    fn partial_derivative() {
        // ∂₁(x₁²x₂) = 2x₁x₂, ∂₂(x₁²x₂) = x₁², ∂₃ = 0
        let p = Polynomial::var(1) * Polynomial::var(1) * Polynomial::var(2);
        let xy = Polynomial::var(1) * Polynomial::var(2);
        assert_eq!(p.partial(1), xy.scale(&rat(2, 1)));
        assert_eq!(p.partial(2), Polynomial::var(1) * Polynomial::var(1));
        assert!(p.partial(3).is_zero());
    }

    #[test]
    fn trailing_zero_canonicalization() {
        let a = Polynomial::monomial(vec![1, 0, 0], rat(2, 1));
        let b = Polynomial::monomial(vec![1], rat(2, 1));
        assert_eq!(a, b);
    }

    #[test]
    fn substitution_composes() {
        // p(x) = x₁², x₁ := x₁ + x₂ → (x₁+x₂)²
        let p = Polynomial::var(1) * Polynomial::var(1);
        let image = Polynomial::var(1) + Polynomial::var(2);
        let got = p.substitute(&[image.clone(), Polynomial::var(2)]);
        assert_eq!(got, image.clone() * image);
    }

    #[test]
    fn eval_matches_hand_computation() {
        // (1/2)x₁x₂² at (2, 3) = 9
        let p = Polynomial::monomial(vec![1, 2], rat(1, 2));
        assert_eq!(p.eval(&[rat(2, 1), rat(3, 1)]), rat(9, 1));
    }
}
