//! Sparse polynomials over `Q` in the free parameters of a linear solve.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{Rational, UniPoly};

/// Variable indices with positive exponents, sorted by index.
type Monomial = Vec<(usize, u32)>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out: BTreeMap<usize, u32> = a.iter().copied().collect();
    for &(v, e) in b {
        *out.entry(v).or_insert(0) += e;
    }
    out.into_iter().collect()
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(v: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![(v, 1)], Rational::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.remove(&m).unwrap_or_else(Rational::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when every parameter is zero.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|(_, e)| e).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().flatten().map(|(v, _)| *v).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(mul_monomials(ma, mb), ca * cb);
            }
        }
        out
    }

    fn pow(&self, e: u32) -> ParamPoly {
        let mut out = ParamPoly::constant(Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Replaces the variable `v` by `value`.
    pub fn substitute(&self, v: usize, value: &ParamPoly) -> ParamPoly {
        if !self.terms.keys().flatten().any(|(w, _)| *w == v) {
            return self.clone();
        }
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let e = m.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e);
            let rest: Monomial = m.iter().filter(|(w, _)| *w != v).copied().collect();
            let mut rest_poly = ParamPoly::zero();
            rest_poly.add_term(rest, c.clone());
            out = out.add(&rest_poly.mul(&value.pow(e)));
        }
        out
    }

    /// Value at a point given as `(variable, value)` pairs; missing
    /// variables are zero.
    pub fn eval(&self, point: &[(usize, Rational)]) -> Rational {
        let lookup = |v: usize| point.iter().find(|(w, _)| *w == v).map(|(_, x)| x.clone());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m {
                match lookup(v) {
                    Some(x) => t *= num_traits::pow(x, e as usize),
                    None => t = Rational::zero(),
                }
            }
            total += t;
        }
        total
    }

    /// For a polynomial of degree at most one: `(coefficients, constant)`.
    pub fn as_linear(&self) -> Option<(Vec<(usize, Rational)>, Rational)> {
        if self.total_degree() > 1 {
            return None;
        }
        let lin = self
            .terms
            .iter()
            .filter(|(m, _)| !m.is_empty())
            .map(|(m, c)| (m[0].0, c.clone()))
            .collect();
        Some((lin, self.constant_term()))
    }

    /// For a polynomial in a single variable: that variable and the
    /// polynomial as a univariate one.
    pub fn as_univariate(&self) -> Option<(usize, UniPoly)> {
        let vars = self.vars();
        if vars.len() != 1 {
            return None;
        }
        let deg = self.total_degree() as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.first().map_or(0, |(_, e)| *e) as usize;
            coeffs[e] = c.clone();
        }
        Some((vars[0], UniPoly::new(coeffs)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;

    #[test]
    fn arithmetic_and_substitution() {
        let t0 = ParamPoly::var(0);
        let t1 = ParamPoly::var(1);
        let p = t0.mul(&t1).add(&ParamPoly::constant(rat(3)));
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.vars(), vec![0, 1]);
        let q = p.substitute(1, &t0.add(&ParamPoly::constant(rat(1))));
        // t0^2 + t0 + 3
        assert_eq!(q.eval(&[(0, rat(2))]), rat(9));
        assert_eq!(q.as_univariate().unwrap().1, UniPoly::new(vec![rat(3), rat(1), rat(1)]));
        assert!(p.sub(&p).is_zero());
        let l = t0.scale(&rat(2)).sub(&ParamPoly::constant(rat(4)));
        assert_eq!(l.as_linear(), Some((vec![(0, rat(2))], rat(-4))));
    }
}
