//! Sparse bivariate polynomials over a [`NumberField`], used for local
//! computations at a point moved to the origin.

use std::collections::BTreeMap;

use super::kpoly::KPoly;
use super::numfield::NumberField;
use crate::poly::{BiPoly, Rational, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPoly {
    /// `(i, j) -> coefficient of x^i y^j`, zero coefficients never stored.
    terms: BTreeMap<(u32, u32), UniPoly>,
}

impl LocalPoly {
    pub fn zero() -> Self {
        LocalPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(c: UniPoly, i: u32, j: u32) -> Self {
        let mut p = LocalPoly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_bipoly(f: &BiPoly) -> Self {
        let mut p = LocalPoly::zero();
        for (e, c) in f.terms() {
            p.add_term(e.x, e.y, UniPoly::constant(c.clone()));
        }
        p
    }

    /// `f(x + a, y + b)` for `a, b` in `k`.
    pub fn translated(k: &NumberField, f: &BiPoly, a: &UniPoly, b: &UniPoly) -> Self {
        let dx = f.deg_x().max(0) as usize;
        let dy = f.deg_y().max(0) as usize;
        let xs = binomial_powers(k, a, dx);
        let ys = binomial_powers(k, b, dy);
        let mut p = LocalPoly::zero();
        for (e, c) in f.terms() {
            for (i, ci) in xs[e.x as usize].iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                let cc = k.mul(ci, &UniPoly::constant(c.clone()));
                for (j, cj) in ys[e.y as usize].iter().enumerate() {
                    if cj.is_zero() {
                        continue;
                    }
                    p.add_term(i as u32, j as u32, k.mul(&cc, cj));
                }
            }
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: UniPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(UniPoly::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &UniPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> UniPoly {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> UniPoly {
        self.coeff(0, 0)
    }

    /// Lowest total degree of a term (the multiplicity at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn lowest_form(&self) -> LocalPoly {
        let Some(d) = self.order() else {
            return LocalPoly::zero();
        };
        LocalPoly {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// The restriction `p(x, 0)`.
    pub fn x_axis(&self) -> KPoly {
        let deg = self.terms.keys().filter(|(_, j)| *j == 0).map(|(i, _)| *i).max();
        match deg {
            None => KPoly::zero(),
            Some(d) => KPoly::new((0..=d).map(|i| self.coeff(i, 0)).collect()),
        }
    }

    /// The restriction `p(0, y)`.
    pub fn y_axis(&self) -> KPoly {
        self.swapped().x_axis()
    }

    pub fn swapped(&self) -> LocalPoly {
        LocalPoly {
            terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect(),
        }
    }

    /// Largest powers `(a, b)` of `x` and `y` dividing the polynomial.
    pub fn monomial_content(&self) -> (u32, u32) {
        let a = self.terms.keys().map(|(i, _)| *i).min().unwrap_or(0);
        let b = self.terms.keys().map(|(_, j)| *j).min().unwrap_or(0);
        (a, b)
    }

    /// Divides by `x^a y^b`, which must divide exactly.
    pub fn div_monomial(&self, a: u32, b: u32) -> LocalPoly {
        LocalPoly {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| {
                    assert!(*i >= a && *j >= b, "monomial does not divide");
                    ((i - a, j - b), c.clone())
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, a: u32, b: u32) -> LocalPoly {
        LocalPoly {
            terms: self.terms.iter().map(|((i, j), c)| ((i + a, j + b), c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &NumberField, c: &UniPoly) -> LocalPoly {
        let mut p = LocalPoly::zero();
        for (&(i, j), a) in &self.terms {
            p.add_term(i, j, k.mul(a, c));
        }
        p
    }

    pub fn sub(&self, other: &LocalPoly) -> LocalPoly {
        let mut p = self.clone();
        for (&(i, j), c) in &other.terms {
            p.add_term(i, j, -c);
        }
        p
    }

    pub fn add(&self, other: &LocalPoly) -> LocalPoly {
        let mut p = self.clone();
        for (&(i, j), c) in &other.terms {
            p.add_term(i, j, c.clone());
        }
        p
    }

    pub fn mul(&self, k: &NumberField, other: &LocalPoly) -> LocalPoly {
        let mut p = LocalPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(u, v), b) in &other.terms {
                p.add_term(i + u, j + v, k.mul(a, b));
            }
        }
        p
    }

    pub fn partial_y(&self) -> LocalPoly {
        let mut p = LocalPoly::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                p.add_term(i, j - 1, c.scale(&Rational::from_integer(j.into())));
            }
        }
        p
    }

    pub fn partial_x(&self) -> LocalPoly {
        self.swapped().partial_y().swapped()
    }

    /// Value at a point of `k^2`.
    pub fn eval(&self, k: &NumberField, x: &UniPoly, y: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (&(i, j), c) in &self.terms {
            let t = k.mul(&k.mul(c, &k.pow(x, i as i64)), &k.pow(y, j as i64));
            acc = &acc + &t;
        }
        acc
    }
}

/// Coefficient lists of `(t + a)^e` for `e = 0..=n`.
fn binomial_powers(k: &NumberField, a: &UniPoly, n: usize) -> Vec<Vec<UniPoly>> {
    let mut out = vec![vec![UniPoly::one()]];
    for e in 1..=n {
        let prev = &out[e - 1];
        let mut next = vec![UniPoly::zero(); e + 1];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] + &k.mul(c, a);
        }
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::poly::rational::rat;

    #[test]
    fn translation_matches_bipoly() {
        let k = NumberField::rationals();
        let f = parse_poly("x^2*y - 3*y^2 + x").unwrap();
        let a = UniPoly::constant(rat(2));
        let b = UniPoly::constant(rat(-1));
        let got = LocalPoly::translated(&k, &f, &a, &b);
        assert_eq!(got, LocalPoly::from_bipoly(&f.translate(&rat(2), &rat(-1))));
    }

    #[test]
    fn translation_to_conjugate_point() {
        let k = NumberField::from_minpoly(&UniPoly::from_ints(&[1, 0, 1]));
        let i = k.generator();
        let f = parse_poly("x^2 + y^2").unwrap();
        // At (i, 1) the curve passes through the point.
        let g = LocalPoly::translated(&k, &f, &i, &UniPoly::one());
        assert!(g.constant_term().is_zero());
        assert_eq!(g.order(), Some(1));
        assert_eq!(g.coeff(1, 0), i.scale(&rat(2)));
    }
}
