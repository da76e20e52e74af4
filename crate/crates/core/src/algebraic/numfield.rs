//! Simple algebraic extensions `Q[t]/(q)` of the rationals.
//!
//! Elements are [`UniPoly`] values in the generator `t`, kept reduced below
//! the degree of the modulus. The field object supplies the arithmetic.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::linalg;
use crate::poly::rational::to_f64;
use crate::poly::{Rational, UniPoly};

use super::approx::complex_roots;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    /// Monic irreducible modulus of degree at least 2, or `None` for `Q`.
    modulus: Option<UniPoly>,
}

impl NumberField {
    pub fn rationals() -> Self {
        NumberField { modulus: None }
    }

    /// The field generated by a root of `q`, which must be irreducible over
    /// `Q`. A linear `q` gives `Q` itself.
    pub fn from_minpoly(q: &UniPoly) -> Self {
        assert!(q.degree() >= 1, "modulus must be nonconstant");
        if q.degree() == 1 {
            NumberField::rationals()
        } else {
            NumberField {
                modulus: Some(q.monic()),
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.modulus.is_none()
    }

    pub fn modulus(&self) -> Option<&UniPoly> {
        self.modulus.as_ref()
    }

    pub fn degree(&self) -> usize {
        self.modulus.as_ref().map_or(1, UniPoly::deg)
    }

    pub fn reduce(&self, a: UniPoly) -> UniPoly {
        match &self.modulus {
            Some(q) if a.degree() >= q.degree() => a.rem(q),
            _ => a,
        }
    }

    pub fn constant(&self, c: Rational) -> UniPoly {
        UniPoly::constant(c)
    }

    /// The generator `t`; for `Q` this is not meaningful and panics.
    pub fn generator(&self) -> UniPoly {
        assert!(!self.is_rational(), "Q has no generator");
        self.reduce(UniPoly::var())
    }

    pub fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a + b
    }

    pub fn sub(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a - b
    }

    pub fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.reduce(a * b)
    }

    pub fn scale(&self, a: &UniPoly, c: &Rational) -> UniPoly {
        a.scale(c)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &UniPoly) -> UniPoly {
        assert!(!a.is_zero(), "inverse of zero");
        match &self.modulus {
            None => UniPoly::constant(a.coeff(0).recip()),
            Some(q) => {
                let (g, s, _) = a.ext_gcd(q);
                debug_assert!(g.is_constant());
                self.reduce(s.scale(&g.coeff(0).recip()))
            }
        }
    }

    pub fn div(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.mul(a, &self.inv(b))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, a: &UniPoly, e: i64) -> UniPoly {
        let base = if e < 0 { self.inv(a) } else { a.clone() };
        let mut acc = UniPoly::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            k >>= 1;
        }
        acc
    }

    pub fn as_rational(&self, a: &UniPoly) -> Option<Rational> {
        a.is_constant().then(|| a.coeff(0))
    }

    fn coords(&self, a: &UniPoly) -> Vec<Rational> {
        (0..self.degree()).map(|i| a.coeff(i)).collect()
    }

    /// Powers `1, a, ..., a^d` as coordinate vectors.
    fn power_matrix(&self, a: &UniPoly) -> Vec<Vec<Rational>> {
        let d = self.degree();
        let mut cols = Vec::with_capacity(d + 1);
        let mut p = UniPoly::one();
        for _ in 0..=d {
            cols.push(self.coords(&p));
            p = self.mul(&p, a);
        }
        cols
    }

    /// Monic minimal polynomial of `a` over `Q`.
    pub fn minimal_polynomial(&self, a: &UniPoly) -> UniPoly {
        let cols = self.power_matrix(a);
        let d = self.degree();
        for k in 1..=d {
            // Find c with sum_{i<k} c_i a^i = -a^k.
            let mat: Vec<Vec<Rational>> = (0..d)
                .map(|r| (0..k).map(|i| cols[i][r].clone()).collect())
                .collect();
            let rhs: Vec<Rational> = (0..d).map(|r| -cols[k][r].clone()).collect();
            if let Some(c) = linalg::solve(&mat, &rhs, k) {
                let mut coeffs = c;
                coeffs.push(Rational::one());
                return UniPoly::new(coeffs);
            }
        }
        unreachable!("an element of a degree d field has a minimal polynomial of degree at most d")
    }

    /// Writes `b` as a polynomial in `a`, when `a` generates the field.
    pub fn express_in(&self, a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
        let d = self.degree();
        let cols = self.power_matrix(a);
        let mat: Vec<Vec<Rational>> = (0..d)
            .map(|r| (0..d).map(|i| cols[i][r].clone()).collect())
            .collect();
        if linalg::rref(&mat, d).rank() < d {
            return None;
        }
        linalg::solve(&mat, &self.coords(b), d).map(UniPoly::new)
    }

    /// Floating approximations of the conjugate embeddings of the generator,
    /// not certified. `Q` yields a single embedding at 0.
    pub fn approx_embeddings(&self) -> Vec<Complex64> {
        match &self.modulus {
            None => vec![Complex64::zero()],
            Some(q) => complex_roots(q),
        }
    }

    /// Value of `a` under the embedding sending the generator to `root`.
    pub fn approx_eval(&self, a: &UniPoly, root: Complex64) -> Complex64 {
        a.coeffs()
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * root + to_f64(c))
    }

    /// Displays an element in terms of the generator named `var`.
    pub fn format(&self, a: &UniPoly, var: &str) -> String {
        a.to_string_in(var)
    }
}
