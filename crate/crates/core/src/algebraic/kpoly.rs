//! Dense univariate polynomials over a [`NumberField`].

use super::numfield::NumberField;
use crate::poly::{Rational, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPoly {
    /// Field elements, lowest degree first, no trailing zeros.
    coeffs: Vec<UniPoly>,
}

impl KPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn zero() -> Self {
        KPoly { coeffs: Vec::new() }
    }

    pub fn from_rational(p: &UniPoly) -> Self {
        KPoly::new(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    /// `Some(p)` when every coefficient is rational.
    pub fn to_rational(&self) -> Option<UniPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_constant().then(|| c.coeff(0)))
            .collect::<Option<Vec<Rational>>>()
            .map(UniPoly::new)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> UniPoly {
        self.coeffs.last().cloned().unwrap_or_else(UniPoly::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn monic(&self, k: &NumberField) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = k.inv(&self.leading());
        KPoly::new(self.coeffs.iter().map(|c| k.mul(c, &inv)).collect())
    }

    pub fn add(&self, other: &KPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        KPoly::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &KPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        KPoly::new((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, k: &NumberField, other: &KPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return KPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KPoly::new(out.into_iter().map(|c| k.reduce(c)).collect())
    }

    pub fn scale(&self, k: &NumberField, c: &UniPoly) -> Self {
        KPoly::new(self.coeffs.iter().map(|a| k.mul(a, c)).collect())
    }

    pub fn derivative(&self) -> Self {
        KPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    pub fn eval(&self, k: &NumberField, a: &UniPoly) -> UniPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &k.mul(&acc, a) + c)
    }

    pub fn divrem(&self, k: &NumberField, d: &KPoly) -> (KPoly, KPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (KPoly::zero(), self.clone());
        }
        let inv = k.inv(&d.leading());
        let mut r = self.coeffs.clone();
        let mut q = vec![UniPoly::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = k.mul(&r[i + dd], &inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &k.mul(&c, b);
            }
            q[i] = c;
        }
        r.truncate(dd);
        (KPoly::new(q), KPoly::new(r))
    }

    pub fn exact_div(&self, k: &NumberField, d: &KPoly) -> Option<KPoly> {
        let (q, r) = self.divrem(k, d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, k: &NumberField, other: &KPoly) -> KPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(k, &b).1;
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn squarefree_part(&self, k: &NumberField) -> KPoly {
        if self.degree() < 1 {
            return self.monic(k);
        }
        let g = self.gcd(k, &self.derivative());
        self.exact_div(k, &g).expect("gcd divides").monic(k)
    }

    /// Yun's squarefree decomposition: monic pairwise coprime squarefree
    /// factors `s_i` with `self = c * prod s_i^i`; constant factors omitted.
    pub fn squarefree_decomposition(&self, k: &NumberField) -> Vec<(KPoly, usize)> {
        let mut out = Vec::new();
        if self.degree() < 1 {
            return out;
        }
        let f = self.monic(k);
        let df = f.derivative();
        let a0 = f.gcd(k, &df);
        let mut b = f.exact_div(k, &a0).unwrap();
        let mut c = df.exact_div(k, &a0).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() >= 1 {
            let a = b.gcd(k, &d);
            b = b.exact_div(k, &a).unwrap();
            c = d.exact_div(k, &a).unwrap();
            d = c.sub(&b.derivative());
            if a.degree() >= 1 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Root of a linear polynomial.
    pub fn linear_root(&self, k: &NumberField) -> Option<UniPoly> {
        (self.degree() == 1).then(|| k.div(&-&self.coeff(0), &self.coeff(1)))
    }
}
