use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rat, Rational};
use super::unipoly::UniPoly;
use super::PolyError;

/// Exponent pair of a monomial `x^x * y^y`, ordered graded-lexicographically
/// with `x > y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Exp {
    pub x: u32,
    pub y: u32,
}

impl Exp {
    pub fn new(x: u32, y: u32) -> Self {
        Exp { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse bivariate polynomial with exact rational coefficients.
///
/// Terms live in a map keyed by [`Exp`], so iteration is in ascending
/// graded-lex order and the leading term is the last entry. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Exp, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::new(i, j), c);
        }
        BiPoly { terms }
    }

    /// Builds a polynomial from `(i, j, c)` triples, summing repeated monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rational)>) -> Self {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(Exp::new(i, j), c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: Exp, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exp, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&Exp::new(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .next_back()
            .map_or(-1, |e| e.degree() as i64)
    }

    pub fn deg_x(&self) -> i64 {
        self.terms.keys().map(|e| e.x as i64).max().unwrap_or(-1)
    }

    pub fn deg_y(&self) -> i64 {
        self.terms.keys().map(|e| e.y as i64).max().unwrap_or(-1)
    }

    pub fn leading_term(&self) -> Option<(Exp, &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Scales so that the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => BiPoly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, i: u32, j: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp::new(e.x + i, e.y + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.x > 0)
                .map(|(e, c)| (Exp::new(e.x - 1, e.y), c * rat(e.x as i64)))
                .collect(),
        }
    }

    pub fn partial_y(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.y > 0)
                .map(|(e, c)| (Exp::new(e.x, e.y - 1), c * rat(e.y as i64)))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.y_coeffs()
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c.eval(x))
    }

    /// `self(px, py)`.
    pub fn substitute(&self, px: &BiPoly, py: &BiPoly) -> BiPoly {
        let max_x = self.deg_x().max(0) as usize;
        let max_y = self.deg_y().max(0) as usize;
        let mut xp = vec![BiPoly::one()];
        for k in 1..=max_x {
            xp.push(&xp[k - 1] * px);
        }
        let mut yp = vec![BiPoly::one()];
        for k in 1..=max_y {
            yp.push(&yp[k - 1] * py);
        }
        let mut out = BiPoly::zero();
        for (e, c) in self.terms() {
            out = &out + &(&xp[e.x as usize] * &yp[e.y as usize]).scale(c);
        }
        out
    }

    /// The shear `f(x + t*y, y)`.
    pub fn shear(&self, t: &Rational) -> BiPoly {
        if t.is_zero() {
            return self.clone();
        }
        let px = &BiPoly::x() + &BiPoly::y().scale(t);
        self.substitute(&px, &BiPoly::y())
    }

    /// Translation `f(x + a, y + b)`.
    pub fn translate(&self, a: &Rational, b: &Rational) -> BiPoly {
        let px = &BiPoly::x() + &BiPoly::constant(a.clone());
        let py = &BiPoly::y() + &BiPoly::constant(b.clone());
        self.substitute(&px, &py)
    }

    pub fn swap_xy(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp::new(e.y, e.x), c.clone()))
                .collect(),
        }
    }

    /// Coefficients as a polynomial in `y` over `Q[x]`; index `j` holds the
    /// coefficient of `y^j`.
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        let dy = self.deg_y();
        if dy < 0 {
            return Vec::new();
        }
        let mut cols: Vec<Vec<Rational>> = vec![Vec::new(); dy as usize + 1];
        for (e, c) in self.terms() {
            let col = &mut cols[e.y as usize];
            if col.len() <= e.x as usize {
                col.resize(e.x as usize + 1, Rational::zero());
            }
            col[e.x as usize] = c.clone();
        }
        cols.into_iter().map(UniPoly::new).collect()
    }

    pub fn from_y_coeffs(cs: &[UniPoly]) -> BiPoly {
        let mut p = BiPoly::zero();
        for (j, c) in cs.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                p.add_term(Exp::new(i as u32, j as u32), a.clone());
            }
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `x`.
    pub fn from_uni_x(u: &UniPoly) -> BiPoly {
        Self::from_y_coeffs(std::slice::from_ref(u))
    }

    /// Embeds a univariate polynomial as a polynomial in `y`.
    pub fn from_uni_y(u: &UniPoly) -> BiPoly {
        Self::from_uni_x(u).swap_xy()
    }

    /// Returns the polynomial as univariate in `x` when it does not involve `y`.
    pub fn as_uni_x(&self) -> Option<UniPoly> {
        (self.deg_y() <= 0).then(|| self.y_coeffs().into_iter().next().unwrap_or_default())
    }

    pub fn homogeneous_part(&self, d: u32) -> HomogeneousForm {
        HomogeneousForm {
            poly: BiPoly {
                terms: self
                    .terms
                    .iter()
                    .filter(|(e, _)| e.degree() == d)
                    .map(|(e, c)| (*e, c.clone()))
                    .collect(),
            },
            degree: d,
        }
    }

    /// Homogeneous components indexed by degree `0..=deg`, zero forms included.
    pub fn homogeneous_parts(&self) -> Vec<HomogeneousForm> {
        let d = self.degree();
        (0..=d.max(-1))
            .map(|k| self.homogeneous_part(k as u32))
            .collect()
    }

    /// Top-degree homogeneous component.
    pub fn leading_form(&self) -> HomogeneousForm {
        self.homogeneous_part(self.degree().max(0) as u32)
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn exact_divide(&self, g: &BiPoly) -> Result<Option<BiPoly>, PolyError> {
        let (ge, gc) = g.leading_term().ok_or(PolyError::DivisionByZero)?;
        let ginv = gc.recip();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((re, rc)) = rem.leading_term() {
            if re.x < ge.x || re.y < ge.y {
                return Ok(None);
            }
            let (qe, qc) = (Exp::new(re.x - ge.x, re.y - ge.y), rc * &ginv);
            rem = &rem - &g.mul_monomial(qe.x, qe.y).scale(&qc);
            quot.add_term(qe, qc);
        }
        Ok(Some(quot))
    }

    /// Division by leading terms: `self = q * g + r` where no term of `r`
    /// is divisible by the leading monomial of `g`.
    pub fn div_rem(&self, g: &BiPoly) -> Result<(BiPoly, BiPoly), PolyError> {
        let (ge, gc) = g.leading_term().ok_or(PolyError::DivisionByZero)?;
        let ginv = gc.recip();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        let mut out = BiPoly::zero();
        while let Some((re, rc)) = rem.leading_term() {
            if re.x < ge.x || re.y < ge.y {
                let c = rc.clone();
                rem.add_term(re, -c.clone());
                out.add_term(re, c);
                continue;
            }
            let (qe, qc) = (Exp::new(re.x - ge.x, re.y - ge.y), rc * &ginv);
            rem = &rem - &g.mul_monomial(qe.x, qe.y).scale(&qc);
            quot.add_term(qe, qc);
        }
        Ok((quot, out))
    }

    pub fn divides(&self, other: &BiPoly) -> bool {
        matches!(other.exact_divide(self), Ok(Some(_)))
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(super::rational::bit_size)
            .max()
            .unwrap_or(0)
    }

    /// Canonical text form with the given variable names; terms in
    /// descending graded-lex order.
    pub fn to_string_in(&self, vx: &str, vy: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            match e.x {
                0 => {}
                1 => mono.push(vx.to_string()),
                k => mono.push(format!("{vx}^{k}")),
            }
            match e.y {
                0 => {}
                1 => mono.push(vy.to_string()),
                k => mono.push(format!("{vy}^{k}")),
            }
            push_term(&mut out, c, &mono.join("*"));
        }
        out
    }
}

/// Appends `c*mono` to a sum being printed, handling signs and unit
/// coefficients.
pub(crate) fn push_term(out: &mut String, c: &Rational, mono: &str) {
    let neg = c.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    if mono.is_empty() {
        out.push_str(&format_rational(&a));
    } else if a.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&format_rational(&a));
        out.push('*');
        out.push_str(mono);
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x", "y"))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(Exp::new(e1.x + e2.x, e1.y + e2.y), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// A bivariate polynomial all of whose terms have the same total degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousForm {
    poly: BiPoly,
    degree: u32,
}

impl HomogeneousForm {
    /// Wraps `poly` if it is homogeneous of degree `degree` (zero is
    /// homogeneous of every degree).
    pub fn new(poly: BiPoly, degree: u32) -> Option<Self> {
        poly.terms
            .keys()
            .all(|e| e.degree() == degree)
            .then_some(HomogeneousForm { poly, degree })
    }

    /// Wraps a nonzero homogeneous polynomial, reading off its degree.
    pub fn from_poly(poly: BiPoly) -> Option<Self> {
        let d = poly.degree();
        if d < 0 {
            return None;
        }
        Self::new(poly, d as u32)
    }

    pub fn zero(degree: u32) -> Self {
        HomogeneousForm {
            poly: BiPoly::zero(),
            degree,
        }
    }

    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> BiPoly {
        self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `h(1, z)` as a polynomial in `z`.
    pub fn dehomogenize(&self) -> UniPoly {
        let mut cs = vec![Rational::zero(); self.degree as usize + 1];
        for (e, c) in self.poly.terms() {
            cs[e.y as usize] = c.clone();
        }
        UniPoly::new(cs)
    }

    /// Rebuilds `z^k`-coefficients `u` into the degree-`d` form
    /// `sum u_k x^(d-k) y^k`.
    pub fn homogenize(u: &UniPoly, degree: u32) -> HomogeneousForm {
        assert!(u.degree() <= degree as i64, "degree exceeds form degree");
        let poly = BiPoly::from_terms(
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (degree - k as u32, k as u32, c.clone())),
        );
        HomogeneousForm { poly, degree }
    }

    /// Largest `e` with `x^e` dividing the form.
    pub fn x_multiplicity(&self) -> u32 {
        self.poly.terms.keys().map(|e| e.x).min().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x - y") * &p("x + y"), p("x^2 - y^2"));
        assert_eq!(p("y^2 - x^3").partial_y(), p("2*y"));
        assert!(p("x^2 + y^2 - 1").eval(&rat(0), &rat(1)).is_zero());
        assert_eq!(p("0").degree(), -1);
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p("x^2 - y^2").exact_divide(&p("x - y")).unwrap(), Some(p("x + y")));
        assert_eq!(p("x^2 + 1").exact_divide(&p("y")).unwrap(), None);
        assert_eq!(p("x^2*y - y^3").exact_divide(&p("y")).unwrap(), Some(p("x^2 - y^2")));
        assert!(matches!(p("x").exact_divide(&BiPoly::zero()), Err(PolyError::DivisionByZero)));
    }

    #[test]
    fn homogeneous_parts_examples() {
        let parts = p("x^2 + y + 1").homogeneous_parts();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0].poly(), &p("1"));
        assert_eq!(parts[1].poly(), &p("y"));
        assert_eq!(parts[2].poly(), &p("x^2"));
        let parts = p("1 + y^2").homogeneous_parts();
        assert!(parts[1].is_zero());
        let hom = p("x*y - y^2").homogeneous_parts();
        assert_eq!(hom.iter().filter(|h| !h.is_zero()).count(), 1);
    }

    #[test]
    fn grlex_printing() {
        assert_eq!(p("1 + y + x*y + x^2").to_string(), "x^2 + x*y + y + 1");
        assert_eq!(p("-3/2*y^3 + x").to_string(), "-3/2*y^3 + x");
    }

    #[test]
    fn shear_and_translate() {
        assert_eq!(p("x").shear(&rat(2)), p("x + 2*y"));
        assert_eq!(p("x*y").translate(&rat(1), &rat(-1)), p("x*y - x + y - 1"));
    }

    #[test]
    fn dehomogenize_roundtrip() {
        let h = HomogeneousForm::from_poly(p("x^2*y - y^3")).unwrap();
        let u = h.dehomogenize();
        assert_eq!(u, UniPoly::from_ints(&[0, 1, 0, -1]));
        assert_eq!(HomogeneousForm::homogenize(&u, 3), h);
        assert_eq!(HomogeneousForm::from_poly(p("x^3")).unwrap().x_multiplicity(), 3);
    }
}
