use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, rat, Rational};

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards. The leading coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Monic linear polynomial `t - root`.
    pub fn linear_root(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Degree as an index; zero for the zero polynomial.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest index with a nonzero coefficient (`None` for zero).
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `self(g(t))`.
    pub fn compose(&self, g: &UniPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.degree() < d.degree() {
            return (Self::zero(), self.clone());
        }
        let dl = d.deg();
        let inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.deg() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dl] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dl);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// `f / gcd(f, f')`, made monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's decomposition: monic `(s_i, i)` with `self = lc * prod s_i^i`,
    /// every `s_i` squarefree and pairwise coprime. Trivial factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = df.exact_div(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).unwrap();
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Primitive integer polynomial proportional to `self`, with positive
    /// leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = common_denominator(&self.coeffs);
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let g = g * sign;
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
        ints
    }

    pub fn from_integers(ints: &[BigInt]) -> Self {
        Self::new(ints.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// All distinct rational roots, in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        if self.is_constant() {
            return roots;
        }
        let mut f = self.squarefree_part();
        if let Some(k) = f.order() {
            if k > 0 {
                roots.push(Rational::zero());
                f = UniPoly::new(f.coeffs[k..].to_vec());
            }
        }
        // Peel linear factors found via the rational root test on the
        // primitive integer form.
        let ints = f.primitive_integer();
        if ints.len() <= 1 {
            return roots;
        }
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let ps = divisors(&a0);
        let qs = divisors(&an);
        let mut cands: Vec<Rational> = Vec::new();
        for p in &ps {
            for q in &qs {
                let r = Rational::new(p.clone(), q.clone());
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        for c in cands {
            if f.degree() < 1 {
                break;
            }
            if f.eval(&c).is_zero() {
                f = f.exact_div(&UniPoly::linear_root(&c)).unwrap();
                roots.push(c);
            }
        }
        roots.sort();
        roots
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(super::rational::bit_size)
            .max()
            .unwrap_or(0)
    }

    /// Text form using `var` as the variable name.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            super::bipoly::push_term(&mut out, c, &mono);
        }
        out
    }
}

/// Positive divisors of `n` (with `divisors(0) = [1]`), by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() || n.is_one() {
        return vec![BigInt::one()];
    }
    // Factor by trial division, then expand.
    let mut m = n.clone();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    while (&p * &p) <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if !m.is_one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::ratio;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) / (t - 1) = t + 1
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1])), p(&[1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[0, 1])), UniPoly::one());
    }

    #[test]
    fn ext_gcd_identity() {
        let a = p(&[2, -3, 0, 1]);
        let b = p(&[1, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, UniPoly::one());
    }

    #[test]
    fn squarefree_of_cube() {
        // (t - 1)^3 -> t - 1
        let f = p(&[-1, 1]).pow(3);
        assert_eq!(f.squarefree_part(), p(&[-1, 1]));
        let dec = (&f * &p(&[0, 1])).squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn rational_roots_found() {
        // z - z^3 has roots -1, 0, 1
        assert_eq!(p(&[0, 1, 0, -1]).rational_roots(), vec![rat(-1), rat(0), rat(1)]);
        // (2 + 3z)^2 has the root -2/3
        assert_eq!(p(&[2, 3]).pow(2).rational_roots(), vec![ratio(-2, 3)]);
        assert!(p(&[1, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -2]).to_string_in("z"), "-2*z^2 + 1");
        assert_eq!(UniPoly::new(vec![ratio(1, 2), rat(1)]).to_string_in("x"), "x + 1/2");
    }
}
