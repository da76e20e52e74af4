//! Common zeros of bivariate polynomials, grouped into conjugate classes.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use super::kpoly::KPoly;
use super::numfield::NumberField;
use crate::poly::rational::{format_rational, rat, to_f64};
use crate::poly::{eliminant_y, factor, BiPoly, Rational, UniPoly};

/// Number of shears `x -> x + t*y` tried before giving up.
const MAX_SHEARS: i64 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("the system has infinitely many common zeros")]
    InfinitelyMany,
}

/// Which coordinate generates the residue field of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Generator {
    X,
    Y,
    Other,
}

/// A Galois orbit of points: `x` and `y` are elements of `field`, and the
/// class consists of their images under the `field.degree()` embeddings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    field: NumberField,
    x: UniPoly,
    y: UniPoly,
    generator: Generator,
}

impl PointClass {
    pub fn rational(x: Rational, y: Rational) -> Self {
        PointClass {
            field: NumberField::rationals(),
            x: UniPoly::constant(x),
            y: UniPoly::constant(y),
            generator: Generator::Other,
        }
    }

    pub fn new(field: NumberField, x: UniPoly, y: UniPoly) -> Self {
        PointClass {
            field,
            x,
            y,
            generator: Generator::Other,
        }
        .canonical()
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn x(&self) -> &UniPoly {
        &self.x
    }

    pub fn y(&self) -> &UniPoly {
        &self.y
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    /// Number of points in the class.
    pub fn size(&self) -> usize {
        self.field.degree()
    }

    pub fn as_rational(&self) -> Option<(Rational, Rational)> {
        if self.field.is_rational() {
            Some((self.x.coeff(0), self.y.coeff(0)))
        } else {
            None
        }
    }

    /// Re-expresses the class over the field generated by `x` (preferred) or
    /// `y`, so the defining polynomial is a minimal polynomial of a
    /// coordinate.
    fn canonical(self) -> Self {
        if self.field.is_rational() {
            return PointClass {
                generator: Generator::Other,
                ..self
            };
        }
        let d = self.field.degree();
        let candidates = [(Generator::X, &self.x, &self.y), (Generator::Y, &self.y, &self.x)];
        for (which, gen, other) in candidates {
            let mp = self.field.minimal_polynomial(gen);
            if mp.deg() != d {
                continue;
            }
            let expr = self.field.express_in(gen, other).expect("generator spans the field");
            let field = NumberField::from_minpoly(&mp);
            let t = field.generator();
            let (x, y) = match which {
                Generator::X => (t, expr),
                _ => (expr, t),
            };
            return PointClass {
                field,
                x,
                y,
                generator: which,
            };
        }
        self
    }

    /// Float approximations of the member points, not certified.
    pub fn approx(&self) -> Vec<(Complex64, Complex64)> {
        if self.field.is_rational() {
            let (x, y) = self.as_rational().unwrap();
            return vec![(Complex64::new(to_f64(&x), 0.0), Complex64::new(to_f64(&y), 0.0))];
        }
        self.field
            .approx_embeddings()
            .into_iter()
            .map(|r| (self.field.approx_eval(&self.x, r), self.field.approx_eval(&self.y, r)))
            .collect()
    }

    /// Deterministic order: rational points first by coordinates, then
    /// classes by size and defining data.
    pub fn sort_key_cmp(&self, other: &PointClass) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| match (self.as_rational(), other.as_rational()) {
                (Some(a), Some(b)) => a.cmp(&b),
                _ => self
                    .generator
                    .cmp(&other.generator)
                    .then_with(|| {
                        let ma = self.field.modulus().map(UniPoly::coeffs);
                        let mb = other.field.modulus().map(UniPoly::coeffs);
                        ma.cmp(&mb)
                    })
                    .then_with(|| self.x.coeffs().cmp(other.x.coeffs()))
                    .then_with(|| self.y.coeffs().cmp(other.y.coeffs())),
            })
    }

    /// Defining polynomial of the class in the generating coordinate's name.
    pub fn defining_polynomial(&self) -> Option<(String, &UniPoly)> {
        let name = match self.generator {
            Generator::X => "x",
            Generator::Y => "y",
            Generator::Other => "t",
        };
        self.field.modulus().map(|m| (name.to_string(), m))
    }

    /// The coordinate not generating the field, written in the generator.
    pub fn coordinate_strings(&self) -> (String, String) {
        match self.as_rational() {
            Some((x, y)) => (format_rational(&x), format_rational(&y)),
            None => {
                let (name, _) = self.defining_polynomial().unwrap();
                (self.x.to_string_in(&name), self.y.to_string_in(&name))
            }
        }
    }

    /// Evaluates a rational polynomial at the class, as a field element.
    pub fn eval(&self, f: &BiPoly) -> UniPoly {
        let k = &self.field;
        let mut acc = UniPoly::zero();
        for (e, c) in f.terms() {
            let t = k.mul(&k.pow(&self.x, e.x as i64), &k.pow(&self.y, e.y as i64));
            acc = &acc + &t.scale(c);
        }
        acc
    }
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (xs, ys) = self.coordinate_strings();
        match self.defining_polynomial() {
            None => write!(f, "({xs}, {ys})"),
            Some((name, m)) => write!(f, "({xs}, {ys}) where {} = 0", m.to_string_in(&name)),
        }
    }
}

/// Evaluates each `y`-coefficient of `g` at `alpha`.
fn specialize_x(k: &NumberField, g: &BiPoly, alpha: &UniPoly) -> KPoly {
    KPoly::new(
        g.y_coeffs()
            .iter()
            .map(|c| KPoly::from_rational(c).eval(k, alpha))
            .collect(),
    )
}

fn try_shear(polys: &[BiPoly], t: i64) -> Option<Vec<PointClass>> {
    let tq = rat(t);
    let sheared: Vec<BiPoly> = polys.iter().map(|p| p.shear(&tq)).collect();
    let mut elim = UniPoly::zero();
    for i in 0..sheared.len() {
        for j in i + 1..sheared.len() {
            elim = elim.gcd(&eliminant_y(&sheared[i], &sheared[j]));
        }
    }
    if elim.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    for (h, _) in factor(&elim) {
        let k = NumberField::from_minpoly(&h);
        let alpha = if k.is_rational() {
            UniPoly::constant(-h.coeff(0) / h.coeff(1))
        } else {
            k.generator()
        };
        let mut g = KPoly::zero();
        for p in &sheared {
            g = g.gcd(&k, &specialize_x(&k, p, &alpha));
        }
        if g.is_zero() {
            return None;
        }
        let g = g.squarefree_part(&k);
        match g.degree() {
            0 => {}
            1 => {
                let beta = g.linear_root(&k).unwrap();
                let x = &alpha + &k.mul(&beta, &UniPoly::constant(tq.clone()));
                out.push(PointClass::new(k, x, beta));
            }
            _ => return None,
        }
    }
    out.sort_by(PointClass::sort_key_cmp);
    Some(out)
}

/// All common complex zeros of `polys`, which must have finitely many.
pub fn solve_points(polys: &[BiPoly]) -> Result<Vec<PointClass>, SolveError> {
    let nonzero: Vec<BiPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.iter().any(BiPoly::is_constant) {
        return Ok(Vec::new());
    }
    if nonzero.len() < 2 {
        return Err(SolveError::InfinitelyMany);
    }
    for t in 0..MAX_SHEARS {
        if let Some(points) = try_shear(&nonzero, t) {
            return Ok(points);
        }
    }
    Err(SolveError::InfinitelyMany)
}
