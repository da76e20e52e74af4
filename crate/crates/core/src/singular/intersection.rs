//! Local intersection multiplicities by Fulton's algorithm.

use crate::algebraic::{LocalPoly, NumberField};
use crate::poly::{BiPoly, Rational, UniPoly};

use super::SingularError;

/// Iteration guard; each step lowers a degree, so this is never reached on
/// inputs without a common component.
const MAX_STEPS: usize = 100_000;

/// `I_0(f, g)` for polynomials over `k` at the origin.
pub fn intersection_at_origin(
    k: &NumberField,
    f: &LocalPoly,
    g: &LocalPoly,
) -> Result<u32, SingularError> {
    let (mut f, mut g) = (f.clone(), g.clone());
    let mut acc = 0;
    for _ in 0..MAX_STEPS {
        if f.is_zero() || g.is_zero() {
            return Err(SingularError::CommonComponent);
        }
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            return Ok(acc);
        }
        let (mut fx, mut gx) = (f.x_axis(), g.x_axis());
        if fx.degree() > gx.degree() {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut fx, &mut gx);
        }
        if fx.is_zero() {
            // y divides f: I(y*h, g) = ord_x g(x, 0) + I(h, g).
            let Some(ord) = gx.order() else {
                return Err(SingularError::CommonComponent);
            };
            acc += ord as u32;
            f = f.div_monomial(0, 1);
            continue;
        }
        let shift = (gx.degree() - fx.degree()) as u32;
        let lhs = g.scale(k, &fx.leading());
        let rhs = f.mul_monomial(shift, 0).scale(k, &gx.leading());
        g = lhs.sub(&rhs);
    }
    Err(SingularError::CommonComponent)
}

/// `I_X(f, g)` at a rational point.
pub fn intersection_number(
    f: &BiPoly,
    g: &BiPoly,
    point: (&Rational, &Rational),
) -> Result<u32, SingularError> {
    let k = NumberField::rationals();
    let (a, b) = (UniPoly::constant(point.0.clone()), UniPoly::constant(point.1.clone()));
    let fl = LocalPoly::translated(&k, f, &a, &b);
    let gl = LocalPoly::translated(&k, g, &a, &b);
    intersection_at_origin(&k, &fl, &gl)
}

/// `I_0(h, x) = ord_y h(0, y)` for a local polynomial through the origin.
pub fn projection_multiplicity_at_origin(h: &LocalPoly) -> Result<u32, SingularError> {
    h.y_axis()
        .order()
        .map(|o| o as u32)
        .ok_or(SingularError::VerticalComponent)
}

/// `nu = I_X(f, x - x0)` at a rational point.
pub fn projection_multiplicity(f: &BiPoly, point: (&Rational, &Rational)) -> Result<u32, SingularError> {
    let k = NumberField::rationals();
    let h = LocalPoly::translated(
        &k,
        f,
        &UniPoly::constant(point.0.clone()),
        &UniPoly::constant(point.1.clone()),
    );
    projection_multiplicity_at_origin(&h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::poly::rational::rat;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn i0(f: &str, g: &str) -> Result<u32, SingularError> {
        intersection_number(&p(f), &p(g), (&rat(0), &rat(0)))
    }

    #[test]
    fn fixed_values() {
        assert_eq!(i0("y^2 - x^3", "y"), Ok(3));
        assert_eq!(i0("y^2 - x^2 - x^3", "2*y"), Ok(2));
        assert_eq!(i0("x", "y"), Ok(1));
        assert_eq!(i0("x + 1", "y"), Ok(0));
        // Two tangent parabolas meet with multiplicity 2 at the origin.
        assert_eq!(i0("y - x^2", "y + x^2"), Ok(2));
        // I(f, f + y*x^2) = I(f, y) + 2*I(f, x) = 3 + 2*2.
        assert_eq!(i0("y^2 - x^3", "y^2 - x^3 + y*x^2"), Ok(7));
        assert_eq!(i0("x*y", "x*(y + 1)"), Err(SingularError::CommonComponent));
    }

    #[test]
    fn projection_examples() {
        let o = (&rat(0), &rat(0));
        assert_eq!(projection_multiplicity(&p("y^2 - x^3"), o), Ok(2));
        assert_eq!(projection_multiplicity(&p("y^2 - x^2 - x^3"), o), Ok(2));
        assert_eq!(projection_multiplicity(&p("y - x"), o), Ok(1));
        assert_eq!(projection_multiplicity(&p("x*(y - 1)"), o), Err(SingularError::VerticalComponent));
    }

    #[test]
    fn conjugate_point() {
        // x^2 + y^2 = (y - i*x)(y + i*x); on y = i*x - x^2 it restricts
        // to -x^2 * (2*i*x - x^2), of order 3.
        let k = NumberField::from_minpoly(&UniPoly::from_ints(&[1, 0, 1]));
        let f = LocalPoly::from_bipoly(&p("x^2 + y^2"));
        let i = k.generator();
        let mut g = LocalPoly::from_bipoly(&p("y + x^2"));
        g.add_term(1, 0, -&i);
        assert_eq!(intersection_at_origin(&k, &f, &g), Ok(3));
    }
}
