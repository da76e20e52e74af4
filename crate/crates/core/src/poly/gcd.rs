//! Bivariate gcd and resultants, viewing `Q[x, y]` as `Q[x][y]`.
//!
//! Both are driven by the subresultant polynomial remainder sequence, which
//! keeps every intermediate division over `Q[x]` exact.

use super::bipoly::BiPoly;
use super::unipoly::UniPoly;
use super::PolyError;

type YPoly = Vec<UniPoly>;

fn trim(mut a: YPoly) -> YPoly {
    while a.last().is_some_and(UniPoly::is_zero) {
        a.pop();
    }
    a
}

fn deg(a: &YPoly) -> usize {
    a.len() - 1
}

fn lc(a: &YPoly) -> &UniPoly {
    a.last().expect("nonzero")
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let db = deg(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    let mut steps = 0usize;
    let delta = deg(a) + 1 - db;
    while !r.is_empty() && r.len() > db {
        let dr = deg(&r);
        let lr = lc(&r).clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[dr - db + j] = &r[dr - db + j] - &t;
        }
        r = trim(r);
        steps += 1;
    }
    let extra = lb.pow((delta - steps) as u32);
    trim(r.into_iter().map(|c| &c * &extra).collect())
}

fn div_all(a: YPoly, d: &UniPoly) -> YPoly {
    a.into_iter()
        .map(|c| c.exact_div(d).expect("subresultant division is exact"))
        .collect()
}

/// Resultant of two polynomials in `y` with coefficients in `Q[x]`. Either
/// input may have degree 0 in `y`; `Res(a, c) = c^deg(a)`.
fn resultant_ypoly(a: YPoly, b: YPoly) -> UniPoly {
    let (mut a, mut b) = (trim(a), trim(b));
    if a.is_empty() || b.is_empty() {
        return UniPoly::zero();
    }
    let mut negate = false;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if deg(&b) == 0 {
        let r = lc(&b).pow(deg(&a) as u32);
        return if negate { -&r } else { r };
    }
    let mut g = UniPoly::one();
    let mut h = UniPoly::one();
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return UniPoly::zero();
        }
        let denom = &g * &h.pow(delta as u32);
        a = std::mem::replace(&mut b, div_all(r, &denom));
        g = lc(&a).clone();
        if delta > 0 {
            h = g
                .pow(delta as u32)
                .exact_div(&h.pow(delta as u32 - 1))
                .expect("exact");
        }
        if deg(&b) == 0 {
            let da = deg(&a) as u32;
            let out = lc(&b)
                .pow(da)
                .exact_div(&h.pow(da - 1))
                .expect("exact");
            return if negate { -&out } else { out };
        }
    }
}

/// Resultant with respect to `y`, a polynomial in `x`.
pub fn resultant_y(f: &BiPoly, g: &BiPoly) -> Result<UniPoly, PolyError> {
    if f.deg_y() < 1 || g.deg_y() < 1 {
        return Err(PolyError::DegenerateResultant);
    }
    Ok(resultant_ypoly(f.y_coeffs(), g.y_coeffs()))
}

/// Resultant with respect to `x`, a polynomial in `y`.
pub fn resultant_x(f: &BiPoly, g: &BiPoly) -> Result<UniPoly, PolyError> {
    resultant_y(&f.swap_xy(), &g.swap_xy())
}

/// Polynomial in `x` whose roots contain the `x`-coordinates of all common
/// zeros of `f` and `g`; zero when they share a factor of positive
/// `y`-degree. Unlike [`resultant_y`], accepts inputs free of `y`.
pub fn eliminant_y(f: &BiPoly, g: &BiPoly) -> UniPoly {
    match (f.deg_y() <= 0, g.deg_y() <= 0) {
        (true, true) => f
            .as_uni_x()
            .unwrap()
            .gcd(&g.as_uni_x().unwrap()),
        _ => resultant_ypoly(f.y_coeffs(), g.y_coeffs()),
    }
}

fn content(a: &YPoly) -> UniPoly {
    a.iter().fold(UniPoly::zero(), |acc, c| acc.gcd(c))
}

/// Gcd in `Q[x, y]`, normalized to graded-lex leading coefficient 1.
/// `gcd(0, 0) = 0`.
pub fn gcd(f: &BiPoly, g: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let (a, b) = (f.y_coeffs(), g.y_coeffs());
    let (ca, cb) = (content(&a), content(&b));
    let c = ca.gcd(&cb);
    let mut pa = div_all(a, &ca);
    let mut pb = div_all(b, &cb);
    if deg(&pa) < deg(&pb) {
        std::mem::swap(&mut pa, &mut pb);
    }
    let prim = if deg(&pb) == 0 {
        vec![UniPoly::one()]
    } else {
        // Subresultant sequence; the last nonzero member has the gcd as its
        // primitive part.
        let mut g_ = UniPoly::one();
        let mut h = UniPoly::one();
        loop {
            let delta = deg(&pa) - deg(&pb);
            let r = prem(&pa, &pb);
            if r.is_empty() {
                break;
            }
            if deg(&r) == 0 {
                pb = vec![UniPoly::one()];
                break;
            }
            let denom = &g_ * &h.pow(delta as u32);
            pa = std::mem::replace(&mut pb, div_all(r, &denom));
            g_ = lc(&pa).clone();
            if delta > 0 {
                h = g_
                    .pow(delta as u32)
                    .exact_div(&h.pow(delta as u32 - 1))
                    .expect("exact");
            }
        }
        let cp = content(&pb);
        div_all(pb, &cp)
    };
    let out = &BiPoly::from_uni_x(&c) * &BiPoly::from_y_coeffs(&prim);
    out.monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p("x^2 - y^2"), &p("x - y")), p("x - y"));
        assert_eq!(gcd(&p("x"), &p("y")), BiPoly::one());
        assert_eq!(gcd(&p("x^2*y - y^3"), &p("x^2*y + x*y^2")), p("x*y + y^2"));
        assert_eq!(gcd(&p("x*y"), &p("x*(x + 1)")), p("x"));
        assert_eq!(gcd(&p("2*x + 4"), &p("0")), p("x + 2"));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant_y(&p("y^2 - x^3"), &p("2*y")).unwrap(), UniPoly::from_ints(&[0, 0, 0, -4]));
        assert_eq!(resultant_y(&p("y - x"), &p("y + x")).unwrap(), UniPoly::from_ints(&[0, 2]));
        let f = p("x*y^2 + y - x^2");
        assert!(resultant_y(&f, &f).unwrap().is_zero());
        assert!(matches!(resultant_y(&p("x"), &p("y")), Err(PolyError::DegenerateResultant)));
    }

    #[test]
    fn eliminant_handles_y_free_inputs() {
        assert_eq!(eliminant_y(&p("x^2 - 1"), &p("x - 1")), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(eliminant_y(&p("y^2 + 1"), &p("x + 1")), UniPoly::from_ints(&[1, 1]).pow(2));
    }
}
