//! Number of local analytic branches via Newton polygons.
//!
//! Each edge of the Newton polygon contributes one branch per simple root of
//! its characteristic polynomial; a repeated root is resolved by the
//! substitution `x = c^v X^q`, `y = X^p (c^u + Y)` with `u*q - v*p = 1`,
//! after which the count continues at the new origin.

use crate::algebraic::{KPoly, LocalPoly, NumberField};
use crate::poly::{factor, BiPoly, Rational, UniPoly};

use super::SingularError;

/// Recursion cap for repeated characteristic roots.
pub const MAX_DEPTH: u32 = 32;

/// Branch count at the origin of a local polynomial over `k`; zero when the
/// curve misses the origin.
pub fn branches_at_origin(k: &NumberField, h: &LocalPoly) -> Result<u32, SingularError> {
    count(k, h, 0)
}

/// Branch count of `f` at a rational point.
pub fn branch_count(f: &BiPoly, point: (&Rational, &Rational)) -> Result<u32, SingularError> {
    let k = NumberField::rationals();
    let h = LocalPoly::translated(
        &k,
        f,
        &UniPoly::constant(point.0.clone()),
        &UniPoly::constant(point.1.clone()),
    );
    branches_at_origin(&k, &h)
}

fn count(k: &NumberField, h: &LocalPoly, depth: u32) -> Result<u32, SingularError> {
    if depth > MAX_DEPTH {
        return Err(SingularError::BranchCountInconclusive);
    }
    if h.is_zero() {
        return Err(SingularError::NonReducedCurve);
    }
    if !h.constant_term().is_zero() {
        return Ok(0);
    }
    let (a, b) = h.monomial_content();
    if a > 1 || b > 1 {
        return Err(SingularError::NonReducedCurve);
    }
    let h = h.div_monomial(a, b);
    let mut total = a + b;
    if !h.constant_term().is_zero() {
        return Ok(total);
    }
    if tangent_cone_squarefree(k, &h) {
        return Ok(total + h.order().unwrap());
    }
    for edge in newton_edges(&h) {
        total += edge_branches(k, &h, &edge, depth)?;
    }
    Ok(total)
}

/// Whether the lowest homogeneous form has distinct linear factors.
fn tangent_cone_squarefree(k: &NumberField, h: &LocalPoly) -> bool {
    let low = h.lowest_form();
    let d = low.order().unwrap();
    let dehom = KPoly::new((0..=d).map(|j| low.coeff(d - j, j)).collect());
    let x_mult = d as i64 - dehom.degree();
    x_mult <= 1 && dehom.gcd(k, &dehom.derivative()).degree() == 0
}

/// A lower edge of the Newton polygon between exponent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Edge {
    start: (u32, u32),
    end: (u32, u32),
}

/// Lower-left edges from the vertex on the `y` axis to the vertex on the
/// `x` axis; requires that neither `x` nor `y` divides `h`.
fn newton_edges(h: &LocalPoly) -> Vec<Edge> {
    let pts: Vec<(u32, u32)> = h.terms().map(|(e, _)| *e).collect();
    let j0 = pts.iter().filter(|(i, _)| *i == 0).map(|(_, j)| *j).min().unwrap();
    let i1 = pts.iter().filter(|(_, j)| *j == 0).map(|(i, _)| *i).min().unwrap();
    let mut cur = (0u32, j0);
    let mut edges = Vec::new();
    while cur.1 > 0 {
        // Steepest descent: minimize (j - cj)/(i - ci), prefer the farthest.
        let mut best: Option<(u32, u32)> = None;
        for &(i, j) in &pts {
            if i <= cur.0 || j >= cur.1 || i > i1 {
                continue;
            }
            best = match best {
                None => Some((i, j)),
                Some((bi, bj)) => {
                    // slope(i,j) < slope(bi,bj) <=> (j-cj)(bi-ci) < (bj-cj)(i-ci)
                    let lhs = (j as i64 - cur.1 as i64) * (bi as i64 - cur.0 as i64);
                    let rhs = (bj as i64 - cur.1 as i64) * (i as i64 - cur.0 as i64);
                    if lhs < rhs || (lhs == rhs && i > bi) {
                        Some((i, j))
                    } else {
                        Some((bi, bj))
                    }
                }
            };
        }
        let next = best.expect("the x-axis vertex is always reachable");
        edges.push(Edge {
            start: cur,
            end: next,
        });
        cur = next;
    }
    edges
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Integers `(u, v)` with `u*q - v*p = 1`.
fn bezout(p: u32, q: u32) -> (i64, i64) {
    // Extended Euclid on (q, p): s*q + t*p = 1.
    let (mut r0, mut r1) = (q as i64, p as i64);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (s0, s1) = (s1, s0 - qt * s1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    debug_assert_eq!(r0, 1);
    (s0, -t0)
}

fn edge_branches(k: &NumberField, h: &LocalPoly, edge: &Edge, depth: u32) -> Result<u32, SingularError> {
    let di = edge.end.0 - edge.start.0;
    let dj = edge.start.1 - edge.end.1;
    let g = gcd_u32(di, dj);
    let (p, q) = (di / g, dj / g);
    // psi(C) = sum_t a_t C^(g - t) over the lattice points of the edge.
    let psi = KPoly::new(
        (0..=g)
            .map(|s| {
                let t = g - s;
                h.coeff(edge.start.0 + t * p, edge.start.1 - t * q)
            })
            .collect(),
    );
    let mut total = 0;
    for (s, e) in psi.squarefree_decomposition(k) {
        if e == 1 {
            total += s.degree() as u32;
            continue;
        }
        if let Some(root) = s.linear_root(k) {
            total += resolve(k, h, edge, p, q, &root, depth)?;
            continue;
        }
        let Some(rational) = k.is_rational().then(|| s.to_rational()).flatten() else {
            return Err(SingularError::BranchCountInconclusive);
        };
        for (irr, _) in factor(&rational) {
            if irr.deg() == 1 {
                let root = UniPoly::constant(-irr.coeff(0) / irr.coeff(1));
                total += resolve(k, h, edge, p, q, &root, depth)?;
            } else {
                let ext = NumberField::from_minpoly(&irr);
                let root = ext.generator();
                total += irr.deg() as u32 * resolve(&ext, h, edge, p, q, &root, depth)?;
            }
        }
    }
    Ok(total)
}

/// Branches of `h` along the edge whose characteristic root is `c`,
/// counted after the substitution at that root. Coefficients of `h` must
/// lie in `k` (rational coefficients embed in every field).
fn resolve(
    k: &NumberField,
    h: &LocalPoly,
    edge: &Edge,
    p: u32,
    q: u32,
    c: &UniPoly,
    depth: u32,
) -> Result<u32, SingularError> {
    let (u, v) = bezout(p, q);
    let weight = q * edge.start.0 + p * edge.start.1;
    let cu = k.pow(c, u);
    // (c^u + Y)^j, memoized by j.
    let mut shifted_powers: Vec<LocalPoly> = vec![LocalPoly::monomial(UniPoly::one(), 0, 0)];
    let base = {
        let mut b = LocalPoly::monomial(cu.clone(), 0, 0);
        b.add_term(0, 1, UniPoly::one());
        b
    };
    let mut out = LocalPoly::zero();
    for (&(i, j), a) in h.terms() {
        while shifted_powers.len() <= j as usize {
            let next = shifted_powers.last().unwrap().mul(k, &base);
            shifted_powers.push(next);
        }
        let xe = q * i + p * j - weight;
        let coeff = k.mul(&k.reduce(a.clone()), &k.pow(c, v * i as i64));
        let term = shifted_powers[j as usize].scale(k, &coeff).mul_monomial(xe, 0);
        out = out.add(&term);
    }
    count(k, &out, depth + 1)
}
