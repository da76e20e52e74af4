//! Singular points of the projective closure and the genus formula
//! `g = (n-1)(n-2)/2 - sum of delta`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::algebraic::{Generator, LocalPoly, NumberField, PointClass};
use crate::certify::affine_singular_points;
use crate::field::chart;
use crate::poly::rational::rat;
use crate::poly::{factor, gcd, BiPoly, UniPoly};

use super::{local_invariants, LocalInvariants, SingularError};

/// Shears `x -> x + t*y` tried, starting from the seed.
const MAX_SHEARS: i64 = 16;

/// A class of points on the line at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfinityPoint {
    /// `[1 : v : 0]` for the roots `v` of an irreducible polynomial.
    Slope { minpoly: UniPoly },
    /// `[0 : 1 : 0]`.
    Vertical,
}

impl InfinityPoint {
    pub fn class_size(&self) -> usize {
        match self {
            InfinityPoint::Slope { minpoly } => minpoly.deg(),
            InfinityPoint::Vertical => 1,
        }
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        match (self, other) {
            (InfinityPoint::Slope { minpoly: a }, InfinityPoint::Slope { minpoly: b }) => a
                .deg()
                .cmp(&b.deg())
                .then_with(|| a.coeffs().cmp(b.coeffs())),
            (InfinityPoint::Slope { .. }, InfinityPoint::Vertical) => Ordering::Less,
            (InfinityPoint::Vertical, InfinityPoint::Slope { .. }) => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for InfinityPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfinityPoint::Vertical => write!(f, "[0 : 1 : 0]"),
            InfinityPoint::Slope { minpoly } if minpoly.deg() == 1 => {
                let v = -minpoly.coeff(0) / minpoly.coeff(1);
                write!(f, "[1 : {} : 0]", crate::poly::rational::format_rational(&v))
            }
            InfinityPoint::Slope { minpoly } => {
                write!(f, "[1 : v : 0] where {} = 0", minpoly.to_string_in("v"))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Affine(PointClass),
    Infinity(InfinityPoint),
}

impl Location {
    pub fn class_size(&self) -> usize {
        match self {
            Location::Affine(c) => c.size(),
            Location::Infinity(p) => p.class_size(),
        }
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, Location::Affine(_))
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Location::Affine(a), Location::Affine(b)) => a.sort_key_cmp(b),
            (Location::Affine(_), Location::Infinity(_)) => Ordering::Less,
            (Location::Infinity(_), Location::Affine(_)) => Ordering::Greater,
            (Location::Infinity(a), Location::Infinity(b)) => a.cmp_key(b),
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Affine(c) => c.fmt(f),
            Location::Infinity(p) => p.fmt(f),
        }
    }
}

/// A class of conjugate singular points with per-point invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub location: Location,
    pub invariants: LocalInvariants,
}

impl SingularPoint {
    pub fn class_size(&self) -> usize {
        self.location.class_size()
    }

    pub fn certified(&self) -> bool {
        self.invariants.branches.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub degree: u32,
    /// The shear `t` in `x -> x + t*y` under which the invariants were
    /// computed.
    pub shear: i64,
    pub points: Vec<SingularPoint>,
    /// `(n-1)(n-2)/2`.
    pub arithmetic_genus: i64,
    /// `None` when some branch count is inconclusive.
    pub genus: Option<i64>,
    /// Sum of branch counts over all singular points, class sizes included.
    pub sum_branches: Option<u64>,
}

impl GenusReport {
    pub fn uncertified(&self) -> Vec<&SingularPoint> {
        self.points.iter().filter(|p| !p.certified()).collect()
    }

    /// Number of singular points, counting each class member.
    pub fn count(&self) -> usize {
        self.points.iter().map(SingularPoint::class_size).sum()
    }

    pub fn affine_count(&self) -> usize {
        self.points
            .iter()
            .filter(|p| p.location.is_affine())
            .map(SingularPoint::class_size)
            .sum()
    }
}

fn check_reduced(f: &BiPoly) -> Result<(), SingularError> {
    if f.degree() < 1 {
        return Err(SingularError::ConstantCurve);
    }
    let g = gcd(f, &gcd(&f.partial_x(), &f.partial_y()));
    if g.is_constant() {
        Ok(())
    } else {
        Err(SingularError::NonReducedCurve)
    }
}

/// `f_k(1, v)` for the homogeneous part of degree `k`.
fn slope_poly(f: &BiPoly, k: u32) -> UniPoly {
    f.homogeneous_part(k).dehomogenize()
}

/// Irreducible slope classes of singular points in the chart `[1 : v : 0]`.
fn infinity_slope_classes(f: &BiPoly) -> Vec<UniPoly> {
    let n = f.degree() as u32;
    let top = slope_poly(f, n);
    let next = slope_poly(f, n - 1);
    let g = top.gcd(&top.derivative()).gcd(&next);
    if g.degree() < 1 {
        return Vec::new();
    }
    factor(&g).into_iter().map(|(h, _)| h).collect()
}

/// Whether `[0 : 1 : 0]` is a singular point of the closure.
fn vertical_point_singular(f: &BiPoly) -> bool {
    let n = f.degree() as u32;
    f.coeff(0, n).is_zero() && f.coeff(1, n - 1).is_zero() && f.coeff(0, n - 1).is_zero()
}

/// Singular points of the projective closure of `f = 0`.
pub fn singular_points(f: &BiPoly) -> Result<Vec<Location>, SingularError> {
    check_reduced(f)?;
    let mut out: Vec<Location> = affine_singular_points(f)?
        .into_iter()
        .map(Location::Affine)
        .collect();
    for h in infinity_slope_classes(f) {
        out.push(Location::Infinity(InfinityPoint::Slope { minpoly: h }));
    }
    if vertical_point_singular(f) {
        out.push(Location::Infinity(InfinityPoint::Vertical));
    }
    out.sort_by(Location::cmp_key);
    Ok(out)
}

fn field_root(h: &UniPoly) -> (NumberField, UniPoly) {
    let k = NumberField::from_minpoly(h);
    let root = if k.is_rational() {
        UniPoly::constant(-h.coeff(0) / h.coeff(1))
    } else {
        k.generator()
    };
    (k, root)
}

/// Distinct `x` coordinates across and within classes.
fn distinct_abscissae(classes: &[PointClass]) -> bool {
    let mut seen: Vec<UniPoly> = Vec::new();
    for c in classes {
        let key = match c.as_rational() {
            Some((x, _)) => UniPoly::linear_root(&x),
            None if c.generator() == Generator::X => c.field().modulus().unwrap().clone(),
            None => return false,
        };
        if seen.contains(&key) {
            return false;
        }
        seen.push(key);
    }
    true
}

enum Attempt {
    Done(Vec<SingularPoint>),
    Retry,
}

fn attempt(f: &BiPoly, t: i64) -> Result<Attempt, SingularError> {
    let n = f.degree() as u32;
    let tq = rat(t);
    let fs = f.shear(&tq);
    if fs.coeff(0, n).is_zero() {
        return Ok(Attempt::Retry);
    }
    let classes = affine_singular_points(&fs)?;
    if !distinct_abscissae(&classes) {
        return Ok(Attempt::Retry);
    }
    let mut points = Vec::new();
    for c in classes {
        let k = c.field();
        let h = LocalPoly::translated(k, &fs, c.x(), c.y());
        let inv = match local_invariants(k, &h) {
            Ok(inv) => inv,
            Err(SingularError::ParityViolation { .. }) => return Ok(Attempt::Retry),
            Err(e) => return Err(e),
        };
        if inv.nu != inv.multiplicity {
            return Ok(Attempt::Retry);
        }
        let x = &c.x().clone() + &k.mul(c.y(), &UniPoly::constant(tq.clone()));
        let loc = PointClass::new(k.clone(), x, c.y().clone());
        points.push(SingularPoint {
            location: Location::Affine(loc),
            invariants: inv,
        });
    }
    let at_infinity = chart(&fs, n);
    for h in infinity_slope_classes(&fs) {
        let (k, v) = field_root(&h);
        let local = LocalPoly::translated(&k, &at_infinity, &UniPoly::zero(), &v);
        let inv = match local_invariants(&k, &local) {
            Ok(inv) => inv,
            Err(SingularError::ParityViolation { .. }) => return Ok(Attempt::Retry),
            Err(e) => return Err(e),
        };
        // Direction [1 : v] in sheared coordinates is [1 + t*v : v].
        let denom = &UniPoly::one() + &k.mul(&v, &UniPoly::constant(tq.clone()));
        let location = if denom.is_zero() {
            InfinityPoint::Vertical
        } else {
            let w = k.div(&v, &denom);
            InfinityPoint::Slope {
                minpoly: k.minimal_polynomial(&w),
            }
        };
        points.push(SingularPoint {
            location: Location::Infinity(location),
            invariants: inv,
        });
    }
    points.sort_by(|a, b| a.location.cmp_key(&b.location));
    Ok(Attempt::Done(points))
}

/// Genus of the normalization of the projective closure of `f = 0`, trying
/// shears `t = seed, seed + 1, ...` until the curve is monic in `y`, the
/// finite singular points have distinct `x` coordinates, and no singular
/// point has a vertical tangent.
pub fn genus(f: &BiPoly, seed: i64) -> Result<GenusReport, SingularError> {
    check_reduced(f)?;
    let n = f.degree() as u32;
    for t in seed..seed + MAX_SHEARS {
        let Attempt::Done(points) = attempt(f, t)? else {
            continue;
        };
        let arithmetic_genus = (n as i64 - 1) * (n as i64 - 2) / 2;
        let mut delta_sum = Some(0i64);
        let mut sum_branches = Some(0u64);
        for p in &points {
            let size = p.class_size();
            delta_sum = delta_sum
                .zip(p.invariants.delta_std())
                .map(|(acc, d)| acc + size as i64 * d as i64);
            sum_branches = sum_branches
                .zip(p.invariants.branches)
                .map(|(acc, r)| acc + size as u64 * r as u64);
        }
        return Ok(GenusReport {
            degree: n,
            shear: t,
            points,
            arithmetic_genus,
            genus: delta_sum.map(|d| arithmetic_genus - d),
            sum_branches,
        });
    }
    Err(SingularError::NoGenericShear)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn g(s: &str) -> i64 {
        genus(&p(s), 0).unwrap().genus.unwrap()
    }

    #[test]
    fn singular_point_examples() {
        let locs = |s: &str| -> Vec<String> {
            singular_points(&p(s)).unwrap().iter().map(|l| l.to_string()).collect()
        };
        assert_eq!(locs("y^2 - x^2 - x^3"), vec!["(0, 0)"]);
        assert_eq!(locs("y^2 - x^3"), vec!["(0, 0)"]);
        assert!(locs("x^3 + y^3 - 1").is_empty());
        // y = x^3 has a cusp at [0 : 1 : 0].
        assert_eq!(locs("y - x^3"), vec!["[0 : 1 : 0]"]);
        assert_eq!(singular_points(&p("(x - y)^2")), Err(SingularError::NonReducedCurve));
    }

    #[test]
    fn genus_oracles() {
        assert_eq!(g("y^2 - x^2 - x^3"), 0);
        assert_eq!(g("y^2 - x^3"), 0);
        assert_eq!(g("x^3 + y^3 - 1"), 1);
        assert_eq!(g("x^2 + y^2 - 1"), 0);
        assert_eq!(g("y - x"), 0);
        // Rational quartic with a triple point.
        assert_eq!(g("x^4 + y^4 - x*y^2"), 0);
        // y = x^3 and y^2 = x^5 are rational with singularities at infinity.
        assert_eq!(g("y - x^3"), 0);
        assert_eq!(g("y^2 - x^5"), 0);
        // Smooth quartic.
        assert_eq!(g("x^4 + y^4 - 1"), 3);
        // Elliptic curve in Weierstrass form: a flex at infinity only.
        assert_eq!(g("y^2 - x^3 + x"), 1);
        // Hyperelliptic genus 2: y^2 = x^5 - x.
        assert_eq!(g("y^2 - x^5 + x"), 2);
    }

    #[test]
    fn conjugate_nodes() {
        // Nodes at the conjugate pair (+-i, 0).
        let f = p("y^2 - (x^2 + 1)^2*(x - 2)");
        let r = genus(&f, 0).unwrap();
        let nodes: Vec<_> = r.points.iter().filter(|q| q.location.is_affine()).collect();
        assert_eq!(nodes.len(), 1);
        assert_eq!(nodes[0].class_size(), 2);
        assert_eq!(nodes[0].invariants.delta_std(), Some(1));
        // y^2 = quintic with two double roots: genus 2 - 2 = 0.
        assert_eq!(r.genus, Some(0));
    }

    #[test]
    fn shear_invariance() {
        for s in ["y^2 - x^2 - x^3", "y^2 - x^3", "x^3 + y^3 - 1", "y - x^3", "x^4 + y^4 - x*y^2"] {
            let a = genus(&p(s), 0).unwrap();
            let b = genus(&p(s), 3).unwrap();
            assert_eq!(a.genus, b.genus, "{s}");
            let deltas = |r: &GenusReport| -> Vec<(String, Option<u32>)> {
                r.points.iter().map(|q| (q.location.to_string(), q.invariants.delta_std())).collect()
            };
            assert_eq!(deltas(&a), deltas(&b), "{s}");
        }
    }
}
