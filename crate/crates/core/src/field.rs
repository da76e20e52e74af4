//! Planar polynomial vector fields `x' = P(x, y)`, `y' = Q(x, y)`.

use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use crate::algebraic::approx::complex_roots;
use crate::algebraic::{solve_points, PointClass, SolveError};
use crate::poly::rational::format_rational;
use crate::poly::{factor, factor_linear_rational, gcd, BiPoly, HomogeneousForm, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("field degree {degree} is below 2")]
    DegreeTooLow { degree: i64 },
    #[error("P and Q share the factor {factor}")]
    CommonFactor { factor: BiPoly },
    #[error("x*Q_m - y*P_m vanishes identically (dicritical infinity)")]
    DicriticalInfinity,
    #[error("P and Q have infinitely many common zeros")]
    InfinitelyManyEquilibria,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    p: BiPoly,
    q: BiPoly,
    degree: u32,
}

impl VectorField {
    pub fn new(p: BiPoly, q: BiPoly) -> Result<Self, FieldError> {
        let degree = p.degree().max(q.degree());
        if degree <= 1 {
            return Err(FieldError::DegreeTooLow { degree });
        }
        let g = gcd(&p, &q);
        if !g.is_constant() {
            return Err(FieldError::CommonFactor { factor: g });
        }
        Ok(VectorField {
            p,
            q,
            degree: degree as u32,
        })
    }

    pub fn p(&self) -> &BiPoly {
        &self.p
    }

    pub fn q(&self) -> &BiPoly {
        &self.q
    }

    /// The degree `m = max(deg P, deg Q)`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn top_p(&self) -> HomogeneousForm {
        self.p.homogeneous_part(self.degree)
    }

    pub fn top_q(&self) -> HomogeneousForm {
        self.q.homogeneous_part(self.degree)
    }

    /// `x*Q_m - y*P_m`, of degree `m + 1` or identically zero.
    pub fn r_infinity(&self) -> HomogeneousForm {
        let r = &BiPoly::x() * self.top_q().poly() - &BiPoly::y() * self.top_p().poly();
        HomogeneousForm::new(r, self.degree + 1).expect("homogeneous by construction")
    }

    pub fn is_dicritical(&self) -> bool {
        self.r_infinity().is_zero()
    }

    /// `P * f_x + Q * f_y`.
    pub fn derivation(&self, f: &BiPoly) -> BiPoly {
        &(&self.p * &f.partial_x()) + &(&self.q * &f.partial_y())
    }

    pub fn darboux_divisor(&self) -> Result<DarbouxDivisor, FieldError> {
        let r = self.r_infinity();
        if r.is_zero() {
            return Err(FieldError::DicriticalInfinity);
        }
        let (linear, rest) = factor_linear_rational(&r);
        let mut points: Vec<DarbouxPoint> = linear
            .into_iter()
            .map(|lf| {
                let point = match lf.root {
                    Some(z) => ProjectivePoint::Exact {
                        x: Rational::from_integer(1.into()),
                        y: z,
                    },
                    None => ProjectivePoint::Exact {
                        x: Rational::zero(),
                        y: Rational::from_integer(1.into()),
                    },
                };
                DarbouxPoint {
                    point,
                    multiplicity: lf.multiplicity,
                }
            })
            .collect();
        for (h, e) in factor(&rest.dehomogenize()) {
            points.push(DarbouxPoint {
                point: ProjectivePoint::Conjugate { minpoly: h },
                multiplicity: e as u32,
            });
        }
        Ok(DarbouxDivisor { points })
    }

    /// Chart at infinity `x = 1/u, y = v/u` for the field and optionally a
    /// curve `f` with cofactor `k`.
    pub fn infinity_chart(&self, f: Option<&BiPoly>, k: Option<&BiPoly>) -> InfinityChart {
        let m = self.degree;
        let pc = chart(&self.p, m);
        let qc = chart(&self.q, m);
        let u = BiPoly::x();
        let v = BiPoly::y();
        let a = -&(&u * &pc);
        let b = &qc - &(&v * &pc);
        let f_chart = f.map(|f| chart(f, f.degree().max(0) as u32));
        let k_chart = match (f, k) {
            (Some(f), Some(k)) => {
                let n = Rational::from_integer(f.degree().max(0).into());
                Some(&chart(k, m - 1) - &pc.scale(&n))
            }
            _ => None,
        };
        InfinityChart {
            a,
            b,
            f: f_chart,
            k: k_chart,
        }
    }

    pub fn finite_equilibria(&self) -> Result<Vec<PointClass>, FieldError> {
        solve_points(&[self.p.clone(), self.q.clone()]).map_err(|e| match e {
            SolveError::InfinitelyMany => FieldError::InfinitelyManyEquilibria,
        })
    }
}

/// `u^w * p(1/u, v/u)` written in the variables `(x, y) = (u, v)`; requires
/// `w >= deg p`.
pub fn chart(p: &BiPoly, w: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for (e, c) in p.terms() {
        assert!(e.degree() <= w, "chart weight below degree");
        out = &out + &BiPoly::monomial(c.clone(), w - e.degree(), e.y);
    }
    out
}

/// A point of the line at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectivePoint {
    /// `[x : y]` with the first nonzero coordinate equal to 1.
    Exact { x: Rational, y: Rational },
    /// The points `[1 : z]` for the roots `z` of an irreducible polynomial.
    Conjugate { minpoly: UniPoly },
}

impl ProjectivePoint {
    pub fn class_size(&self) -> usize {
        match self {
            ProjectivePoint::Exact { .. } => 1,
            ProjectivePoint::Conjugate { minpoly } => minpoly.deg(),
        }
    }

    /// Float slopes `z` of the member points `[1 : z]`; `[0 : 1]` gives none.
    pub fn approx_slopes(&self) -> Vec<Complex64> {
        match self {
            ProjectivePoint::Exact { x, y } if !x.is_zero() => {
                vec![Complex64::new(crate::poly::rational::to_f64(y), 0.0)]
            }
            ProjectivePoint::Exact { .. } => Vec::new(),
            ProjectivePoint::Conjugate { minpoly } => complex_roots(minpoly),
        }
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProjectivePoint::Exact { x, y } => {
                write!(f, "[{} : {}]", format_rational(x), format_rational(y))
            }
            ProjectivePoint::Conjugate { minpoly } => {
                write!(f, "[1 : z] where {} = 0", minpoly.to_string_in("z"))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxPoint {
    pub point: ProjectivePoint,
    pub multiplicity: u32,
}

/// The projective zeros of `x*Q_m - y*P_m` with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxDivisor {
    pub points: Vec<DarbouxPoint>,
}

impl DarbouxDivisor {
    /// Sum of multiplicity times class size; equals `m + 1`.
    pub fn total(&self) -> usize {
        self.points
            .iter()
            .map(|p| p.multiplicity as usize * p.point.class_size())
            .sum()
    }
}

/// The field and curve data in the chart `x = 1/u, y = v/u`, with `u`, `v`
/// stored in the first and second variable slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityChart {
    pub a: BiPoly,
    pub b: BiPoly,
    pub f: Option<BiPoly>,
    pub k: Option<BiPoly>,
}

impl InfinityChart {
    /// `A * F_u + B * F_v - K * F`, when curve data is present.
    pub fn transport_residual(&self) -> Option<BiPoly> {
        let (f, k) = (self.f.as_ref()?, self.k.as_ref()?);
        let lhs = &(&self.a * &f.partial_x()) + &(&self.b * &f.partial_y());
        Some(&lhs - &(k * f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::poly::rational::rat;
    use proptest::prelude::*;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn field(ps: &str, qs: &str) -> VectorField {
        VectorField::new(p(ps), p(qs)).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(field("1 + y^2", "x*y + y").degree(), 2);
        assert_eq!(field("2*y", "3*x^2").degree(), 2);
        assert_eq!(
            VectorField::new(p("x*y"), p("x*(x + 1)")),
            Err(FieldError::CommonFactor { factor: p("x") })
        );
        assert_eq!(
            VectorField::new(p("x + y"), p("1")),
            Err(FieldError::DegreeTooLow { degree: 1 })
        );
    }

    #[test]
    fn r_infinity_examples() {
        assert_eq!(field("1 + y^2", "x*y + y").r_infinity().poly(), &p("x^2*y - y^3"));
        assert_eq!(field("2*y", "3*x^2").r_infinity().poly(), &p("3*x^3"));
        let circle_field = field("-y + x*(x^2 + y^2 - 1)", "x + y*(x^2 + y^2 - 1)");
        assert!(circle_field.r_infinity().is_zero());
        assert_eq!(circle_field.darboux_divisor(), Err(FieldError::DicriticalInfinity));
    }

    #[test]
    fn divisor_examples() {
        let d = field("1 + y^2", "x*y + y").darboux_divisor().unwrap();
        let s: Vec<String> = d.points.iter().map(|p| p.point.to_string()).collect();
        assert_eq!(s, vec!["[1 : 0]", "[1 : 1]", "[1 : -1]"]);
        assert!(d.points.iter().all(|p| p.multiplicity == 1));

        let d = field("2*y", "3*x^2").darboux_divisor().unwrap();
        assert_eq!(d.points.len(), 1);
        assert_eq!(d.points[0].point.to_string(), "[0 : 1]");
        assert_eq!(d.points[0].multiplicity, 3);

        // R = x*(x^2 + y^2) * ... with an irrational pair.
        let d = field("-y^2 - x^2", "x*y").darboux_divisor().unwrap();
        assert_eq!(d.total(), 3);
        assert!(d.points.iter().any(|p| p.point.class_size() == 2));
    }

    #[test]
    fn chart_examples() {
        let line_field = field("1 + y^2", "x*y + y");
        let ch = line_field.infinity_chart(None, None);
        let b0: BiPoly = ch.b.terms().filter(|(e, _)| e.x == 0).map(|(e, c)| BiPoly::monomial(c.clone(), 0, e.y)).fold(BiPoly::zero(), |a, b| &a + &b);
        assert_eq!(b0, p("y - y^3"));
        assert!(ch.a.terms().all(|(e, _)| e.x >= 1));

        let cusp_field = field("2*y", "3*x^2");
        let ch = cusp_field.infinity_chart(Some(&p("y^2 - x^3")), Some(&BiPoly::zero()));
        assert_eq!(ch.f.as_ref().unwrap(), &p("x*y^2 - 1"));
        assert!(ch.transport_residual().unwrap().is_zero());
    }

    #[test]
    fn equilibria_examples() {
        let eq = field("1 + y^2", "x*y + y").finite_equilibria().unwrap();
        assert_eq!(eq.len(), 1);
        assert_eq!(eq[0].to_string(), "(-1, y) where y^2 + 1 = 0");
        let eq = field("2*y", "3*x^2").finite_equilibria().unwrap();
        assert_eq!(eq, vec![PointClass::rational(rat(0), rat(0))]);
        let eq = field("-y + x*(x^2 + y^2 - 1)", "x + y*(x^2 + y^2 - 1)").finite_equilibria().unwrap();
        let total: usize = eq.iter().map(PointClass::size).sum();
        assert_eq!(eq[0], PointClass::rational(rat(0), rat(0)));
        assert_eq!(total, 1);
    }

    fn small_poly(deg: u32) -> impl Strategy<Value = BiPoly> {
        let n = ((deg + 1) * (deg + 2) / 2) as usize;
        proptest::collection::vec(-3i64..4, n).prop_map(move |cs| {
            let mut out = BiPoly::zero();
            let mut it = cs.into_iter();
            for d in 0..=deg {
                for j in 0..=d {
                    out = &out + &BiPoly::monomial(rat(it.next().unwrap()), d - j, j);
                }
            }
            out
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn chart_boundary_is_r_infinity(pp in small_poly(3), qq in small_poly(3)) {
            if let Ok(v) = VectorField::new(pp, qq) {
                let ch = v.infinity_chart(None, None);
                let b0 = ch.b.terms().filter(|(e, _)| e.x == 0)
                    .fold(BiPoly::zero(), |a, (e, c)| &a + &BiPoly::monomial(c.clone(), 0, e.y));
                let r = v.r_infinity().dehomogenize();
                prop_assert_eq!(b0, BiPoly::from_uni_y(&r));
                if let Ok(d) = v.darboux_divisor() {
                    prop_assert_eq!(d.total(), v.degree() as usize + 1);
                }
            }
        }
    }
}
