//! Cofactor certificates `P*f_x + Q*f_y = k*f` and the checks built on them.

use num_traits::Zero;

use crate::algebraic::{solve_points, PointClass, SolveError};
use crate::field::VectorField;
use crate::poly::rational::ratio;
use crate::poly::{gcd, squarefree_form, BiPoly, HomogeneousForm, Rational};
use crate::verdict::{Status, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Verified,
    Reducible,
    Unknown,
}

impl Irreducibility {
    pub fn as_str(self) -> &'static str {
        match self {
            Irreducibility::Verified => "verified",
            Irreducibility::Reducible => "reducible",
            Irreducibility::Unknown => "unknown",
        }
    }
}

/// Decides irreducibility over `C` for lines and conics; otherwise unknown.
pub fn irreducibility(f: &BiPoly) -> Irreducibility {
    match f.degree() {
        1 => Irreducibility::Verified,
        2 => {
            let c = |i, j| f.coeff(i, j);
            let h = |r: Rational| r * ratio(1, 2);
            let m = [
                [c(2, 0), h(c(1, 1)), h(c(1, 0))],
                [h(c(1, 1)), c(0, 2), h(c(0, 1))],
                [h(c(1, 0)), h(c(0, 1)), c(0, 0)],
            ];
            let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
            if det.is_zero() {
                Irreducibility::Reducible
            } else {
                Irreducibility::Verified
            }
        }
        _ => Irreducibility::Unknown,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    field: VectorField,
    f: BiPoly,
    k: BiPoly,
    irreducibility: Irreducibility,
}

impl Certificate {
    /// Builds a certificate after checking the cofactor identity exactly.
    pub fn new(field: &VectorField, f: BiPoly, k: BiPoly) -> Option<Self> {
        if f.degree() < 1 || k.degree() > field.degree() as i64 - 1 {
            return None;
        }
        if !verify_certificate(field, &f, &k).holds {
            return None;
        }
        let irreducibility = irreducibility(&f);
        Some(Certificate {
            field: field.clone(),
            f,
            k,
            irreducibility,
        })
    }

    pub fn field(&self) -> &VectorField {
        &self.field
    }

    pub fn f(&self) -> &BiPoly {
        &self.f
    }

    pub fn k(&self) -> &BiPoly {
        &self.k
    }

    /// `n = deg f`.
    pub fn degree(&self) -> u32 {
        self.f.degree() as u32
    }

    pub fn is_first_integral(&self) -> bool {
        self.k.is_zero()
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    pub fn verify(&self) -> Verification {
        verify_certificate(&self.field, &self.f, &self.k)
    }
}

/// `P*f_x + Q*f_y` divided by `f`, when the division is exact.
pub fn compute_cofactor(field: &VectorField, f: &BiPoly) -> Option<Certificate> {
    if f.degree() < 1 {
        return None;
    }
    let k = field.derivation(f).exact_divide(f).ok()??;
    debug_assert!(k.degree() < field.degree() as i64);
    let irreducibility = irreducibility(f);
    Some(Certificate {
        field: field.clone(),
        f: f.clone(),
        k,
        irreducibility,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub holds: bool,
    /// `P*f_x + Q*f_y - k*f`.
    pub residual: BiPoly,
}

pub fn verify_certificate(field: &VectorField, f: &BiPoly, k: &BiPoly) -> Verification {
    let residual = &field.derivation(f) - &(k * f);
    Verification {
        holds: residual.is_zero(),
        residual,
    }
}

/// `(P_m * h_x + Q_m * h_y) / h` for a leading form `h`, when exact.
pub fn leading_cofactor(field: &VectorField, top: &HomogeneousForm) -> Option<HomogeneousForm> {
    if top.is_zero() {
        return None;
    }
    let h = top.poly();
    let num = &(field.top_p().poly() * &h.partial_x()) + &(field.top_q().poly() * &h.partial_y());
    let k = num.exact_divide(h).ok()??;
    HomogeneousForm::new(k, field.degree() - 1)
}

/// Every point of the curve at infinity must be a Darboux point: the
/// squarefree part of `f_n` divides the squarefree part of `x*Q_m - y*P_m`.
pub fn check_infinity_points(field: &VectorField, f: &BiPoly) -> Verdict {
    let r = field.r_infinity();
    if r.is_zero() {
        return Verdict::new(Status::NotApplicable, "dicritical infinity");
    }
    let top = squarefree_form(&f.leading_form());
    let rs = squarefree_form(&r);
    let common = gcd(top.poly(), rs.poly());
    let offending = top.poly().exact_divide(&common).unwrap().expect("gcd divides");
    if offending.is_constant() {
        Verdict::new(Status::Holds, format!("{} divides {}", top.poly(), rs.poly()))
    } else {
        Verdict::new(Status::Fails, format!("offending factor {}", offending.monic()))
    }
}

/// Finite singular points of `f = 0`.
pub fn affine_singular_points(f: &BiPoly) -> Result<Vec<PointClass>, SolveError> {
    solve_points(&[f.clone(), f.partial_x(), f.partial_y()])
}

/// Every finite singular point of an invariant curve is an equilibrium.
pub fn check_singular_equilibria(cert: &Certificate) -> Result<Verdict, SolveError> {
    let points = affine_singular_points(cert.f())?;
    let field = cert.field();
    let bad: Vec<String> = points
        .iter()
        .filter(|c| !(c.eval(field.p()).is_zero() && c.eval(field.q()).is_zero()))
        .map(|c| c.to_string())
        .collect();
    if points.is_empty() {
        return Ok(Verdict::new(Status::Holds, "no finite singular points"));
    }
    if bad.is_empty() {
        let list: Vec<String> = points.iter().map(|c| c.to_string()).collect();
        Ok(Verdict::new(
            Status::Holds,
            format!("P = Q = 0 at {}", list.join(", ")),
        ))
    } else {
        Ok(Verdict::new(
            Status::Fails,
            format!("not equilibria: {}", bad.join(", ")),
        ))
    }
}

/// Consistency of the certificate with the chart at infinity:
/// `A*F_u + B*F_v = K*F`.
pub fn check_chart_transport(cert: &Certificate) -> Verdict {
    let ch = cert.field().infinity_chart(Some(cert.f()), Some(cert.k()));
    let res = ch.transport_residual().expect("curve data present");
    if res.is_zero() {
        Verdict::new(Status::Holds, "A*F_u + B*F_v - K*F = 0")
    } else {
        Verdict::new(Status::Fails, format!("residual {}", res.to_string_in("u", "v")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn line_field() -> VectorField {
        VectorField::new(p("1 + y^2"), p("x*y + y")).unwrap()
    }

    fn cusp_field() -> VectorField {
        VectorField::new(p("2*y"), p("3*x^2")).unwrap()
    }

    fn circle_field() -> VectorField {
        VectorField::new(p("-y + x*(x^2 + y^2 - 1)"), p("x + y*(x^2 + y^2 - 1)")).unwrap()
    }

    #[test]
    fn cofactor_examples() {
        assert_eq!(compute_cofactor(&line_field(), &p("y")).unwrap().k(), &p("x + 1"));
        let c = compute_cofactor(&cusp_field(), &p("y^2 - x^3")).unwrap();
        assert!(c.is_first_integral());
        assert_eq!(compute_cofactor(&circle_field(), &p("x^2 + y^2 - 1")).unwrap().k(), &p("2*x^2 + 2*y^2"));
        assert!(compute_cofactor(&line_field(), &p("x")).is_none());
    }

    #[test]
    fn verification_examples() {
        let f = p("y");
        assert!(verify_certificate(&line_field(), &f, &p("x + 1")).holds);
        let v = verify_certificate(&line_field(), &f, &p("x"));
        assert!(!v.holds);
        assert_eq!(v.residual, p("y"));
        let v = verify_certificate(&line_field(), &f, &p("x + 2"));
        assert_eq!(v.residual, -&f);
    }

    #[test]
    fn leading_cofactor_examples() {
        let lf = |s: &str| HomogeneousForm::from_poly(p(s)).unwrap();
        assert_eq!(leading_cofactor(&line_field(), &lf("y")).unwrap().poly(), &p("x"));
        assert!(leading_cofactor(&cusp_field(), &lf("-x^3")).unwrap().is_zero());
        assert!(leading_cofactor(&line_field(), &lf("x")).is_none());
    }

    #[test]
    fn infinity_point_checks() {
        assert!(check_infinity_points(&line_field(), &p("y")).holds());
        assert!(check_infinity_points(&cusp_field(), &p("y^2 - x^3")).holds());
        let v = check_infinity_points(&line_field(), &p("x"));
        assert_eq!(v.status, Status::Fails);
        assert!(v.detail.contains("x"));
        assert_eq!(check_infinity_points(&circle_field(), &p("x^2 + y^2 - 1")).status, Status::NotApplicable);
    }

    #[test]
    fn singular_equilibria_examples() {
        let c = compute_cofactor(&cusp_field(), &p("y^2 - x^3")).unwrap();
        let v = check_singular_equilibria(&c).unwrap();
        assert!(v.holds(), "{v:?}");
        let c = compute_cofactor(&circle_field(), &p("x^2 + y^2 - 1")).unwrap();
        assert!(check_singular_equilibria(&c).unwrap().holds());
        // x*y is invariant for x' = x*(1 + y^2 + x), y' = -y*(1 + x^2): the
        // crossing (0, 0) is an equilibrium. Under a field where the
        // crossing is not an equilibrium, x*y cannot be invariant.
        let v = VectorField::new(p("x*(1 + y^2 + x)"), p("-y*(1 + x^2)")).unwrap();
        let c = compute_cofactor(&v, &p("x*y")).unwrap();
        assert!(check_singular_equilibria(&c).unwrap().holds());
    }

    #[test]
    fn conic_irreducibility() {
        assert_eq!(irreducibility(&p("x^2 + y^2 - 1")), Irreducibility::Verified);
        assert_eq!(irreducibility(&p("x^2 - y^2")), Irreducibility::Reducible);
        assert_eq!(irreducibility(&p("x^2 + y^2")), Irreducibility::Reducible);
        assert_eq!(irreducibility(&p("y")), Irreducibility::Verified);
        assert_eq!(irreducibility(&p("y^2 - x^3")), Irreducibility::Unknown);
    }

    #[test]
    fn chart_transport_holds() {
        for (v, f) in [(line_field(), "y"), (cusp_field(), "y^2 - x^3"), (circle_field(), "x^2 + y^2 - 1")] {
            let c = compute_cofactor(&v, &p(f)).unwrap();
            assert!(check_chart_transport(&c).holds());
        }
    }
}
