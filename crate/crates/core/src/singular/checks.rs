//! Degree, genus and singular-point count bounds for invariant curves.

use crate::certify::Certificate;
use crate::field::VectorField;
use crate::poly::BiPoly;
use crate::search::bounds::{k_bounded_degree, nodal_degree, smooth_degree};
use crate::verdict::{Status, Verdict};

use super::genus::{genus, singular_points, GenusReport, SingularPoint};
use super::SingularError;

/// `2g - 2 <= n(m - 1) - sum of branch counts over singular points`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusBound {
    pub report: GenusReport,
    /// `2g - 2`, when the genus is certified.
    pub lhs: Option<i64>,
    /// `n(m - 1) - sum r`, when every branch count is certified.
    pub rhs: Option<i64>,
    pub verdict: Verdict,
}

pub fn genus_bound_check(cert: &Certificate, seed: i64) -> Result<GenusBound, SingularError> {
    let report = genus(cert.f(), seed)?;
    let n = cert.degree() as i64;
    let m = cert.field().degree() as i64;
    let lhs = report.genus.map(|g| 2 * g - 2);
    let rhs = report.sum_branches.map(|s| n * (m - 1) - s as i64);
    let verdict = match (lhs, rhs) {
        (Some(l), Some(r)) => Verdict::new(Status::from_bool(l <= r), format!("{l} <= {r}")),
        _ => Verdict::new(Status::Uncertified, "branch count inconclusive"),
    };
    Ok(GenusBound {
        report,
        lhs,
        rhs,
        verdict,
    })
}

/// Counts of singular points against `m^2`, `m^2 + m + 1` and `m^2 + n/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingCounts {
    pub affine: usize,
    pub total: usize,
    pub affine_bound: Verdict,
    pub total_bound: Verdict,
    pub half_degree_bound: Verdict,
}

pub fn sing_count_check(f: &BiPoly, field: &VectorField) -> Result<SingCounts, SingularError> {
    let locs = singular_points(f)?;
    let affine: usize = locs.iter().filter(|l| l.is_affine()).map(|l| l.class_size()).sum();
    let total: usize = locs.iter().map(|l| l.class_size()).sum();
    let m = field.degree() as usize;
    let n = f.degree() as usize;
    let affine_bound = Verdict::new(
        Status::from_bool(affine <= m * m),
        format!("{affine} <= {}", m * m),
    );
    let (total_bound, half_degree_bound) = if field.is_dicritical() {
        (
            Verdict::new(Status::NotApplicable, "dicritical infinity"),
            Verdict::new(Status::NotApplicable, "dicritical infinity"),
        )
    } else {
        let b = m * m + m + 1;
        (
            Verdict::new(Status::from_bool(total <= b), format!("{total} <= {b}")),
            // total <= m^2 + n/2, compared with doubled sides.
            Verdict::new(
                Status::from_bool(2 * total <= 2 * m * m + n),
                format!("{total} <= {} + {n}/2", m * m),
            ),
        )
    };
    Ok(SingCounts {
        affine,
        total,
        affine_bound,
        total_bound,
        half_degree_bound,
    })
}

/// Degree bounds whose hypotheses are read off the singular points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeChecks {
    pub smooth: Verdict,
    pub nodal: Verdict,
    /// Largest `I(f, f_y)` over the singular points, at least 1.
    pub k_max: u32,
    pub k_max_bound: u32,
    pub k_max_verdict: Verdict,
    pub k_one_bound: u32,
    pub k_one_verdict: Verdict,
}

fn is_node(p: &SingularPoint) -> bool {
    p.invariants.multiplicity == 2 && p.invariants.branches == Some(2) && p.invariants.delta_std() == Some(1)
}

pub fn degree_bound_checks(cert: &Certificate, report: &GenusReport) -> DegreeChecks {
    let n = cert.degree();
    let m = cert.field().degree();
    let smooth = if report.points.is_empty() {
        let b = smooth_degree(m);
        Verdict::new(Status::from_bool(n <= b), format!("{n} <= {b}"))
    } else {
        Verdict::new(Status::NotApplicable, "curve has singular points")
    };
    let all_nodes = report.points.iter().all(is_node);
    let nodal = if all_nodes {
        let b = nodal_degree(m);
        Verdict::new(Status::from_bool(n <= b), format!("{n} <= {b}"))
    } else {
        Verdict::new(Status::NotApplicable, "a singular point is not a node")
    };
    let k_max = report
        .points
        .iter()
        .map(|p| p.invariants.int_number)
        .max()
        .unwrap_or(0)
        .max(1);
    let k_max_bound = k_bounded_degree(m, k_max);
    let k_max_verdict = Verdict::new(
        Status::from_bool(n <= k_max_bound),
        format!("{n} <= {k_max_bound} (K = {k_max})"),
    );
    let k_one_bound = k_bounded_degree(m, 1);
    let k_one_verdict = if all_nodes || k_max <= 1 {
        Verdict::new(
            Status::from_bool(n <= k_one_bound),
            format!("{n} <= {k_one_bound} (K = 1)"),
        )
    } else {
        Verdict::new(Status::NotApplicable, "K = 1 requires nodes only")
    };
    DegreeChecks {
        smooth,
        nodal,
        k_max,
        k_max_bound,
        k_max_verdict,
        k_one_bound,
        k_one_verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::compute_cofactor;
    use crate::poly::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn genus_bound_examples() {
        let cusp_field = VectorField::new(p("2*y"), p("3*x^2")).unwrap();
        let c = compute_cofactor(&cusp_field, &p("y^2 - x^3")).unwrap();
        let gb = genus_bound_check(&c, 0).unwrap();
        assert_eq!((gb.lhs, gb.rhs), (Some(-2), Some(2)));
        assert!(gb.verdict.holds());

        let circle_field = VectorField::new(p("-y + x*(x^2 + y^2 - 1)"), p("x + y*(x^2 + y^2 - 1)")).unwrap();
        let c = compute_cofactor(&circle_field, &p("x^2 + y^2 - 1")).unwrap();
        let gb = genus_bound_check(&c, 0).unwrap();
        assert_eq!((gb.lhs, gb.rhs), (Some(-2), Some(4)));

        let line_field = VectorField::new(p("1 + y^2"), p("x*y + y")).unwrap();
        let c = compute_cofactor(&line_field, &p("y")).unwrap();
        let gb = genus_bound_check(&c, 0).unwrap();
        assert_eq!((gb.lhs, gb.rhs), (Some(-2), Some(1)));
    }

    #[test]
    fn count_examples() {
        let cusp_field = VectorField::new(p("2*y"), p("3*x^2")).unwrap();
        let s = sing_count_check(&p("y^2 - x^3"), &cusp_field).unwrap();
        assert_eq!((s.affine, s.total), (1, 1));
        assert!(s.affine_bound.holds() && s.total_bound.holds() && s.half_degree_bound.holds());
        let circle_field = VectorField::new(p("-y + x*(x^2 + y^2 - 1)"), p("x + y*(x^2 + y^2 - 1)")).unwrap();
        let s = sing_count_check(&p("x^2 + y^2 - 1"), &circle_field).unwrap();
        assert_eq!(s.total, 0);
        assert_eq!(s.total_bound.status, Status::NotApplicable);
    }

    #[test]
    fn degree_examples() {
        let line_field = VectorField::new(p("1 + y^2"), p("x*y + y")).unwrap();
        let c = compute_cofactor(&line_field, &p("y")).unwrap();
        let r = genus(c.f(), 0).unwrap();
        let d = degree_bound_checks(&c, &r);
        assert!(d.smooth.holds());
        assert_eq!(d.k_one_bound, 5);
    }
}
