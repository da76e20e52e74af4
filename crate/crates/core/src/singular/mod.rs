//! Singularities of plane curves, genus, and the bound checks that use them.

pub mod branches;
pub mod checks;
pub mod genus;
pub mod infinity;
pub mod intersection;
pub mod ramification;

use thiserror::Error;

use crate::algebraic::{LocalPoly, NumberField, SolveError};

pub use branches::branch_count;
pub use checks::{degree_bound_checks, genus_bound_check, sing_count_check, DegreeChecks, SingCounts};
pub use genus::{genus, singular_points, GenusReport, InfinityPoint, Location, SingularPoint};
pub use infinity::{classify_infinity, InfinityClass, InfinityClassification, InfinityPointClass};
pub use intersection::{intersection_number, projection_multiplicity};
pub use ramification::{ramification_report, RamificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularError {
    #[error("the curves share a component through the point")]
    CommonComponent,
    #[error("the vertical line through the point is a component")]
    VerticalComponent,
    #[error("branch count did not resolve within the depth cap")]
    BranchCountInconclusive,
    #[error("the curve has a repeated component")]
    NonReducedCurve,
    #[error("the curve is a constant")]
    ConstantCurve,
    #[error("the curve has singular points")]
    CurveNotSmooth,
    #[error("parity check failed: I(f, f_y) - nu + r = {value} is odd or negative")]
    ParityViolation { value: i64 },
    #[error("no shear in the tried range puts the curve in general position")]
    NoGenericShear,
    #[error("singular locus could not be solved: {0}")]
    Solve(#[from] SolveError),
}

/// Invariants of a curve germ at the origin with respect to the projection
/// onto the first coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalInvariants {
    /// Order of the lowest nonvanishing homogeneous part.
    pub multiplicity: u32,
    /// `I(h, h_y)`.
    pub int_number: u32,
    /// `I(h, x)`, the local degree of the projection.
    pub nu: u32,
    /// Branch count, `None` when inconclusive.
    pub branches: Option<u32>,
}

impl LocalInvariants {
    /// `(I - nu + r) / 2`.
    pub fn delta_std(&self) -> Option<u32> {
        self.branches
            .map(|r| (self.int_number as i64 - self.nu as i64 + r as i64) as u32 / 2)
    }

    /// `I + r - nu`.
    pub fn delta_alt(&self) -> Option<i64> {
        self.branches
            .map(|r| self.int_number as i64 + r as i64 - self.nu as i64)
    }
}

pub fn local_invariants(k: &NumberField, h: &LocalPoly) -> Result<LocalInvariants, SingularError> {
    let multiplicity = h.order().unwrap_or(0);
    let int_number = intersection::intersection_at_origin(k, h, &h.partial_y())?;
    let nu = intersection::projection_multiplicity_at_origin(h)?;
    let branches = match branches::branches_at_origin(k, h) {
        Ok(r) => Some(r),
        Err(SingularError::BranchCountInconclusive) => None,
        Err(e) => return Err(e),
    };
    if let Some(r) = branches {
        let value = int_number as i64 - nu as i64 + r as i64;
        if value < 0 || value % 2 != 0 {
            return Err(SingularError::ParityViolation { value });
        }
    }
    Ok(LocalInvariants {
        multiplicity,
        int_number,
        nu,
        branches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn at_origin(s: &str) -> LocalInvariants {
        let k = NumberField::rationals();
        local_invariants(&k, &LocalPoly::from_bipoly(&parse_poly(s).unwrap())).unwrap()
    }

    #[test]
    fn delta_examples() {
        let node = at_origin("y^2 - x^2 - x^3");
        assert_eq!((node.int_number, node.nu, node.branches), (2, 2, Some(2)));
        assert_eq!((node.delta_std(), node.delta_alt()), (Some(1), Some(2)));
        let cusp = at_origin("y^2 - x^3");
        assert_eq!((cusp.int_number, cusp.nu, cusp.branches), (3, 2, Some(1)));
        assert_eq!((cusp.delta_std(), cusp.delta_alt()), (Some(1), Some(2)));
        let smooth = at_origin("y - x^2");
        assert_eq!(smooth.delta_std(), Some(0));
        let tacnode = at_origin("y^2 - x^4");
        assert_eq!(tacnode.delta_std(), Some(2));
    }
}
