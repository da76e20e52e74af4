//! Branching of the projection `(x, y) -> x` on a smooth curve.

use crate::algebraic::{solve_points, LocalPoly};
use crate::certify::compute_cofactor;
use crate::field::VectorField;
use crate::poly::BiPoly;
use crate::verdict::{Status, Verdict};

use super::genus::singular_points;
use super::intersection::intersection_at_origin;
use super::SingularError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub degree: u32,
    /// `2g - 2 + 2n = n^2 - n` for a smooth curve.
    pub total: u64,
    /// Ramification at infinity, `total - finite`.
    pub at_infinity: u64,
    /// Ramification over finite points, the sum of `I(f, f_y)`.
    pub finite: u64,
    /// `at_infinity <= n - 1`.
    pub infinity_bound: Verdict,
    /// `finite <= m n`.
    pub finite_bound: Verdict,
}

/// Ramification divisor degrees for a smooth curve. Bound verdicts are given
/// only when `field` is present and leaves the curve invariant.
pub fn ramification_report(
    f: &BiPoly,
    field: Option<&VectorField>,
) -> Result<RamificationReport, SingularError> {
    if f.degree() < 1 {
        return Err(SingularError::ConstantCurve);
    }
    if !singular_points(f)?.is_empty() {
        return Err(SingularError::CurveNotSmooth);
    }
    let n = f.degree() as u64;
    let total = n * n - n;
    let fy = f.partial_y();
    let mut finite = 0u64;
    if !fy.is_zero() && n > 1 {
        for c in solve_points(&[f.clone(), fy.clone()])? {
            let k = c.field();
            let h = LocalPoly::translated(k, f, c.x(), c.y());
            let hy = LocalPoly::translated(k, &fy, c.x(), c.y());
            finite += c.size() as u64 * intersection_at_origin(k, &h, &hy)? as u64;
        }
    }
    let at_infinity = total - finite;
    let invariant = field.filter(|v| compute_cofactor(v, f).is_some());
    let (infinity_bound, finite_bound) = match invariant {
        Some(v) => {
            let mn = v.degree() as u64 * n;
            (
                Verdict::new(
                    Status::from_bool(at_infinity < n),
                    format!("{at_infinity} <= {}", n - 1),
                ),
                Verdict::new(Status::from_bool(finite <= mn), format!("{finite} <= {mn}")),
            )
        }
        None => (
            Verdict::new(Status::NotApplicable, "curve is not a certified invariant curve"),
            Verdict::new(Status::NotApplicable, "curve is not a certified invariant curve"),
        ),
    };
    Ok(RamificationReport {
        degree: n as u32,
        total,
        at_infinity,
        finite,
        infinity_bound,
        finite_bound,
    })
}
