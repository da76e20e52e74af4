//! Points of a curve on the line at infinity, sorted into simple points,
//! multiple smooth points and multiple singular points.

use num_traits::Zero;

use crate::poly::{factor, BiPoly};

use super::genus::InfinityPoint;
use super::SingularError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfinityClass {
    /// Simple root of the leading form.
    Simple,
    /// Multiple root where the curve is still smooth.
    MultipleSmooth,
    /// Multiple root at a singular point.
    MultipleSingular,
}

impl InfinityClass {
    pub fn label(self) -> &'static str {
        match self {
            InfinityClass::Simple => "V1",
            InfinityClass::MultipleSmooth => "V2",
            InfinityClass::MultipleSingular => "V3",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityPointClass {
    pub point: InfinityPoint,
    /// Multiplicity of each member as a root of the leading form.
    pub multiplicity: u32,
    pub class: InfinityClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityClassification {
    pub degree: u32,
    pub points: Vec<InfinityPointClass>,
    /// Number of simple points.
    pub simple: u32,
    /// Sum of multiplicities over multiple smooth points.
    pub multiple_smooth: u32,
    /// Sum of multiplicities over multiple singular points.
    pub multiple_singular: u32,
}

impl InfinityClassification {
    /// The partition identity `simple + multiple_smooth + multiple_singular = n`.
    pub fn identity_holds(&self) -> bool {
        self.simple + self.multiple_smooth + self.multiple_singular == self.degree
    }
}

/// Classifies the points at infinity of `f = 0`. Points `[1 : v : 0]` are
/// read off `f_n(1, v)`; the point `[0 : 1 : 0]` is handled in the chart
/// `y = 1`, so no change of coordinates is needed when `x` divides `f_n`.
pub fn classify_infinity(f: &BiPoly) -> Result<InfinityClassification, SingularError> {
    if f.degree() < 1 {
        return Err(SingularError::ConstantCurve);
    }
    let n = f.degree() as u32;
    let top = f.homogeneous_part(n);
    let top_slope = top.dehomogenize();
    let next_slope = f.homogeneous_part(n - 1).dehomogenize();
    let mut points = Vec::new();
    let mut tally = [0u32; 3];
    let mut push = |point: InfinityPoint, mult: u32, smooth: bool| {
        let size = point.class_size() as u32;
        let class = if mult == 1 {
            tally[0] += size;
            InfinityClass::Simple
        } else if smooth {
            tally[1] += size * mult;
            InfinityClass::MultipleSmooth
        } else {
            tally[2] += size * mult;
            InfinityClass::MultipleSingular
        };
        points.push(InfinityPointClass {
            point,
            multiplicity: mult,
            class,
        });
    };
    for (h, e) in factor(&top_slope) {
        // dF/du at (0, v) is f_{n-1}(1, v); nonzero on the whole class iff
        // h does not divide it.
        let smooth = !h.divides(&next_slope);
        push(InfinityPoint::Slope { minpoly: h }, e as u32, smooth);
    }
    let x_mult = top.x_multiplicity();
    if x_mult > 0 {
        // In the chart y = 1, dG/dw at the origin is the y^(n-1) coefficient
        // of f_{n-1}.
        let smooth = !f.coeff(0, n - 1).is_zero();
        push(InfinityPoint::Vertical, x_mult, smooth);
    }
    Ok(InfinityClassification {
        degree: n,
        points,
        simple: tally[0],
        multiple_smooth: tally[1],
        multiple_singular: tally[2],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn cls(s: &str) -> InfinityClassification {
        classify_infinity(&parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let c = cls("y^2 - x^3");
        assert_eq!(c.points.len(), 1);
        assert_eq!(c.points[0].point, InfinityPoint::Vertical);
        assert_eq!(c.points[0].class, InfinityClass::MultipleSmooth);
        assert_eq!(c.points[0].multiplicity, 3);
        assert!(c.identity_holds());

        let c = cls("x^2 + y^2 - 1");
        assert_eq!(c.points.len(), 1);
        assert_eq!(c.points[0].point.class_size(), 2);
        assert_eq!(c.simple, 2);
        assert!(c.identity_holds());

        let c = cls("y");
        assert_eq!(c.simple, 1);
        assert_eq!(c.points[0].class, InfinityClass::Simple);

        // y^2 = x^5 at [0 : 1 : 0]: multiplicity 5, f_4 = 0 so singular.
        let c = cls("y^2 - x^5");
        assert_eq!(c.points[0].class, InfinityClass::MultipleSingular);
        assert!(c.identity_holds());
    }
}
