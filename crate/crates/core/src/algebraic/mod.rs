//! Algebraic numbers: simple extensions of `Q`, polynomials over them, and
//! zero-dimensional solving into conjugate classes.

pub mod approx;
pub mod kpoly;
pub mod local;
pub mod numfield;
pub mod solve;

pub use kpoly::KPoly;
pub use local::LocalPoly;
pub use numfield::NumberField;
pub use solve::{solve_points, Generator, PointClass, SolveError};
