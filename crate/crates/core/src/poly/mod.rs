//! Exact polynomial arithmetic over the rationals.

pub mod bipoly;
pub mod factor;
pub mod gcd;
pub mod parse;
pub mod rational;
pub mod unipoly;

use thiserror::Error;

pub use bipoly::{BiPoly, Exp, HomogeneousForm};
pub use factor::{factor, factor_linear_rational, squarefree_form, LinearFactor};
pub use gcd::{eliminant_y, gcd, resultant_x, resultant_y};
pub use parse::{parse_poly, parse_poly_in, ParseError};
pub use rational::Rational;
pub use unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("resultant needs both inputs of positive degree in the eliminated variable")]
    DegenerateResultant,
}
