//! Upper bounds on the degree of an invariant curve.

use std::fmt;
use std::str::FromStr;

use num_integer::Roots;

use crate::field::VectorField;

/// How the maximal search degree is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundRule {
    /// Smooth curves: `m + 1`.
    Smooth,
    /// Curves whose singular points are nodes: `2(m + 1)`.
    Nodal,
    /// Curves with `I(f, f_y) <= K` at every singular point.
    KBounded(u32),
    Explicit(u32),
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundRule::Smooth => write!(f, "smooth"),
            BoundRule::Nodal => write!(f, "nodal"),
            BoundRule::KBounded(k) => write!(f, "k:{k}"),
            BoundRule::Explicit(n) => write!(f, "explicit:{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown bound rule `{0}` (expected smooth, nodal, k:K or explicit:N with K, N >= 1)")]
pub struct BoundRuleError(pub String);

impl FromStr for BoundRule {
    type Err = BoundRuleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || BoundRuleError(s.to_string());
        let s = s.trim();
        let positive = |t: &str| t.trim().parse::<u32>().ok().filter(|&v| v >= 1).ok_or_else(err);
        match s {
            "smooth" => Ok(BoundRule::Smooth),
            "nodal" => Ok(BoundRule::Nodal),
            _ => {
                if let Some(k) = s.strip_prefix("k:").or_else(|| s.strip_prefix("k-bounded:")) {
                    Ok(BoundRule::KBounded(positive(k)?))
                } else if let Some(n) = s.strip_prefix("explicit:") {
                    Ok(BoundRule::Explicit(positive(n)?))
                } else {
                    Err(err())
                }
            }
        }
    }
}

pub fn smooth_degree(m: u32) -> u32 {
    m + 1
}

pub fn nodal_degree(m: u32) -> u32 {
    2 * (m + 1)
}

/// `floor((a + sqrt(a^2 + 16 K m^2)) / 4)` with `a = 4 + 2m + K`.
pub fn k_bounded_degree(m: u32, k: u32) -> u32 {
    let (m, k) = (m as u128, k as u128);
    let a = 4 + 2 * m + k;
    let disc = a * a + 16 * k * m * m;
    // a is an integer, so flooring the root first does not change the result.
    ((a + disc.sqrt()) / 4) as u32
}

pub fn degree_bound(field: &VectorField, rule: BoundRule) -> u32 {
    let m = field.degree();
    match rule {
        BoundRule::Smooth => smooth_degree(m),
        BoundRule::Nodal => nodal_degree(m),
        BoundRule::KBounded(k) => k_bounded_degree(m, k),
        BoundRule::Explicit(n) => n,
    }
}
