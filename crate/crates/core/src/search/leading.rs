//! Candidate top-degree parts of invariant curves, built from the rational
//! linear factors of `x*Q_m - y*P_m`.

use std::fmt;

use crate::field::VectorField;
use crate::poly::{factor_linear_rational, BiPoly, HomogeneousForm};

use super::SearchError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingForm {
    /// Linear factors with positive multiplicities, in factor order.
    pub parts: Vec<(HomogeneousForm, u32)>,
    pub degree: u32,
    /// Whether every root of `x*Q_m - y*P_m` is rational.
    pub complete: bool,
}

impl LeadingForm {
    pub fn form(&self) -> HomogeneousForm {
        let mut p = BiPoly::one();
        for (l, e) in &self.parts {
            p = &p * &l.poly().pow(*e);
        }
        HomogeneousForm::new(p, self.degree).expect("product of linear forms")
    }
}

impl fmt::Display for LeadingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|(l, e)| {
                let s = l.poly().to_string();
                let s = if s.contains(' ') { format!("({s})") } else { s };
                if *e == 1 {
                    s
                } else {
                    format!("{s}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Multiplicity vectors of length `k` summing to `n`, lexicographically
/// decreasing.
fn compositions(n: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if k == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn enumerate_leading_forms(field: &VectorField, n: u32) -> Result<Vec<LeadingForm>, SearchError> {
    let r = field.r_infinity();
    if r.is_zero() {
        return Err(SearchError::DicriticalInfinity);
    }
    let (factors, rest) = factor_linear_rational(&r);
    let complete = rest.degree() == 0;
    Ok(compositions(n, factors.len())
        .into_iter()
        .map(|mults| LeadingForm {
            parts: factors
                .iter()
                .zip(mults)
                .filter(|(_, e)| *e > 0)
                .map(|(f, e)| (f.form.clone(), e))
                .collect(),
            degree: n,
            complete,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn field(p: &str, q: &str) -> VectorField {
        VectorField::new(parse_poly(p).unwrap(), parse_poly(q).unwrap()).unwrap()
    }

    #[test]
    fn counts_and_order() {
        let line_field = field("1 + y^2", "x*y + y");
        let one = enumerate_leading_forms(&line_field, 1).unwrap();
        let names: Vec<String> = one.iter().map(|l| l.to_string()).collect();
        assert_eq!(names, vec!["y", "(x - y)", "(x + y)"]);
        assert!(one.iter().all(|l| l.complete));
        assert_eq!(enumerate_leading_forms(&line_field, 2).unwrap().len(), 6);
        assert_eq!(enumerate_leading_forms(&line_field, 3).unwrap().len(), 10);
    }

    #[test]
    fn incomplete_when_roots_irrational() {
        // x*Q_2 - y*P_2 = x*(x^2 + y^2) up to sign.
        let v = field("x*y", "x^2 + 2*y^2");
        let forms = enumerate_leading_forms(&v, 2).unwrap();
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].to_string(), "x^2");
        assert!(!forms[0].complete);
    }

    #[test]
    fn dicritical_rejected() {
        let circle_field = field("-y + x*(x^2 + y^2 - 1)", "x + y*(x^2 + y^2 - 1)");
        assert_eq!(enumerate_leading_forms(&circle_field, 1), Err(SearchError::DicriticalInfinity));
    }
}
