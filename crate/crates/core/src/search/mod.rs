//! Search for algebraic invariant curves of a vector field.
//!
//! Degrees run from 1 to a bound; for each degree the top part of the curve
//! is a product of the rational linear factors of `x*Q_m - y*P_m`, and the
//! lower parts are solved for level by level.

pub mod bounds;
pub mod leading;
pub mod param;
pub mod solve;

use thiserror::Error;

use crate::certify::Certificate;
use crate::field::VectorField;
use crate::poly::BiPoly;
use crate::verdict::{Status, Verdict};

pub use bounds::{degree_bound, k_bounded_degree, nodal_degree, smooth_degree, BoundRule, BoundRuleError};
pub use leading::{enumerate_leading_forms, LeadingForm};
pub use solve::{solve_from_leading_form, Family, LeadingSolutions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("x*Q_m - y*P_m vanishes identically; curves must be supplied by hand")]
    DicriticalInfinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub rule: BoundRule,
    /// Leading forms tried per degree before giving up on that degree.
    pub max_forms_per_degree: usize,
}

impl SearchConfig {
    pub fn new(rule: BoundRule) -> Self {
        SearchConfig {
            rule,
            max_forms_per_degree: 5000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub degree: u32,
    /// Leading forms enumerated.
    pub forms: usize,
    /// Forms whose top-degree cofactor exists.
    pub with_cofactor: usize,
    /// Families kept at this degree.
    pub found: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub max_degree: u32,
    pub families: Vec<Family>,
    pub per_degree: Vec<DegreeStats>,
    /// True when no curve of degree up to `max_degree` can have been missed.
    pub complete: bool,
    pub integrability: Integrability,
}

impl SearchReport {
    pub fn representatives(&self) -> Vec<&Certificate> {
        self.families.iter().map(|f| &f.representative).collect()
    }

    pub fn certificates(&self) -> Vec<&Certificate> {
        self.families
            .iter()
            .flat_map(|fam| std::iter::once(&fam.representative).chain(&fam.members))
            .collect()
    }
}

fn is_product_of(found: &[Family], cert: &Certificate) -> bool {
    found.iter().any(|fam| {
        let g = fam.representative.f();
        g.degree() < cert.f().degree() && g.divides(cert.f())
    })
}

/// Whether `f = sum c_i h^i` with rational `c_i`.
fn is_polynomial_in(f: &BiPoly, h: &BiPoly) -> bool {
    let (df, dh) = (f.degree(), h.degree());
    if dh < 1 || df % dh != 0 {
        return false;
    }
    let mut rest = f.clone();
    for i in (0..=df / dh).rev() {
        let hp = h.pow(i as u32);
        let c = rest.homogeneous_part((i * dh) as u32).poly().leading_coeff() / hp.leading_coeff();
        rest = &rest - &hp.scale(&c);
        if rest.degree() >= i * dh && !rest.is_zero() {
            return false;
        }
    }
    rest.is_zero()
}

/// Members that are polynomials in an earlier first integral add nothing.
fn is_generated_by(found: &[Family], fam: &Family) -> bool {
    found.iter().any(|g| {
        let h = g.representative.f();
        g.representative.is_first_integral()
            && h.degree() < fam.representative.f().degree()
            && std::iter::once(&fam.representative)
                .chain(&fam.members)
                .all(|c| is_polynomial_in(c.f(), h))
    })
}

pub fn search_curves(field: &VectorField, cfg: SearchConfig) -> Result<SearchReport, SearchError> {
    let max_degree = degree_bound(field, cfg.rule);
    let mut families: Vec<Family> = Vec::new();
    let mut per_degree = Vec::new();
    let mut complete = true;
    for n in 1..=max_degree {
        let forms = enumerate_leading_forms(field, n)?;
        let mut stats = DegreeStats {
            degree: n,
            forms: forms.len(),
            with_cofactor: 0,
            found: 0,
        };
        complete &= forms.iter().all(|l| l.complete);
        if forms.len() > cfg.max_forms_per_degree {
            complete = false;
        }
        for lf in forms.iter().take(cfg.max_forms_per_degree) {
            if crate::certify::leading_cofactor(field, &lf.form()).is_none() {
                continue;
            }
            stats.with_cofactor += 1;
            let sols = solve_from_leading_form(field, lf);
            complete &= sols.exhaustive;
            for fam in sols.families {
                let key = fam.representative.f().monic();
                let duplicate = families.iter().any(|g| g.representative.f().monic() == key);
                if duplicate
                    || (fam.dimension() == 0 && is_product_of(&families, &fam.representative))
                    || is_generated_by(&families, &fam)
                {
                    continue;
                }
                stats.found += 1;
                families.push(fam);
            }
        }
        per_degree.push(stats);
    }
    let count = families.iter().map(|f| 1 + f.dimension()).sum();
    let integrability = integrability_report(count, field.degree());
    Ok(SearchReport {
        max_degree,
        families,
        per_degree,
        complete,
        integrability,
    })
}

/// Whether the number of invariant curves exceeds `2 + m(m+1)/2`, which
/// guarantees a rational first integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrability {
    pub count: usize,
    pub threshold: usize,
    pub verdict: Verdict,
}

pub fn integrability_report(count: usize, m: u32) -> Integrability {
    let m = m as usize;
    let threshold = 2 + m * (m + 1) / 2;
    let verdict = if count > threshold {
        Verdict::new(Status::Holds, format!("{count} > {threshold}: a rational first integral exists"))
    } else {
        Verdict::new(Status::Uncertified, format!("{count} <= {threshold}: inconclusive"))
    };
    Integrability {
        count,
        threshold,
        verdict,
    }
}
