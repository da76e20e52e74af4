//! Serializable report sections for each command.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebraic::PointClass;
use crate::certify::{
    check_chart_transport, check_infinity_points, check_singular_equilibria, compute_cofactor, Certificate,
};
use crate::field::{DarbouxDivisor, VectorField};
use crate::poly::BiPoly;
use crate::search::{degree_bound, BoundRule, Family, SearchReport};
use crate::singular::{
    classify_infinity, degree_bound_checks, genus, ramification_report, sing_count_check, GenusReport,
    SingularError,
};
use crate::singular::checks::genus_bound_check;
use crate::verdict::{Status, Verdict};

pub const SCHEMA: u32 = 1;

/// Float values rounded to a fixed grid so that output is stable.
fn stable(v: f64) -> f64 {
    let r = (v * 1e10).round() / 1e10;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn complex_pair(z: Complex64) -> [f64; 2] {
    [stable(z.re), stable(z.im)]
}

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub schema: u32,
    pub tool: String,
    pub command: &'static str,
    pub input: InputEcho,
    pub result: T,
}

#[derive(Serialize)]
pub struct InputEcho {
    #[serde(rename = "P")]
    pub p: Option<String>,
    #[serde(rename = "Q")]
    pub q: Option<String>,
    pub curves: Vec<String>,
    pub rule: String,
    pub shear_seed: i64,
}

#[derive(Serialize)]
pub struct PointOut {
    pub point: String,
    pub size: usize,
    /// `[x_re, x_im, y_re, y_im]` per member; not certified.
    pub approx: Vec<[f64; 4]>,
}

impl From<&PointClass> for PointOut {
    fn from(c: &PointClass) -> Self {
        PointOut {
            point: c.to_string(),
            size: c.size(),
            approx: c
                .approx()
                .into_iter()
                .map(|(x, y)| {
                    let (a, b) = (complex_pair(x), complex_pair(y));
                    [a[0], a[1], b[0], b[1]]
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DivisorPointOut {
    pub point: String,
    pub multiplicity: u32,
    pub size: usize,
    /// Slopes `z` of the members `[1 : z]`; not certified.
    pub approx: Vec<[f64; 2]>,
}

#[derive(Serialize)]
pub struct DivisorOut {
    pub points: Vec<DivisorPointOut>,
    pub total: usize,
}

impl From<&DarbouxDivisor> for DivisorOut {
    fn from(d: &DarbouxDivisor) -> Self {
        DivisorOut {
            points: d
                .points
                .iter()
                .map(|p| DivisorPointOut {
                    point: p.point.to_string(),
                    multiplicity: p.multiplicity,
                    size: p.point.class_size(),
                    approx: p.point.approx_slopes().into_iter().map(complex_pair).collect(),
                })
                .collect(),
            total: d.total(),
        }
    }
}

#[derive(Serialize)]
pub struct AnalyzeOut {
    pub degree: u32,
    pub r_infinity: String,
    pub dicritical: bool,
    pub darboux_divisor: Option<DivisorOut>,
    pub equilibria: Vec<PointOut>,
}

pub fn analyze(field: &VectorField) -> Result<AnalyzeOut, String> {
    let divisor = field.darboux_divisor().ok();
    let equilibria = field.finite_equilibria().map_err(|e| e.to_string())?;
    Ok(AnalyzeOut {
        degree: field.degree(),
        r_infinity: field.r_infinity().poly().to_string(),
        dicritical: field.is_dicritical(),
        darboux_divisor: divisor.as_ref().map(DivisorOut::from),
        equilibria: equilibria.iter().map(PointOut::from).collect(),
    })
}

#[derive(Serialize)]
pub struct DegreeOut {
    pub smooth: Verdict,
    pub nodal: Verdict,
    pub k_max: u32,
    pub k_max_bound: u32,
    pub k_max_verdict: Verdict,
    pub k_one_bound: u32,
    pub k_one_verdict: Verdict,
    pub rule: String,
    pub rule_bound: u32,
    pub rule_verdict: Verdict,
}

fn degree_out(cert: &Certificate, report: &GenusReport, rule: BoundRule) -> DegreeOut {
    let d = degree_bound_checks(cert, report);
    let n = cert.degree();
    let b = degree_bound(cert.field(), rule);
    DegreeOut {
        smooth: d.smooth,
        nodal: d.nodal,
        k_max: d.k_max,
        k_max_bound: d.k_max_bound,
        k_max_verdict: d.k_max_verdict,
        k_one_bound: d.k_one_bound,
        k_one_verdict: d.k_one_verdict,
        rule: rule.to_string(),
        rule_bound: b,
        rule_verdict: Verdict::new(Status::from_bool(n <= b), format!("{n} <= {b}")),
    }
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub f: String,
    pub degree: u32,
    pub invariant: bool,
    pub cofactor: Option<String>,
    pub first_integral: bool,
    pub irreducibility: Option<&'static str>,
    /// Remainder of `P*f_x + Q*f_y` on division by `f`, when not invariant.
    pub residual: Option<String>,
    pub infinity_points: Verdict,
    pub singular_equilibria: Verdict,
    pub chart_transport: Verdict,
    pub degree_bounds: Option<DegreeOut>,
}

fn not_invariant() -> Verdict {
    Verdict::new(Status::NotApplicable, "curve is not invariant")
}

pub fn verify(field: &VectorField, f: &BiPoly, rule: BoundRule, seed: i64) -> VerifyOut {
    let Some(cert) = compute_cofactor(field, f) else {
        let residual = field
            .derivation(f)
            .div_rem(f)
            .map(|(_, r)| r.to_string())
            .ok();
        return VerifyOut {
            f: f.to_string(),
            degree: f.degree().max(0) as u32,
            invariant: false,
            cofactor: None,
            first_integral: false,
            irreducibility: None,
            residual,
            infinity_points: not_invariant(),
            singular_equilibria: not_invariant(),
            chart_transport: not_invariant(),
            degree_bounds: None,
        };
    };
    let singular_equilibria = check_singular_equilibria(&cert)
        .unwrap_or_else(|e| Verdict::new(Status::Uncertified, e.to_string()));
    let degree_bounds = genus(cert.f(), seed).ok().map(|r| degree_out(&cert, &r, rule));
    VerifyOut {
        f: f.to_string(),
        degree: cert.degree(),
        invariant: true,
        cofactor: Some(cert.k().to_string()),
        first_integral: cert.is_first_integral(),
        irreducibility: Some(cert.irreducibility().as_str()),
        residual: None,
        infinity_points: check_infinity_points(field, f),
        singular_equilibria,
        chart_transport: check_chart_transport(&cert),
        degree_bounds,
    }
}

#[derive(Serialize)]
pub struct CertOut {
    pub f: String,
    pub k: String,
}

#[derive(Serialize)]
pub struct FamilyOut {
    pub f: String,
    pub k: String,
    pub first_integral: bool,
    pub irreducibility: &'static str,
    pub dimension: usize,
    pub members: Vec<CertOut>,
}

impl From<&Family> for FamilyOut {
    fn from(fam: &Family) -> Self {
        let r = &fam.representative;
        FamilyOut {
            f: r.f().to_string(),
            k: r.k().to_string(),
            first_integral: r.is_first_integral(),
            irreducibility: r.irreducibility().as_str(),
            dimension: fam.dimension(),
            members: fam
                .members
                .iter()
                .map(|c| CertOut {
                    f: c.f().to_string(),
                    k: c.k().to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DegreeStatsOut {
    pub degree: u32,
    pub forms: usize,
    pub with_cofactor: usize,
    pub found: usize,
}

#[derive(Serialize)]
pub struct IntegrabilityOut {
    pub count: usize,
    pub threshold: usize,
    pub verdict: Verdict,
}

#[derive(Serialize)]
pub struct SearchOut {
    pub rule: String,
    pub max_degree: u32,
    pub complete: bool,
    pub per_degree: Vec<DegreeStatsOut>,
    pub families: Vec<FamilyOut>,
    pub integrability: IntegrabilityOut,
}

pub fn search_out(rule: BoundRule, r: &SearchReport) -> SearchOut {
    SearchOut {
        rule: rule.to_string(),
        max_degree: r.max_degree,
        complete: r.complete,
        per_degree: r
            .per_degree
            .iter()
            .map(|s| DegreeStatsOut {
                degree: s.degree,
                forms: s.forms,
                with_cofactor: s.with_cofactor,
                found: s.found,
            })
            .collect(),
        families: r.families.iter().map(FamilyOut::from).collect(),
        integrability: IntegrabilityOut {
            count: r.integrability.count,
            threshold: r.integrability.threshold,
            verdict: r.integrability.verdict.clone(),
        },
    }
}

#[derive(Serialize)]
pub struct SingularOut {
    pub location: String,
    pub size: usize,
    pub multiplicity: u32,
    pub int_number: u32,
    pub nu: u32,
    pub branches: Option<u32>,
    pub delta_std: Option<u32>,
    pub delta_alt: Option<i64>,
    pub certified: bool,
}

#[derive(Serialize)]
pub struct InfinityPointOut {
    pub point: String,
    pub multiplicity: u32,
    pub class: &'static str,
}

#[derive(Serialize)]
pub struct InfinityOut {
    pub points: Vec<InfinityPointOut>,
    pub simple: u32,
    pub multiple_smooth: u32,
    pub multiple_singular: u32,
    pub identity_holds: bool,
}

#[derive(Serialize)]
pub struct GenusBoundOut {
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub verdict: Verdict,
}

#[derive(Serialize)]
pub struct CountsOut {
    pub affine: usize,
    pub total: usize,
    pub affine_bound: Verdict,
    pub total_bound: Verdict,
    pub half_degree_bound: Verdict,
}

#[derive(Serialize)]
pub struct RamificationOut {
    pub total: u64,
    pub finite: u64,
    pub at_infinity: u64,
    pub infinity_bound: Verdict,
    pub finite_bound: Verdict,
}

#[derive(Serialize)]
pub struct GenusOut {
    pub f: String,
    pub degree: u32,
    pub shear: i64,
    pub singular_points: Vec<SingularOut>,
    pub arithmetic_genus: i64,
    pub genus: Option<i64>,
    pub sum_branches: Option<u64>,
    pub status: Verdict,
    pub infinity: InfinityOut,
    pub genus_bound: Option<GenusBoundOut>,
    pub counts: Option<CountsOut>,
    pub ramification: Option<RamificationOut>,
}

/// Genus data for one curve; errors that make the curve unusable are
/// returned as `Err`.
pub fn genus_out(field: Option<&VectorField>, f: &BiPoly, seed: i64) -> Result<GenusOut, SingularError> {
    let report = genus(f, seed)?;
    let status = match report.genus {
        Some(g) => Verdict::new(Status::Holds, format!("genus {g}")),
        None => Verdict::new(
            Status::Uncertified,
            format!("{} singular point class(es) with inconclusive branch count", report.uncertified().len()),
        ),
    };
    let inf = classify_infinity(f)?;
    let infinity = InfinityOut {
        points: inf
            .points
            .iter()
            .map(|p| InfinityPointOut {
                point: p.point.to_string(),
                multiplicity: p.multiplicity,
                class: p.class.label(),
            })
            .collect(),
        simple: inf.simple,
        multiple_smooth: inf.multiple_smooth,
        multiple_singular: inf.multiple_singular,
        identity_holds: inf.identity_holds(),
    };
    let cert = field.and_then(|v| compute_cofactor(v, f));
    let genus_bound = match &cert {
        Some(c) => {
            let gb = genus_bound_check(c, seed)?;
            Some(GenusBoundOut {
                lhs: gb.lhs,
                rhs: gb.rhs,
                verdict: gb.verdict,
            })
        }
        None => None,
    };
    let counts = match field {
        Some(v) => {
            let s = sing_count_check(f, v)?;
            Some(CountsOut {
                affine: s.affine,
                total: s.total,
                affine_bound: s.affine_bound,
                total_bound: s.total_bound,
                half_degree_bound: s.half_degree_bound,
            })
        }
        None => None,
    };
    let ramification = if report.points.is_empty() {
        let r = ramification_report(f, field)?;
        Some(RamificationOut {
            total: r.total,
            finite: r.finite,
            at_infinity: r.at_infinity,
            infinity_bound: r.infinity_bound,
            finite_bound: r.finite_bound,
        })
    } else {
        None
    };
    Ok(GenusOut {
        f: f.to_string(),
        degree: report.degree,
        shear: report.shear,
        singular_points: report
            .points
            .iter()
            .map(|p| SingularOut {
                location: p.location.to_string(),
                size: p.class_size(),
                multiplicity: p.invariants.multiplicity,
                int_number: p.invariants.int_number,
                nu: p.invariants.nu,
                branches: p.invariants.branches,
                delta_std: p.invariants.delta_std(),
                delta_alt: p.invariants.delta_alt(),
                certified: p.certified(),
            })
            .collect(),
        arithmetic_genus: report.arithmetic_genus,
        genus: report.genus,
        sum_branches: report.sum_branches,
        status,
        infinity,
        genus_bound,
        counts,
        ramification,
    })
}
