//! Completing a leading form to invariant curves.
//!
//! With `f_n` fixed and `k_{m-1}` read off the top degree, the homogeneous
//! parts of `P f_x + Q f_y - k f = 0` are matched from the top down. Level
//! `j` is linear in the new unknowns `f_{n-j}` and `k_{m-1-j}`; its right
//! side depends on earlier levels. Kernel directions become parameters and
//! inconsistent rows become polynomial constraints on them, which are
//! eliminated as soon as some parameter appears in them only linearly.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::certify::{leading_cofactor, Certificate};
use crate::field::VectorField;
use crate::linalg::rref_with_transform;
use crate::poly::{BiPoly, Rational};

use super::leading::LeadingForm;
use super::param::ParamPoly;

/// Branching cap when constraints leave a parameter with several rational
/// values.
const MAX_BRANCH_DEPTH: u32 = 8;

/// A curve together with the members obtained by moving each free parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    /// All parameters zero.
    pub representative: Certificate,
    /// One member per free parameter, with that parameter set to one.
    pub members: Vec<Certificate>,
}

impl Family {
    pub fn dimension(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingSolutions {
    pub families: Vec<Family>,
    /// False when some constraint could not be resolved over `Q`.
    pub exhaustive: bool,
}

impl LeadingSolutions {
    /// Representatives followed by family members, in order.
    pub fn certificates(&self) -> Vec<&Certificate> {
        self.families
            .iter()
            .flat_map(|fam| std::iter::once(&fam.representative).chain(&fam.members))
            .collect()
    }
}

type Coeffs = BTreeMap<(u32, u32), ParamPoly>;

#[derive(Clone, Debug)]
struct State {
    f: Coeffs,
    k: Coeffs,
    constraints: Vec<ParamPoly>,
    next_var: usize,
}

struct Inconsistent;

impl State {
    fn substitute(&mut self, v: usize, value: &ParamPoly) {
        for c in self.f.values_mut().chain(self.k.values_mut()) {
            *c = c.substitute(v, value);
        }
        for c in &mut self.constraints {
            *c = c.substitute(v, value);
        }
        self.f.retain(|_, c| !c.is_zero());
        self.k.retain(|_, c| !c.is_zero());
    }

    /// Eliminates every parameter that some constraint determines
    /// linearly; fails on a nonzero constant constraint.
    fn simplify(&mut self) -> Result<(), Inconsistent> {
        loop {
            self.constraints.retain(|c| !c.is_zero());
            if self.constraints.iter().any(|c| c.is_constant()) {
                return Err(Inconsistent);
            }
            let Some((v, value)) = self.constraints.iter().find_map(isolate) else {
                return Ok(());
            };
            self.substitute(v, &value);
        }
    }

    fn vars(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .f
            .values()
            .chain(self.k.values())
            .flat_map(|c| c.vars())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// A parameter `t` with `c = a*t + rest`, `a` a nonzero rational and `t`
/// absent from `rest`; returns `t` and `-rest/a`, preferring the newest
/// parameter.
fn isolate(c: &ParamPoly) -> Option<(usize, ParamPoly)> {
    for v in c.vars().into_iter().rev() {
        let rest = c.substitute(v, &ParamPoly::zero());
        let diff = c.sub(&rest);
        // diff = a*t exactly when substituting t = 1 leaves a constant.
        let at_one = diff.substitute(v, &ParamPoly::constant(Rational::one()));
        if !at_one.is_constant() || at_one.is_zero() {
            continue;
        }
        let a = at_one.constant_term();
        if diff != ParamPoly::var(v).scale(&a) {
            continue;
        }
        return Some((v, rest.scale(&(-a.recip()))));
    }
    None
}

fn known_poly(c: &Rational) -> ParamPoly {
    ParamPoly::constant(c.clone())
}

/// Degree-`d` part of `P f_x + Q f_y - k f` with the current coefficients.
fn residual(field: &VectorField, st: &State, d: u32) -> BTreeMap<u32, ParamPoly> {
    let mut out: BTreeMap<u32, ParamPoly> = BTreeMap::new();
    let mut push = |i: u32, j: u32, v: ParamPoly| {
        if i + j == d {
            let e = out.entry(i).or_default();
            *e = e.add(&v);
        }
    };
    for (&(a, b), c) in &st.f {
        for (pe, pc) in field.p().terms() {
            if a > 0 && a - 1 + b + pe.degree() == d {
                push(a - 1 + pe.x, b + pe.y, c.scale(&(pc * Rational::from_integer(a.into()))));
            }
        }
        for (qe, qc) in field.q().terms() {
            if b > 0 && a + b - 1 + qe.degree() == d {
                push(a + qe.x, b - 1 + qe.y, c.scale(&(qc * Rational::from_integer(b.into()))));
            }
        }
        for (&(ka, kb), kc) in &st.k {
            if a + b + ka + kb == d {
                push(a + ka, b + kb, kc.mul(c).scale(&-Rational::one()));
            }
        }
    }
    out
}

fn monomials(deg: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=deg).map(move |a| (a, deg - a))
}

/// Solves one level, adding parameters for kernel directions and
/// constraints for the left kernel.
fn solve_level(field: &VectorField, top: &BiPoly, k_top: &BiPoly, n: u32, st: &mut State, j: u32) {
    let m = field.degree();
    let d = n + m - 1 - j;
    let f_unknowns: Vec<(u32, u32)> = if j <= n { monomials(n - j).collect() } else { Vec::new() };
    let k_unknowns: Vec<(u32, u32)> = if j < m { monomials(m - 1 - j).collect() } else { Vec::new() };
    let p_top = field.top_p().into_poly();
    let q_top = field.top_q().into_poly();
    let mut columns: Vec<BiPoly> = Vec::new();
    for &(a, b) in &f_unknowns {
        let mono = BiPoly::monomial(Rational::one(), a, b);
        let col = &(&(&p_top * &mono.partial_x()) + &(&q_top * &mono.partial_y())) - &(k_top * &mono);
        columns.push(col);
    }
    for &(a, b) in &k_unknowns {
        columns.push(-&(top * &BiPoly::monomial(Rational::one(), a, b)));
    }
    let rows: Vec<(u32, u32)> = monomials(d).collect();
    let res = residual(field, st, d);
    let rhs: Vec<ParamPoly> = rows
        .iter()
        .map(|(a, _)| res.get(a).cloned().unwrap_or_default().scale(&-Rational::one()))
        .collect();
    let ncols = columns.len();
    if ncols == 0 {
        st.constraints.extend(rhs);
        return;
    }
    let mat: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&(a, b)| columns.iter().map(|c| c.coeff(a, b)).collect())
        .collect();
    let (ech, transform) = rref_with_transform(&mat, ncols);
    let combine = |row: &[Rational]| {
        row.iter()
            .zip(&rhs)
            .filter(|(t, _)| !t.is_zero())
            .fold(ParamPoly::zero(), |acc, (t, r)| acc.add(&r.scale(t)))
    };
    let mut values: Vec<ParamPoly> = vec![ParamPoly::zero(); ncols];
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    for &c in &free {
        values[c] = ParamPoly::var(st.next_var);
        st.next_var += 1;
    }
    for (i, (row, &p)) in ech.rows.iter().zip(&ech.pivots).enumerate() {
        let mut v = combine(&transform[i]);
        for &c in &free {
            if !row[c].is_zero() {
                v = v.sub(&values[c].scale(&row[c]));
            }
        }
        values[p] = v;
    }
    for t in &transform[ech.rank()..] {
        st.constraints.push(combine(t));
    }
    let (fv, kv) = values.split_at(f_unknowns.len());
    for (&e, v) in f_unknowns.iter().zip(fv) {
        if !v.is_zero() {
            st.f.insert(e, v.clone());
        }
    }
    for (&e, v) in k_unknowns.iter().zip(kv) {
        if !v.is_zero() {
            st.k.insert(e, v.clone());
        }
    }
}

/// Resolves the remaining constraints by branching on the rational roots of
/// a constraint in a single parameter.
fn finish(st: State, depth: u32, out: &mut Vec<State>, exhaustive: &mut bool) {
    if st.constraints.is_empty() {
        out.push(st);
        return;
    }
    let univariate = st.constraints.iter().find_map(|c| c.as_univariate());
    let Some((v, u)) = univariate.filter(|_| depth < MAX_BRANCH_DEPTH) else {
        *exhaustive = false;
        return;
    };
    let roots = u.rational_roots();
    if roots.len() < u.squarefree_part().deg() {
        *exhaustive = false;
    }
    for r in roots {
        let mut branch = st.clone();
        branch.substitute(v, &known_poly(&r));
        if branch.simplify().is_ok() {
            finish(branch, depth + 1, out, exhaustive);
        }
    }
}

fn realize(coeffs: &Coeffs, point: &[(usize, Rational)]) -> BiPoly {
    BiPoly::from_terms(coeffs.iter().map(|(&(a, b), c)| (a, b, c.eval(point))))
}

/// Every invariant curve with leading form `lf`, grouped into families.
pub fn solve_from_leading_form(field: &VectorField, lf: &LeadingForm) -> LeadingSolutions {
    let mut exhaustive = true;
    let top_form = lf.form();
    let Some(k_top) = leading_cofactor(field, &top_form) else {
        return LeadingSolutions {
            families: Vec::new(),
            exhaustive,
        };
    };
    let top = top_form.into_poly();
    let k_top = k_top.into_poly();
    let n = lf.degree;
    let m = field.degree();
    let mut st = State {
        f: top.terms().map(|(e, c)| ((e.x, e.y), known_poly(c))).collect(),
        k: k_top.terms().map(|(e, c)| ((e.x, e.y), known_poly(c))).collect(),
        constraints: Vec::new(),
        next_var: 0,
    };
    for j in 1..n + m {
        solve_level(field, &top, &k_top, n, &mut st, j);
        if st.simplify().is_err() {
            return LeadingSolutions {
                families: Vec::new(),
                exhaustive,
            };
        }
    }
    let mut finals = Vec::new();
    finish(st, 0, &mut finals, &mut exhaustive);
    let mut families = Vec::new();
    for st in finals {
        let cert_at = |point: &[(usize, Rational)]| {
            let cert = Certificate::new(field, realize(&st.f, point), realize(&st.k, point));
            debug_assert!(cert.is_some(), "solved coefficients must satisfy the identity");
            cert
        };
        let Some(representative) = cert_at(&[]) else {
            continue;
        };
        let members = st
            .vars()
            .into_iter()
            .filter_map(|v| cert_at(&[(v, Rational::one())]))
            .collect();
        families.push(Family {
            representative,
            members,
        });
    }
    LeadingSolutions { families, exhaustive }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::search::leading::enumerate_leading_forms;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn field(a: &str, b: &str) -> VectorField {
        VectorField::new(p(a), p(b)).unwrap()
    }

    fn solve_named(v: &VectorField, n: u32, name: &str) -> LeadingSolutions {
        let lf = enumerate_leading_forms(v, n)
            .unwrap()
            .into_iter()
            .find(|l| l.to_string() == name)
            .unwrap();
        solve_from_leading_form(v, &lf)
    }

    #[test]
    fn line_of_first_example() {
        let line_field = field("1 + y^2", "x*y + y");
        let s = solve_named(&line_field, 1, "y");
        assert_eq!(s.families.len(), 1);
        let c = &s.families[0].representative;
        assert_eq!((c.f(), c.k()), (&p("y"), &p("x + 1")));
        assert_eq!(s.families[0].dimension(), 0);
        assert!(solve_named(&line_field, 1, "(x - y)").families.is_empty());
        assert!(solve_named(&line_field, 1, "(x + y)").families.is_empty());
    }

    #[test]
    fn cusp_first_integral() {
        let cusp_field = field("2*y", "3*x^2");
        let s = solve_named(&cusp_field, 3, "x^3");
        assert_eq!(s.families.len(), 1);
        let fam = &s.families[0];
        assert_eq!(fam.representative.f(), &p("x^3 - y^2"));
        assert!(fam.representative.k().is_zero());
        // Level sets x^3 - y^2 = c.
        assert_eq!(fam.dimension(), 1);
        assert_eq!(fam.members[0].f(), &p("x^3 - y^2 + 1"));
        assert!(s.exhaustive);
    }

    #[test]
    fn every_certificate_verifies() {
        let line_field = field("1 + y^2", "x*y + y");
        for n in 1..=3 {
            for lf in enumerate_leading_forms(&line_field, n).unwrap() {
                for c in solve_from_leading_form(&line_field, &lf).certificates() {
                    assert!(c.verify().holds);
                }
            }
        }
    }

    #[test]
    fn isolate_rules() {
        let t0 = ParamPoly::var(0);
        let t1 = ParamPoly::var(1);
        // 2 t1 + t0^2 = 0 gives t1 = -t0^2/2.
        let c = t1.scale(&Rational::from_integer(2.into())).add(&t0.mul(&t0));
        let (v, val) = isolate(&c).unwrap();
        assert_eq!(v, 1);
        assert_eq!(val, t0.mul(&t0).scale(&Rational::new((-1).into(), 2.into())));
        assert!(isolate(&t0.mul(&t1)).is_none());
    }
}
