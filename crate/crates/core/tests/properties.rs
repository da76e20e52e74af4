use darboux::poly::{
    factor, factor_linear_rational, gcd, parse_poly, resultant_y, squarefree_form, BiPoly, HomogeneousForm, Rational,
    UniPoly,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn bipoly(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, rational()), 0..6).prop_map(move |terms| {
        BiPoly::from_terms(terms.into_iter().filter(|(i, j, _)| i + j <= max_deg))
    })
}

fn nonconstant(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    bipoly(max_deg).prop_filter("nonconstant", |p| p.degree() >= 1)
}

fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

/// Binary form of the given degree from integer coefficients.
fn form(degree: u32) -> impl Strategy<Value = HomogeneousForm> {
    prop::collection::vec(-4i64..=4, degree as usize + 1)
        .prop_map(move |cs| {
            let terms = cs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (i as u32, degree - i as u32, Rational::from_integer(c.into())));
            HomogeneousForm::new(BiPoly::from_terms(terms), degree).unwrap()
        })
        .prop_filter("nonzero", |h| !h.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in bipoly(3), b in bipoly(3), c in bipoly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_parses_back(a in bipoly(4)) {
        prop_assert_eq!(parse_poly(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn exact_divide_recovers_factor(a in bipoly(3), b in nonconstant(3)) {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), Some(a));
    }

    #[test]
    fn div_rem_identity(a in bipoly(4), b in nonconstant(2)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn gcd_divides_both(a in nonconstant(2), b in nonconstant(2), c in nonconstant(2)) {
        let (f, g) = (&a * &c, &b * &c);
        let d = gcd(&f, &g);
        prop_assert!(d.divides(&f));
        prop_assert!(d.divides(&g));
        prop_assert!(c.divides(&d));
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in nonconstant(2), b in nonconstant(2)) {
        prop_assume!(a.deg_y() >= 1 && b.deg_y() >= 1);
        let r = resultant_y(&a, &b).unwrap();
        prop_assert_eq!(r.is_zero(), gcd(&a, &b).deg_y() >= 1);
    }

    #[test]
    fn squarefree_is_idempotent(h in form(4)) {
        let s = squarefree_form(&h);
        prop_assert!(s.poly().divides(h.poly()));
        prop_assert_eq!(squarefree_form(&s), s);
    }

    #[test]
    fn linear_factors_reconstruct(h in form(4)) {
        let (factors, rest) = factor_linear_rational(&h);
        let prod = factors
            .iter()
            .fold(rest.poly().clone(), |acc, lf| &acc * &lf.form.poly().pow(lf.multiplicity));
        prop_assert_eq!(prod, h.poly().clone());
        prop_assert!(rest.dehomogenize().rational_roots().is_empty() || rest.degree() == 0);
    }

    #[test]
    fn factorization_reconstructs(a in unipoly(3), b in unipoly(3)) {
        let f = &a * &b;
        prop_assume!(f.degree() >= 1);
        let parts = factor(&f);
        let prod = parts.iter().fold(UniPoly::one(), |acc, (p, e)| &acc * &p.pow(*e as u32));
        prop_assert_eq!(prod.monic(), f.monic());
        for (p, _) in &parts {
            prop_assert!(p.degree() >= 1);
        }
    }
}
