#![allow(dead_code)]

use darboux::field::VectorField;
use darboux::linalg;
use darboux::poly::{gcd, BiPoly, Rational};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Small rationals, mostly integers.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.gen_range(-5i64..=5);
    let d = if rng.gen_bool(0.8) { 1 } else { rng.gen_range(2i64..=3) };
    rat(n, d)
}

/// Random polynomial of total degree at most `deg`, each monomial present
/// with probability `density`.
pub fn random_poly(rng: &mut ChaCha8Rng, deg: u32, density: f64) -> BiPoly {
    let mut terms = Vec::new();
    for d in 0..=deg {
        for i in 0..=d {
            if rng.gen_bool(density) {
                terms.push((i, d - i, small_rational(rng)));
            }
        }
    }
    BiPoly::from_terms(terms)
}

/// Random polynomial of exact total degree `deg`.
pub fn random_poly_exact(rng: &mut ChaCha8Rng, deg: u32, density: f64) -> BiPoly {
    loop {
        let p = random_poly(rng, deg, density);
        if p.degree() == deg as i64 {
            return p;
        }
    }
}

/// A field with a planted invariant curve: `P = a f + h f_y`,
/// `Q = b f - h f_x`, so that `P f_x + Q f_y = (a f_x + b f_y) f`.
#[derive(Clone, Debug)]
pub struct Planted {
    pub field: VectorField,
    pub f: BiPoly,
    pub k: BiPoly,
}

pub fn planted(rng: &mut ChaCha8Rng) -> Planted {
    loop {
        let n = rng.gen_range(1u32..=4);
        let m = rng.gen_range(n.max(2)..=4);
        let f = random_poly_exact(rng, n, 0.6);
        if f.is_constant() {
            continue;
        }
        // deg a, deg b <= m - n keeps deg k <= m - 1; deg h <= m - n + 1.
        let a = random_poly(rng, m - n, 0.5);
        let b = random_poly(rng, m - n, 0.5);
        let h = random_poly(rng, m - n + 1, 0.6);
        let (fx, fy) = (f.partial_x(), f.partial_y());
        let p = &(&a * &f) + &(&h * &fy);
        let q = &(&b * &f) - &(&h * &fx);
        if p.is_zero() || q.is_zero() || !gcd(&p, &q).is_constant() {
            continue;
        }
        let Ok(field) = VectorField::new(p, q) else {
            continue;
        };
        let k = &(&a * &fx) + &(&b * &fy);
        return Planted { field, f, k };
    }
}

/// Cofactor by undetermined coefficients: solves `P f_x + Q f_y = k f` for
/// `k` of degree at most `m - 1` as a linear system.
pub fn cofactor_oracle(field: &VectorField, f: &BiPoly) -> Option<BiPoly> {
    let m = field.degree();
    let lhs = &(field.p() * &f.partial_x()) + &(field.q() * &f.partial_y());
    let unknowns: Vec<(u32, u32)> = (0..m).flat_map(|d| (0..=d).map(move |i| (i, d - i))).collect();
    let top = (f.degree().max(0) as u32) + m;
    let rows: Vec<(u32, u32)> = (0..=top).flat_map(|d| (0..=d).map(move |i| (i, d - i))).collect();
    let columns: Vec<BiPoly> = unknowns
        .iter()
        .map(|&(i, j)| f * &BiPoly::monomial(Rational::from_integer(1.into()), i, j))
        .collect();
    let mat: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&(i, j)| columns.iter().map(|c| c.coeff(i, j)).collect())
        .collect();
    let rhs: Vec<Rational> = rows.iter().map(|&(i, j)| lhs.coeff(i, j)).collect();
    let sol = linalg::solve(&mat, &rhs, unknowns.len())?;
    Some(BiPoly::from_terms(
        unknowns.iter().zip(sol).map(|(&(i, j), c)| (i, j, c)),
    ))
}
