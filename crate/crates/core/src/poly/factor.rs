//! Squarefree parts, rational linear factors of binary forms, and full
//! factorization of univariate polynomials over `Q`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bipoly::{BiPoly, HomogeneousForm};
use super::gcd::gcd;
use super::rational::Rational;
use super::unipoly::UniPoly;

/// `h / gcd(h, h_x, h_y)` normalized to leading coefficient 1.
pub fn squarefree_form(h: &HomogeneousForm) -> HomogeneousForm {
    let p = h.poly();
    if p.is_zero() {
        return h.clone();
    }
    let g = gcd(p, &gcd(&p.partial_x(), &p.partial_y()));
    let q = p.exact_divide(&g).expect("nonzero").expect("gcd divides").monic();
    HomogeneousForm::from_poly(q).expect("factor of a form is a form")
}

/// A normalized linear form `a*x + b*y` together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    pub form: HomogeneousForm,
    pub multiplicity: u32,
    /// The point `[x : y]` where the form vanishes, as `Some(z)` for `[1 : z]`
    /// or `None` for `[0 : 1]`.
    pub root: Option<Rational>,
}

/// Splits off every rational linear factor of a nonzero binary form.
///
/// Factors vanish at `[1 : z]` for the rational roots `z` of `h(1, z)`, and
/// at `[0 : 1]` when `x` divides `h`. Each is scaled so that its first
/// nonzero coefficient (x before y) is 1. They are ordered by `|z|`, positive
/// before negative, with the factor `x` last. The returned remainder
/// satisfies `h = remainder * prod factors^mult` exactly.
pub fn factor_linear_rational(h: &HomogeneousForm) -> (Vec<LinearFactor>, HomogeneousForm) {
    assert!(!h.is_zero(), "factor_linear_rational needs a nonzero form");
    let d = h.degree();
    let u = h.dehomogenize();
    let x_mult = d - u.deg() as u32;
    let mut roots = u.rational_roots();
    roots.sort_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)));
    let mut factors = Vec::new();
    let mut rest = u;
    for z in roots {
        let lin = UniPoly::linear_root(&z);
        let mut e = 0;
        while let Some(q) = rest.exact_div(&lin) {
            rest = q;
            e += 1;
        }
        let form = if z.is_zero() {
            BiPoly::y()
        } else {
            &BiPoly::x() - &BiPoly::y().scale(&z.recip())
        };
        factors.push(LinearFactor {
            form: HomogeneousForm::new(form, 1).unwrap(),
            multiplicity: e,
            root: Some(z),
        });
    }
    if x_mult > 0 {
        factors.push(LinearFactor {
            form: HomogeneousForm::new(BiPoly::x(), 1).unwrap(),
            multiplicity: x_mult,
            root: None,
        });
    }
    let mut prod = BiPoly::one();
    for f in &factors {
        prod = &prod * &f.form.poly().pow(f.multiplicity);
    }
    let rem = h.poly().exact_divide(&prod).unwrap().expect("factors divide");
    let rem_deg = d - factors.iter().map(|f| f.multiplicity).sum::<u32>();
    (factors, HomogeneousForm::new(rem, rem_deg).unwrap())
}

/// Irreducible factorization over `Q`: monic factors with multiplicities,
/// sorted by degree and then coefficients. Constants yield an empty list.
pub fn factor(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    for (s, e) in f.squarefree_decomposition() {
        for g in factor_squarefree(&s) {
            out.push((g, e));
        }
    }
    out.sort_by(|(a, ea), (b, eb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then(ea.cmp(eb))
    });
    out
}

/// Irreducible monic factors of a squarefree polynomial.
pub fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let mut rest = f.monic();
    for r in rest.rational_roots() {
        let lin = UniPoly::linear_root(&r);
        rest = rest.exact_div(&lin).unwrap();
        out.push(lin);
    }
    match rest.degree() {
        d if d < 1 => {}
        1..=3 => out.push(rest),
        _ => {
            let ints = rest.primitive_integer();
            for g in zassenhaus(&ints) {
                out.push(UniPoly::from_integers(&g).monic());
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[t]; coefficients low to high, trimmed.

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p)
            .collect(),
    )
}

fn fp_add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
            .collect(),
    )
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!b.is_empty());
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let db = b.len() - 1;
    let inv = fp_inv(*b.last().unwrap(), p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * bc % p) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    (fp_trim(q), fp_trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = fp_inv(l, p);
            a.iter().map(|c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// Returns `(g, s, t)` with `s*a + t*b = g` monic.
fn fp_ext_gcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = fp_inv(*r0.last().unwrap(), p);
    let sc = |v: &Fp| fp_trim(v.iter().map(|c| c * inv % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn fp_powmod(base: &Fp, e: &BigUint, m: &Fp, p: u64) -> Fp {
    let mut acc = vec![1u64];
    let base = fp_divrem(base, m, p).1;
    for i in (0..e.bits()).rev() {
        acc = fp_divrem(&fp_mul(&acc, &acc, p), m, p).1;
        if e.bit(i) {
            acc = fp_divrem(&fp_mul(&acc, &base, p), m, p).1;
        }
    }
    acc
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn reduce_mod_p(f: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

/// Distinct-degree then equal-degree (Cantor–Zassenhaus) factorization of a
/// monic squarefree polynomial over `F_p`, `p` odd.
fn factor_mod_p(f: &Fp, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = vec![0u64, 1];
    let mut w = x.clone();
    let mut d = 1;
    let pb = BigUint::from(p);
    while f.len() > 2 * d {
        w = fp_powmod(&w, &pb, &f, p);
        let g = fp_gcd(&fp_sub(&w, &x, p), &f, p);
        if g.len() > 1 {
            equal_degree(&g, d, p, rng, &mut out);
            f = fp_divrem(&f, &g, p).0;
            w = fp_divrem(&w, &f, p).1;
        }
        d += 1;
    }
    if f.len() > 1 {
        out.push(fp_monic(&f, p));
    }
    out
}

fn equal_degree(g: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
    let n = g.len() - 1;
    if n == d {
        out.push(fp_monic(g, p));
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Fp = fp_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, g, p), &vec![1u64], p);
        let h = fp_gcd(&b, g, p);
        if h.len() > 1 && h.len() < g.len() {
            equal_degree(&h, d, p, rng, out);
            equal_degree(&fp_divrem(g, &h, p).0, d, p, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting and recombination over Z.

type Zp = Vec<BigInt>;

fn z_trim(mut a: Zp) -> Zp {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn z_mul(a: &Zp, b: &Zp) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_trim(out)
}

fn z_mod(a: &Zp, m: &BigInt) -> Zp {
    z_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn z_symmetric(a: &Zp, m: &BigInt) -> Zp {
    let half = m >> 1;
    z_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn fp_to_z(a: &Fp) -> Zp {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f = g0 * h0 (mod p)` with `g0` monic to a factorization modulo
/// `p^k`.
fn lift_two(f: &Zp, g0: &Fp, h0: &Fp, p: u64, k: u32) -> (Zp, Zp) {
    let pk = BigInt::from(p).pow(k);
    let (_, s, t) = fp_ext_gcd(g0, h0, p);
    let mut g = fp_to_z(g0);
    let mut h = fp_to_z(h0);
    let mut q = BigInt::from(p);
    for _ in 1..k {
        let gh = z_mul(&g, &h);
        let n = f.len().max(gh.len());
        let diff: Zp = (0..n)
            .map(|i| {
                f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default()
            })
            .collect();
        let diff = z_mod(&diff, &pk);
        let e: Zp = diff.iter().map(|c| c / &q).collect();
        let e = reduce_mod_p(&e, p);
        let (qq, dg) = fp_divrem(&fp_mul(&t, &e, p), g0, p);
        let dh = fp_add(&fp_mul(&s, &e, p), &fp_mul(&qq, h0, p), p);
        let bump = |v: &mut Zp, d: &Fp| {
            if v.len() < d.len() {
                v.resize(d.len(), BigInt::zero());
            }
            for (i, c) in d.iter().enumerate() {
                v[i] += &q * BigInt::from(*c);
            }
        };
        bump(&mut g, &dg);
        bump(&mut h, &dh);
        q *= p;
    }
    (z_mod(&g, &pk), z_mod(&h, &pk))
}

fn hensel_lift(f: &Zp, factors: &[Fp], p: u64, k: u32) -> Vec<Zp> {
    let pk = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let lc = f.last().unwrap().clone();
        let inv = lc.modinv(&pk).expect("lc is a unit mod p");
        return vec![z_mod(&f.iter().map(|c| c * &inv).collect(), &pk)];
    }
    let fp = reduce_mod_p(f, p);
    let lc = *fp.last().unwrap();
    let mut h0 = vec![lc];
    for g in &factors[1..] {
        h0 = fp_mul(&h0, g, p);
    }
    let (g, h) = lift_two(f, &factors[0], &h0, p, k);
    let mut out = vec![g];
    out.extend(hensel_lift(&h, &factors[1..], p, k));
    out
}

fn primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn z_to_uni(a: &Zp) -> UniPoly {
    UniPoly::from_integers(a)
}

/// Factors a primitive squarefree integer polynomial of degree at least 2.
fn zassenhaus(f: &[BigInt]) -> Vec<Zp> {
    let f: Zp = f.to_vec();
    let n = f.len() - 1;
    let lc = f.last().unwrap().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    // Try a few admissible primes and keep the one with the fewest factors.
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fp_monic(&reduce_mod_p(&f, p), p);
        if fp.len() != n + 1 || fp_gcd(&fp, &fp_derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let facs = factor_mod_p(&fp, p, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, facs) = best.expect("some prime is admissible");
    if facs.len() == 1 {
        return vec![f];
    }
    // Landau–Mignotte style bound on factor coefficients.
    let norm2: BigInt = f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = (BigInt::one() << n) * norm2 * lc.abs() * 2;
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk <= bound {
        pk *= p;
        k += 1;
    }
    let lifted = hensel_lift(&f, &facs, p, k);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut poly = f;
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        for subset in combinations(&remaining, s) {
            let lcf = poly.last().unwrap().clone();
            let mut g: Zp = vec![lcf.clone()];
            for &i in &subset {
                g = z_mod(&z_mul(&g, &lifted[i]), &pk);
            }
            let g = z_symmetric(&g, &pk);
            let gu = z_to_uni(&g);
            let gi = gu.primitive_integer();
            let gp = z_to_uni(&gi);
            if let Some(q) = z_to_uni(&poly).exact_div(&gp) {
                out.push(gi);
                poly = q.primitive_integer();
                remaining.retain(|i| !subset.contains(i));
                continue 'outer;
            }
        }
        s += 1;
    }
    out.push(poly);
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 && idx[0] == items.len() - k {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::poly::rational::{rat, ratio};

    fn form(s: &str) -> HomogeneousForm {
        HomogeneousForm::from_poly(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn squarefree_forms() {
        assert_eq!(squarefree_form(&form("(x - y)^3")), form("x - y"));
        assert_eq!(squarefree_form(&form("y*(x - y)*(x + y)")), form("x^2*y - y^3"));
        assert_eq!(squarefree_form(&form("y^2*(x + y)")), form("x*y + y^2"));
        assert_eq!(squarefree_form(&form("x^2*y")), form("x*y"));
    }

    #[test]
    fn linear_factor_examples() {
        let (fs, rem) = factor_linear_rational(&form("x^2*y - y^3"));
        let got: Vec<_> = fs.iter().map(|f| (f.form.poly().to_string(), f.multiplicity)).collect();
        assert_eq!(got, vec![("y".into(), 1), ("x - y".into(), 1), ("x + y".into(), 1)]);
        assert!(rem.poly().is_constant());

        let (fs, rem) = factor_linear_rational(&form("x^2 + y^2"));
        assert!(fs.is_empty());
        assert_eq!(rem, form("x^2 + y^2"));

        let (fs, rem) = factor_linear_rational(&form("(2*x + 3*y)^2"));
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].form, form("x + 3/2*y"));
        assert_eq!(fs[0].multiplicity, 2);
        assert_eq!(rem.poly(), &BiPoly::int(4));

        let (fs, _) = factor_linear_rational(&form("3*x^3"));
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].root, None);
        assert_eq!(fs[0].multiplicity, 3);
    }

    #[test]
    fn factor_small_polynomials() {
        // (t^2 + 1)(t - 2)^2
        let f = &UniPoly::from_ints(&[1, 0, 1]) * &UniPoly::from_ints(&[-2, 1]).pow(2);
        assert_eq!(
            factor(&f),
            vec![(UniPoly::from_ints(&[-2, 1]), 2), (UniPoly::from_ints(&[1, 0, 1]), 1)]
        );
        assert_eq!(factor(&UniPoly::constant(rat(5))), vec![]);
        assert_eq!(
            factor(&UniPoly::new(vec![ratio(1, 2), rat(3)])),
            vec![(UniPoly::new(vec![ratio(1, 6), rat(1)]), 1)]
        );
    }

    #[test]
    fn zassenhaus_splits_quartics() {
        // (t^2 + 1)(t^2 - 2): no rational roots, splits into two quadratics.
        let f = &UniPoly::from_ints(&[1, 0, 1]) * &UniPoly::from_ints(&[-2, 0, 1]);
        let got = factor(&f);
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].0, UniPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(got[1].0, UniPoly::from_ints(&[1, 0, 1]));
        // t^4 + 1 is irreducible over Q although it splits mod every prime.
        assert_eq!(factor(&UniPoly::from_ints(&[1, 0, 0, 0, 1])).len(), 1);
        // (3t^2 + 5t - 7)(2t^3 - t + 11)
        let a = UniPoly::from_ints(&[-7, 5, 3]);
        let b = UniPoly::from_ints(&[11, -1, 0, 2]);
        let got = factor(&(&a * &b));
        assert_eq!(got, vec![(a.monic(), 1), (b.monic(), 1)]);
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(&[4, 5, 6], 2), vec![vec![4, 5], vec![4, 6], vec![5, 6]]);
        assert_eq!(combinations(&[1], 1), vec![vec![1]]);
    }
}
