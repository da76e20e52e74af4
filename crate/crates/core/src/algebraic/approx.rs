//! Floating root approximations. Nothing here feeds an exact verdict.

use num_complex::Complex64;

use crate::poly::rational::to_f64;
use crate::poly::UniPoly;

const MAX_ITER: usize = 500;
const TOL: f64 = 1e-14;

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots of a squarefree polynomial by Aberth iteration, sorted
/// by real part and then imaginary part.
pub fn complex_roots(q: &UniPoly) -> Vec<Complex64> {
    let n = q.deg();
    if q.degree() < 1 {
        return Vec::new();
    }
    let lead = to_f64(&q.leading());
    let c: Vec<Complex64> = q
        .coeffs()
        .iter()
        .map(|a| Complex64::new(to_f64(a) / lead, 0.0))
        .collect();
    // Cauchy bound for the starting circle.
    let radius = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..MAX_ITER {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm() / (1.0 + z[i].norm()));
        }
        if moved < TOL {
            break;
        }
    }
    for r in z.iter_mut() {
        if r.im.abs() < 1e-12 * (1.0 + r.re.abs()) {
            r.im = 0.0;
        }
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_roots() {
        // (t - 1)(t - 2)(t + 3)
        let q = UniPoly::from_ints(&[6, -7, 0, 1]);
        let r = complex_roots(&q);
        let want = [-3.0, 1.0, 2.0];
        for (z, w) in r.iter().zip(want) {
            assert!((z.re - w).abs() < 1e-10 && z.im == 0.0);
        }
    }

    #[test]
    fn cyclotomic_roots_have_unit_modulus() {
        let q = UniPoly::from_ints(&[1, 1, 1, 1, 1]);
        for z in complex_roots(&q) {
            assert!((z.norm() - 1.0).abs() < 1e-10);
        }
    }
}
