//! Linear algebra over `Q` by fraction-free (Bareiss) elimination.
//!
//! Rows are scaled to integer vectors, reduced to echelon form with exact
//! integer divisions, and only then normalized into reduced row echelon form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::rational::common_denominator;
use crate::poly::Rational;

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Nonzero rows only, one per pivot.
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each row, increasing.
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space, one vector per free column in increasing
    /// order; the free coordinate is 1 and the other free coordinates 0.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.ncols];
            v[free] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row[free].clone();
            }
            out.push(v);
        }
        out
    }
}

fn to_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let d = common_denominator(row);
    row.iter()
        .map(|c| (c * Rational::from_integer(d.clone())).to_integer())
        .collect()
}

/// Bareiss forward elimination in place; returns pivot columns.
fn bareiss(m: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot_row[c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form of `mat` (rows of length `ncols`).
pub fn rref(mat: &[Vec<Rational>], ncols: usize) -> Echelon {
    let mut m: Vec<Vec<BigInt>> = mat.iter().map(|r| to_integer_row(r)).collect();
    for row in &m {
        assert_eq!(row.len(), ncols, "ragged matrix");
    }
    let pivots = bareiss(&mut m, ncols);
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(pivots.len());
    for (i, &p) in pivots.iter().enumerate() {
        let inv = Rational::from_integer(m[i][p].clone()).recip();
        rows.push(m[i].iter().map(|c| Rational::from_integer(c.clone()) * &inv).collect());
    }
    for i in (0..rows.len()).rev() {
        let p = pivots[i];
        let (above, below) = rows.split_at_mut(i);
        let pivot_row = &below[0];
        for row in above.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for j in p..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
    }
    Echelon { rows, pivots, ncols }
}

/// Row reduction that also records the transform: returns `(E, T)` with
/// `T * mat = E'` where `E'` is the full reduced form including zero rows
/// (the first `E.rank()` rows of `T * mat` are `E.rows`, the rest vanish).
pub fn rref_with_transform(mat: &[Vec<Rational>], ncols: usize) -> (Echelon, Vec<Vec<Rational>>) {
    let n = mat.len();
    let aug: Vec<Vec<Rational>> = mat
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let full = rref(&aug, ncols + n);
    // Pivots beyond `ncols` belong to the identity block; rows whose left
    // part vanishes are the left kernel of `mat`.
    let rank = full.pivots.iter().take_while(|&&p| p < ncols).count();
    let mut transform = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(rank);
    for (i, row) in full.rows.iter().enumerate() {
        if i < rank {
            rows.push(row[..ncols].to_vec());
        }
        transform.push(row[ncols..].to_vec());
    }
    let e = Echelon {
        rows,
        pivots: full.pivots[..rank].to_vec(),
        ncols,
    };
    (e, transform)
}

/// Null space basis of `mat`.
pub fn nullspace(mat: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    rref(mat, ncols).nullspace()
}

/// One solution of `mat * v = rhs` with free coordinates set to 0, or
/// `None` when the system is inconsistent.
pub fn solve(mat: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let aug: Vec<Vec<Rational>> = mat
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let e = rref(&aug, ncols + 1);
    if e.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut v = vec![Rational::zero(); ncols];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        v[p] = row[ncols].clone();
    }
    Some(v)
}
