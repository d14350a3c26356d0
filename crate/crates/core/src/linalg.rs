//! Dense exact linear algebra over a [`Field`].

use crate::field::Field;

pub type Matrix<F> = Vec<Vec<F>>;

fn pivot_row<F: Field>(m: &Matrix<F>, col: usize, from: usize) -> Option<usize> {
    (from..m.len()).find(|&r| !m[r][col].is_zero())
}

/// Reduced row echelon form in place over the first `cols` columns; returns the
/// pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = pivot_row(m, col, row) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        let pivot = m[row].clone();
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for (x, y) in m[r].iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x -= &f.mul_ref(y);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(rows: &Matrix<F>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.clone();
    rref(&mut m, cols).len()
}

/// Solve `A x = b` for square `A` given as an augmented `n x (n+1)` matrix.
pub fn solve_square<F: Field>(mut aug: Matrix<F>) -> Option<Vec<F>> {
    let n = aug.len();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

pub fn invert<F: Field>(a: &Matrix<F>) -> Option<Matrix<F>> {
    let n = a.len();
    let mut m: Matrix<F> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            row
        })
        .collect();
    if rref(&mut m, n).len() < n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row vector times matrix.
pub fn vec_mul<F: Field>(v: &[F], m: &Matrix<F>) -> Vec<F> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![F::zero(); cols];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *o += &x.mul_ref(y);
            }
        }
    }
    out
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.iter().map(|r| vec_mul(r, b)).collect()
}
