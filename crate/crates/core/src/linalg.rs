//! Dense Gaussian elimination over exact scalars.

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are removed.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row][col..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            let pivot_row = m[row].clone();
            for (x, p) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &(p * &f);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Basis of `{v : m v = 0}` for a matrix with `ncols` columns.
pub fn nullspace(m: &Matrix, ncols: usize) -> Vec<Vec<Scalar>> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Transpose of a rectangular matrix.
pub fn transpose(m: &Matrix, ncols: usize) -> Matrix {
    (0..ncols).map(|c| m.iter().map(|r| r[c].clone()).collect()).collect()
}
