//! Small exact linear algebra over `Q`.

use num_traits::{One, Zero};

use crate::Q;

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `xᵀ G y` for a symmetric Gram matrix `G`.
pub fn bilinear(gram: &[Vec<Q>], x: &[Q], y: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (i, row) in gram.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        acc += x[i] * dot(row, y);
    }
    acc
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Q], c: Q) -> Vec<Q> {
    a.iter().map(|x| x * c).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Q::one() / m[row][col];
        for x in m[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[row].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solves `A x = b` where `A` is given by rows. Returns `None` unless the
/// system is consistent with a unique solution.
pub fn solve_unique(rows: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let cols = rows.first()?.len();
    let mut aug: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(*b);
            r
        })
        .collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.contains(&cols) || pivots.len() != cols {
        return None;
    }
    Some((0..cols).map(|i| aug[i][cols]).collect())
}

/// Basis of the null space `{x : A x = 0}`.
pub fn null_space(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f];
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `Σ c_k basis_k = target`, if unique.
pub fn expand(basis: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let dim = target.len();
    let rows: Vec<Vec<Q>> = (0..dim)
        .map(|i| basis.iter().map(|b| b[i]).collect())
        .collect();
    solve_unique(&rows, target)
}
