//! Fraction-free elimination over the integers.
//!
//! Rational input is scaled row by row to integers, then eliminated with the
//! Bareiss update `a_ij <- (p * a_ij - a_ik * a_kj) / p_prev`, where every
//! division is exact because each intermediate entry is a minor of the scaled
//! input. Gauss-Jordan variant: rows above the pivot are updated too, so the
//! final integer matrix is `d * RREF` for the last pivot `d`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::rat::{self, Rat};

/// Integer matrix obtained by clearing denominators row by row.
fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = rat::lcm_of_denominators(row);
            row.iter()
                .map(|v| {
                    if v.is_zero() {
                        BigInt::zero()
                    } else {
                        v.numer() * (&l / v.denom())
                    }
                })
                .collect()
        })
        .collect()
}

/// Picks the pivot row with the smallest nonzero entry in column `c`.
fn choose_pivot(a: &[Vec<BigInt>], from: usize, c: usize) -> Option<usize> {
    let mut best: Option<(usize, u64)> = None;
    for (i, row) in a.iter().enumerate().skip(from) {
        if !row[c].is_zero() {
            let b = row[c].bits();
            if best.map_or(true, |(_, bb)| b < bb) {
                best = Some((i, b));
                if b <= 1 {
                    break;
                }
            }
        }
    }
    best.map(|(i, _)| i)
}

/// Fraction-free Gauss-Jordan. Returns the integer matrix, pivot columns, and
/// the common pivot value.
fn gauss_jordan_int(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>, BigInt) {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p_row) = choose_pivot(&a, r, c) else {
            continue;
        };
        a.swap(r, p_row);
        let (head, tail) = a.split_at_mut(r);
        let (prow, tail) = tail.split_first_mut().unwrap();
        let p = prow[c].clone();
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let f = row[c].clone();
            if f.is_zero() {
                if p != prev {
                    for x in row.iter_mut() {
                        if !x.is_zero() {
                            *x = &*x * &p / &prev;
                        }
                    }
                }
                continue;
            }
            for (j, x) in row.iter_mut().enumerate() {
                let pj = &prow[j];
                if x.is_zero() && pj.is_zero() {
                    continue;
                }
                *x = (&p * &*x - &f * pj) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    // Rows past the rank were scaled only up to their own last update; they
    // are zero anyway.
    (a, pivots, prev)
}

/// Unique reduced row-echelon form and rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let (rref, pivots) = rref_with_pivots(m);
    (rref, pivots.len())
}

pub fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let cols = m.cols();
    let (a, pivots, d) = gauss_jordan_int(integer_rows(m), cols);
    let mut out = Matrix::zeros(m.rows(), cols);
    let d = d.clone();
    for (t, _) in pivots.iter().enumerate() {
        for j in 0..cols {
            let x = &a[t][j];
            if !x.is_zero() {
                out[(t, j)] = Rat::new(x.clone(), d.clone());
            }
        }
    }
    (out, pivots)
}

/// Rank via forward-only Bareiss elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut a = integer_rows(m);
    let cols = m.cols();
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p_row) = choose_pivot(&a, r, c) else {
            continue;
        };
        a.swap(r, p_row);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        let p = prow[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let pj = &prow[j];
                let x = &mut row[j];
                if x.is_zero() && (f.is_zero() || pj.is_zero()) {
                    continue;
                }
                *x = (&p * &*x - &f * pj) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = p;
        r += 1;
    }
    r
}

/// Determinant of a square matrix (Bareiss).
pub fn determinant(m: &Matrix) -> Rat {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Rat::one();
    }
    let mut scale = Rat::one();
    for i in 0..n {
        scale *= Rat::from_integer(rat::lcm_of_denominators(m.row(i)));
    }
    let mut a = integer_rows(m);
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for c in 0..n {
        let Some(p_row) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p_row != c {
            a.swap(c, p_row);
            sign = -sign;
        }
        let (head, tail) = a.split_at_mut(c + 1);
        let prow = &head[c];
        let p = prow[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..n {
                row[j] = (&p * &row[j] - &f * &prow[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = p;
    }
    let det = Rat::from_integer(a[n - 1][n - 1].clone()) / scale;
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Basis vectors of the null space, one per free column, read off the RREF.
pub fn kernel_vectors(m: &Matrix) -> Vec<Vec<Rat>> {
    let cols = m.cols();
    let (r, pivots) = rref_with_pivots(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (t, &p) in pivots.iter().enumerate() {
                v[p] = -r[(t, f)].clone();
            }
            v
        })
        .collect()
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    Subspace::from_vectors(m.cols(), &kernel_vectors(m))
}

/// Column span as a subspace of `Q^rows`.
pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::from_matrix_rows(&m.transpose())
}

/// Vectors `l` with `l^T m = 0`; `im m = { w : l . w = 0 }`.
pub fn left_kernel_vectors(m: &Matrix) -> Vec<Vec<Rat>> {
    kernel_vectors(&m.transpose())
}

/// Some solution of `m x = b`, or `None` when inconsistent.
pub fn solve(m: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let aug = m.hstack(&Matrix::from_columns(m.rows(), &[b.to_vec()]));
    let (r, pivots) = rref_with_pivots(&aug);
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![Rat::zero(); m.cols()];
    for (t, &p) in pivots.iter().enumerate() {
        x[p] = r[(t, m.cols())].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert!(m.is_square());
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(n));
    let (r, pivots) = rref_with_pivots(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.block(0, n, n, n))
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
///
/// Picks `k` pivot coordinates where the basis is invertible, so a
/// coordinate lookup is a `k x k` product followed by an exact membership
/// check.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    /// inverse of the `k x k` matrix `basis[i][pivots[j]]`
    pivot_inverse: Matrix,
}

impl CoordinateMap {
    /// Returns `None` when the vectors are linearly dependent.
    pub fn new(basis: Vec<Vec<Rat>>) -> Option<Self> {
        let k = basis.len();
        let ambient = basis.first().map_or(0, Vec::len);
        if k == 0 {
            return Some(CoordinateMap {
                basis,
                pivots: vec![],
                pivot_inverse: Matrix::zeros(0, 0),
            });
        }
        let b = Matrix::from_rows(basis.clone()).ok()?;
        let (_, pivots) = rref_with_pivots(&b);
        if pivots.len() < k {
            return None;
        }
        debug_assert!(pivots.iter().all(|&p| p < ambient));
        let sub = b.select_columns(&pivots);
        let pivot_inverse = inverse(&sub)?;
        Some(CoordinateMap {
            basis,
            pivots,
            pivot_inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Coordinates without the membership check.
    pub fn coords_unchecked(&self, v: &[Rat]) -> Vec<Rat> {
        let k = self.dim();
        let mut c = vec![Rat::zero(); k];
        for (j, &p) in self.pivots.iter().enumerate() {
            let vp = &v[p];
            if vp.is_zero() {
                continue;
            }
            for (i, ci) in c.iter_mut().enumerate() {
                let m = &self.pivot_inverse[(j, i)];
                if !m.is_zero() {
                    *ci += vp * m;
                }
            }
        }
        c
    }

    /// Coordinates `c` with `sum c_i basis_i = v`, or `None` when `v` is
    /// outside the span.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let c = self.coords_unchecked(v);
        let mut recon = vec![Rat::zero(); v.len()];
        for (ci, b) in c.iter().zip(&self.basis) {
            super::matrix::axpy(&mut recon, ci, b);
        }
        (recon.as_slice() == v).then_some(c)
    }
}

/// Largest absolute entry size in bits; used by diagnostics.
pub fn max_bits(m: &Matrix) -> u64 {
    m.entries().iter().map(rat::abs_bits).max().unwrap_or(0)
}

pub fn is_integral(m: &Matrix) -> bool {
    m.entries().iter().all(|v| v.denom().is_one())
}

pub fn abs_max(v: &[Rat]) -> Rat {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rat::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    #[test]
    fn rref_examples() {
        let (r, k) = rref(&Matrix::identity(3));
        assert_eq!((r, k), (Matrix::identity(3), 3));
        let (r, k) = rref(&Matrix::zeros(2, 4));
        assert_eq!((r, k), (Matrix::zeros(2, 4), 0));
        let (r, k) = rref(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(k, 1);
    }

    #[test]
    fn rref_with_fractions() {
        let m = Matrix::from_rows(vec![
            vec![frac(1, 2), frac(1, 3), int(1)],
            vec![int(2), int(0), frac(-1, 5)],
        ])
        .unwrap();
        let (r, k) = rref(&m);
        assert_eq!(k, 2);
        assert_eq!(r[(0, 0)], int(1));
        assert_eq!(r[(1, 1)], int(1));
        // first row: x + 0y - z/10 = 0
        assert_eq!(r[(0, 2)], frac(-1, 10));
        assert_eq!(r[(1, 2)], frac(63, 20));
    }

    #[test]
    fn kernel_examples() {
        let d = Matrix::diagonal(&[int(1), int(1), int(0)]);
        let k = kernel_basis(&d);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[int(0), int(0), int(1)]));
        assert_eq!(kernel_basis(&Matrix::zeros(2, 2)).dim(), 2);
        let k = kernel_basis(&Matrix::from_i64(&[&[1, 1, 1]]));
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert_eq!(&v[0] + &v[1] + &v[2], int(0));
        }
    }

    #[test]
    fn image_examples() {
        let d = Matrix::diagonal(&[int(1), int(1), int(0)]);
        let im = image_basis(&d);
        assert_eq!(im.dim(), 2);
        assert!(im.contains(&[int(1), int(0), int(0)]));
        assert!(!im.contains(&[int(0), int(0), int(1)]));
        assert_eq!(image_basis(&Matrix::identity(3)).dim(), 3);
        let col = image_basis(&Matrix::from_i64(&[&[1], &[2]]));
        assert_eq!(col.dim(), 1);
        assert!(col.contains(&[int(1), int(2)]));
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), frac(1, 2)];
        assert_eq!(solve(&Matrix::identity(2), &b), Some(b.clone()));
        assert_eq!(solve(&Matrix::zeros(2, 2), &b), None);
        let m = Matrix::from_i64(&[&[1, 1]]);
        let x = solve(&m, &[int(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![int(2)]);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(determinant(&m), int(18));
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert!(inverse(&Matrix::from_i64(&[&[1, 2], &[2, 4]])).is_none());
        let h = Matrix::from_rows(vec![vec![frac(1, 2), int(1)], vec![int(0), frac(2, 3)]]).unwrap();
        assert_eq!(determinant(&h), frac(1, 3));
    }

    #[test]
    fn coordinate_map() {
        let basis = vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]];
        let cm = CoordinateMap::new(basis).unwrap();
        assert_eq!(cm.coords(&[int(2), int(5), int(3)]), Some(vec![int(2), int(3)]));
        assert_eq!(cm.coords(&[int(1), int(0), int(0)]), None);
        assert!(CoordinateMap::new(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).is_none());
    }
}
