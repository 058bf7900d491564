//! Explicit families of singular matrix spaces.

mod pencil;

pub use pencil::{
    pencil_compression_witness, pencil_kernel_vectors, witness_from_kernel_vector,
    CompressionWitness, UPoly,
};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rat::Rat;
use crate::space::MatrixSpace;

/// `{ A in End(Q^n) : A U ⊆ W }`.
pub fn compression_space(n: usize, u: &Subspace, w: &Subspace) -> Result<MatrixSpace> {
    if u.ambient_dim() != n || w.ambient_dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "U in Q^{}, W in Q^{}, expected Q^{n}",
            u.ambient_dim(),
            w.ambient_dim()
        )));
    }
    // l^T A x = 0 for x in U and l in W^perp
    let mut rows = Vec::new();
    for l in w.annihilator().basis_vectors() {
        for x in u.basis_vectors() {
            let mut row = vec![Rat::zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    row[i * n + j] = &l[i] * &x[j];
                }
            }
            rows.push(row);
        }
    }
    let sol = Subspace::from_vectors(n * n, &rows).annihilator();
    Ok(MatrixSpace::from_subspace(n, &sol))
}

/// Compression space with `U = span(e_1..e_k)` and `W = span(e_1..e_{k-1})`.
pub fn standard_compression_space(n: usize, k: usize) -> Result<MatrixSpace> {
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let u = Subspace::from_vectors(n, &unit_vectors(n, 0..k));
    let w = Subspace::from_vectors(n, &unit_vectors(n, 0..k - 1));
    compression_space(n, &u, &w)
}

fn unit_vectors(n: usize, range: std::ops::Range<usize>) -> Vec<Vec<Rat>> {
    range
        .map(|i| {
            let mut v = vec![Rat::zero(); n];
            v[i] = Rat::one();
            v
        })
        .collect()
}

/// `E_ij - E_ji` for `i < j`.
pub fn skew_space(n: usize) -> MatrixSpace {
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            basis.push(Matrix::unit(n, i, j).sub(&Matrix::unit(n, j, i)));
        }
    }
    MatrixSpace::new(n, basis).expect("elementary skew matrices are independent")
}

/// The matrices `M_k` with `phi(x) = sum_k x_k M_k`, where column `i` of
/// `phi(x)` is `A_i x`.
pub fn pare_map(a: &[Matrix]) -> Result<Vec<Matrix>> {
    let n = a.len();
    for (i, ai) in a.iter().enumerate() {
        if ai.rows() != n || ai.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "A_{} is {}x{}, expected {n}x{n}",
                i + 1,
                ai.rows(),
                ai.cols()
            )));
        }
        if !ai.is_skew() {
            return Err(Error::NotSkew { index: i });
        }
    }
    Ok((0..n)
        .map(|k| Matrix::from_fn(n, n, |r, i| a[i][(r, k)].clone()))
        .collect())
}

pub fn pare_space(a: &[Matrix]) -> Result<MatrixSpace> {
    MatrixSpace::from_spanning(a.len(), pare_map(a)?)
}

/// `A_i = E_{i,i+1} - E_{i+1,i}` for `i < n`, `A_n = E_{n,1} - E_{1,n}`.
pub fn pare_standard_matrices(n: usize) -> Vec<Matrix> {
    (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            Matrix::unit(n, i, j).sub(&Matrix::unit(n, j, i))
        })
        .collect()
}

pub fn pare_standard(n: usize) -> Result<MatrixSpace> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("Paré spaces need n >= 3, got {n}")));
    }
    pare_space(&pare_standard_matrices(n))
}

/// Whether every entry of `x^T phi(x)` is the zero quadratic form, with
/// `phi(x) = sum_k x_k M_k`.
pub fn quadratic_form_vanishes(m: &[Matrix]) -> bool {
    let n = m.len();
    for i in 0..n {
        for k in 0..n {
            for l in k..n {
                let c = if k == l {
                    m[k][(k, i)].clone()
                } else {
                    &m[k][(l, i)] + &m[l][(k, i)]
                };
                if !c.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{generic_rank, SamplingOptions};

    #[test]
    fn compression_dimensions() {
        let a = standard_compression_space(4, 2).unwrap();
        assert_eq!(a.dim(), 16 - 8 + 4 - 2);
        let a = standard_compression_space(3, 1).unwrap();
        assert_eq!(a.dim(), 6);
        for b in a.basis() {
            assert!(b.column(0).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn compression_maps_u_into_w() {
        let n = 4;
        let u = Subspace::from_vectors(n, &unit_vectors(n, 0..3));
        let w = Subspace::from_vectors(n, &[vec![Rat::one(), Rat::one(), Rat::zero(), Rat::one()], unit_vectors(n, 2..3)[0].clone()]);
        let a = compression_space(n, &u, &w).unwrap();
        assert_eq!(a.dim(), 16 - 3 * 4 + 9 - 3);
        for b in a.basis() {
            for x in u.basis_vectors() {
                assert!(w.contains(&b.mul_vec(&x)));
            }
        }
        assert!(compression_space(3, &u, &w).is_err());
    }

    #[test]
    fn skew_examples() {
        let o = SamplingOptions::with_seed(3);
        assert_eq!(skew_space(3).dim(), 3);
        let s5 = skew_space(5);
        assert_eq!(s5.dim(), 10);
        assert_eq!(generic_rank(&s5, &o).0, 4);
        assert_eq!(generic_rank(&skew_space(2), &o).0, 2);
    }

    #[test]
    fn pare_examples() {
        let o = SamplingOptions::with_seed(5);
        let p3 = pare_standard(3).unwrap();
        assert_eq!(p3.dim(), 3);
        assert!(generic_rank(&p3, &o).0 < 3);
        assert!(quadratic_form_vanishes(&pare_map(&pare_standard_matrices(3)).unwrap()));
        assert_eq!(generic_rank(&pare_standard(5).unwrap(), &o).0, 4);
        let zero = pare_space(&vec![Matrix::zeros(3, 3); 3]).unwrap();
        assert_eq!(zero.dim(), 0);
        let bad = vec![Matrix::identity(3), Matrix::zeros(3, 3), Matrix::zeros(3, 3)];
        assert_eq!(pare_space(&bad).unwrap_err(), Error::NotSkew { index: 0 });
    }
}
