//! Matrix Lie algebras and their polynomial representations.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::algebra::LieAlgebra;
use super::rep::Representation;
use super::weights::submodule_generated;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rat::{self, Rat};

/// `sl_m` with basis `H_1..H_{m-1}` (`H_k = E_kk - E_{k+1,k+1}`) followed by
/// `E_ij`, `i != j`, and its standard representation. Positive roots are the
/// `E_ij` with `i < j`.
pub fn sl(m: usize) -> (Arc<LieAlgebra>, Representation) {
    assert!(m >= 2, "sl(m) needs m >= 2");
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for k in 0..m - 1 {
        mats.push(Matrix::unit(m, k, k).sub(&Matrix::unit(m, k + 1, k + 1)));
        labels.push(format!("H{}", k + 1));
    }
    for (i, j) in sl_offdiagonal(m) {
        mats.push(Matrix::unit(m, i, j));
        labels.push(format!("E{}{}", i + 1, j + 1));
    }
    // f_k = k (m - k) pairs to diag(m-1, m-3, ..., 1-m), strictly decreasing
    let f = (1..m).map(|k| rat::int((k * (m - k)) as i64)).collect();
    let g = LieAlgebra::from_matrix_basis(&mats, (0..m - 1).collect(), labels)
        .expect("sl_m is a Lie algebra")
        .with_positivity(f);
    let g = Arc::new(g);
    let std = Representation::new(g.clone(), m, mats, format!("sl{m} standard"))
        .expect("standard representation");
    (g, std)
}

fn sl_offdiagonal(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect()
}

/// The `sl(m)` basis as lists of `(i, j, c)` matrix-unit terms.
fn sl_basis_ops(m: usize) -> Vec<Vec<(usize, usize, Rat)>> {
    let mut out = Vec::new();
    for k in 0..m - 1 {
        out.push(vec![(k, k, Rat::one()), (k + 1, k + 1, -Rat::one())]);
    }
    for (i, j) in sl_offdiagonal(m) {
        out.push(vec![(i, j, Rat::one())]);
    }
    out
}

/// Exponent vectors of degree-`k` monomials in `m` variables, in
/// lexicographically decreasing order (`x_1^k` first).
pub fn monomials(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == m {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(m, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    rec(m, k, &mut Vec::new(), &mut out);
    out
}

/// Matrix of `x_i d/dx_j` on degree-`k` polynomials in the monomial basis.
pub fn differential_operator(m: usize, k: usize, i: usize, j: usize) -> Matrix {
    let mons = monomials(m, k);
    let index: HashMap<&Vec<usize>, usize> = mons.iter().enumerate().map(|(t, a)| (a, t)).collect();
    let mut out = Matrix::zeros(mons.len(), mons.len());
    for (col, a) in mons.iter().enumerate() {
        if a[j] == 0 {
            continue;
        }
        let mut b = a.clone();
        b[j] -= 1;
        b[i] += 1;
        out[(index[&b], col)] += rat::int(a[j] as i64);
    }
    out
}

fn poly_rep(m: usize, k: usize, dual: bool) -> Representation {
    let (g, _) = sl(m);
    let n = monomials(m, k).len();
    let mats = sl_basis_ops(m)
        .into_iter()
        .map(|terms| {
            let mut out = Matrix::zeros(n, n);
            for (i, j, c) in terms {
                if dual {
                    // E_ij -> -x_j d/dx_i
                    out.add_scaled(&-c, &differential_operator(m, k, j, i));
                } else {
                    out.add_scaled(&c, &differential_operator(m, k, i, j));
                }
            }
            out
        })
        .collect();
    let label = if dual {
        format!("sl{m} on degree-{k} polynomials")
    } else {
        format!("S^{k}(sl{m} standard)")
    };
    Representation::new(g, n, mats, label).expect("polynomial representation")
}

/// `sl_m` acting on degree-`k` polynomials in `x_1..x_m` by
/// `E_ij -> -x_j d/dx_i`. Monomial `x^a` has weight `a_{k+1} - a_k` on
/// `H_k`; for the upper triangular Borel the highest root acts as
/// `-x_m d/dx_1`.
pub fn symmetric_power_poly_rep(m: usize, k: usize) -> Representation {
    poly_rep(m, k, true)
}

/// `S^k` of the standard representation: `E_ij -> x_i d/dx_j`.
pub fn symmetric_power_standard(m: usize, k: usize) -> Representation {
    poly_rep(m, k, false)
}

/// The irreducible `sl_3` module with Dynkin labels `[a, b]`: the component
/// of `S^a(V) (x) S^b(V*)` generated by `x_1^a (x) x_3^b`.
pub fn irreducible_sl3_rep(a: usize, b: usize) -> Result<Representation> {
    let s = symmetric_power_standard(3, a);
    let t = symmetric_power_poly_rep(3, b);
    let prod = s.tensor(&t)?;
    // highest weight vectors: x_1^a is monomial 0 in s, x_3^b is last in t
    let mut v = vec![Rat::zero(); prod.dim()];
    v[t.dim() - 1] = Rat::one();
    let sub = submodule_generated(&prod, &[v]);
    let expected = (a + 1) * (b + 1) * (a + b + 2) / 2;
    if sub.dim() != expected {
        return Err(Error::WeylDimensionMismatch {
            expected,
            found: sub.dim(),
        });
    }
    Ok(prod
        .restrict(&sub.basis_vectors())?
        .with_label(format!("sl3 irreducible [{a},{b}]")))
}

/// The Lie algebra `{X : X^T J + J X = 0}` with its defining
/// representation; `J` must be an invertible signed antidiagonal. The basis
/// is the reduced echelon basis of the solution space; diagonal elements form
/// the Cartan.
pub fn form_algebra(j: &Matrix, name: &str) -> Result<(Arc<LieAlgebra>, Representation)> {
    let n = j.rows();
    let space = orthogonal_space(j);
    let mats: Vec<Matrix> = space
        .basis_vectors()
        .iter()
        .map(|v| Matrix::from_flat(n, v))
        .collect();
    let is_diag = |m: &Matrix| (0..n).all(|a| (0..n).all(|b| a == b || m[(a, b)].is_zero()));
    let cartan: Vec<usize> = (0..mats.len()).filter(|&i| is_diag(&mats[i])).collect();
    let labels = mats
        .iter()
        .map(|m| {
            let (a, b) = (0..n * n)
                .map(|t| (t / n, t % n))
                .find(|&(a, b)| !m[(a, b)].is_zero())
                .unwrap();
            format!("X{}_{}", a + 1, b + 1)
        })
        .collect();
    let g = Arc::new(LieAlgebra::from_matrix_basis(&mats, cartan, labels)?);
    let std = Representation::new(g.clone(), n, mats, format!("{name} standard"))?;
    Ok((g, std))
}

/// `{X : X^T B + B X = 0}` as a subspace of `Q^{n^2}`.
pub fn orthogonal_space(b: &Matrix) -> Subspace {
    let n = b.rows();
    // entry (c, d) of X^T B + B X: sum_e X_ec B_ed + B_ce X_ed
    let mut rows = Vec::new();
    for c in 0..n {
        for d in c..n {
            let mut row = vec![Rat::zero(); n * n];
            for e in 0..n {
                row[e * n + c] += &b[(e, d)];
                row[e * n + d] += &b[(c, e)];
            }
            if !row.iter().all(Zero::is_zero) {
                rows.push(row);
            }
        }
    }
    Subspace::from_vectors(n * n, &rows).annihilator()
}

/// `so_n` for the split form with antidiagonal `J`.
pub fn so(n: usize) -> Result<(Arc<LieAlgebra>, Representation)> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("so(n) needs n >= 3, got {n}")));
    }
    let j = Matrix::from_fn(n, n, |a, b| if a + b == n - 1 { Rat::one() } else { Rat::zero() });
    form_algebra(&j, &format!("so{n}"))
}

/// `sp_n` (`n` even) for the antidiagonal form `J = [[0, K], [-K, 0]]`.
pub fn sp(n: usize) -> Result<(Arc<LieAlgebra>, Representation)> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidInput(format!("sp(n) needs even n >= 2, got {n}")));
    }
    let j = Matrix::from_fn(n, n, |a, b| {
        if a + b != n - 1 {
            Rat::zero()
        } else if a < n / 2 {
            Rat::one()
        } else {
            -Rat::one()
        }
    });
    form_algebra(&j, &format!("sp{n}"))
}
