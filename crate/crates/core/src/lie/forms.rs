//! Invariant bilinear forms.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::rep::Representation;
use super::weights::SparseMat;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Subspace};
use crate::rat::{self, Rat};
use crate::space::MatrixSpace;

/// `kappa(x_i, x_j) = tr(ad x_i ad x_j)`, from the structure constants.
pub fn killing_form(g: &LieAlgebra) -> Matrix {
    let d = g.dim();
    let mut k = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            // sum over l of the x_l coefficient of [x_i, [x_j, x_l]]
            let mut t = Rat::zero();
            for l in 0..d {
                for (m, a) in g.bracket_basis(j, l) {
                    for (q, b) in g.bracket_basis(i, *m) {
                        if *q == l {
                            t += a * b;
                        }
                    }
                }
            }
            k[(i, j)] = t.clone();
            k[(j, i)] = t;
        }
    }
    k
}

pub fn is_semisimple(g: &LieAlgebra) -> bool {
    g.dim() > 0 && linalg::rank(&killing_form(g)) == g.dim()
}

/// Basis of the symmetric forms `B` with `rho(x)^T B + B rho(x) = 0`.
/// Solved in a weight basis, where `B(v_a, v_b)` can be nonzero only when
/// the weights of `v_a` and `v_b` add to zero.
pub fn invariant_symmetric_forms(rho: &Representation) -> Result<Vec<Matrix>> {
    let wd = rho.weights()?;
    let n = rho.dim();
    let mut unknowns = Vec::new();
    for a in 0..n {
        for b in a..n {
            if wd.weights[a]
                .iter()
                .zip(&wd.weights[b])
                .all(|(x, y)| (x + y).is_zero())
            {
                unknowns.push((a, b));
            }
        }
    }
    let mats: Vec<SparseMat> = rho
        .matrices()
        .iter()
        .map(|m| SparseMat::from(&wd.to_weight_basis(m)))
        .collect();
    // entry (c, d) of R^T B + B R for B = E_ab + E_ba
    let mut eqs: BTreeMap<(usize, usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
    for (x, r) in mats.iter().enumerate() {
        for (q, &(a, b)) in unknowns.iter().enumerate() {
            let sym: &[(usize, usize)] = if a == b { &[(a, b)] } else { &[(a, b), (b, a)] };
            for &(s, t) in sym {
                // (R^T E_st)_{cd} = R_sc delta_td
                for (c, v) in &r.rows[s] {
                    eqs.entry((x, *c, t)).or_default().push((q, v.clone()));
                }
                // (E_st R)_{cd} = delta_cs R_td
                for (d, v) in &r.rows[t] {
                    eqs.entry((x, s, *d)).or_default().push((q, v.clone()));
                }
            }
        }
    }
    let m = unknowns.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let rows: Vec<Vec<Rat>> = eqs
        .values()
        .filter_map(|terms| {
            let mut row = vec![Rat::zero(); m];
            for (q, v) in terms {
                row[*q] += v;
            }
            (!row.iter().all(Zero::is_zero)).then_some(row)
        })
        .collect();
    let ker = if rows.is_empty() {
        Matrix::identity(m).row_vecs()
    } else {
        linalg::kernel_vectors(&Matrix::from_rows(rows)?)
    };
    Ok(ker
        .iter()
        .map(|c| {
            let mut b = Matrix::zeros(n, n);
            for (q, &(s, t)) in unknowns.iter().enumerate() {
                b[(s, t)] = c[q].clone();
                b[(t, s)] = c[q].clone();
            }
            // back to the original basis: P^-T B' P^-1
            if wd.standard {
                b
            } else {
                wd.basis_inv.transpose().mul(&b).mul(&wd.basis_inv)
            }
        })
        .collect())
}

/// A nondegenerate invariant symmetric form: the first basis form that is
/// nondegenerate, else the first small integer combination that is.
pub fn invariant_bilinear_form(rho: &Representation) -> Result<Matrix> {
    let forms = invariant_symmetric_forms(rho)?;
    if forms.is_empty() {
        return Err(Error::NoInvariantForm);
    }
    let nondegenerate = |b: &Matrix| linalg::rank(b) == b.rows();
    if let Some(b) = forms.iter().find(|b| nondegenerate(b)) {
        return Ok(b.clone());
    }
    for t in 1..=forms.len() as i64 + 2 {
        let coeffs: Vec<Rat> = (0..forms.len() as i64).map(|i| rat::int(1 + t * i)).collect();
        let b = crate::linalg::matrix::combine(&coeffs, &forms);
        if nondegenerate(&b) {
            return Ok(b);
        }
    }
    Err(Error::DegenerateForm)
}

/// `o(B) = {X : B X + X^T B = 0}`, spanned by `B^-1 (E_ij - E_ji)`.
pub fn orthogonal_algebra_of_form(b: &Matrix) -> Result<MatrixSpace> {
    if !b.is_symmetric() {
        return Err(Error::InvalidInput("form is not symmetric".into()));
    }
    let n = b.rows();
    let inv = linalg::inverse(b).ok_or(Error::DegenerateForm)?;
    let mut basis = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let s = Matrix::unit(n, i, j).sub(&Matrix::unit(n, j, i));
            basis.push(inv.mul(&s));
        }
    }
    MatrixSpace::new(n, basis)
}

/// Vectors killed by every `rho(x)`.
pub fn invariant_vectors(rho: &Representation) -> Vec<Vec<Rat>> {
    let n = rho.dim();
    let rows: Vec<Vec<Rat>> = rho
        .matrices()
        .iter()
        .flat_map(|m| m.row_vecs())
        .filter(|r| !r.iter().all(Zero::is_zero))
        .collect();
    if rows.is_empty() {
        return Matrix::identity(n).row_vecs();
    }
    linalg::kernel_vectors(&Matrix::from_rows(rows).unwrap())
}

/// Basis of the orthogonal complement of the invariant vectors under a
/// nondegenerate invariant symmetric form.
pub fn trivial_summand_complement_basis(rho: &Representation) -> Result<Vec<Vec<Rat>>> {
    let inv = invariant_vectors(rho);
    let n = rho.dim();
    if inv.is_empty() {
        return Ok(Matrix::identity(n).row_vecs());
    }
    let b = invariant_bilinear_form(rho)?;
    let covectors: Vec<Vec<Rat>> = inv.iter().map(|v| b.mul_vec(v)).collect();
    // B must stay nondegenerate on the invariant vectors
    let gram = Matrix::from_rows(covectors.clone())?.mul(&Matrix::from_columns(n, &inv));
    if linalg::rank(&gram) < inv.len() {
        return Err(Error::DegenerateForm);
    }
    Ok(Subspace::from_vectors(n, &covectors).annihilator().basis_vectors())
}

pub fn trivial_summand_complement(rho: &Representation) -> Result<Representation> {
    let basis = trivial_summand_complement_basis(rho)?;
    if basis.len() == rho.dim() {
        return Ok(rho.clone());
    }
    Ok(rho
        .restrict(&basis)?
        .with_label(format!("{} minus trivial", rho.label())))
}

/// `kappa([x, y], z) = kappa(x, [y, z])` on all basis triples.
pub fn killing_is_invariant(g: &LieAlgebra, k: &Matrix) -> bool {
    let d = g.dim();
    for i in 0..d {
        for j in 0..d {
            let xy = g.bracket(&g.unit(i), &g.unit(j));
            for l in 0..d {
                let yz = g.bracket(&g.unit(j), &g.unit(l));
                let lhs: Rat = (0..d).map(|m| &xy[m] * &k[(m, l)]).sum();
                let rhs: Rat = (0..d).map(|m| &k[(i, m)] * &yz[m]).sum();
                if lhs != rhs {
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
    use crate::lie::classical::sl;

    #[test]
    fn killing_sl2_sl3() {
        let (g, _) = sl(2);
        let k = killing_form(&g);
        assert!(is_semisimple(&g));
        assert!(killing_is_invariant(&g, &k));
        let (g3, _) = sl(3);
        assert!(killing_is_invariant(&g3, &killing_form(&g3)));
    }

    #[test]
    fn abelian_is_not_semisimple() {
        let g = LieAlgebra::new(2, vec!["a".into(), "b".into()], vec![0, 1], vec![]).unwrap();
        assert!(!is_semisimple(&g));
    }

    #[test]
    fn invariant_forms_and_complements() {
        let (g, std) = sl(2);
        let s2 = std.symmetric_square().unwrap();
        // no trivial part: complement is the whole module
        assert!(invariant_vectors(&s2).is_empty());
        assert_eq!(trivial_summand_complement(&s2).unwrap().dim(), 3);
        let ad = Representation::adjoint(g.clone());
        let sum = ad.direct_sum(&Representation::trivial(g, 1)).unwrap();
        let c = trivial_summand_complement(&sum).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.matrices(), ad.matrices());
        let b = invariant_bilinear_form(&std.tensor(&std).unwrap()).unwrap();
        assert_eq!(linalg::rank(&b), 4);
    }

    #[test]
    fn orthogonal_algebra_dims() {
        let b = Matrix::identity(4);
        let o = orthogonal_algebra_of_form(&b).unwrap();
        assert_eq!(o.dim(), 6);
        assert!(o.basis().iter().all(Matrix::is_skew));
        assert_eq!(
            orthogonal_algebra_of_form(&Matrix::zeros(2, 2)).unwrap_err(),
            Error::DegenerateForm
        );
    }
}
