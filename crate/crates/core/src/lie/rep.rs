use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::algebra::{combine_sparse, LieAlgebra};
use super::weights::{weight_decomposition, WeightDecomposition};
use crate::error::{Error, Result};
use crate::linalg::{CoordinateMap, Matrix};
use crate::rat::Rat;

/// A representation `rho: g -> End(Q^n)` given on the basis of `g`.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    matrices: Vec<Matrix>,
    label: String,
    weights: OnceLock<Result<WeightDecomposition>>,
}

impl Representation {
    /// Checks shapes and `rho([x_i, x_j]) = [rho(x_i), rho(x_j)]`.
    pub fn new(
        algebra: Arc<LieAlgebra>,
        dim: usize,
        matrices: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let r = Self::new_unchecked(algebra, dim, matrices, label)?;
        r.check_homomorphism()?;
        Ok(r)
    }

    /// Checks shapes only.
    pub fn new_unchecked(
        algebra: Arc<LieAlgebra>,
        dim: usize,
        matrices: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for a {}-dimensional algebra",
                matrices.len(),
                algebra.dim()
            )));
        }
        if let Some(i) = matrices.iter().position(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "matrix {i} is {}x{}, expected {dim}x{dim}",
                matrices[i].rows(),
                matrices[i].cols()
            )));
        }
        Ok(Representation {
            algebra,
            dim,
            matrices,
            label: label.into(),
            weights: OnceLock::new(),
        })
    }

    pub fn check_homomorphism(&self) -> Result<()> {
        let d = self.algebra.dim();
        let pairs: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .collect();
        let bad = pairs.par_iter().find_first(|&&(i, j)| {
            let lhs = self.act_sparse(self.algebra.bracket_basis(i, j));
            lhs != self.matrices[i].commutator(&self.matrices[j])
        });
        match bad {
            Some(&(i, j)) => Err(Error::NotHomomorphism(i, j)),
            None => Ok(()),
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `rho(x)` for `x` in basis coordinates.
    pub fn act(&self, x: &[Rat]) -> Matrix {
        combine_sparse(x, &self.matrices, self.dim)
    }

    fn act_sparse(&self, x: &[(usize, Rat)]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in x {
            out.add_scaled(c, &self.matrices[*i]);
        }
        out
    }

    /// Weight decomposition under the designated Cartan, computed once.
    pub fn weights(&self) -> Result<&WeightDecomposition> {
        self.weights
            .get_or_init(|| {
                let hs: Vec<Matrix> = self
                    .algebra
                    .cartan()
                    .iter()
                    .map(|&i| self.matrices[i].clone())
                    .collect();
                weight_decomposition(&hs, self.dim)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn adjoint(algebra: Arc<LieAlgebra>) -> Representation {
        let d = algebra.dim();
        let mats = (0..d).map(|i| algebra.ad_basis(i)).collect();
        Representation::new(algebra, d, mats, "adjoint").expect("ad is a homomorphism by Jacobi")
    }

    pub fn trivial(algebra: Arc<LieAlgebra>, dim: usize) -> Representation {
        let mats = vec![Matrix::zeros(dim, dim); algebra.dim()];
        Representation::new_unchecked(algebra, dim, mats, "trivial").unwrap()
    }

    fn same_algebra(&self, other: &Representation) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::InvalidInput("representations of different algebras".into()))
        }
    }

    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        self.same_algebra(other)?;
        let (i1, i2) = (Matrix::identity(self.dim), Matrix::identity(other.dim));
        let mats = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(x, y)| x.kron(&i2).add(&i1.kron(y)))
            .collect();
        Representation::new(
            self.algebra.clone(),
            self.dim * other.dim,
            mats,
            format!("{} (x) {}", self.label, other.label),
        )
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.same_algebra(other)?;
        let n = self.dim + other.dim;
        let mats = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(x, y)| {
                Matrix::from_fn(n, n, |i, j| match (i < self.dim, j < self.dim) {
                    (true, true) => x[(i, j)].clone(),
                    (false, false) => y[(i - self.dim, j - self.dim)].clone(),
                    _ => Rat::zero(),
                })
            })
            .collect();
        Representation::new(
            self.algebra.clone(),
            n,
            mats,
            format!("{} + {}", self.label, other.label),
        )
    }

    /// `x -> -rho(x)^T`
    pub fn dual(&self) -> Representation {
        let mats = self
            .matrices
            .iter()
            .map(|m| m.transpose().scale(&-Rat::one()))
            .collect();
        Representation::new_unchecked(self.algebra.clone(), self.dim, mats, format!("{}*", self.label))
            .unwrap()
    }

    /// Action on `S^2(V)` in the basis `e_i e_j`, `i <= j`.
    pub fn symmetric_square(&self) -> Result<Representation> {
        let mats: Vec<Matrix> = self.matrices.par_iter().map(sym2_matrix).collect();
        let n = self.dim * (self.dim + 1) / 2;
        Representation::new(self.algebra.clone(), n, mats, format!("S2({})", self.label))
    }

    /// Restriction to the invariant subspace spanned by `basis`; the result
    /// is written in that basis.
    pub fn restrict(&self, basis: &[Vec<Rat>]) -> Result<Representation> {
        let mats = restrict_matrices(&self.matrices, basis)?;
        Representation::new(
            self.algebra.clone(),
            basis.len(),
            mats,
            format!("{}|{}", self.label, basis.len()),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut out = serde_json::json!({
            "label": self.label,
            "algebra": self.algebra.to_json(),
            "dim_V": self.dim,
            "matrices": self.matrices.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        });
        if let Some(Ok(w)) = self.weights.get() {
            out["weights"] = w.weights_json();
        }
        out
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let algebra = LieAlgebra::from_json(
            v.get("algebra")
                .ok_or_else(|| Error::Parse("representation: missing field \"algebra\"".into()))?,
        )?;
        let dim = v
            .get("dim_V")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Parse("representation: missing integer field \"dim_V\"".into()))?
            as usize;
        let mats = v
            .get("matrices")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| Error::Parse("representation: missing array field \"matrices\"".into()))?
            .iter()
            .enumerate()
            .map(|(i, m)| {
                Matrix::from_json(m).map_err(|e| Error::Parse(format!("matrices[{i}]: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let label = v.get("label").and_then(|l| l.as_str()).unwrap_or("from-file");
        Representation::new(Arc::new(algebra), dim, mats, label)
    }
}

/// Matrix of `X` acting on `S^2` in the basis `e_i e_j`, `i <= j`.
pub fn sym2_matrix(x: &Matrix) -> Matrix {
    let n = x.rows();
    let idx = |i: usize, j: usize| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        // position of (a, b) in row-major upper-triangular order
        a * n - a * (a + 1) / 2 + b
    };
    let m = n * (n + 1) / 2;
    let mut out = Matrix::zeros(m, m);
    for i in 0..n {
        for j in i..n {
            let col = idx(i, j);
            for k in 0..n {
                let a = &x[(k, i)];
                if !a.is_zero() {
                    out[(idx(k, j), col)] += a;
                }
                let b = &x[(k, j)];
                if !b.is_zero() {
                    out[(idx(i, k), col)] += b;
                }
            }
        }
    }
    out
}

/// Matrices of the maps restricted to the span of `basis`, in that basis.
pub fn restrict_matrices(mats: &[Matrix], basis: &[Vec<Rat>]) -> Result<Vec<Matrix>> {
    let cm = CoordinateMap::new(basis.to_vec())
        .ok_or_else(|| Error::InvalidInput("restriction basis is linearly dependent".into()))?;
    let k = basis.len();
    mats.par_iter()
        .map(|m| {
            let cols = basis
                .iter()
                .map(|b| cm.coords(&m.mul_vec(b)).ok_or(Error::NotInvariant))
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(k, &cols))
        })
        .collect()
}
