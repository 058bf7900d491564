use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{CoordinateMap, Matrix};
use crate::rat::{self, Rat};

/// Sparse vector: `(index, coefficient)` pairs with nonzero coefficients.
pub type SparseVec = Vec<(usize, Rat)>;

/// A Lie algebra given by structure constants `[x_i, x_j] = sum_k c_ij^k x_k`
/// with a designated split Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    cartan: Vec<usize>,
    /// `table[i][j]` is `[x_i, x_j]` as a sparse vector.
    table: Vec<Vec<SparseVec>>,
    /// Preferred functional on Cartan eigenvalue tuples used to pick
    /// positive roots.
    positivity: Option<Vec<Rat>>,
}

impl LieAlgebra {
    /// Checks antisymmetry, the Jacobi identity and that the Cartan elements
    /// commute.
    pub fn new(
        dim: usize,
        labels: Vec<String>,
        cartan: Vec<usize>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Rat)>,
    ) -> Result<Self> {
        let alg = Self::new_unchecked(dim, labels, cartan, constants)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Builds the table without the Jacobi check. Entries given for `(i, j)`
    /// are summed; `(j, i)` is not filled in automatically.
    pub fn new_unchecked(
        dim: usize,
        labels: Vec<String>,
        cartan: Vec<usize>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Rat)>,
    ) -> Result<Self> {
        if labels.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for a {dim}-dimensional algebra",
                labels.len()
            )));
        }
        if let Some(&c) = cartan.iter().find(|&&c| c >= dim) {
            return Err(Error::InvalidInput(format!("Cartan index {c} out of range")));
        }
        let mut dense = vec![vec![Vec::<Rat>::new(); dim]; dim];
        for (i, j, k, v) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidInput(format!(
                    "structure constant index ({i}, {j}, {k}) out of range"
                )));
            }
            let e = &mut dense[i][j];
            if e.is_empty() {
                e.resize(dim, Rat::zero());
            }
            e[k] += v;
        }
        let table = dense
            .into_iter()
            .map(|row| row.into_iter().map(|v| sparse(&v)).collect())
            .collect();
        Ok(LieAlgebra {
            dim,
            labels,
            cartan,
            table,
            positivity: None,
        })
    }

    pub fn with_positivity(mut self, f: Vec<Rat>) -> Self {
        assert_eq!(f.len(), self.cartan.len());
        self.positivity = Some(f);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cartan(&self) -> &[usize] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn positivity(&self) -> Option<&[Rat]> {
        self.positivity.as_deref()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xi * yj;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad x_i`: column `j` holds `[x_i, x_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in &self.table[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    pub fn ad(&self, x: &[Rat]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..self.dim {
                for (k, c) in &self.table[i][j] {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    pub fn unit(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = num_traits::One::one();
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|r| r.iter().all(Vec::is_empty))
    }

    pub fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let neg: SparseVec = self.table[j][i].iter().map(|(k, c)| (*k, -c)).collect();
                if self.table[i][j] != neg {
                    return Err(Error::AntisymmetryViolation(i, j));
                }
            }
        }
        let d = self.dim;
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        let bad = pairs.par_iter().find_map_first(|&(i, j)| {
            (j + 1..d)
                .find(|&k| !self.jacobi_sum(i, j, k).iter().all(Zero::is_zero))
                .map(|k| (i, j, k))
        });
        if let Some((i, j, k)) = bad {
            return Err(Error::JacobiViolation(i, j, k));
        }
        for (a, &i) in self.cartan.iter().enumerate() {
            for &j in &self.cartan[a + 1..] {
                if !self.table[i][j].is_empty() {
                    return Err(Error::CartanNotCommuting(i, j));
                }
            }
        }
        Ok(())
    }

    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            // [[x_a, x_b], x_c]
            for (m, s) in &self.table[a][b] {
                for (l, t) in &self.table[*m][c] {
                    out[*l] += s * t;
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut c = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, v) in &self.table[i][j] {
                    c.push(serde_json::json!([i, j, k, rat::to_string(v)]));
                }
            }
        }
        let mut out = serde_json::json!({
            "dim": self.dim,
            "labels": self.labels,
            "cartan": self.cartan,
            "c": c,
        });
        if let Some(f) = &self.positivity {
            out["positivity"] = f.iter().map(rat::to_string).collect::<Vec<_>>().into();
        }
        out
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let dim = v
            .get("dim")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Parse("algebra: missing integer field \"dim\"".into()))?
            as usize;
        let labels = match v.get("labels") {
            Some(l) => l
                .as_array()
                .ok_or_else(|| Error::Parse("algebra: \"labels\" must be an array".into()))?
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    s.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| Error::Parse(format!("algebra: labels[{i}] is not a string")))
                })
                .collect::<Result<Vec<_>>>()?,
            None => (0..dim).map(|i| format!("x{i}")).collect(),
        };
        let cartan = v
            .get("cartan")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| Error::Parse("algebra: missing array field \"cartan\"".into()))?
            .iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse(format!("algebra: cartan[{i}] is not an index")))
            })
            .collect::<Result<Vec<_>>>()?;
        let entries = v
            .get("c")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| Error::Parse("algebra: missing array field \"c\"".into()))?;
        let mut constants = Vec::with_capacity(entries.len());
        for (t, e) in entries.iter().enumerate() {
            let bad = || Error::Parse(format!("algebra: c[{t}] must be [i, j, k, \"rat\"]"));
            let a = e.as_array().filter(|a| a.len() == 4).ok_or_else(bad)?;
            let idx = |x: &serde_json::Value| x.as_u64().map(|x| x as usize).ok_or_else(bad);
            let val = rat::from_json(&a[3]).map_err(|e| Error::Parse(format!("algebra: c[{t}]: {e}")))?;
            constants.push((idx(&a[0])?, idx(&a[1])?, idx(&a[2])?, val));
        }
        let mut alg = LieAlgebra::new(dim, labels, cartan, constants)?;
        if let Some(f) = v.get("positivity") {
            let f = f
                .as_array()
                .ok_or_else(|| Error::Parse("algebra: \"positivity\" must be an array".into()))?
                .iter()
                .map(rat::from_json)
                .collect::<Result<Vec<_>>>()?;
            if f.len() != alg.rank() {
                return Err(Error::DimensionMismatch(
                    "positivity functional length differs from the Cartan rank".into(),
                ));
            }
            alg = alg.with_positivity(f);
        }
        Ok(alg)
    }

    /// Structure constants of the span of linearly independent matrices that
    /// is closed under commutators.
    pub fn from_matrix_basis(
        mats: &[Matrix],
        cartan: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let cm = CoordinateMap::new(mats.iter().map(|m| m.entries().to_vec()).collect())
            .ok_or_else(|| Error::InvalidInput("matrix basis is linearly dependent".into()))?;
        let d = mats.len();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        let brackets = pairs
            .par_iter()
            .map(|&(i, j)| {
                let c = mats[i].commutator(&mats[j]);
                cm.coords(c.entries()).ok_or(Error::NotClosedUnderBracket)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut constants = Vec::new();
        for (&(i, j), coords) in pairs.iter().zip(brackets) {
            for (k, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    constants.push((j, i, k, -&v));
                    constants.push((i, j, k, v));
                }
            }
        }
        LieAlgebra::new(d, labels, cartan, constants)
    }
}

pub(crate) fn sparse(v: &[Rat]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// `sum_i x_i M_i`
pub(crate) fn combine_sparse(x: &[Rat], mats: &[Matrix], n: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for (xi, m) in x.iter().zip(mats) {
        if !xi.is_zero() {
            out.add_scaled(xi, m);
        }
    }
    out
}
