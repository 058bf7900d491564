use num_traits::{One, Zero};

use super::echelon::{kernel_vectors, rref_with_pivots};
use super::matrix::{axpy, Matrix};
use crate::error::{Error, Result};
use crate::rat::Rat;

/// A subspace of `Q^d` stored as the nonzero rows of its reduced row-echelon
/// basis. The representation is canonical: two subspaces are equal iff their
/// stored bases are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient, "vector length vs ambient dimension");
        Self::from_matrix_rows(&m)
    }

    /// Row span of `m`.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, pivots) = rref_with_pivots(m);
        let basis = r.block(0, 0, pivots.len(), m.cols());
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient != other {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient, other
            )));
        }
        Ok(())
    }

    /// Remainder of `v` after reduction by the echelon basis; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w = v.to_vec();
        for (t, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let s = -w[p].clone();
                axpy(&mut w, &s, self.basis.row(t));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length vs ambient dimension");
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        Ok((0..other.dim()).all(|t| self.contains(other.basis.row(t))))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Ok(Self::from_matrix_rows(&self.basis.vstack(&other.basis)))
    }

    /// `U ∩ W` from the kernel of `[U^T | -W^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let (k, l) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(self.ambient, k + l);
        for t in 0..k {
            for (i, v) in self.basis.row(t).iter().enumerate() {
                m[(i, t)] = v.clone();
            }
        }
        for t in 0..l {
            for (i, v) in other.basis.row(t).iter().enumerate() {
                m[(i, k + t)] = -v.clone();
            }
        }
        let vectors: Vec<Vec<Rat>> = kernel_vectors(&m)
            .into_iter()
            .map(|c| {
                let mut v = vec![Rat::zero(); self.ambient];
                for t in 0..k {
                    axpy(&mut v, &c[t], self.basis.row(t));
                }
                v
            })
            .collect();
        Ok(Self::from_vectors(self.ambient, &vectors))
    }

    /// `{ a : a . u = 0 for all u in self }`
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<Vec<Rat>> = (0..self.ambient)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rat::zero(); self.ambient];
                v[f] = Rat::one();
                for (t, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.basis[(t, f)].clone();
                }
                v
            })
            .collect();
        Self::from_vectors(self.ambient, &vectors)
    }

    /// Adds one vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        let w: Vec<Rat> = w.iter().map(|x| x * &inv).collect();
        let mut rows = self.basis.row_vecs();
        for row in rows.iter_mut() {
            if !row[p].is_zero() {
                let s = -row[p].clone();
                axpy(row, &s, &w);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        rows.insert(pos, w);
        self.pivots.insert(pos, p);
        self.basis = Matrix::from_rows(rows).expect("rref rows");
        true
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn intersection_examples() {
        let u = Subspace::from_vectors(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        let e1 = Subspace::from_vectors(2, &[v(&[1, 0])]);
        let e2 = Subspace::from_vectors(2, &[v(&[0, 1])]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        let w = Subspace::from_vectors(3, &[v(&[1, 0, 0]), v(&[0, 0, 1])]);
        let i = u.intersect(&w).unwrap();
        assert_eq!(i, Subspace::from_vectors(3, &[v(&[1, 0, -1])]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(a.intersect(&b).is_err());
        assert!(a.sum(&b).is_err());
        assert!(a.equals(&b).is_err());
    }

    #[test]
    fn insert_keeps_canonical_form() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(&v(&[0, 2, 2])));
        assert!(s.insert(&v(&[1, 1, 0])));
        assert!(!s.insert(&v(&[1, 3, 2])));
        let direct = Subspace::from_vectors(3, &[v(&[0, 2, 2]), v(&[1, 1, 0])]);
        assert_eq!(s, direct);
    }

    #[test]
    fn annihilator_dims() {
        let s = Subspace::from_vectors(4, &[v(&[1, 2, 0, 1])]);
        let a = s.annihilator();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.annihilator(), s);
    }
}
