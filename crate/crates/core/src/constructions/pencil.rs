//! Two-dimensional singular pencils are compression spaces.
//!
//! A polynomial kernel vector `u(s) = sum_j c_j s^j` of `sA + B` is found by
//! fraction-free elimination over `Q[s]`. Homogenizing to degree `D` and
//! setting `u_i = c_{D-i}` gives `A u_0 = 0`, `A u_i = -B u_{i-1}` and
//! `B u_D = 0`, so `U = span(u_i)` is compressed into `W = A U`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rat::Rat;

/// Univariate polynomial over Q, coefficients low degree first, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<Rat>);

impl UPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    /// `a s + b`
    pub fn linear(a: Rat, b: Rat) -> Self {
        UPoly::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn coeff(&self, j: usize) -> Rat {
        self.0.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.0.last()
    }

    pub fn scale(&self, s: &Rat) -> UPoly {
        UPoly::new(self.0.iter().map(|c| c * s).collect())
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().unwrap().recip();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn exact_div(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => a.scale(&l.recip()),
            None => a,
        }
    }
}

impl Zero for UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        UPoly::new((0..n).map(|j| self.coeff(j) + o.coeff(j)).collect())
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, o: UPoly) -> UPoly {
        &self + &o
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        UPoly::new((0..n).map(|j| self.coeff(j) - o.coeff(j)).collect())
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }
}

/// Fraction-free Gauss-Jordan over Q[s]. Returns the reduced rows, pivot
/// columns, and the common pivot value.
fn gauss_jordan_poly(mut a: Vec<Vec<UPoly>>, cols: usize) -> (Vec<Vec<UPoly>>, Vec<usize>, UPoly) {
    let nrows = a.len();
    let mut prev = UPoly::constant(Rat::one());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        // lowest degree pivot keeps the entries small
        let Some(p_row) = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].degree())
        else {
            continue;
        };
        a.swap(r, p_row);
        let prow = a[r].clone();
        let p = prow[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for (j, x) in row.iter_mut().enumerate() {
                if x.is_zero() && (f.is_zero() || prow[j].is_zero()) {
                    continue;
                }
                *x = (&(&p * x) - &(&f * &prow[j])).exact_div(&prev);
            }
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    (a, pivots, prev)
}

/// A pair `U`, `W` with `dim W < dim U` that every matrix of the pencil
/// maps `U` into.
#[derive(Clone, Debug)]
pub struct CompressionWitness {
    pub u: Subspace,
    pub w: Subspace,
    /// Homogeneous components `u_0, ..., u_d` of the kernel vector.
    pub chain: Vec<Vec<Rat>>,
}

impl CompressionWitness {
    /// `A U ⊆ W`, `B U ⊆ W`, `dim W < dim U`.
    pub fn verify(&self, a: &Matrix, b: &Matrix) -> bool {
        self.w.dim() < self.u.dim()
            && self.u.basis_vectors().iter().all(|x| {
                self.w.contains(&a.mul_vec(x)) && self.w.contains(&b.mul_vec(x))
            })
    }
}

/// Requires `span{A, B}` to be two-dimensional with `det(sA + tB) = 0`
/// identically. Uses a kernel vector of minimal degree.
pub fn pencil_compression_witness(a: &Matrix, b: &Matrix) -> Result<CompressionWitness> {
    let vs = pencil_kernel_vectors(a, b)?;
    let v = vs
        .iter()
        .min_by_key(|v| poly_vector_degree(v))
        .expect("a singular pencil has a kernel vector");
    witness_from_kernel_vector(a, b, v)
}

fn poly_vector_degree(v: &[UPoly]) -> usize {
    v.iter().filter_map(UPoly::degree).max().unwrap_or(0)
}

/// A basis of the kernel of `sA + B` over `Q(s)`, one primitive polynomial
/// vector per free column of the elimination.
pub fn pencil_kernel_vectors(a: &Matrix, b: &Matrix) -> Result<Vec<Vec<UPoly>>> {
    let n = a.rows();
    if !a.is_square() || b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "pencil of {}x{} and {}x{} matrices",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if crate::linalg::rank(&Matrix::from_rows(vec![a.entries().to_vec(), b.entries().to_vec()])?) < 2
    {
        return Err(Error::NotTwoDimensional);
    }
    let rows: Vec<Vec<UPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| UPoly::linear(a[(i, j)].clone(), b[(i, j)].clone()))
                .collect()
        })
        .collect();
    let (red, pivots, d) = gauss_jordan_poly(rows, n);
    if pivots.len() == n {
        return Err(Error::NotSingular);
    }
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    // d at the free column f, -row_t[f] at pivot p_t
    Ok((0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![UPoly::zero(); n];
            v[f] = d.clone();
            for (t, &p) in pivots.iter().enumerate() {
                v[p] = -&red[t][f];
            }
            let g = v.iter().fold(UPoly::zero(), |g, x| g.gcd(x));
            v.iter().map(|x| x.exact_div(&g)).collect()
        })
        .collect())
}

/// Witness from a nonzero polynomial kernel vector `v(s)` of `sA + B`.
pub fn witness_from_kernel_vector(
    a: &Matrix,
    b: &Matrix,
    v: &[UPoly],
) -> Result<CompressionWitness> {
    let n = a.rows();
    let deg = poly_vector_degree(v);
    let chain: Vec<Vec<Rat>> = (0..=deg)
        .map(|i| v.iter().map(|x| x.coeff(deg - i)).collect())
        .collect();
    check_chain(a, b, &chain)?;
    let u = Subspace::from_vectors(n, &chain);
    let images: Vec<Vec<Rat>> = chain.iter().map(|x| a.mul_vec(x)).collect();
    let w = Subspace::from_vectors(n, &images);
    let witness = CompressionWitness { u, w, chain };
    if !witness.verify(a, b) {
        return Err(Error::InternalInconsistency(
            "pencil witness failed verification".into(),
        ));
    }
    Ok(witness)
}

fn check_chain(a: &Matrix, b: &Matrix, chain: &[Vec<Rat>]) -> Result<()> {
    let zero = |v: &[Rat]| v.iter().all(Zero::is_zero);
    let bad = |what: &str| Err(Error::InternalInconsistency(format!("pencil chain: {what}")));
    if zero(&chain[0]) {
        return bad("u_0 = 0");
    }
    if !zero(&a.mul_vec(&chain[0])) {
        return bad("A u_0 != 0");
    }
    for i in 1..chain.len() {
        let lhs = a.mul_vec(&chain[i]);
        let rhs = b.mul_vec(&chain[i - 1]);
        if lhs.iter().zip(&rhs).any(|(x, y)| !(x + y).is_zero()) {
            return bad(&format!("A u_{i} != -B u_{}", i - 1));
        }
    }
    if !zero(&b.mul_vec(chain.last().unwrap())) {
        return bad("B u_d != 0");
    }
    Ok(())
}
