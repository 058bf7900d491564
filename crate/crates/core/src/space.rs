//! Matrix spaces, their generic rank, and rank-neutral directions.
//!
//! For a space `A` of generic rank `r`, a rank-`r` element `X` imposes the
//! linear conditions `l^T B v = 0` for `v` in `ker X` and `l` in the left
//! kernel of `X` (equivalently `B ker X ⊆ im X`). The rank-neutral directions
//! are the common solutions over all rank-`r` elements. Sampling finitely many
//! elements can only produce a larger space, so the computed space always
//! contains the true one; if it already equals `span(A)`, `A` is
//! rank-critical.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::matrix::combine;
use crate::linalg::random::{self, random_vector};
use crate::linalg::{modular, Matrix, Subspace};
use crate::rat::Rat;

const TAG_RANK: u64 = 1;
const TAG_REGULAR: u64 = 2;
const TAG_RND: u64 = 3;

/// A linearly independent list of `n x n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpace {
    n: usize,
    basis: Vec<Matrix>,
}

impl MatrixSpace {
    /// Fails if a basis element has the wrong shape or the list is dependent.
    pub fn new(n: usize, basis: Vec<Matrix>) -> Result<Self> {
        let mut span = Subspace::zero(n * n);
        for (i, b) in basis.iter().enumerate() {
            if b.rows() != n || b.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "basis element {i} is {}x{}, expected {n}x{n}",
                    b.rows(),
                    b.cols()
                )));
            }
            if !span.insert(b.entries()) {
                return Err(Error::DependentBasis { index: i });
            }
        }
        Ok(MatrixSpace { n, basis })
    }

    /// Keeps the matrices that are independent of the ones before them.
    pub fn from_spanning(n: usize, mats: impl IntoIterator<Item = Matrix>) -> Result<Self> {
        let mut span = Subspace::zero(n * n);
        let mut basis = Vec::new();
        for (i, m) in mats.into_iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "matrix {i} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            if span.insert(m.entries()) {
                basis.push(m);
            }
        }
        Ok(MatrixSpace { n, basis })
    }

    /// Space spanned by the rows of a subspace of `Q^{n^2}`.
    pub fn from_subspace(n: usize, s: &Subspace) -> Self {
        assert_eq!(s.ambient_dim(), n * n);
        MatrixSpace {
            n,
            basis: s
                .basis_vectors()
                .iter()
                .map(|v| Matrix::from_flat(n, v))
                .collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        let basis = (0..n)
            .flat_map(|i| (0..n).map(move |j| Matrix::unit(n, i, j)))
            .collect();
        MatrixSpace { n, basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// The span as a canonical subspace of `Q^{n^2}` (row-major flattening).
    pub fn span(&self) -> Subspace {
        let vs: Vec<Vec<Rat>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        Subspace::from_vectors(self.n * self.n, &vs)
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.span().contains(m.entries())
    }

    pub fn element(&self, coeffs: &[Rat]) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::zeros(self.n, self.n);
        }
        combine(coeffs, &self.basis)
    }

    pub fn random_element(&self, rng: &mut rand_chacha::ChaCha8Rng, height: u64) -> Matrix {
        let c = random_vector(rng, self.dim(), height);
        self.element(&c)
    }

    /// `{ g X g^-1 : X in A }`
    pub fn conjugate(&self, g: &Matrix, g_inv: &Matrix) -> MatrixSpace {
        MatrixSpace {
            n: self.n,
            basis: self.basis.iter().map(|b| g.mul(b).mul(g_inv)).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "basis": self.basis.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Parse("matrix space: missing integer field \"n\"".into()))?
            as usize;
        let basis = v
            .get("basis")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| Error::Parse("matrix space: missing array field \"basis\"".into()))?
            .iter()
            .enumerate()
            .map(|(i, m)| {
                Matrix::from_json(m).map_err(|e| Error::Parse(format!("basis[{i}]: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixSpace::new(n, basis)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankProvenance {
    /// Maximum over random samples; a lower bound, exact with high probability.
    SampledLowerBound,
    /// `dim V - dim V_0` for a split semisimple image; exact.
    WeightFormula,
}

/// Sampling parameters shared by the randomized procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingOptions {
    pub height: u64,
    pub seed: u64,
    /// Stop after this many consecutive samples without progress.
    pub stabilization: usize,
    /// Rank screening prime for `generic_rank`; ranks mod p are still lower
    /// bounds.
    pub prime: Option<u64>,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        SamplingOptions {
            height: 100,
            seed: 0,
            stabilization: 5,
            prime: None,
        }
    }
}

impl SamplingOptions {
    pub fn with_seed(seed: u64) -> Self {
        SamplingOptions {
            seed,
            ..Default::default()
        }
    }
}

/// Maximum rank over random combinations of the basis. The result is a lower
/// bound on the generic rank. The zero space has generic rank 0.
pub fn generic_rank(a: &MatrixSpace, opts: &SamplingOptions) -> (usize, RankProvenance) {
    let mut rng = random::rng(random::sub_seed(opts.seed, TAG_RANK, 0));
    let mut best = 0;
    let mut streak = 0;
    if a.dim() == 0 {
        return (0, RankProvenance::SampledLowerBound);
    }
    while best < a.n() && streak < opts.stabilization.max(1) {
        let x = a.random_element(&mut rng, opts.height);
        let rk = match opts.prime.and_then(|p| modular::rank_mod_p(&x, p)) {
            Some(r) => r,
            None => crate::linalg::rank(&x),
        };
        if rk > best {
            best = rk;
            streak = 0;
        } else {
            streak += 1;
        }
    }
    (best, RankProvenance::SampledLowerBound)
}

/// An element of rank exactly `r` with its kernel and image.
#[derive(Clone, Debug)]
pub struct RegularSample {
    pub element: Matrix,
    pub kernel: Subspace,
    pub image: Subspace,
    /// Basis of `{ l : l^T X = 0 }`, the annihilator of the image.
    pub cokernel: Vec<Vec<Rat>>,
}

impl RegularSample {
    pub fn new(x: Matrix) -> Self {
        let kernel = crate::linalg::kernel_basis(&x);
        let cok = crate::linalg::left_kernel_vectors(&x);
        let image = Subspace::from_vectors(x.rows(), &cok).annihilator();
        RegularSample {
            element: x,
            kernel,
            image,
            cokernel: cok,
        }
    }

    pub fn rank(&self) -> usize {
        self.image.dim()
    }
}

/// Rejection-samples `count` elements of rank exactly `r`. Fails after
/// `100 * count` consecutive misses.
pub fn regular_elements(
    a: &MatrixSpace,
    r: usize,
    count: usize,
    height: u64,
    seed: u64,
) -> Result<Vec<RegularSample>> {
    let mut rng = random::rng(random::sub_seed(seed, TAG_REGULAR, 0));
    let mut sampler = RegularSampler::new(a, r, height, 100 * count.max(1));
    (0..count).map(|_| sampler.next(&mut rng)).collect()
}

struct RegularSampler<'a> {
    space: &'a MatrixSpace,
    rank: usize,
    height: u64,
    budget: usize,
}

impl<'a> RegularSampler<'a> {
    fn new(space: &'a MatrixSpace, rank: usize, height: u64, budget: usize) -> Self {
        RegularSampler {
            space,
            rank,
            height,
            budget,
        }
    }

    fn next(&mut self, rng: &mut rand_chacha::ChaCha8Rng) -> Result<RegularSample> {
        for _ in 0..self.budget {
            let x = self.space.random_element(rng, self.height);
            let s = RegularSample::new(x);
            if s.rank() == self.rank {
                return Ok(s);
            }
            if s.rank() > self.rank {
                return Err(Error::InternalInconsistency(format!(
                    "sampled an element of rank {} above the assumed generic rank {}",
                    s.rank(),
                    self.rank
                )));
            }
        }
        Err(Error::RetryExhausted {
            rank: self.rank,
            attempts: self.budget,
        })
    }
}

/// Rows `l ⊗ v` (row-major over `B`) of the conditions `l^T B v = 0`.
pub fn tangent_constraint_rows(x: &RegularSample) -> Vec<Vec<Rat>> {
    let n = x.element.cols();
    let m = x.element.rows();
    let mut rows = Vec::new();
    for l in &x.cokernel {
        for v in x.kernel.basis_vectors() {
            let mut row = vec![Rat::zero(); m * n];
            for (i, li) in l.iter().enumerate() {
                if li.is_zero() {
                    continue;
                }
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        row[i * n + j] = li * vj;
                    }
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// `{ B : B ker X ⊆ im X }` as a subspace of `Q^{n^2}`.
pub fn tangent_constraint_space(x: &RegularSample, n: usize) -> Subspace {
    let rows = tangent_constraint_rows(x);
    if rows.is_empty() {
        return Subspace::full(n * n);
    }
    Subspace::from_vectors(n * n, &rows).annihilator()
}

/// Outcome of the rank-neutral-direction computation.
#[derive(Clone, Debug)]
pub struct RndComputation {
    pub generic_rank: usize,
    pub provenance: RankProvenance,
    /// Always contains `span(A)` and the true RND.
    pub rnd: Subspace,
    pub samples_used: usize,
}

/// Intersects tangent spaces at fresh regular elements until the dimension
/// is unchanged for `stabilization` consecutive samples, or reaches
/// `dim A`. Pass `rank` to skip the generic-rank estimate.
pub fn rnd(
    a: &MatrixSpace,
    rank: Option<(usize, RankProvenance)>,
    opts: &SamplingOptions,
) -> Result<RndComputation> {
    let (r, provenance) = rank.unwrap_or_else(|| generic_rank(a, opts));
    let n = a.n();
    let target = a.dim();
    let mut constraints = Subspace::zero(n * n);
    let mut rng = random::rng(random::sub_seed(opts.seed, TAG_RND, 0));
    let mut sampler = RegularSampler::new(a, r, opts.height, 100);
    let mut streak = 0;
    let mut samples = 0;
    while n * n - constraints.dim() > target && streak < opts.stabilization.max(1) {
        let x = sampler.next(&mut rng)?;
        samples += 1;
        let mut grew = false;
        for row in tangent_constraint_rows(&x) {
            grew |= constraints.insert(&row);
        }
        if grew {
            streak = 0;
        } else {
            streak += 1;
        }
    }
    let rnd = constraints.annihilator();
    Ok(RndComputation {
        generic_rank: r,
        provenance,
        rnd,
        samples_used: samples,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateStatus {
    Certified,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct CriticalityCertificate {
    pub n: usize,
    pub generic_rank: usize,
    pub rank_provenance: RankProvenance,
    /// Computed upper bound for the rank-neutral directions.
    pub rnd: Subspace,
    pub status: CertificateStatus,
    pub samples_used: usize,
    pub seed: u64,
}

impl CriticalityCertificate {
    pub fn is_certified(&self) -> bool {
        self.status == CertificateStatus::Certified
    }

    /// Status is `Certified` iff `rnd` equals `span`.
    pub fn from_rnd(
        n: usize,
        span: &Subspace,
        rnd: Subspace,
        generic_rank: usize,
        rank_provenance: RankProvenance,
        samples_used: usize,
        seed: u64,
    ) -> Self {
        let status = if &rnd == span {
            CertificateStatus::Certified
        } else {
            CertificateStatus::Inconclusive
        };
        CriticalityCertificate {
            n,
            generic_rank,
            rank_provenance,
            rnd,
            status,
            samples_used,
            seed,
        }
    }

    pub fn rnd_matrices(&self) -> Vec<Matrix> {
        self.rnd
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_flat(self.n, v))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generic_rank": self.generic_rank,
            "rank_provenance": self.rank_provenance,
            "status": self.status,
            "rnd_dim": self.rnd.dim(),
            "rnd_basis": self.rnd_matrices().iter().map(Matrix::to_json).collect::<Vec<_>>(),
            "samples_used": self.samples_used,
            "seed": self.seed,
        })
    }
}

/// Certified iff the computed rank-neutral directions equal `span(A)`.
/// Certification is sound whenever the generic rank is right; with a sampled
/// rank that is the only assumption, and it is recorded in the certificate.
pub fn certify_rank_critical(
    a: &MatrixSpace,
    opts: &SamplingOptions,
) -> Result<CriticalityCertificate> {
    let comp = rnd(a, None, opts)?;
    Ok(CriticalityCertificate::from_rnd(
        a.n(),
        &a.span(),
        comp.rnd,
        comp.generic_rank,
        comp.provenance,
        comp.samples_used,
        opts.seed,
    ))
}

pub fn is_singular(a: &MatrixSpace, opts: &SamplingOptions) -> bool {
    generic_rank(a, opts).0 < a.n()
}

/// Certified rank-critical of rank `n - 1`.
pub fn is_maximal_singular_certified(a: &MatrixSpace, opts: &SamplingOptions) -> Result<bool> {
    let cert = certify_rank_critical(a, opts)?;
    Ok(cert.is_certified() && cert.generic_rank + 1 == a.n())
}
