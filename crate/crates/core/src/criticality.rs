//! Rank-neutral directions of representation images, computed one highest
//! weight space at a time.
//!
//! For a split semisimple `g` acting on `V`, the rank-neutral directions of
//! `rho(g)` form a `g`-submodule of `End(V)`, so they are determined by their
//! highest weight vectors. For each highest weight space `HW_mu` of `End(V)`
//! the constraints `l^T Y v = 0` (`v` in the kernel, `l` in the cokernel of a
//! regular element) cut out an upper bound for `HW_mu` of the RND.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::classical::symmetric_power_poly_rep;
use crate::lie::forms::{
    invariant_bilinear_form, is_semisimple, killing_form, orthogonal_algebra_of_form,
    trivial_summand_complement_basis,
};
use crate::lie::rep::{restrict_matrices, sym2_matrix};
use crate::lie::weights::{
    cartan_and_roots, end_highest_weight_spaces, end_submodule_generated, unipotent_exponential,
    RootDatum,
};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::{self, random, Matrix, Subspace};
use crate::rat::{self, Rat};
use crate::space::{
    generic_rank, regular_elements, CertificateStatus, CriticalityCertificate, MatrixSpace,
    RankProvenance, SamplingOptions,
};

const TAG_HW_ROW: u64 = 4;
const TAG_MG: u64 = 5;
const TAG_UNIPOTENT: u64 = 6;

/// Span of the `rho(x_i)`.
pub fn rep_image_space(rho: &Representation) -> MatrixSpace {
    MatrixSpace::from_spanning(rho.dim(), rho.matrices().iter().cloned())
        .expect("representation matrices are square of size dim V")
}

/// `r = dim V - dim V_0`, checked against a sampled rank of the image.
pub fn generic_rank_semisimple(
    rho: &Representation,
    opts: &SamplingOptions,
) -> Result<(usize, RankProvenance)> {
    if !is_semisimple(rho.algebra()) {
        return Err(Error::DegenerateKilling);
    }
    let wd = rho.weights()?;
    let r = rho.dim() - wd.zero_weight_dim();
    let (sampled, _) = generic_rank(&rep_image_space(rho), opts);
    if sampled != r {
        return Err(Error::InternalInconsistency(format!(
            "weight formula gives rank {r}, sampling gives {sampled}"
        )));
    }
    Ok((r, RankProvenance::WeightFormula))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Certified,
    UpperBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityRow {
    /// Eigenvalues on the Cartan basis.
    pub weight: Vec<String>,
    /// Values on the simple coroots.
    pub labels: Vec<String>,
    pub hw_dim: usize,
    pub mult_image: usize,
    pub mult_rnd: usize,
    pub samples: usize,
}

#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub label: String,
    pub n: usize,
    pub algebra_dim: usize,
    pub image_dim: usize,
    pub generic_rank: usize,
    pub rank_provenance: RankProvenance,
    pub rows: Vec<MultiplicityRow>,
    pub verdict: Verdict,
    pub rnd_dim: usize,
    /// Upper bound for the RND in `Q^{n^2}`: the image when certified, else
    /// the submodule generated by the surviving highest weight vectors.
    pub rnd: Subspace,
    pub seed: u64,
    pub oversample: usize,
}

impl MultiplicityReport {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    /// Rows with a nonzero multiplicity in the RND, as `(labels, mult)`.
    pub fn rnd_highest_weights(&self) -> Vec<(Vec<String>, usize)> {
        self.rows
            .iter()
            .filter(|r| r.mult_rnd > 0)
            .map(|r| (r.labels.clone(), r.mult_rnd))
            .collect()
    }

    pub fn rnd_matrices(&self) -> Vec<Matrix> {
        self.rnd
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_flat(self.n, v))
            .collect()
    }

    pub fn to_certificate(&self) -> CriticalityCertificate {
        CriticalityCertificate {
            n: self.n,
            generic_rank: self.generic_rank,
            rank_provenance: self.rank_provenance,
            rnd: self.rnd.clone(),
            status: match self.verdict {
                Verdict::Certified => CertificateStatus::Certified,
                Verdict::UpperBound => CertificateStatus::Inconclusive,
            },
            samples_used: self.rows.iter().map(|r| r.samples).sum(),
            seed: self.seed,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "dim_V": self.n,
            "algebra_dim": self.algebra_dim,
            "image_dim": self.image_dim,
            "generic_rank": self.generic_rank,
            "rank_provenance": self.rank_provenance,
            "rows": self.rows,
            "verdict": self.verdict,
            "rnd_dim": self.rnd_dim,
            "seed": self.seed,
            "oversample": self.oversample,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{}: dim V = {}, dim g = {}, image dim = {}, generic rank {} ({})",
            self.label,
            self.n,
            self.algebra_dim,
            self.image_dim,
            self.generic_rank,
            match self.rank_provenance {
                RankProvenance::WeightFormula => "weight formula",
                RankProvenance::SampledLowerBound => "sampled",
            }
        );
        let labels: Vec<String> = self.rows.iter().map(|r| format!("[{}]", r.labels.join(","))).collect();
        let w = labels.iter().map(String::len).max().unwrap_or(0).max("highest weight".len());
        let _ = writeln!(s, "{:<w$}  {:>6}  {:>10}  {:>8}  {:>7}", "highest weight", "dim HW", "mult image", "mult RND", "samples");
        for (l, r) in labels.iter().zip(&self.rows) {
            let _ = writeln!(
                s,
                "{:<w$}  {:>6}  {:>10}  {:>8}  {:>7}",
                l, r.hw_dim, r.mult_image, r.mult_rnd, r.samples
            );
        }
        let _ = writeln!(
            s,
            "verdict: {}  (RND dim {}, seed {})",
            match self.verdict {
                Verdict::Certified => "Certified",
                Verdict::UpperBound => "UpperBound",
            },
            self.rnd_dim,
            self.seed
        );
        s
    }
}

/// The highest weight algorithm: for each nonzero `HW_mu` of `End(V)` of
/// dimension `l`, intersect the tangent conditions of `l + oversample`
/// regular elements of `rho(g)`. Row `i` samples with a sub-seed of
/// `(opts.seed, i)`, so the report does not depend on scheduling.
pub fn rnd_multiplicities(
    rho: &Representation,
    opts: &SamplingOptions,
    oversample: usize,
) -> Result<MultiplicityReport> {
    let g = rho.algebra();
    let datum = cartan_and_roots(g)?;
    let (r, provenance) = generic_rank_semisimple(rho, opts)?;
    let n = rho.dim();
    let image = rep_image_space(rho);
    let image_span = image.span();
    let hws = end_highest_weight_spaces(rho, &datum, true)?;

    struct RowResult {
        row: MultiplicityRow,
        survivors: Vec<Matrix>,
    }
    let results: Vec<RowResult> = hws
        .par_iter()
        .enumerate()
        .map(|(i, hw)| {
            let l = hw.vectors.len();
            let count = l + oversample;
            let seed = random::sub_seed(opts.seed, TAG_HW_ROW, i as u64);
            let samples = regular_elements(&image, r, count, opts.height, seed)?;
            // rows: (l^T Y_q v)_q for each sample, cokernel l, kernel v
            let mut eqs: Vec<Vec<Rat>> = Vec::new();
            for x in &samples {
                let kernel = x.kernel.basis_vectors();
                let yv: Vec<Vec<Vec<Rat>>> = hw
                    .vectors
                    .iter()
                    .map(|y| kernel.iter().map(|v| y.mul_vec(v)).collect())
                    .collect();
                for cok in &x.cokernel {
                    for t in 0..kernel.len() {
                        let row: Vec<Rat> = yv.iter().map(|yq| linalg::matrix::dot(cok, &yq[t])).collect();
                        if !linalg::matrix::is_zero_vec(&row) {
                            eqs.push(row);
                        }
                    }
                }
            }
            let coeffs = if eqs.is_empty() {
                Matrix::identity(l).row_vecs()
            } else {
                linalg::kernel_vectors(&Matrix::from_rows(eqs)?)
            };
            let survivors: Vec<Matrix> = coeffs
                .iter()
                .map(|c| linalg::matrix::combine(c, &hw.vectors))
                .collect();
            let hw_space = Subspace::from_vectors(
                n * n,
                &hw.vectors.iter().map(|y| y.entries().to_vec()).collect::<Vec<_>>(),
            );
            let mult_image = hw_space.intersect(&image_span)?.dim();
            if survivors.len() < mult_image {
                return Err(Error::InternalInconsistency(format!(
                    "highest weight {:?}: RND multiplicity {} below image multiplicity {mult_image}",
                    hw.labels,
                    survivors.len()
                )));
            }
            Ok(RowResult {
                row: MultiplicityRow {
                    weight: hw.weight.iter().map(rat::to_string).collect(),
                    labels: hw.labels.iter().map(rat::to_string).collect(),
                    hw_dim: l,
                    mult_image,
                    mult_rnd: survivors.len(),
                    samples: count,
                },
                survivors,
            })
        })
        .collect::<Result<_>>()?;

    let certified = results.iter().all(|r| r.row.mult_rnd == r.row.mult_image);
    let rnd = if certified {
        image_span
    } else {
        let seeds: Vec<Matrix> = results.iter().flat_map(|r| r.survivors.iter().cloned()).collect();
        end_submodule_generated(rho, &seeds)
    };
    Ok(MultiplicityReport {
        label: rho.label().to_string(),
        n,
        algebra_dim: g.dim(),
        image_dim: image.dim(),
        generic_rank: r,
        rank_provenance: provenance,
        rows: results.into_iter().map(|r| r.row).collect(),
        verdict: if certified { Verdict::Certified } else { Verdict::UpperBound },
        rnd_dim: rnd.dim(),
        rnd,
        seed: opts.seed,
        oversample,
    })
}

/// Outcome for `sl_m` acting on polynomials of degree `e m`.
#[derive(Clone, Debug)]
pub struct Theorem1Certificate {
    pub m: usize,
    pub e: usize,
    pub report: MultiplicityReport,
    pub certificate: CriticalityCertificate,
}

impl Theorem1Certificate {
    /// Rank-critical of rank `n - 1`.
    pub fn is_maximal_singular(&self) -> bool {
        self.certificate.is_certified() && self.report.generic_rank + 1 == self.report.n
    }
}

pub fn certify_theorem1(m: usize, e: usize, opts: &SamplingOptions) -> Result<Theorem1Certificate> {
    if m < 3 || e < 1 {
        return Err(Error::InvalidInput(format!(
            "need m >= 3 and e >= 1, got m = {m}, e = {e}"
        )));
    }
    let rho = symmetric_power_poly_rep(m, e * m);
    let report = rnd_multiplicities(&rho, opts, 3)?;
    let mut certificate = report.to_certificate();
    if report.generic_rank + 1 != report.n {
        certificate.status = CertificateStatus::Inconclusive;
    }
    Ok(Theorem1Certificate {
        m,
        e,
        report,
        certificate,
    })
}

/// `ad g` as a subspace of `Q^{d^2}`.
pub fn ad_space(g: &LieAlgebra) -> Subspace {
    let d = g.dim();
    let rows: Vec<Vec<Rat>> = (0..d).map(|i| g.ad_basis(i).into_entries()).collect();
    Subspace::from_vectors(d * d, &rows)
}

/// Upper bound for `M(g) = {A : kappa(x, A y) = 0 whenever [x, y] = 0}` from
/// all pairs `(x, x)` and `samples` random commuting pairs: `x` has basis
/// coordinates of height 100, `y` is a random element of the centralizer.
pub fn mg_space_sampled(g: &LieAlgebra, samples: usize, seed: u64) -> Result<Subspace> {
    let d = g.dim();
    let k = killing_form(g);
    if linalg::rank(&k) < d {
        return Err(Error::DegenerateKilling);
    }
    let mut span = Subspace::zero(d * d);
    // kappa(x, A x) = 0 for all x: K A is skew
    for i in 0..d {
        for j in i..d {
            let mut row = vec![Rat::zero(); d * d];
            for m in 0..d {
                row[m * d + j] += &k[(i, m)];
                row[m * d + i] += &k[(j, m)];
            }
            span.insert(&row);
        }
    }
    let mut rng = random::rng(random::sub_seed(seed, TAG_MG, 0));
    for _ in 0..samples {
        let x = random::random_vector(&mut rng, d, 100);
        let cent = linalg::kernel_vectors(&g.ad(&x));
        let c = random::random_vector(&mut rng, cent.len(), 100);
        let mut y = vec![Rat::zero(); d];
        for (ci, v) in c.iter().zip(&cent) {
            linalg::matrix::axpy(&mut y, ci, v);
        }
        // (K x) (x) y
        let kx = k.mul_vec(&x);
        let mut row = vec![Rat::zero(); d * d];
        for (a, ka) in kx.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                row[a * d + b] = ka * yb;
            }
        }
        span.insert(&row);
    }
    Ok(span.annihilator())
}

/// Spot check of `(g Y g^-1) V_0 ⊆ sum of the nonzero weight spaces` for
/// random products `g` of root exponentials and random `Y` in `rnd`. With
/// `word_length` 0 this is the defining condition at `g = 1`.
pub fn unipotent_rnd_check(
    rho: &Representation,
    rnd: &Subspace,
    trials: usize,
    word_length: usize,
    seed: u64,
) -> Result<bool> {
    let n = rho.dim();
    let datum: RootDatum = cartan_and_roots(rho.algebra())?;
    let wd = rho.weights()?;
    let zero: Vec<usize> = (0..n)
        .filter(|&i| wd.weights[i].iter().all(Zero::is_zero))
        .collect();
    let basis = rnd.basis_vectors();
    if basis.is_empty() || zero.is_empty() {
        return Ok(true);
    }
    let mut rng = random::rng(random::sub_seed(seed, TAG_UNIPOTENT, 0));
    for _ in 0..trials {
        let mut g = Matrix::identity(n);
        let mut g_inv = Matrix::identity(n);
        for _ in 0..word_length {
            let idx = rng.gen_range(0..datum.roots.len());
            let mut c = random::random_int(&mut rng, 3);
            if c.is_zero() {
                c = Rat::one();
            }
            let x = rho.act(&datum.roots[idx].vector).scale(&c);
            g = g.mul(&unipotent_exponential(&x)?);
            g_inv = unipotent_exponential(&x.scale(&-Rat::one()))?.mul(&g_inv);
        }
        let coeffs = random::random_vector(&mut rng, basis.len(), 100);
        let mut y = vec![Rat::zero(); n * n];
        for (c, b) in coeffs.iter().zip(&basis) {
            linalg::matrix::axpy(&mut y, c, b);
        }
        let conj = g.mul(&Matrix::from_flat(n, &y)).mul(&g_inv);
        let w = wd.to_weight_basis(&conj);
        if zero.iter().any(|&a| zero.iter().any(|&b| !w[(a, b)].is_zero())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Image of `o(B)` on `S^2(V)` minus its invariant line, for the invariant
/// form `B` of `rho`: the `o_N` module restricting to the trivial-summand
/// complement of `S^2(rho)`.
pub fn orthogonal_image_on_s2_complement(rho: &Representation) -> Result<MatrixSpace> {
    let b = invariant_bilinear_form(rho)?;
    let o = orthogonal_algebra_of_form(&b)?;
    let s2 = rho.symmetric_square()?;
    let basis = trivial_summand_complement_basis(&s2)?;
    let mats: Vec<Matrix> = o.basis().iter().map(sym2_matrix).collect();
    let restricted = restrict_matrices(&mats, &basis)?;
    MatrixSpace::from_spanning(basis.len(), restricted)
}

/// `o(B)` for the invariant form of `rho`, as a subspace of `Q^{n^2}`.
pub fn invariant_orthogonal_span(rho: &Representation) -> Result<Subspace> {
    let b = invariant_bilinear_form(rho)?;
    Ok(orthogonal_algebra_of_form(&b)?.span())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::classical::sl;

    #[test]
    fn image_spaces() {
        let (g, std) = sl(3);
        assert_eq!(rep_image_space(&std).dim(), 8);
        assert_eq!(rep_image_space(&Representation::trivial(g.clone(), 4)).dim(), 0);
        let (g2, _) = sl(2);
        assert_eq!(rep_image_space(&Representation::adjoint(g2)).dim(), 3);
        assert_eq!(rep_image_space(&symmetric_power_poly_rep(3, 3)).dim(), 8);
    }

    #[test]
    fn weight_formula_ranks() {
        let opts = SamplingOptions::default();
        let cubics = symmetric_power_poly_rep(3, 3);
        assert_eq!(generic_rank_semisimple(&cubics, &opts).unwrap().0, 9);
        let (g, _) = sl(3);
        let ad = Representation::adjoint(g);
        assert_eq!(generic_rank_semisimple(&ad, &opts).unwrap().0, 6);
        let abelian = std::sync::Arc::new(LieAlgebra::new(1, vec!["z".into()], vec![0], vec![]).unwrap());
        let t = Representation::trivial(abelian, 2);
        assert_eq!(generic_rank_semisimple(&t, &opts).unwrap_err(), Error::DegenerateKilling);
    }

    #[test]
    fn sl2_adjoint_is_certified() {
        let (g, _) = sl(2);
        let ad = Representation::adjoint(g);
        let rep = rnd_multiplicities(&ad, &SamplingOptions::default(), 3).unwrap();
        assert!(rep.is_certified());
        assert_eq!(rep.rnd_dim, 3);
        let certified: Vec<_> = rep.rows.iter().filter(|r| r.mult_image > 0).collect();
        assert_eq!(certified.len(), 1);
        assert_eq!(certified[0].labels, vec!["2"]);
        assert!(rep.to_text().contains("Certified"));
    }

    #[test]
    fn cubic_forms_small_case_and_precondition() {
        let c = certify_theorem1(3, 1, &SamplingOptions::default()).unwrap();
        assert_eq!(c.report.n, 10);
        assert_eq!(c.report.generic_rank, 9);
        assert!(c.is_maximal_singular());
        assert!(certify_theorem1(2, 1, &SamplingOptions::default()).is_err());
    }

    #[test]
    fn oversampling_never_raises_multiplicities() {
        let rho = symmetric_power_poly_rep(3, 3);
        let opts = SamplingOptions::with_seed(11);
        let a = rnd_multiplicities(&rho, &opts, 0).unwrap();
        let b = rnd_multiplicities(&rho, &opts, 4).unwrap();
        for (x, y) in a.rows.iter().zip(&b.rows) {
            assert!(y.mult_rnd <= x.mult_rnd);
        }
    }

    #[test]
    fn mg_space_matches_ad() {
        let (g, _) = sl(2);
        assert_eq!(mg_space_sampled(&g, 20, 0).unwrap(), ad_space(&g));
        // pairs (x, x) alone give o(kappa)
        let (g3, _) = sl(3);
        assert_eq!(mg_space_sampled(&g3, 0, 0).unwrap().dim(), 28);
    }

    #[test]
    fn unipotent_check() {
        let (g, _) = sl(2);
        let ad = Representation::adjoint(g.clone());
        assert!(unipotent_rnd_check(&ad, &ad_space(&g), 10, 3, 1).unwrap());
        // e_{E12} -> e_{H}: kills V_0 = span(H) but is not G-stable
        let mut y = Matrix::zeros(3, 3);
        y[(0, 1)] = rat::int(1);
        let bad = Subspace::from_vectors(9, &[y.into_entries()]);
        assert!(unipotent_rnd_check(&ad, &bad, 1, 0, 1).unwrap());
        assert!(!unipotent_rnd_check(&ad, &bad, 10, 3, 1).unwrap());
    }
}
