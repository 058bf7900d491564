//! Nonassociative algebras by structure constants, split octonions, the
//! exceptional Jordan algebra, and derivation algebras. The split models
//! keep the Cartan of `Der` diagonal over the rationals.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::algebra::{sparse, LieAlgebra, SparseVec};
use super::forms::trivial_summand_complement;
use super::rep::Representation;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Subspace};
use crate::rat::{self, Rat};

/// A finite-dimensional algebra `e_i e_j = sum_k c_ij^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonAssocAlgebra {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
}

impl NonAssocAlgebra {
    /// Builds the table from the products of basis elements.
    pub fn from_products(labels: Vec<String>, prod: impl Fn(usize, usize) -> Vec<Rat>) -> Self {
        let dim = labels.len();
        let table = (0..dim)
            .map(|i| (0..dim).map(|j| sparse(&prod(i, j))).collect())
            .collect();
        NonAssocAlgebra { dim, labels, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    /// `(xy)z - x(yz)`
    pub fn associator(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
        let l = self.mul(&self.mul(x, y), z);
        let r = self.mul(x, &self.mul(y, z));
        l.iter().zip(&r).map(|(a, b)| a - b).collect()
    }

    /// Left and right alternative laws, polarized, on all basis triples.
    pub fn is_alternative(&self) -> bool {
        let d = self.dim;
        let e: Vec<Vec<Rat>> = (0..d).map(|i| self.unit_vector(i)).collect();
        (0..d).into_par_iter().all(|a| {
            (a..d).all(|b| {
                (0..d).all(|c| {
                    let left: Vec<Rat> = add(
                        &self.associator(&e[a], &e[b], &e[c]),
                        &self.associator(&e[b], &e[a], &e[c]),
                    );
                    let right: Vec<Rat> = add(
                        &self.associator(&e[c], &e[a], &e[b]),
                        &self.associator(&e[c], &e[b], &e[a]),
                    );
                    linalg::matrix::is_zero_vec(&left) && linalg::matrix::is_zero_vec(&right)
                })
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// The two-sided identity, if there is one.
    pub fn identity(&self) -> Option<Vec<Rat>> {
        let d = self.dim;
        // sum_i e_i c_ij^k = delta_jk and sum_i e_i c_ji^k = delta_jk
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..d {
            for k in 0..d {
                let mut l = vec![Rat::zero(); d];
                let mut r = vec![Rat::zero(); d];
                for i in 0..d {
                    l[i] = coeff(&self.table[i][j], k);
                    r[i] = coeff(&self.table[j][i], k);
                }
                let t = if j == k { Rat::one() } else { Rat::zero() };
                rows.push(l);
                rhs.push(t.clone());
                rows.push(r);
                rhs.push(t);
            }
        }
        linalg::solve(&Matrix::from_rows(rows).ok()?, &rhs)
    }

    /// Matrix of `y -> x y`.
    pub fn left_multiplication(&self, x: &[Rat]) -> Matrix {
        let cols: Vec<Vec<Rat>> = (0..self.dim).map(|j| self.mul(x, &self.unit_vector(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }
}

fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn coeff(v: &SparseVec, k: usize) -> Rat {
    v.iter()
        .find(|(i, _)| *i == k)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rat::zero)
}

/// Composition algebra with its conjugation and norm.
#[derive(Clone, Debug)]
pub struct CompositionAlgebra {
    pub algebra: NonAssocAlgebra,
    pub unit: Vec<Rat>,
    /// Conjugation as a matrix.
    pub conj: Matrix,
    /// Polar form of the norm, `N(x + y) - N(x) - N(y)`.
    pub norm_form: Matrix,
}

impl CompositionAlgebra {
    pub fn conjugate(&self, x: &[Rat]) -> Vec<Rat> {
        self.conj.mul_vec(x)
    }
}

const ZORN_LABELS: [&str; 8] = ["a", "u1", "u2", "u3", "v1", "v2", "v3", "b"];

fn cross(x: &[Rat], y: &[Rat]) -> [Rat; 3] {
    [
        &x[1] * &y[2] - &x[2] * &y[1],
        &x[2] * &y[0] - &x[0] * &y[2],
        &x[0] * &y[1] - &x[1] * &y[0],
    ]
}

fn dot3(x: &[Rat], y: &[Rat]) -> Rat {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `[[a, u], [v, b]] [[a', u'], [v', b']]` with cross-product signs `s`, `t`.
fn zorn_product(x: &[Rat], y: &[Rat], s: &Rat, t: &Rat) -> Vec<Rat> {
    let (a, u, v, b) = (&x[0], &x[1..4], &x[4..7], &x[7]);
    let (a2, u2, v2, b2) = (&y[0], &y[1..4], &y[4..7], &y[7]);
    let vv = cross(v, v2);
    let uu = cross(u, u2);
    let mut out = Vec::with_capacity(8);
    out.push(a * a2 + dot3(u, v2));
    for i in 0..3 {
        out.push(a * &u2[i] + b2 * &u[i] + s * &vv[i]);
    }
    for i in 0..3 {
        out.push(a2 * &v[i] + b * &v2[i] + t * &uu[i]);
    }
    out.push(b * b2 + dot3(v, u2));
    out
}

/// Split octonions as Zorn vector matrices on the basis
/// `a, u1, u2, u3, v1, v2, v3, b`. Of the sign conventions for the cross
/// product terms, the first alternative one is used.
pub fn zorn_octonions() -> CompositionAlgebra {
    let labels: Vec<String> = ZORN_LABELS.iter().map(|s| s.to_string()).collect();
    let e = |i: usize| {
        let mut v = vec![Rat::zero(); 8];
        v[i] = Rat::one();
        v
    };
    let signs = [(1, -1), (-1, 1), (1, 1), (-1, -1)];
    let algebra = signs
        .iter()
        .map(|&(s, t)| {
            let (s, t) = (rat::int(s), rat::int(t));
            NonAssocAlgebra::from_products(labels.clone(), |i, j| zorn_product(&e(i), &e(j), &s, &t))
        })
        .find(NonAssocAlgebra::is_alternative)
        .expect("one Zorn sign convention is alternative");
    let mut unit = vec![Rat::zero(); 8];
    unit[0] = Rat::one();
    unit[7] = Rat::one();
    let mut conj = Matrix::zeros(8, 8);
    conj[(0, 7)] = Rat::one();
    conj[(7, 0)] = Rat::one();
    let mut norm_form = Matrix::zeros(8, 8);
    norm_form[(0, 7)] = Rat::one();
    norm_form[(7, 0)] = Rat::one();
    for i in 1..4 {
        conj[(i, i)] = -Rat::one();
        conj[(i + 3, i + 3)] = -Rat::one();
        norm_form[(i, i + 3)] = -Rat::one();
        norm_form[(i + 3, i)] = -Rat::one();
    }
    CompositionAlgebra {
        algebra,
        unit,
        conj,
        norm_form,
    }
}

/// Off-diagonal positions of a 3x3 hermitian matrix, in basis order.
const H3_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Hermitian 3x3 matrices over `o` with `X o Y = (XY + YX) / 2`. Basis:
/// `E1, E2, E3`, then `F_pq(o_k)` for `pq = 12, 13, 23` and each basis
/// element `o_k`, with `o_k` at `(p, q)` and its conjugate at `(q, p)`.
pub fn jordan_h3(o: &CompositionAlgebra) -> NonAssocAlgebra {
    let od = o.algebra.dim();
    let dim = 3 + 3 * od;
    let mut labels: Vec<String> = (1..=3).map(|i| format!("E{i}")).collect();
    for (p, q) in H3_PAIRS {
        for l in o.algebra.labels() {
            labels.push(format!("F{}{}({l})", p + 1, q + 1));
        }
    }
    // matrix of octonions, row-major
    let to_matrix = |i: usize| -> Vec<Vec<Rat>> {
        let mut m = vec![vec![Rat::zero(); od]; 9];
        if i < 3 {
            m[i * 3 + i] = o.unit.clone();
        } else {
            let (p, q) = H3_PAIRS[(i - 3) / od];
            let x = o.algebra.unit_vector((i - 3) % od);
            m[q * 3 + p] = o.conjugate(&x);
            m[p * 3 + q] = x;
        }
        m
    };
    let mats: Vec<Vec<Vec<Rat>>> = (0..dim).map(to_matrix).collect();
    let matmul = |x: &[Vec<Rat>], y: &[Vec<Rat>]| -> Vec<Vec<Rat>> {
        (0..9)
            .map(|pq| {
                let (p, q) = (pq / 3, pq % 3);
                let mut acc = vec![Rat::zero(); od];
                for r in 0..3 {
                    let prod = o.algebra.mul(&x[p * 3 + r], &y[r * 3 + q]);
                    for (a, b) in acc.iter_mut().zip(prod) {
                        *a += b;
                    }
                }
                acc
            })
            .collect()
    };
    let half = rat::frac(1, 2);
    let unit_pos = o.unit.iter().position(|c| !c.is_zero()).unwrap();
    NonAssocAlgebra::from_products(labels, |i, j| {
        let xy = matmul(&mats[i], &mats[j]);
        let yx = matmul(&mats[j], &mats[i]);
        let s: Vec<Vec<Rat>> = xy
            .iter()
            .zip(&yx)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x + y) * &half).collect())
            .collect();
        let mut out = vec![Rat::zero(); dim];
        for p in 0..3 {
            let d = &s[p * 3 + p];
            let t = &d[unit_pos] / &o.unit[unit_pos];
            assert!(
                d.iter().zip(&o.unit).all(|(x, u)| *x == &t * u),
                "diagonal of a Jordan product is not real"
            );
            out[p] = t;
        }
        for (b, (p, q)) in H3_PAIRS.iter().enumerate() {
            for k in 0..od {
                out[3 + b * od + k] = s[p * 3 + q][k].clone();
            }
        }
        out
    })
}

/// The Lie algebra of derivations `D(xy) = D(x) y + x D(y)` with its action
/// on the algebra.
///
/// The derivations diagonal in the given basis form a torus; they are found
/// first and taken as the Cartan. The remaining unknowns `D_ki` split by the
/// weight `wt_k - wt_i`, and each weight block is solved separately.
pub fn derivation_algebra(alg: &NonAssocAlgebra) -> Result<(Arc<LieAlgebra>, Representation)> {
    let d = alg.dim();
    // diagonal derivations: lambda_k = lambda_i + lambda_j whenever c_ij^k != 0
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for (k, _) in alg.product_basis(i, j) {
                let mut row = vec![Rat::zero(); d];
                row[*k] += Rat::one();
                row[i] -= Rat::one();
                row[j] -= Rat::one();
                if !linalg::matrix::is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let torus = if rows.is_empty() {
        Matrix::identity(d).row_vecs()
    } else {
        linalg::kernel_vectors(&Matrix::from_rows(rows)?)
    };
    let h = torus.len();
    let wt: Vec<Vec<Rat>> = (0..d).map(|i| torus.iter().map(|l| l[i].clone()).collect()).collect();
    let diff = |k: usize, i: usize| -> Vec<Rat> { wt[k].iter().zip(&wt[i]).map(|(a, b)| a - b).collect() };

    // unknown D_ki (entry (k, i)) sits in block wt_k - wt_i
    let mut blocks: BTreeMap<Vec<Rat>, Vec<(usize, usize)>> = BTreeMap::new();
    for k in 0..d {
        for i in 0..d {
            blocks.entry(diff(k, i)).or_default().push((k, i));
        }
    }
    let block_keys: Vec<Vec<Rat>> = blocks.keys().cloned().collect();
    let block_id: HashMap<&Vec<Rat>, usize> = block_keys.iter().enumerate().map(|(t, w)| (w, t)).collect();
    let mut local = vec![(0usize, 0usize); d * d];
    for (t, w) in block_keys.iter().enumerate() {
        for (q, &(k, i)) in blocks[w].iter().enumerate() {
            local[k * d + i] = (t, q);
        }
    }

    // component k of D(e_a e_b) - D(e_a) e_b - e_a D(e_b)
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).collect();
    let eqs: Vec<(usize, Vec<(usize, Rat)>)> = pairs
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            let mut by_k: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
            let mut push = |k: usize, m: usize, i: usize, c: Rat| {
                *by_k.entry(k).or_default().entry(m * d + i).or_insert_with(Rat::zero) += c;
            };
            for (m, c) in alg.product_basis(a, b) {
                for k in 0..d {
                    push(k, k, *m, c.clone());
                }
            }
            for m in 0..d {
                for (k, c) in alg.product_basis(m, b) {
                    push(*k, m, a, -c);
                }
                for (k, c) in alg.product_basis(a, m) {
                    push(*k, m, b, -c);
                }
            }
            by_k.into_values().filter_map(|terms| {
                let terms: Vec<(usize, Rat)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                (!terms.is_empty()).then_some(terms)
            })
            .map(|terms| (local[terms[0].0].0, terms))
            .collect::<Vec<_>>()
        })
        .collect();
    let mut block_eqs: Vec<Vec<Vec<(usize, Rat)>>> = vec![Vec::new(); block_keys.len()];
    for (t, terms) in eqs {
        let mut row = Vec::with_capacity(terms.len());
        for (u, c) in terms {
            let (t2, q) = local[u];
            if t2 != t {
                return Err(Error::InternalInconsistency(
                    "derivation equation mixes weights; the torus grading is wrong".into(),
                ));
            }
            row.push((q, c));
        }
        block_eqs[t].push(row);
    }

    let solutions: Vec<Vec<Vec<Rat>>> = block_keys
        .par_iter()
        .enumerate()
        .map(|(t, w)| {
            let m = blocks[w].len();
            if block_eqs[t].is_empty() {
                return Ok(Matrix::identity(m).row_vecs());
            }
            let dense: Vec<Vec<Rat>> = block_eqs[t]
                .iter()
                .map(|r| {
                    let mut row = vec![Rat::zero(); m];
                    for (q, c) in r {
                        row[*q] = c.clone();
                    }
                    row
                })
                .collect();
            let s = Subspace::from_vectors(m, &dense);
            Ok(if s.dim() == m { Vec::new() } else { s.annihilator().basis_vectors() })
        })
        .collect::<Result<_>>()?;

    let to_matrix = |t: usize, v: &[Rat]| {
        let mut out = Matrix::zeros(d, d);
        for (q, &(k, i)) in blocks[&block_keys[t]].iter().enumerate() {
            out[(k, i)] = v[q].clone();
        }
        out
    };
    let zero = vec![Rat::zero(); h];
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for (c, l) in torus.iter().enumerate() {
        mats.push(Matrix::diagonal(l));
        labels.push(format!("H{}", c + 1));
    }
    if let Some(&t0) = block_id.get(&zero) {
        // extend the torus to a basis of the zero block
        let in_block = |m: &Matrix| -> Vec<Rat> { blocks[&zero].iter().map(|&(k, i)| m[(k, i)].clone()).collect() };
        let mut span = Subspace::zero(blocks[&zero].len());
        for m in &mats {
            span.insert(&in_block(m));
        }
        for v in &solutions[t0] {
            if span.insert(v) {
                mats.push(to_matrix(t0, v));
                labels.push(format!("Z{}", labels.len() - h + 1));
            }
        }
    }
    let mut count = 0;
    for (t, w) in block_keys.iter().enumerate() {
        if *w == zero {
            continue;
        }
        for v in &solutions[t] {
            count += 1;
            mats.push(to_matrix(t, v));
            labels.push(format!("X{count}"));
        }
    }
    if mats.is_empty() {
        let g = Arc::new(LieAlgebra::new(0, Vec::new(), Vec::new(), Vec::new())?);
        let rho = Representation::new(g.clone(), d, Vec::new(), "derivations")?;
        return Ok((g, rho));
    }
    let g = Arc::new(LieAlgebra::from_matrix_basis(&mats, (0..h).collect(), labels)?);
    let rho = Representation::new(g.clone(), d, mats, "derivations")?;
    Ok((g, rho))
}

/// Split `g2 = Der(O)` with its action on the octonions.
pub fn g2() -> Result<(Arc<LieAlgebra>, Representation)> {
    let (g, rho) = derivation_algebra(&zorn_octonions().algebra)?;
    Ok((g, rho.with_label("g2 on octonions")))
}

/// Trace-zero octonions `a - b, u, v`: the 7-dimensional `g2` module.
pub fn g2_module_7() -> Result<Representation> {
    let (_, rho) = g2()?;
    let mut basis = Vec::new();
    let mut ab = vec![Rat::zero(); 8];
    ab[0] = Rat::one();
    ab[7] = -Rat::one();
    basis.push(ab);
    for i in 1..7 {
        let mut v = vec![Rat::zero(); 8];
        v[i] = Rat::one();
        basis.push(v);
    }
    Ok(rho.restrict(&basis)?.with_label("g2 7-dim"))
}

/// `S^2` of the 7-dimensional module minus its invariant line.
pub fn g2_module_27() -> Result<Representation> {
    let s2 = g2_module_7()?.symmetric_square()?;
    Ok(trivial_summand_complement(&s2)?.with_label("g2 27-dim"))
}

/// Split `f4 = Der(H3(O))` with its action on the 27-dimensional algebra.
pub fn f4() -> Result<(Arc<LieAlgebra>, Representation)> {
    let h3 = jordan_h3(&zorn_octonions());
    let (g, rho) = derivation_algebra(&h3)?;
    Ok((g, rho.with_label("f4 on H3(O)")))
}

/// Basis of the trace-zero part of `H3(O)`: `E1 - E2`, `E2 - E3` and the
/// off-diagonal elements.
pub fn h3_trace_zero_basis() -> Vec<Vec<Rat>> {
    let mut basis = Vec::new();
    for p in 0..2 {
        let mut v = vec![Rat::zero(); 27];
        v[p] = Rat::one();
        v[p + 1] = -Rat::one();
        basis.push(v);
    }
    for i in 3..27 {
        let mut v = vec![Rat::zero(); 27];
        v[i] = Rat::one();
        basis.push(v);
    }
    basis
}

/// The 26-dimensional `f4` module.
pub fn f4_module_26() -> Result<Representation> {
    let (_, rho) = f4()?;
    Ok(rho.restrict(&h3_trace_zero_basis())?.with_label("f4 26-dim"))
}
