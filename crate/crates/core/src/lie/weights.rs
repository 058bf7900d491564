//! Weights, roots and highest weight vectors.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use super::algebra::LieAlgebra;
use super::rep::Representation;
use crate::error::{Error, Result};
use crate::linalg::matrix::axpy;
use crate::linalg::{self, modular, CoordinateMap, Matrix, Subspace};
use crate::rat::{self, Rat};

pub type Weight = Vec<Rat>;

/// Simultaneous eigenbasis of the Cartan action.
#[derive(Clone, Debug)]
pub struct WeightDecomposition {
    /// Columns are weight vectors.
    pub basis: Matrix,
    pub basis_inv: Matrix,
    /// Eigenvalues on the Cartan basis, one tuple per column.
    pub weights: Vec<Weight>,
    /// Whether `basis` is the identity.
    pub standard: bool,
}

impl WeightDecomposition {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Column indices grouped by weight.
    pub fn blocks(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    pub fn multiplicity(&self, w: &[Rat]) -> usize {
        self.weights.iter().filter(|x| x.as_slice() == w).count()
    }

    pub fn zero_weight_dim(&self) -> usize {
        self.weights
            .iter()
            .filter(|w| w.iter().all(Zero::is_zero))
            .count()
    }

    pub fn vector(&self, i: usize) -> Vec<Rat> {
        self.basis.column(i)
    }

    /// `P^-1 M P`
    pub fn to_weight_basis(&self, m: &Matrix) -> Matrix {
        if self.standard {
            return m.clone();
        }
        self.basis_inv.mul(m).mul(&self.basis)
    }

    /// `P M P^-1`
    pub fn from_weight_basis(&self, m: &Matrix) -> Matrix {
        if self.standard {
            return m.clone();
        }
        self.basis.mul(m).mul(&self.basis_inv)
    }

    pub fn weights_json(&self) -> serde_json::Value {
        self.weights
            .iter()
            .map(|w| w.iter().map(rat::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into()
    }
}

/// Splits `Q^n` into simultaneous eigenspaces of the commuting matrices `hs`.
/// Fails with `NonSplit` when an eigenvalue is not rational and with
/// `NonDiagonalizable` when eigenvectors do not span.
pub fn weight_decomposition(hs: &[Matrix], n: usize) -> Result<WeightDecomposition> {
    if hs.iter().all(is_diagonal) {
        return Ok(WeightDecomposition {
            basis: Matrix::identity(n),
            basis_inv: Matrix::identity(n),
            weights: (0..n)
                .map(|j| hs.iter().map(|h| h[(j, j)].clone()).collect())
                .collect(),
            standard: true,
        });
    }
    let identity: Vec<Vec<Rat>> = Matrix::identity(n).row_vecs();
    let mut blocks: Vec<(Weight, Vec<Vec<Rat>>)> = vec![(Vec::new(), identity)];
    for h in hs {
        let mut next = Vec::new();
        for (w, basis) in blocks {
            let cm = CoordinateMap::new(basis.clone()).expect("block bases are independent");
            let k = basis.len();
            let cols = basis
                .iter()
                .map(|b| {
                    cm.coords(&h.mul_vec(b)).ok_or_else(|| {
                        Error::InternalInconsistency("Cartan elements do not commute".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Matrix::from_columns(k, &cols);
            for (lambda, vecs) in eigenspaces(&m)? {
                let mut w2 = w.clone();
                w2.push(lambda);
                let amb = vecs
                    .iter()
                    .map(|c| {
                        let mut v = vec![Rat::zero(); n];
                        for (cj, bj) in c.iter().zip(&basis) {
                            if !cj.is_zero() {
                                axpy(&mut v, cj, bj);
                            }
                        }
                        v
                    })
                    .collect();
                next.push((w2, amb));
            }
        }
        blocks = next;
    }
    blocks.sort_by(|a, b| a.0.cmp(&b.0));
    let mut cols = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for (w, vs) in blocks {
        for v in vs {
            cols.push(v);
            weights.push(w.clone());
        }
    }
    let basis = Matrix::from_columns(n, &cols);
    let basis_inv = linalg::inverse(&basis).ok_or(Error::NonDiagonalizable)?;
    Ok(WeightDecomposition {
        basis,
        basis_inv,
        weights,
        standard: false,
    })
}

fn is_diagonal(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()))
}

/// Rational eigenvalues with eigenspace bases; the spaces must fill `Q^k`.
pub fn eigenspaces(m: &Matrix) -> Result<Vec<(Rat, Vec<Vec<Rat>>)>> {
    let k = m.rows();
    if is_diagonal(m) {
        let mut by: BTreeMap<Rat, Vec<Vec<Rat>>> = BTreeMap::new();
        for j in 0..k {
            let mut e = vec![Rat::zero(); k];
            e[j] = Rat::one();
            by.entry(m[(j, j)].clone()).or_default().push(e);
        }
        return Ok(by.into_iter().collect());
    }
    let mut found = None;
    for p in [modular::DEFAULT_PRIME, (1u64 << 61) - 1, 4_611_686_018_427_387_847] {
        if let Some(red) = modular::reduce_matrix(m, p) {
            found = Some((red, p));
            break;
        }
    }
    let (red, p) = found.ok_or(Error::NonSplit)?;
    let chi = modular::charpoly_mod_p(&red, p);
    let mut rng = linalg::random::rng(0x5eed);
    let roots = modular::roots_mod_p(&chi, p, &mut rng);
    if roots.iter().map(|r| r.1).sum::<usize>() < k {
        return Err(Error::NonSplit);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for (r, _) in roots {
        let lambda = modular::rational_reconstruction(r, p).ok_or(Error::NonSplit)?;
        let shifted = m.sub(&Matrix::identity(k).scale(&lambda));
        let vs = linalg::kernel_vectors(&shifted);
        if vs.is_empty() {
            return Err(Error::NonSplit);
        }
        total += vs.len();
        out.push((lambda, vs));
    }
    if total < k {
        return Err(Error::NonDiagonalizable);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Root {
    pub weight: Weight,
    /// Root vector in algebra coordinates.
    pub vector: Vec<Rat>,
    pub positive: bool,
}

/// Roots, a positive system and simple root data of a split semisimple
/// algebra.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub rank: usize,
    pub functional: Vec<Rat>,
    pub roots: Vec<Root>,
    /// Indices into `roots`, in label order.
    pub simple: Vec<usize>,
    /// Simple raising elements `e_i`, algebra coordinates.
    pub raising: Vec<Vec<Rat>>,
    /// Matching lowering elements `f_i`.
    pub lowering: Vec<Vec<Rat>>,
    /// Simple coroots in Cartan coordinates.
    pub coroots: Vec<Vec<Rat>>,
    /// `a_ij = alpha_j(h_i)`
    pub cartan_matrix: Vec<Vec<Rat>>,
}

impl RootDatum {
    /// Values on the simple coroots.
    pub fn dynkin_labels(&self, w: &[Rat]) -> Vec<Rat> {
        self.coroots
            .iter()
            .map(|h| h.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_dominant(&self, w: &[Rat]) -> bool {
        self.dynkin_labels(w)
            .iter()
            .all(|l| !l.is_negative() && l.is_integer())
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.positive)
    }

    pub fn simple_roots(&self) -> Vec<&Weight> {
        self.simple.iter().map(|&i| &self.roots[i].weight).collect()
    }
}

/// Root space decomposition under the designated Cartan.
pub fn cartan_and_roots(g: &LieAlgebra) -> Result<RootDatum> {
    let rank = g.rank();
    let hs: Vec<Matrix> = g.cartan().iter().map(|&i| g.ad_basis(i)).collect();
    let wd = weight_decomposition(&hs, g.dim())?;
    let mut roots = Vec::new();
    let mut zero = 0;
    for (w, cols) in wd.blocks() {
        if w.iter().all(Zero::is_zero) {
            zero += cols.len();
            continue;
        }
        if cols.len() != 1 {
            return Err(Error::NoRootData);
        }
        roots.push(Root {
            weight: w,
            vector: wd.vector(cols[0]),
            positive: false,
        });
    }
    if zero != rank || rank == 0 {
        return Err(Error::NoRootData);
    }
    let functional = match g.positivity() {
        Some(f) if roots.iter().all(|r| !pair(f, &r.weight).is_zero()) => f.to_vec(),
        _ => {
            let generic = |f: &Vec<Rat>| roots.iter().all(|r| !pair(f, &r.weight).is_zero());
            // (N, N-1, ..., N-r+1), then (N^{r-1}, ..., N, 1); the second family
            // pairs each root to a nonzero polynomial in N, so it terminates
            let r = rank as i64;
            let linear = (r..r + 64).map(|big| (0..r).map(|k| rat::int(big - k)).collect());
            let powers = (2i64..).map(|big| {
                (0..r as u32).rev().map(|k| Rat::from_integer(num_bigint::BigInt::from(big).pow(k))).collect()
            });
            linear.chain(powers).find(generic).unwrap()
        }
    };
    for r in &mut roots {
        r.positive = pair(&functional, &r.weight).is_positive();
    }
    let index: HashMap<Weight, usize> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.weight.clone(), i))
        .collect();
    let positive: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].positive).collect();
    let mut simple: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&a| {
            !positive.iter().any(|&b| {
                let d: Weight = sub(&roots[a].weight, &roots[b].weight);
                index.get(&d).is_some_and(|&c| roots[c].positive)
            })
        })
        .collect();
    if simple.len() != rank {
        return Err(Error::NoRootData);
    }
    let mut data = Vec::new();
    for &s in &simple {
        let e = roots[s].vector.clone();
        let neg: Weight = roots[s].weight.iter().map(|x| -x).collect();
        let &fi = index.get(&neg).ok_or(Error::NoRootData)?;
        let f = roots[fi].vector.clone();
        let hprime = g.bracket(&e, &f);
        let hc: Vec<Rat> = g.cartan().iter().map(|&i| hprime[i].clone()).collect();
        let outside = hprime
            .iter()
            .enumerate()
            .any(|(i, x)| !x.is_zero() && !g.cartan().contains(&i));
        let a = pair(&hc, &roots[s].weight);
        if outside || a.is_zero() {
            return Err(Error::NoRootData);
        }
        let scale = rat::int(2) / a;
        let coroot: Vec<Rat> = hc.iter().map(|x| x * &scale).collect();
        data.push((s, e, f.iter().map(|x| x * &scale).collect::<Vec<_>>(), coroot));
    }
    // order by the first nonzero coroot coordinate, then lexicographically
    data.sort_by(|a, b| {
        let key = |c: &Vec<Rat>| c.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX);
        key(&a.3).cmp(&key(&b.3)).then_with(|| b.3.cmp(&a.3))
    });
    let cm = |data: &[(usize, Vec<Rat>, Vec<Rat>, Vec<Rat>)]| -> Vec<Vec<Rat>> {
        data.iter()
            .map(|(_, _, _, h)| data.iter().map(|(j, ..)| pair(h, &roots[*j].weight)).collect())
            .collect()
    };
    let mut cartan_matrix = cm(&data);
    // G2: short simple root first
    if rank == 2 && cartan_matrix[1][0] == rat::int(-3) {
        data.swap(0, 1);
        cartan_matrix = cm(&data);
    }
    simple = data.iter().map(|d| d.0).collect();
    Ok(RootDatum {
        rank,
        functional,
        simple,
        raising: data.iter().map(|d| d.1.clone()).collect(),
        lowering: data.iter().map(|d| d.2.clone()).collect(),
        coroots: data.into_iter().map(|d| d.3).collect(),
        cartan_matrix,
        roots,
    })
}

fn pair(f: &[Rat], w: &[Rat]) -> Rat {
    f.iter().zip(w).map(|(a, b)| a * b).sum()
}

fn sub(a: &[Rat], b: &[Rat]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[derive(Clone, Debug)]
pub struct HighestWeightSpace {
    pub weight: Weight,
    pub labels: Vec<Rat>,
    pub space: Subspace,
}

/// Nonzero spaces of weight vectors killed by every simple raising element.
pub fn highest_weight_spaces(
    rho: &Representation,
    datum: &RootDatum,
) -> Result<Vec<HighestWeightSpace>> {
    let wd = rho.weights()?;
    let raising: Vec<Matrix> = datum.raising.iter().map(|e| rho.act(e)).collect();
    let mut out = Vec::new();
    for (w, cols) in wd.blocks() {
        let vecs: Vec<Vec<Rat>> = cols.iter().map(|&c| wd.vector(c)).collect();
        let mut rows = Vec::new();
        for e in &raising {
            let images: Vec<Vec<Rat>> = vecs.iter().map(|v| e.mul_vec(v)).collect();
            for i in 0..rho.dim() {
                rows.push(images.iter().map(|im| im[i].clone()).collect::<Vec<_>>());
            }
        }
        let ker = if rows.is_empty() {
            Matrix::identity(vecs.len()).row_vecs()
        } else {
            linalg::kernel_vectors(&Matrix::from_rows(rows)?)
        };
        if ker.is_empty() {
            continue;
        }
        let amb: Vec<Vec<Rat>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![Rat::zero(); rho.dim()];
                for (cj, bj) in c.iter().zip(&vecs) {
                    axpy(&mut v, cj, bj);
                }
                v
            })
            .collect();
        out.push(HighestWeightSpace {
            labels: datum.dynkin_labels(&w),
            weight: w,
            space: Subspace::from_vectors(rho.dim(), &amb),
        });
    }
    Ok(out)
}

/// Highest weight vectors of `End(V)` under `Y -> [rho(e), Y]`, by weight.
#[derive(Clone, Debug)]
pub struct EndHighestWeight {
    pub weight: Weight,
    pub labels: Vec<Rat>,
    /// Basis of the highest weight space in the weight basis of `V`.
    pub weight_basis_vectors: Vec<Matrix>,
    /// The same vectors in the original basis of `V`.
    pub vectors: Vec<Matrix>,
}

/// `HW_mu(End V)` for every weight `mu`, or only dominant ones. Works block
/// by block: the weight-`mu` part of `End(V)` is spanned by `E_ab` with
/// `wt(a) - wt(b) = mu` in a weight basis.
pub fn end_highest_weight_spaces(
    rho: &Representation,
    datum: &RootDatum,
    dominant_only: bool,
) -> Result<Vec<EndHighestWeight>> {
    let wd = rho.weights()?;
    let n = rho.dim();
    let raising: Vec<SparseMat> = datum
        .raising
        .iter()
        .map(|e| SparseMat::from(&wd.to_weight_basis(&rho.act(e))))
        .collect();
    let mut pairs: BTreeMap<Weight, Vec<(usize, usize)>> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            pairs
                .entry(sub(&wd.weights[a], &wd.weights[b]))
                .or_default()
                .push((a, b));
        }
    }
    let mut out = Vec::new();
    for (mu, unknowns) in pairs {
        if dominant_only && !datum.is_dominant(&mu) {
            continue;
        }
        let ker = end_block_kernel(&raising, &unknowns);
        if ker.is_empty() {
            continue;
        }
        let wbv: Vec<Matrix> = ker
            .iter()
            .map(|c| {
                let mut y = Matrix::zeros(n, n);
                for (q, &(a, b)) in unknowns.iter().enumerate() {
                    y[(a, b)] = c[q].clone();
                }
                y
            })
            .collect();
        out.push(EndHighestWeight {
            labels: datum.dynkin_labels(&mu),
            weight: mu,
            vectors: wbv.iter().map(|y| wd.from_weight_basis(y)).collect(),
            weight_basis_vectors: wbv,
        });
    }
    Ok(out)
}

/// Kernel of `Y -> ([E_i, Y])_i` on `Y = sum_q y_q E_{a_q b_q}`.
fn end_block_kernel(raising: &[SparseMat], unknowns: &[(usize, usize)]) -> Vec<Vec<Rat>> {
    let mut eqs: HashMap<(usize, usize, usize), Vec<(usize, Rat)>> = HashMap::new();
    for (i, e) in raising.iter().enumerate() {
        for (q, &(a, b)) in unknowns.iter().enumerate() {
            // E E_ab: entry (c, b) gets E[c][a]
            for (c, v) in &e.cols[a] {
                eqs.entry((i, *c, b)).or_default().push((q, v.clone()));
            }
            // E_ab E: entry (a, d) gets -E[b][d]
            for (d, v) in &e.rows[b] {
                eqs.entry((i, a, *d)).or_default().push((q, -v.clone()));
            }
        }
    }
    let m = unknowns.len();
    let mut keys: Vec<_> = eqs.keys().copied().collect();
    keys.sort_unstable();
    let rows: Vec<Vec<Rat>> = keys
        .iter()
        .filter_map(|k| {
            let mut row = vec![Rat::zero(); m];
            for (q, v) in &eqs[k] {
                row[*q] += v;
            }
            (!row.iter().all(Zero::is_zero)).then_some(row)
        })
        .collect();
    if rows.is_empty() {
        return Matrix::identity(m).row_vecs();
    }
    linalg::kernel_vectors(&Matrix::from_rows(rows).unwrap())
}

/// Row and column nonzero lists of a matrix.
#[derive(Clone, Debug)]
pub(crate) struct SparseMat {
    pub rows: Vec<Vec<(usize, Rat)>>,
    pub cols: Vec<Vec<(usize, Rat)>>,
}

impl From<&Matrix> for SparseMat {
    fn from(m: &Matrix) -> Self {
        let mut rows = vec![Vec::new(); m.rows()];
        let mut cols = vec![Vec::new(); m.cols()];
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let v = &m[(i, j)];
                if !v.is_zero() {
                    rows[i].push((j, v.clone()));
                    cols[j].push((i, v.clone()));
                }
            }
        }
        SparseMat { rows, cols }
    }
}

/// Smallest subspace containing `vectors` and stable under each `act(i, .)`
/// for `i < count`.
pub fn generate_submodule(
    ambient: usize,
    vectors: &[Vec<Rat>],
    count: usize,
    act: impl Fn(usize, &[Rat]) -> Vec<Rat>,
) -> Subspace {
    let mut span = Subspace::zero(ambient);
    let mut frontier = Vec::new();
    for v in vectors {
        if span.insert(v) {
            frontier.push(v.clone());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for i in 0..count {
                let w = act(i, v);
                if span.insert(&w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    span
}

/// Closure of `vectors` under `rho`.
pub fn submodule_generated(rho: &Representation, vectors: &[Vec<Rat>]) -> Subspace {
    let mats = rho.matrices();
    generate_submodule(rho.dim(), vectors, mats.len(), |i, v| mats[i].mul_vec(v))
}

/// Closure of `ys` in `End(V)` under `Y -> [rho(x_i), Y]`, flattened
/// row-major.
pub fn end_submodule_generated(rho: &Representation, ys: &[Matrix]) -> Subspace {
    let n = rho.dim();
    let mats = rho.matrices();
    let seeds: Vec<Vec<Rat>> = ys.iter().map(|y| y.entries().to_vec()).collect();
    generate_submodule(n * n, &seeds, mats.len(), |i, v| {
        let y = Matrix::from_flat(n, v);
        mats[i].commutator(&y).into_entries()
    })
}

/// `exp(X) = sum_j X^j / j!` for nilpotent `X`.
pub fn unipotent_exponential(x: &Matrix) -> Result<Matrix> {
    let n = x.rows();
    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for j in 1..=n {
        term = term.mul(x).scale(&Rat::new(1.into(), (j as i64).into()));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = sum.add(&term);
    }
    if term.is_zero() {
        Ok(sum)
    } else {
        Err(Error::NotNilpotent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::classical::{sl, symmetric_power_poly_rep};
    use crate::rat::int;

    #[test]
    fn sl3_adjoint_roots() {
        let (g, _) = sl(3);
        let d = cartan_and_roots(&g).unwrap();
        assert_eq!(d.roots.len(), 6);
        assert_eq!(d.positive_roots().count(), 3);
        let ad = Representation::adjoint(g);
        assert_eq!(ad.weights().unwrap().zero_weight_dim(), 2);
        assert_eq!(
            d.cartan_matrix,
            vec![vec![int(2), int(-1)], vec![int(-1), int(2)]]
        );
        let hw = highest_weight_spaces(&ad, &d).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].labels, vec![int(1), int(1)]);
        assert_eq!(hw[0].space.dim(), 1);
    }

    #[test]
    fn trivial_module_is_its_own_hw_space() {
        let (g, _) = sl(2);
        let t = Representation::trivial(g.clone(), 3);
        let d = cartan_and_roots(&g).unwrap();
        let hw = highest_weight_spaces(&t, &d).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].space, Subspace::full(3));
    }

    #[test]
    fn cubics_weights() {
        let rho = symmetric_power_poly_rep(3, 3);
        let wd = rho.weights().unwrap();
        assert_eq!(wd.dim(), 10);
        assert_eq!(wd.zero_weight_dim(), 1);
    }

    #[test]
    fn non_split_and_non_diagonalizable() {
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert_eq!(eigenspaces(&rot).unwrap_err(), Error::NonSplit);
        let jordan = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(eigenspaces(&jordan).unwrap_err(), Error::NonDiagonalizable);
        let sym = Matrix::from_i64(&[&[2, 1], &[1, 2]]);
        let es = eigenspaces(&sym).unwrap();
        assert_eq!(es.iter().map(|e| e.0.clone()).collect::<Vec<_>>(), vec![int(1), int(3)]);
    }

    #[test]
    fn exponentials() {
        assert_eq!(unipotent_exponential(&Matrix::zeros(3, 3)).unwrap(), Matrix::identity(3));
        let e = unipotent_exponential(&Matrix::unit(2, 0, 1)).unwrap();
        assert_eq!(e, Matrix::from_i64(&[&[1, 1], &[0, 1]]));
        assert_eq!(
            unipotent_exponential(&Matrix::identity(2)).unwrap_err(),
            Error::NotNilpotent
        );
        let rho = symmetric_power_poly_rep(3, 3);
        let d = cartan_and_roots(rho.algebra()).unwrap();
        for e in &d.raising {
            let x = rho.act(e);
            let g = unipotent_exponential(&x).unwrap();
            let gi = unipotent_exponential(&x.scale(&int(-1))).unwrap();
            assert_eq!(g.mul(&gi), Matrix::identity(10));
        }
    }
}
