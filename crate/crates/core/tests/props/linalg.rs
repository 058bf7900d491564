//! Invariants of the exact linear algebra layer, as proptest runners so that
//! both the property target and the acceptance suite can drive them.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use rankcrit::linalg::matrix::{axpy, dot};
use rankcrit::linalg::modular::{rank_mod_p, DEFAULT_PRIME};
use rankcrit::linalg::{kernel_basis, rank, rref, Matrix, Subspace};
use rankcrit::{rat, Rat};

fn entry() -> impl Strategy<Value = Rat> {
    prop_oneof![
        3 => Just(0i64).prop_map(rat::int),
        5 => (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat::frac(n, d)),
    ]
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(entry(), r * c)
            .prop_map(move |data| Matrix::from_vec(r, c, data).unwrap())
    })
}

// Low-rank products make the interesting cases common.
fn low_rank_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=3, 1usize..=5).prop_flat_map(|(r, k, c)| {
        (
            proptest::collection::vec(entry(), r * k),
            proptest::collection::vec(entry(), k * c),
        )
            .prop_map(move |(a, b)| {
                Matrix::from_vec(r, k, a).unwrap().mul(&Matrix::from_vec(k, c, b).unwrap())
            })
    })
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    prop_oneof![matrix(5, 6), low_rank_matrix()]
}

fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
    (1usize..=6).prop_flat_map(|n| {
        let vecs = move || proptest::collection::vec(proptest::collection::vec(entry(), n), 0..=n);
        (vecs(), vecs(), proptest::collection::vec(entry(), n)).prop_map(move |(mut a, mut b, shared)| {
            // A shared vector makes nonzero intersections likely.
            a.push(shared.clone());
            b.push(shared);
            (Subspace::from_vectors(n, &a), Subspace::from_vectors(n, &b))
        })
    })
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn rank_nullity(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&any_matrix(), |m| {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.dim(), m.cols());
            for v in k.basis_vectors() {
                prop_assert!(m.mul_vec(&v).iter().all(|x| *x == rat::int(0)));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn rref_idempotent(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&any_matrix(), |m| {
            let (r1, k1) = rref(&m);
            let (r2, k2) = rref(&r1);
            prop_assert_eq!(k1, k2);
            prop_assert_eq!(r1, r2);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn dimension_formula(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&subspace_pair(), |(u, w)| {
            let cap = u.intersect(&w).unwrap();
            let sum = u.sum(&w).unwrap();
            prop_assert_eq!(cap.dim() + sum.dim(), u.dim() + w.dim());
            prop_assert!(u.contains_subspace(&cap).unwrap());
            prop_assert!(w.contains_subspace(&cap).unwrap());
            prop_assert!(sum.contains_subspace(&u).unwrap());
            prop_assert!(sum.contains_subspace(&w).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn equality_is_canonical(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(subspace_pair(), matrix(6, 6)), |((u, w), m)| {
            let eq = u.equals(&w).unwrap();
            prop_assert_eq!(eq, u.basis() == w.basis());
            prop_assert_eq!(eq, u == w);

            // Re-spanning by an invertible recombination gives the same basis.
            let vs = u.basis_vectors();
            let k = vs.len();
            if k > 0 && m.rows() >= k && m.cols() >= k && rank(&m.block(0, 0, k, k)) == k {
                let mixed: Vec<Vec<Rat>> = (0..k)
                    .map(|i| {
                        let mut acc = vec![rat::int(0); u.ambient_dim()];
                        for (j, v) in vs.iter().enumerate() {
                            axpy(&mut acc, &m.row(i)[j], v);
                        }
                        acc
                    })
                    .collect();
                prop_assert_eq!(Subspace::from_vectors(u.ambient_dim(), &mixed), u);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn annihilator_duality(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&subspace_pair(), |(u, _)| {
            let ann = u.annihilator();
            prop_assert_eq!(ann.dim() + u.dim(), u.ambient_dim());
            for a in ann.basis_vectors() {
                for v in u.basis_vectors() {
                    prop_assert_eq!(dot(&a, &v), rat::int(0));
                }
            }
            prop_assert_eq!(ann.annihilator(), u);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn modular_rank_lower_bound(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&any_matrix(), |m| {
            let exact = rank(&m);
            for p in [DEFAULT_PRIME, 1_000_000_007, 101, 7, 3] {
                if let Some(rp) = rank_mod_p(&m, p) {
                    prop_assert!(rp <= exact, "rank mod {} = {} > exact {}", p, rp, exact);
                }
            }
            // Entries have denominators at most 4 and minors far below 2^62,
            // so the large prime never drops the rank here.
            prop_assert_eq!(rank_mod_p(&m, DEFAULT_PRIME), Some(exact));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub const ALL: &[(&str, fn(u32) -> Result<(), String>)] = &[
    ("rank_nullity", rank_nullity),
    ("rref_idempotent", rref_idempotent),
    ("dimension_formula", dimension_formula),
    ("equality_is_canonical", equality_is_canonical),
    ("annihilator_duality", annihilator_duality),
    ("modular_rank_lower_bound", modular_rank_lower_bound),
];
