//! Invariants of matrix spaces and their rank-neutral directions.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use rankcrit::constructions::{skew_space, standard_compression_space};
use rankcrit::linalg::matrix::combine;
use rankcrit::linalg::random::{random_invertible, rng};
use rankcrit::linalg::{inverse, rank};
use rankcrit::space::{
    certify_rank_critical, generic_rank, rnd, tangent_constraint_space, MatrixSpace, RegularSample,
    SamplingOptions,
};
use rankcrit::{rat, Matrix, Rat};

fn small_int() -> impl Strategy<Value = Rat> {
    (-3i64..=3).prop_map(rat::int)
}

/// Spanned by 1..=4 small integer matrices of size 2..=4.
fn random_space() -> impl Strategy<Value = MatrixSpace> {
    (2usize..=4, 1usize..=4).prop_flat_map(|(n, k)| {
        proptest::collection::vec(proptest::collection::vec(small_int(), n * n), k).prop_map(move |rows| {
            MatrixSpace::from_spanning(n, rows.iter().map(|v| Matrix::from_flat(n, v))).unwrap()
        })
    })
}

/// Spaces with known answers mixed in with random ones.
fn any_space() -> impl Strategy<Value = (MatrixSpace, u64)> {
    let space = prop_oneof![
        (3usize..=5).prop_map(skew_space),
        (2usize..=4)
            .prop_flat_map(|n| (Just(n), 2..=n))
            .prop_map(|(n, k)| standard_compression_space(n, k).unwrap()),
        random_space(),
    ];
    (space, 0u64..1000)
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn rnd_contains_span(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&any_space(), |(a, seed)| {
            let comp = rnd(&a, None, &SamplingOptions::with_seed(seed)).unwrap();
            prop_assert!(comp.rnd.contains_subspace(&a.span()).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn tangent_dimension(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&any_space(), |(a, seed)| {
            let (r, _) = generic_rank(&a, &SamplingOptions::with_seed(seed));
            let mut g = rng(seed);
            let x = loop {
                let x = a.random_element(&mut g, 100);
                if rank(&x) == r {
                    break x;
                }
            };
            let n = a.n();
            let t = tangent_constraint_space(&RegularSample::new(x), n);
            prop_assert_eq!(t.dim(), n * n - (n - r) * (n - r));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn rnd_monotone_in_samples(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&any_space(), |(a, seed)| {
            let few = SamplingOptions { stabilization: 1, ..SamplingOptions::with_seed(seed) };
            let many = SamplingOptions { stabilization: 6, ..SamplingOptions::with_seed(seed) };
            let r = Some(generic_rank(&a, &SamplingOptions::with_seed(seed)));
            let small = rnd(&a, r, &few).unwrap();
            let large = rnd(&a, r, &many).unwrap();
            // Same seed, so the longer run intersects a superset of tangent spaces.
            prop_assert!(small.rnd.contains_subspace(&large.rnd).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn certificate_invariance(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&any_space(), |(a, seed)| {
            let opts = SamplingOptions::with_seed(seed);
            let base = certify_rank_critical(&a, &opts).unwrap();

            let mut r = rng(seed);
            let g = random_invertible(&mut r, a.dim(), 5);
            let rebased = MatrixSpace::new(a.n(), (0..a.dim()).map(|i| combine(g.row(i), a.basis())).collect())
                .unwrap();
            prop_assert_eq!(rebased.span(), a.span());
            prop_assert_eq!(certify_rank_critical(&rebased, &opts).unwrap().status, base.status);

            let p = random_invertible(&mut r, a.n(), 4);
            let p_inv = inverse(&p).unwrap();
            let conj = certify_rank_critical(&a.conjugate(&p, &p_inv), &opts).unwrap();
            prop_assert_eq!(conj.status, base.status);
            prop_assert_eq!(conj.generic_rank, base.generic_rank);
            // RND moves with the space.
            let moved: Vec<Matrix> = base.rnd_matrices().iter().map(|m| p.mul(m).mul(&p_inv)).collect();
            prop_assert_eq!(conj.rnd, MatrixSpace::from_spanning(a.n(), moved).unwrap().span());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Not randomized: the whole range 2 <= k <= n <= 6.
pub fn compression_dimension(_cases: u32) -> Result<(), String> {
    for n in 2..=6 {
        for k in 2..=n {
            let a = standard_compression_space(n, k).map_err(|e| e.to_string())?;
            if a.dim() != n * n - k * n + k * k - k {
                return Err(format!("compression n = {n}, k = {k}: dim {}", a.dim()));
            }
        }
    }
    Ok(())
}

pub const ALL: &[(&str, fn(u32) -> Result<(), String>)] = &[
    ("rnd_contains_span", rnd_contains_span),
    ("tangent_dimension", tangent_dimension),
    ("rnd_monotone_in_samples", rnd_monotone_in_samples),
    ("certificate_invariance", certificate_invariance),
    ("compression_dimension", compression_dimension),
];
