//! The standard families of rank-critical spaces.

use rankcrit::constructions::{
    compression_space, pare_map, pare_standard, pare_standard_matrices, quadratic_form_vanishes, skew_space,
    standard_compression_space,
};
use rankcrit::space::{certify_rank_critical, SamplingOptions};
use rankcrit::{rat, Subspace};

fn main() -> rankcrit::Result<()> {
    let opts = SamplingOptions::default();

    println!(" n  k  dim  rank  status");
    for n in 2..=5 {
        for k in 2..=n {
            let a = standard_compression_space(n, k)?;
            let c = certify_rank_critical(&a, &opts)?;
            println!("{n:>2} {k:>2} {:>4} {:>5}  {:?}", a.dim(), c.generic_rank, c.status);
        }
    }

    // Any U, W with dim W = dim U - 1 works, not just coordinate ones.
    let u = Subspace::from_vectors(4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 0]].map(|v| v.into_iter().map(rat::int).collect()));
    let w = Subspace::from_vectors(4, &[(1..=4).map(rat::int).collect()]);
    let a = compression_space(4, &u, &w)?;
    println!("tilted compression: dim {}, {:?}", a.dim(), certify_rank_critical(&a, &opts)?.status);

    for n in [3, 5, 7] {
        let c = certify_rank_critical(&skew_space(n), &opts)?;
        println!("skew {n}: rank {}, {:?}", c.generic_rank, c.status);
    }

    let p = pare_standard(5)?;
    println!(
        "pare 5: dim {}, x^T phi(x) x = 0: {}",
        p.dim(),
        quadratic_form_vanishes(&pare_map(&pare_standard_matrices(5))?)
    );
    let c = certify_rank_critical(&p, &opts)?;
    println!("pare 5: rank {}, {:?}", c.generic_rank, c.status);
    Ok(())
}
