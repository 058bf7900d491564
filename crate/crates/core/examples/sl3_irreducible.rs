//! Multiplicity report for an irreducible sl(3)-module V(a, b).
//!
//!     cargo run --release --example sl3_irreducible -- 4 1

use rankcrit::criticality::rnd_multiplicities;
use rankcrit::lie::classical::irreducible_sl3_rep;
use rankcrit::space::SamplingOptions;

fn main() -> rankcrit::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (1, 1),
    };
    let rho = irreducible_sl3_rep(a, b)?;
    let rep = rnd_multiplicities(&rho, &SamplingOptions::default(), 3)?;
    print!("{}", rep.to_text());
    for (labels, mult) in rep.rnd_highest_weights() {
        println!("  RND contains V({}) x{mult}", labels.join(", "));
    }
    Ok(())
}
