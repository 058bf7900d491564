//! Root data, weights and highest weight vectors from structure constants.

use rankcrit::lie::classical::{differential_operator, sl, so, sp, symmetric_power_poly_rep};
use rankcrit::lie::octonion::g2;
use rankcrit::lie::weights::{end_highest_weight_spaces, highest_weight_spaces};
use rankcrit::lie::{cartan_and_roots, Representation};
use rankcrit::{rat, Subspace};

fn main() -> rankcrit::Result<()> {
    let algebras = [
        ("sl3", sl(3).0),
        ("so5", so(5)?.0),
        ("sp4", sp(4)?.0),
        ("g2", g2()?.0),
    ];
    for (name, g) in algebras {
        let d = cartan_and_roots(&g)?;
        let ad = Representation::adjoint(g.clone());
        let hw = highest_weight_spaces(&ad, &d)?;
        let labels: Vec<String> = hw[0].labels.iter().map(rat::to_string).collect();
        println!("{name}: dim {}, rank {}, {} roots, highest root labels {labels:?}", g.dim(), d.rank, d.roots.len());
    }

    let cubics = symmetric_power_poly_rep(3, 3);
    let wd = cubics.weights()?;
    println!("S^3: dim {}, zero weight multiplicity {}", wd.dim(), wd.zero_weight_dim());

    // Highest weight vectors of End(S^3) are the powers of x3 d/dx1.
    let d = cartan_and_roots(cubics.algebra())?;
    let op = differential_operator(3, 3, 2, 0);
    for h in end_highest_weight_spaces(&cubics, &d, false)? {
        let line = Subspace::from_vectors(100, &[h.vectors[0].entries().to_vec()]);
        let power = (0..4).find(|&k| line == Subspace::from_vectors(100, &[op.pow(k).entries().to_vec()]));
        let labels: Vec<String> = h.labels.iter().map(rat::to_string).collect();
        println!("  labels {labels:?}: (x3 d/dx1)^{}", power.unwrap());
    }
    Ok(())
}
