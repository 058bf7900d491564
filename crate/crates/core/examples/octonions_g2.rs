//! g2 as derivations of the split octonions, and its two small modules. The
//! RND on the 7-dim module is the full orthogonal algebra, so the image of g2
//! is not rank-critical there.

use rankcrit::criticality::{invariant_orthogonal_span, rnd_multiplicities};
use rankcrit::lie::octonion::{g2, g2_module_27, g2_module_7, zorn_octonions};
use rankcrit::space::SamplingOptions;

fn main() -> rankcrit::Result<()> {
    let o = zorn_octonions();
    println!("octonions: alternative {}, commutative {}", o.algebra.is_alternative(), o.algebra.is_commutative());

    let (g, _) = g2()?;
    println!("Der(O): dim {}", g.dim());

    let opts = SamplingOptions::default();
    let seven = g2_module_7()?;
    let rep = rnd_multiplicities(&seven, &opts, 3)?;
    print!("{}", rep.to_text());
    println!("RND = o(B): {}", rep.rnd == invariant_orthogonal_span(&seven)?);

    let rep = rnd_multiplicities(&g2_module_27()?, &opts, 3)?;
    print!("{}", rep.to_text());
    Ok(())
}
