//! f4 as derivations of the exceptional Jordan algebra, acting on its
//! 26-dim traceless part.

use rankcrit::criticality::rnd_multiplicities;
use rankcrit::lie::octonion::{f4, f4_module_26};
use rankcrit::space::SamplingOptions;

fn main() -> rankcrit::Result<()> {
    let t = std::time::Instant::now();
    let (g, _) = f4()?;
    println!("Der(H3(O)): dim {} ({:.1?})", g.dim(), t.elapsed());

    let rep = rnd_multiplicities(&f4_module_26()?, &SamplingOptions::default(), 3)?;
    print!("{}", rep.to_text());
    println!("total {:.1?}", t.elapsed());
    Ok(())
}
