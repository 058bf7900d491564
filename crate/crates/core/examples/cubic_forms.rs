//! sl(m) acting on forms of degree 3e in m variables. For m = 3 the image is
//! rank-critical of rank n - 1.
//!
//!     cargo run --release --example cubic_forms -- 3 2

use rankcrit::criticality::certify_theorem1;
use rankcrit::space::SamplingOptions;

fn main() -> rankcrit::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (m, e) = match args[..] {
        [m, e] => (m, e),
        _ => (3, 1),
    };
    let c = certify_theorem1(m, e, &SamplingOptions::default())?;
    print!("{}", c.report.to_text());
    println!("maximal singular: {}", c.is_maximal_singular());
    Ok(())
}
