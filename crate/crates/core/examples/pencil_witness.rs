//! A singular pencil sA + B always sits in a compression space. Recover one
//! from a polynomial kernel vector.

use rankcrit::constructions::{pencil_compression_witness, pencil_kernel_vectors, standard_compression_space};
use rankcrit::linalg::inverse;
use rankcrit::linalg::random::{random_invertible, rng};
use rankcrit::Matrix;

fn main() -> rankcrit::Result<()> {
    let a = Matrix::unit(3, 0, 1);
    let b = Matrix::unit(3, 0, 2);
    let w = pencil_compression_witness(&a, &b)?;
    let u: Vec<String> = w.u.basis_vectors()[0].iter().map(rankcrit::rat::to_string).collect();
    println!("E12, E13: U = span(({})), W = 0: {}", u.join(", "), w.w.is_zero());

    // Hide a 5x5 compression pencil behind a random change of basis.
    let c = standard_compression_space(5, 3)?;
    let mut r = rng(11);
    let g = random_invertible(&mut r, 5, 3);
    let gi = inverse(&g).unwrap();
    let a = g.mul(&c.random_element(&mut r, 10)).mul(&gi);
    let b = g.mul(&c.random_element(&mut r, 10)).mul(&gi);

    let kv = pencil_kernel_vectors(&a, &b)?;
    println!("kernel vector degree {:?}", kv[0].iter().filter_map(|p| p.degree()).max());
    let w = pencil_compression_witness(&a, &b)?;
    println!("dim U = {}, dim W = {}, verified {}", w.u.dim(), w.w.dim(), w.verify(&a, &b));

    match pencil_compression_witness(&Matrix::identity(3), &Matrix::unit(3, 0, 0)) {
        Err(e) => println!("I, E11: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
