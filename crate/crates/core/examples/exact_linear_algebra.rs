//! Exact rational linear algebra: echelon forms, kernels, subspace algebra,
//! and the modular screen used to speed up rank tests.

use rankcrit::linalg::modular::{rank_mod_p, rational_reconstruction, DEFAULT_PRIME};
use rankcrit::linalg::{determinant, image_basis, inverse, kernel_basis, rank, rref, solve};
use rankcrit::{rat, Matrix, Subspace};

fn show(m: &Matrix) {
    for row in m.to_string_rows() {
        println!("  [{}]", row.join(", "));
    }
}

fn fmt(v: &[rankcrit::Rat]) -> String {
    v.iter().map(rat::to_string).collect::<Vec<_>>().join(", ")
}

fn main() {
    let a = Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    let (r, _) = rref(&a);
    println!("rref:");
    show(&r);
    println!("rank {}, det {}", rank(&a), determinant(&a));
    for v in kernel_basis(&a).basis_vectors() {
        println!("kernel vector ({})", fmt(&v));
    }
    println!("image dim {}", image_basis(&a).dim());

    let b = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
    let x = solve(&b, &[rat::int(3), rat::int(2)]).unwrap();
    println!("solve: x = ({}, {})", x[0], x[1]);
    println!("inverse:");
    show(&inverse(&b).unwrap());

    let hilbert = Matrix::from_fn(4, 4, |i, j| rat::frac(1, (i + j + 1) as i64));
    println!("det H4 = {}", determinant(&hilbert));

    let e = |i: usize| (0..4).map(|k| rat::int((k == i) as i64)).collect::<Vec<_>>();
    let u = Subspace::from_vectors(4, &[e(0), e(1), e(2)]);
    let w = Subspace::from_vectors(4, &[e(1), e(2), e(3)]);
    let cap = u.intersect(&w).unwrap();
    let sum = u.sum(&w).unwrap();
    println!("dim U cap W = {}, dim U + W = {}, dim ann(U) = {}", cap.dim(), sum.dim(), u.annihilator().dim());

    println!("rank of H4 mod p = {:?}", rank_mod_p(&hilbert, DEFAULT_PRIME));
    // 1/3 mod p, then back.
    let third = (2 * DEFAULT_PRIME as u128 + 1) / 3;
    println!("reconstructed {}", rational_reconstruction(third as u64, DEFAULT_PRIME).unwrap());
}
