//! The polynomials P_{d,e}(alpha, beta, gamma) that govern highest weight
//! vectors, their divisibility by alpha + beta + gamma, and the sums Q_d.

use rankcrit::poly::{
    brute_operator_coefficient, divisible_by_sigma1, operator_coefficient_formula, p_de, q_d_closed, q_d_sum,
};

fn main() {
    for d in 0..=3 {
        println!("P_{d},1 = {}", p_de(d, 1));
    }

    let e = 3;
    let pattern: String = (0..=3 * e).map(|d| if divisible_by_sigma1(&p_de(d, e)) { 'y' } else { '.' }).collect();
    println!("divisible by sigma1, e = {e}, d = 0..{}: {pattern}", 3 * e);

    for d in 1..=2 * e + 1 {
        println!("Q_{d} = {} (closed form {})", q_d_sum(d, e), q_d_closed(d, e));
    }

    let brute = brute_operator_coefficient(4, 2, 3);
    println!("brute force matches formula at d = 4, e = 2: {}", brute == operator_coefficient_formula(4, 2));
}
