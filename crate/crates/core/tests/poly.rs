use num_bigint::BigInt;

use rankcrit::poly::{
    brute_operator_coefficient, divisible_by_sigma1, falling_factorial, operator_coefficient_formula,
    p_de, q_d_closed, q_d_sum, restrict_to_sigma1_zero, sigma1_witness_coefficient, MPoly, ABC,
};
use rankcrit::rat;

fn sigma1() -> MPoly {
    MPoly::var(&ABC, 0).add(&MPoly::var(&ABC, 1)).add(&MPoly::var(&ABC, 2))
}

#[test]
fn falling_factorials() {
    assert_eq!(falling_factorial(5, 2), BigInt::from(20));
    assert_eq!(falling_factorial(7, 0), BigInt::from(1));
    assert_eq!(falling_factorial(2, 3), BigInt::from(0));
    assert_eq!(falling_factorial(-2, 2), BigInt::from(6));
}

#[test]
fn p_examples() {
    for e in 1..=5 {
        assert_eq!(p_de(0, e), MPoly::constant(&ABC, rat::int(1)));
        assert_eq!(p_de(1, e), sigma1().scale(&rat::int(e as i64)));
    }
    let ab = MPoly::var(&ABC, 0).mul(&MPoly::var(&ABC, 1));
    let bc = MPoly::var(&ABC, 1).mul(&MPoly::var(&ABC, 2));
    let ca = MPoly::var(&ABC, 2).mul(&MPoly::var(&ABC, 0));
    assert_eq!(p_de(2, 1), ab.add(&bc).add(&ca).scale(&rat::int(2)));
    assert_eq!(p_de(2, 1).to_string(), "2*alpha*beta + 2*alpha*gamma + 2*beta*gamma");
    for e in 1..=3 {
        for d in 0..=3 * e {
            assert!(p_de(d, e).is_symmetric());
        }
    }
}

#[test]
fn divisibility_examples() {
    assert!(divisible_by_sigma1(&sigma1()));
    assert!(divisible_by_sigma1(&sigma1().mul(&MPoly::var(&ABC, 0))));
    assert!(!divisible_by_sigma1(&MPoly::var(&ABC, 0)));
    assert!(!divisible_by_sigma1(&p_de(0, 4)));
    assert!(divisible_by_sigma1(&p_de(1, 4)));
    assert!(restrict_to_sigma1_zero(&sigma1()).is_zero());
}

#[test]
fn q_examples() {
    assert_eq!(q_d_sum(1, 2), rat::int(-6));
    assert_eq!(q_d_closed(1, 2), rat::int(-6));
    assert_eq!(q_d_sum(2, 1), rat::int(-6));
    assert_eq!(q_d_closed(2, 1), rat::int(-6));
    for e in 1..=10u32 {
        let e_i = e as i64;
        assert_eq!(q_d_sum(1, e), rat::int(-e_i * (e_i + 1)));
        assert_ne!(q_d_sum(2 * e, e), rat::int(0));
        // The closed form carries the factor (e - k + 1) with k = e + 1.
        assert_eq!(q_d_sum(2 * e + 1, e), rat::int(0));
    }
}

#[test]
fn witness_coefficient_is_nonzero() {
    // Coefficient of alpha^{d-1} beta after gamma = -alpha - beta.
    for e in 1..=4u32 {
        for d in 2..=2 * e + 1 {
            let c = sigma1_witness_coefficient(d, e);
            assert_ne!(c, rat::int(0), "d = {d}, e = {e}");
            assert_eq!(c, q_d_sum(d - 1, e));
        }
    }
}

#[test]
fn operator_coefficients() {
    for e in 1..=2u32 {
        for d in 0..=4u32 {
            let brute = brute_operator_coefficient(d, e, 3);
            assert_eq!(brute, operator_coefficient_formula(d, e), "d = {d}, e = {e}");
            let fact = rat::Rat::from_integer(rat::factorial(d as u64));
            assert_eq!(brute, p_de(d, e).scale(&fact));
        }
    }
    assert_eq!(brute_operator_coefficient(0, 3, 3), MPoly::constant(&ABC, rat::int(1)));
}

#[test]
fn json_is_exponent_map() {
    let j = p_de(2, 1).to_json();
    assert_eq!(j["variables"], serde_json::json!(["alpha", "beta", "gamma"]));
    assert_eq!(j["terms"]["[1,1,0]"], "2");
    assert_eq!(j["terms"].as_object().unwrap().len(), 3);
}
