//! Arithmetic modulo a word-sized prime: rank screening, characteristic
//! polynomials, root finding, and rational reconstruction.
//!
//! Nothing here is trusted on its own. Ranks mod p are lower bounds of the
//! rational rank, and eigenvalue candidates are re-checked exactly by the
//! caller.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::matrix::Matrix;
use crate::rat::Rat;

/// Largest prime below 2^62.
pub const DEFAULT_PRIME: u64 = (1u64 << 62) - 57;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Image of a rational in Z/p, or `None` when p divides the denominator.
pub fn reduce(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = r.numer().mod_floor(&pb).to_u64().unwrap();
    let den = r.denom().mod_floor(&pb).to_u64().unwrap();
    inv_mod(den, p).map(|d| mul_mod(num, d, p))
}

pub fn reduce_matrix(m: &Matrix, p: u64) -> Option<Vec<Vec<u64>>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| reduce(v, p)).collect())
        .collect()
}

/// Rank over Z/p. For a rational matrix whose denominators are prime to p
/// this never exceeds the rank over Q.
pub fn rank_mod_p(m: &Matrix, p: u64) -> Option<usize> {
    let mut a = reduce_matrix(m, p)?;
    Some(rank_of_rows(&mut a, m.cols(), p))
}

fn rank_of_rows(a: &mut [Vec<u64>], cols: usize, p: u64) -> usize {
    let nrows = a.len();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p).unwrap();
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            for j in c..cols {
                if prow[j] != 0 {
                    row[j] = sub_mod(row[j], mul_mod(f, prow[j], p), p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Polynomial over Z/p, coefficients low degree first, no trailing zeros.
pub type PolyModP = Vec<u64>;

fn trim(mut f: PolyModP) -> PolyModP {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> PolyModP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| sub_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> PolyModP {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(out)
}

/// Remainder and quotient of `a` by nonzero `b`.
fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (PolyModP, PolyModP) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead_inv = inv_mod(*b.last().unwrap(), p).unwrap();
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = mul_mod(*r.last().unwrap(), lead_inv, p);
        q[shift] = f;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(f, bi, p), p);
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> PolyModP {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let inv = inv_mod(l, p).unwrap();
        a.iter_mut().for_each(|c| *c = mul_mod(*c, inv, p));
    }
    a
}

/// `base^e mod modulus`
fn poly_powmod(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> PolyModP {
    let mut acc: PolyModP = vec![1];
    let mut b = poly_divrem(base, modulus, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_divrem(&poly_mul(&acc, &b, p), modulus, p).1;
        }
        b = poly_divrem(&poly_mul(&b, &b, p), modulus, p).1;
        e >>= 1;
    }
    acc
}

/// Characteristic polynomial `det(xI - M)` over Z/p via Hessenberg reduction.
pub fn charpoly_mod_p(m: &[Vec<u64>], p: u64) -> PolyModP {
    let n = m.len();
    let mut h: Vec<Vec<u64>> = m.to_vec();
    // reduce to upper Hessenberg form by similarity transforms
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&i| h[i][c] != 0) else {
            continue;
        };
        if piv != c + 1 {
            h.swap(piv, c + 1);
            for row in h.iter_mut() {
                row.swap(piv, c + 1);
            }
        }
        let inv = inv_mod(h[c + 1][c], p).unwrap();
        for i in c + 2..n {
            if h[i][c] == 0 {
                continue;
            }
            let f = mul_mod(h[i][c], inv, p);
            for j in 0..n {
                let t = mul_mod(f, h[c + 1][j], p);
                h[i][j] = sub_mod(h[i][j], t, p);
            }
            for row in h.iter_mut() {
                let t = mul_mod(f, row[i], p);
                row[c + 1] = add_mod(row[c + 1], t, p);
            }
        }
    }
    // recurrence on leading principal minors of xI - H
    let mut polys: Vec<PolyModP> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_i
        let mut next = poly_mul(&[sub_mod(0, h[k][k], p), 1], &polys[k], p);
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(prod, h[i][k], p);
            if coef != 0 {
                let term: PolyModP = polys[i].iter().map(|&c| mul_mod(c, coef, p)).collect();
                next = poly_sub(&next, &term, p);
            }
        }
        polys.push(trim(next));
    }
    polys.pop().unwrap()
}

/// Distinct roots of `f` in Z/p, each with its multiplicity.
pub fn roots_mod_p(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<(u64, usize)> {
    let f = trim(f.to_vec());
    if f.len() <= 1 {
        return vec![];
    }
    let xp = poly_powmod(&[0, 1], p, &f, p);
    let g = poly_gcd(&f, &poly_sub(&xp, &[0, 1], p), p);
    let mut roots = Vec::new();
    split_linear(&g, p, rng, &mut roots);
    roots.sort_unstable();
    roots
        .into_iter()
        .map(|r| {
            let mut mult = 0;
            let mut rem = f.clone();
            loop {
                let (q, r0) = poly_divrem(&rem, &[sub_mod(0, r, p), 1], p);
                if !r0.is_empty() {
                    break;
                }
                mult += 1;
                rem = q;
            }
            (r, mult)
        })
        .collect()
}

/// Cantor-Zassenhaus splitting of a squarefree product of linear factors.
fn split_linear(g: &[u64], p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => {
            let inv = inv_mod(g[1], p).unwrap();
            out.push(sub_mod(0, mul_mod(g[0], inv, p), p));
        }
        _ => loop {
            let a = rng.gen_range(0..p);
            let h = poly_powmod(&[a, 1], (p - 1) / 2, g, p);
            let d = poly_gcd(g, &poly_sub(&h, &[1], p), p);
            if d.len() > 1 && d.len() < g.len() {
                let (q, _) = poly_divrem(g, &d, p);
                split_linear(&d, p, rng, out);
                split_linear(&q, p, rng, out);
                return;
            }
        },
    }
}

/// Rational `n/d` with `|n|, d <= sqrt(p/2)` congruent to `a` mod p.
pub fn rational_reconstruction(a: u64, p: u64) -> Option<Rat> {
    let bound = BigInt::from(((p / 2) as f64).sqrt() as u64);
    let (mut r0, mut r1) = (BigInt::from(p), BigInt::from(a));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::from(1));
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let r = Rat::new(r1, t1);
    (reduce(&r, p) == Some(a)).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};
    use rand::SeedableRng;

    #[test]
    fn default_prime_is_prime() {
        assert!(is_prime(DEFAULT_PRIME));
        assert!(DEFAULT_PRIME > 1 << 61);
        assert!(!is_prime(DEFAULT_PRIME - 2));
    }

    #[test]
    fn reconstruction_inverts_reduction() {
        for r in [frac(3, 7), frac(-22, 5), int(0), int(-1), frac(1000, 999)] {
            let a = reduce(&r, DEFAULT_PRIME).unwrap();
            assert_eq!(rational_reconstruction(a, DEFAULT_PRIME), Some(r));
        }
    }

    #[test]
    fn charpoly_and_roots() {
        let p = DEFAULT_PRIME;
        // diag(2, 2, -1) conjugated by an upper triangular matrix
        let m = Matrix::from_i64(&[&[2, 1, 3], &[0, 2, 5], &[0, 0, -1]]);
        let f = charpoly_mod_p(&reduce_matrix(&m, p).unwrap(), p);
        assert_eq!(f.len(), 4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let roots = roots_mod_p(&f, p, &mut rng);
        let as_rat: Vec<(Rat, usize)> = roots
            .iter()
            .map(|&(r, k)| (rational_reconstruction(r, p).unwrap(), k))
            .collect();
        assert!(as_rat.contains(&(int(2), 2)));
        assert!(as_rat.contains(&(int(-1), 1)));
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        let p = DEFAULT_PRIME;
        // rotation matrix: x^2 + 1; splits mod p only if p = 1 mod 4
        let m = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let f = charpoly_mod_p(&reduce_matrix(&m, p).unwrap(), p);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let roots = roots_mod_p(&f, p, &mut rng);
        if p % 4 == 3 {
            assert!(roots.is_empty());
        } else {
            assert!(roots.iter().all(|&(r, _)| rational_reconstruction(r, p).is_none()));
        }
    }

    #[test]
    fn rank_mod_p_matches_small_cases() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_mod_p(&m, DEFAULT_PRIME), Some(2));
        assert_eq!(rank_mod_p(&m, 2), Some(1));
        let d = Matrix::from_i64(&[&[3, 0], &[0, 1]]);
        assert_eq!(rank_mod_p(&d, 3), Some(1));
    }
}
