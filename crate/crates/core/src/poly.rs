//! Sparse multivariate polynomials over the rationals, and the polynomial
//! identities behind maximality of the `sl_m` images.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::{self, Rat};

/// Polynomial in named variables; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    fn zero_like(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    /// The variable `vars[i]`.
    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, Rat::one());
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = self.zero_like();
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        }
        out
    }

    pub fn add(&self, other: &MPoly) -> Self {
        assert_eq!(self.vars, other.vars, "polynomials in different variables");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &MPoly) -> Self {
        assert_eq!(self.vars, other.vars, "polynomials in different variables");
        let mut out = self.zero_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::from([(vec![0; self.vars.len()], Rat::one())]),
        };
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * rat::int(e[i] as i64));
            }
        }
        out
    }

    /// Replaces variable `i` by `q` (a polynomial in the same variables).
    pub fn substitute(&self, i: usize, q: &MPoly) -> Self {
        let max = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        let mut powers = vec![q.pow(0)];
        for _ in 0..max {
            let next = powers.last().unwrap().mul(q);
            powers.push(next);
        }
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut rest = self.zero_like();
            let mut e2 = e.clone();
            e2[i] = 0;
            rest.add_term(e2, c.clone());
            out = out.add(&rest.mul(&powers[e[i] as usize]));
        }
        out
    }

    /// Renames variables by a permutation: variable `j` becomes `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut e2 = vec![0; e.len()];
            for (j, &p) in perm.iter().enumerate() {
                e2[p] = e[j];
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Invariant under all transpositions of variables.
    pub fn is_symmetric(&self) -> bool {
        let n = self.vars.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, j);
                self.permute(&perm) == *self
            })
        })
    }

    /// Terms with the exponents of `keep` variables fixed to `exps`, as a
    /// polynomial in the remaining variables.
    pub fn coefficient_of(&self, keep: &[usize], exps: &[u32], rest: &[&str]) -> MPoly {
        let mut out = MPoly::zero(rest);
        for (e, c) in &self.terms {
            if keep.iter().zip(exps).all(|(&k, &x)| e[k] == x) {
                let e2: Vec<u32> = (0..e.len()).filter(|j| !keep.contains(j)).map(|j| e[j]).collect();
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// `{"variables": [...], "terms": {"[a,b,c]": "coeff"}}`
    pub fn to_json(&self) -> serde_json::Value {
        let terms: serde_json::Map<String, serde_json::Value> = self
            .lex_terms()
            .map(|(e, c)| {
                let key = format!(
                    "[{}]",
                    e.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                );
                (key, serde_json::Value::String(rat::to_string(c)))
            })
            .collect();
        serde_json::json!({ "variables": self.vars, "terms": terms })
    }

    /// Terms in decreasing lexicographic order of exponents.
    pub fn lex_terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter().rev()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (t, (e, c)) in self.lex_terms().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(x, _)| **x > 0)
                .map(|(x, v)| if *x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let neg = c.is_negative();
            let a = c.abs();
            if t == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{}", rat::to_string(&a))?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{}*{}", rat::to_string(&a), mono.join("*"))?,
            }
        }
        Ok(())
    }
}

pub const ABC: [&str; 3] = ["alpha", "beta", "gamma"];

/// `(e)_p = e (e - 1) ... (e - p + 1)`, with `(e)_0 = 1`.
pub fn falling_factorial(e: i64, p: u32) -> BigInt {
    (0..p as i64).map(|i| BigInt::from(e - i)).product()
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one()];
    for i in 1..=n {
        let next = &f[i - 1] * BigInt::from(i);
        f.push(next);
    }
    f
}

fn binom(n: u32, k: u32) -> BigInt {
    rat::binomial(n as i64, k as i64)
}

/// Sum over `a + b + c = d` of `f(a, b, c) alpha^a beta^b gamma^c`.
fn trinomial_sum(d: u32, f: impl Fn(u32, u32, u32) -> BigInt) -> MPoly {
    let mut p = MPoly::zero(&ABC);
    for a in 0..=d {
        for b in 0..=d - a {
            let c = d - a - b;
            p.add_term(vec![a, b, c], Rat::from_integer(f(a, b, c)));
        }
    }
    p
}

/// `P_{d,e} = sum d!/(a! b! c!) C(e,a) C(e,b) C(e,c) alpha^a beta^b gamma^c`.
pub fn p_de(d: u32, e: u32) -> MPoly {
    let fact = factorials(d as usize);
    trinomial_sum(d, |a, b, c| {
        let multi = &fact[d as usize] / (&fact[a as usize] * &fact[b as usize] * &fact[c as usize]);
        multi * binom(e, a) * binom(e, b) * binom(e, c)
    })
}

/// `sum (d!/(a! b! c!))^2 (e)_a (e)_b (e)_c alpha^a beta^b gamma^c`.
pub fn operator_coefficient_formula(d: u32, e: u32) -> MPoly {
    let fact = factorials(d as usize);
    trinomial_sum(d, |a, b, c| {
        let multi = &fact[d as usize] / (&fact[a as usize] * &fact[b as usize] * &fact[c as usize]);
        let e = e as i64;
        &multi * &multi * falling_factorial(e, a) * falling_factorial(e, b) * falling_factorial(e, c)
    })
}

/// `P(alpha, beta, -alpha - beta)`.
pub fn restrict_to_sigma1_zero(p: &MPoly) -> MPoly {
    assert_eq!(p.vars().len(), 3, "expects a polynomial in three variables");
    let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
    let minus = MPoly::var(&vars, 0).add(&MPoly::var(&vars, 1)).scale(&-Rat::one());
    p.substitute(2, &minus)
}

/// Divisible by `alpha + beta + gamma`, tested by substituting
/// `gamma = -alpha - beta`.
pub fn divisible_by_sigma1(p: &MPoly) -> bool {
    restrict_to_sigma1_zero(p).is_zero()
}

/// `Q_d = (e+1)(d+1) sum_a C(d,a) C(e,a) C(e,d-a) (-1)^a a/(a+1)`.
pub fn q_d_sum(d: u32, e: u32) -> Rat {
    let mut s = Rat::zero();
    for a in 0..=d {
        let term = Rat::from_integer(binom(d, a) * binom(e, a) * binom(e, d - a))
            * rat::frac(a as i64, a as i64 + 1);
        if a % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    s * rat::int((e as i64 + 1) * (d as i64 + 1))
}

/// `(-1)^k (e+k)(e+k-1)...(e-k+1) / (k ((k-1)!)^2)` for `d = 2k - 1`, times
/// `2e + 1` for `d = 2k`.
pub fn q_d_closed(d: u32, e: u32) -> Rat {
    assert!(d >= 1, "Q_d is defined for d >= 1");
    let k = d.div_ceil(2);
    let e = e as i64;
    let num = falling_factorial(e + k as i64, 2 * k);
    let fk = &factorials(k as usize - 1)[k as usize - 1];
    let den = BigInt::from(k) * fk * fk;
    let mut q = Rat::new(num, den);
    if k % 2 == 1 {
        q = -q;
    }
    if d % 2 == 0 {
        q *= rat::int(2 * e + 1);
    }
    q
}

/// Coefficient of `alpha^{d-1} beta` in `P_{d,e}(alpha, beta, -alpha-beta)`.
pub fn sigma1_witness_coefficient(d: u32, e: u32) -> Rat {
    assert!(d >= 1);
    restrict_to_sigma1_zero(&p_de(d, e)).coeff(&[d - 1, 1, 0])
}

/// Coefficient of `x_1^e ... x_m^e` in
/// `(x_1 + x_2 + x_3)^d (alpha d/dx_1 + beta d/dx_2 + gamma d/dx_3)^d x_1^e ... x_m^e`,
/// by literal differentiation.
pub fn brute_operator_coefficient(d: u32, e: u32, m: usize) -> MPoly {
    assert!(m >= 3, "needs at least three variables x_1, x_2, x_3");
    let names: Vec<String> = ABC
        .iter()
        .map(|s| s.to_string())
        .chain((1..=m).map(|i| format!("x{i}")))
        .collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let x = |i: usize| MPoly::var(&vars, 3 + i);
    let mut f = MPoly::zero(&vars);
    let mut mono = vec![0; 3];
    mono.extend(std::iter::repeat(e).take(m));
    f.add_term(mono, Rat::one());
    for _ in 0..d {
        let mut next = MPoly::zero(&vars);
        for i in 0..3 {
            next = next.add(&MPoly::var(&vars, i).mul(&f.derivative(3 + i)));
        }
        f = next;
    }
    let s = x(0).add(&x(1)).add(&x(2));
    let g = s.pow(d).mul(&f);
    let keep: Vec<usize> = (3..3 + m).collect();
    g.coefficient_of(&keep, &vec![e; m], &ABC)
}
