//! Arbitrary-precision integer utilities: exact division, gcd, primality,
//! and factorization. Everything else in the crate stands on these.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer. Chain terms grow roughly as
/// `|u_{n+1}| ~ |u_n|^3 / |u_{n-1}|`, so fixed-width types overflow within a
/// handful of extensions.
pub type Int = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisorZero,
    #[error("{numerator} is not divisible by {divisor}")]
    NotDivisible { numerator: Int, divisor: Int },
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("zero has no prime factorization")]
    Zero,
    #[error("factorization budget exhausted")]
    FactorizationTimeout,
}

/// Exact integer quotient. A remainder signals an invalid seed pair or a
/// corrupted chain, so it is an error rather than a truncation.
pub fn exact_div(numerator: &Int, divisor: &Int) -> Result<Int, ArithError> {
    if divisor.is_zero() {
        return Err(ArithError::DivisorZero);
    }
    let (q, r) = numerator.div_rem(divisor);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(ArithError::NotDivisible {
            numerator: numerator.clone(),
            divisor: divisor.clone(),
        })
    }
}

/// Greatest common divisor of |a| and |b|, always positive.
pub fn gcd(a: &Int, b: &Int) -> Result<Int, ArithError> {
    if a.is_zero() && b.is_zero() {
        return Err(ArithError::BothZero);
    }
    Ok(a.gcd(b))
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64. The base set below is a verified
/// witness set for all n < 2^64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn xorshift64(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

const BIG_MR_ROUNDS: u32 = 64;

/// Miller-Rabin for integers above 2^64, with 64 pseudorandom bases drawn
/// from a fixed stream. Error probability below 4^-64 = 2^-128 per call.
fn is_prime_big(n: &Int) -> bool {
    let one = Int::one();
    let two = &one + &one;
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    let mut stream = 0x9e37_79b9_7f4a_7c15u64;
    for _ in 0..BIG_MR_ROUNDS {
        // Bases in [2, 2^64): far below n, so never degenerate.
        let a = Int::from(2u64 | xorshift64(&mut stream));
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        let mut witness = true;
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                witness = false;
                break;
            }
        }
        if witness {
            return false;
        }
    }
    true
}

/// Primality of |n|. Deterministic and correct for all |n| < 2^64;
/// probabilistic beyond, with error probability below 2^-128.
pub fn is_prime(n: &Int) -> bool {
    let n = n.abs();
    match n.to_u64() {
        Some(v) => is_prime_u64(v),
        None => {
            if n.is_even() {
                return false;
            }
            is_prime_big(&n)
        }
    }
}

/// Knobs for the randomized part of `factorize`. The seed makes parallel
/// runs reproducible; the budget caps rho iterations per cofactor.
#[derive(Debug, Clone, Copy)]
pub struct FactorConfig {
    pub rho_budget: u64,
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            rho_budget: 1_000_000,
            seed: 0x71ad_c0de_5eed_0001,
        }
    }
}

/// Signed prime factorization: `sign * prod(prime^exp)` reconstructs the
/// original value. Primes are strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(Int, u32)>,
}

impl Factorization {
    pub fn value(&self) -> Int {
        let mut acc = Int::from(self.sign);
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }

    /// 2 * prod(exp + 1), counting both signs.
    pub fn divisor_count(&self) -> u64 {
        2 * self
            .factors
            .iter()
            .map(|(_, e)| *e as u64 + 1)
            .product::<u64>()
    }
}

const TRIAL_DIVISION_BOUND: u64 = 10_000;

/// Brent-cycle Pollard rho. Returns a nontrivial factor of composite `n`,
/// or `None` once the iteration budget is spent.
fn pollard_rho(n: &Int, budget: u64, seed: u64) -> Option<Int> {
    let one = Int::one();
    let mut stream = seed ^ 0xb5ad_4ece_da1c_e2a9;
    let mut spent = 0u64;
    loop {
        let c = Int::from(1 + xorshift64(&mut stream) % 0xffff);
        let mut x = Int::from(2 + xorshift64(&mut stream) % 0xffff);
        let mut y = x.clone();
        let mut d = Int::one();
        let step = |v: &Int| (v * v + &c) % n;
        while d == one {
            if spent >= budget {
                return None;
            }
            spent += 1;
            x = step(&x);
            y = step(&step(&y));
            let diff = (&x - &y).abs();
            if diff.is_zero() {
                break; // cycle collapsed, retry with a new polynomial
            }
            d = diff.gcd(n);
        }
        if d != one && &d != n {
            return Some(d);
        }
        if spent >= budget {
            return None;
        }
    }
}

/// Complete prime factorization of a nonzero integer: trial division up to
/// 10^4, then rho on the remaining cofactors.
pub fn factorize(n: &Int, cfg: &FactorConfig) -> Result<Factorization, ArithError> {
    if n.is_zero() {
        return Err(ArithError::Zero);
    }
    let sign: i8 = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut factors: Vec<(Int, u32)> = Vec::new();
    let push = |factors: &mut Vec<(Int, u32)>, p: Int| {
        match factors.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => factors.push((p, 1)),
        }
    };

    let mut small = 2u64;
    while small <= TRIAL_DIVISION_BOUND && !m.is_one() {
        let p = Int::from(small);
        while (&m % &p).is_zero() {
            m /= &p;
            push(&mut factors, p.clone());
        }
        small = if small == 2 { 3 } else { small + 2 };
    }

    // Remaining cofactors are free of primes <= 10^4.
    let mut stack = Vec::new();
    if !m.is_one() {
        stack.push(m);
    }
    while let Some(c) = stack.pop() {
        if is_prime(&c) {
            push(&mut factors, c);
            continue;
        }
        // No prime factor below the trial bound, so a perfect-square check
        // is worthwhile before rho (rho struggles on p^2).
        let r = c.sqrt();
        if &r * &r == c {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        match pollard_rho(&c, cfg.rho_budget, cfg.seed) {
            Some(d) => {
                stack.push(exact_div(&c, &d).expect("rho returned a non-factor"));
                stack.push(d);
            }
            None => return Err(ArithError::FactorizationTimeout),
        }
    }

    factors.sort_by(|(a, _), (b, _)| a.cmp(b));
    Ok(Factorization { sign, factors })
}

/// All divisors of the factored integer, both signs, ascending, no
/// duplicates. Both signs matter downstream: sibling factors may be
/// negative.
pub fn divisors(f: &Factorization) -> Vec<Int> {
    let mut positive = vec![Int::one()];
    for (p, e) in &f.factors {
        let mut next = Vec::with_capacity(positive.len() * (*e as usize + 1));
        for d in &positive {
            let mut power = Int::one();
            for _ in 0..=*e {
                next.push(d * &power);
                power *= p;
            }
        }
        positive = next;
    }
    let mut all: Vec<Int> = positive.iter().map(|d| -d).collect();
    all.extend(positive);
    all.sort();
    all.dedup();
    all
}
