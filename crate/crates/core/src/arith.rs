//! Integer helpers: deterministic primality, bounded trial-division
//! factorization, valuations and squarefreeness.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Limits for trial-division factorization.
///
/// Every prime factor of an accepted input is found by trial division with
/// divisors up to `max_divisor`, so inputs are accepted only up to
/// `max_divisor^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBound {
    pub max_divisor: u64,
}

impl Default for FactorBound {
    fn default() -> Self {
        FactorBound { max_divisor: 1_000_000 }
    }
}

impl FactorBound {
    pub fn new(max_divisor: u64) -> Self {
        FactorBound { max_divisor: max_divisor.max(2) }
    }

    /// Largest integer this bound can fully factor.
    pub fn max_value(&self) -> u64 {
        self.max_divisor.saturating_mul(self.max_divisor)
    }

    fn overflow(&self, value: impl Into<BigUint>) -> Error {
        Error::FactorizationOverflow { value: value.into(), max_divisor: self.max_divisor }
    }
}

const U64_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

// Miller-Rabin with the first 13 primes as bases is exact below this value.
const BIG_WITNESS_LIMIT: &str = "3317044064679887385961981";
const BIG_WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test valid for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &U64_WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &U64_WITNESSES {
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

/// Deterministic primality for integers below roughly `3.3 * 10^24`.
pub fn is_prime_big(n: &BigUint) -> Result<bool> {
    if let Some(small) = n.to_u64() {
        return Ok(is_prime(small));
    }
    let limit: BigUint = BIG_WITNESS_LIMIT.parse().expect("constant parses");
    if *n >= limit {
        return Err(Error::PrimalityOutOfRange(n.clone()));
    }
    for &q in &BIG_WITNESSES {
        if (n % q).is_zero() {
            return Ok(false);
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &BIG_WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Prime factorization `[(p, k), ...]` with primes ascending.
///
/// `factor(1)` is empty. Inputs above `bound.max_value()` are rejected.
pub fn factor(n: u64, bound: &FactorBound) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::InvalidModulus(0));
    }
    if n > bound.max_value() {
        return Err(bound.overflow(n));
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut push = |q: u64, rest: &mut u64| {
        let mut k = 0;
        while (*rest).is_multiple_of(q) {
            *rest /= q;
            k += 1;
        }
        if k > 0 {
            out.push((q, k));
        }
    };
    push(2, &mut rest);
    let mut q = 3;
    while q * q <= rest {
        push(q, &mut rest);
        q += 2;
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

/// Multiplicity of `p` in `n`, by repeated division. `n` must be nonzero.
pub fn valuation(n: &BigUint, p: u64) -> u64 {
    debug_assert!(!n.is_zero() && p >= 2);
    let p = BigUint::from(p);
    let mut rest = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        rest = q;
        k += 1;
    }
}

/// Whether `n` has no squared prime factor.
///
/// After dividing out every prime up to `bound.max_divisor`, the cofactor has
/// only large prime factors; below `max_divisor^3` it is a prime, a product of
/// two distinct primes, or a prime square, which an integer square root
/// separates. Larger cofactors are reported as overflow.
pub fn is_squarefree(n: &BigUint, bound: &FactorBound) -> Result<bool> {
    if n.is_zero() {
        return Ok(false);
    }
    if let Some(small) = n.to_u64() {
        if small <= bound.max_value() {
            return Ok(factor(small, bound)?.iter().all(|&(_, k)| k == 1));
        }
    }
    let mut rest = n.clone();
    let mut q: u64 = 2;
    while q <= bound.max_divisor {
        let qq = BigUint::from(q);
        if &qq * &qq > rest {
            return Ok(true);
        }
        if (&rest % q).is_zero() {
            rest /= q;
            if (&rest % q).is_zero() {
                return Ok(false);
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok(true);
    }
    let m = BigUint::from(bound.max_divisor);
    if rest >= &m * &m * &m {
        return Err(bound.overflow(n.clone()));
    }
    let root = rest.sqrt();
    Ok(&root * &root != rest)
}
