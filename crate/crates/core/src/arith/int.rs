//! Rational-integer helpers shared by the ring types and the counting code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Deterministic primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These witnesses are sufficient for every n < 2^64.
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

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Factorization of `n >= 1` as sorted `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        if is_prime(n) {
            break;
        }
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out.sort_unstable();
    out
}

/// Factorization of a nonzero big integer (sign ignored). Fails if the
/// absolute value does not fit in 64 bits.
pub fn factorize_big(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    let m = n
        .abs()
        .to_u64()
        .ok_or_else(|| Error::Unsupported(format!("integer {n} too large to factor")))?;
    Ok(factorize(m))
}

/// Exact integer square root of a non-negative perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Largest odd divisor of a nonzero integer, as a positive value.
pub fn odd_part(n: &BigInt) -> BigInt {
    let mut m = n.abs();
    if m.is_zero() {
        return m;
    }
    let two = BigInt::from(2);
    while m.is_even() {
        m /= &two;
    }
    m
}

/// Rounds `a / n` to the nearest integer (ties towards +infinity).
pub fn round_div(a: &BigInt, n: &BigInt) -> BigInt {
    debug_assert!(!n.is_zero());
    let (a, n) = if n.is_negative() { (-a, -n) } else { (a.clone(), n.clone()) };
    let num: BigInt = 2 * a + &n;
    num.div_floor(&(2 * n))
}

pub fn gcd_all<'a>(items: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    items.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    a.lcm(b)
}

/// Divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let len = ds.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn is_unit_int(n: &BigInt) -> bool {
    n.abs().is_one()
}
