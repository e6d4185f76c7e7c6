//! Integer factorization for the exact log-rationality and power-equation
//! machinery. Trial division handles everything the CLI realistically sees;
//! Miller-Rabin plus Pollard rho covers larger inputs.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Largest input we agree to factor (fits u128 after trial division).
const FACTOR_BIT_CAP: u64 = 128;

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // Schoolbook double-and-add; m < 2^127 so the additions cannot overflow.
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b % m;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

fn powmod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic for n < 2^64 via the standard 12-witness set; the same
/// witnesses make larger inputs a (very strong) probable-prime check.
fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u128) -> u128 {
    // n is odd, composite, and has no factor below 10^3 at this point.
    let mut c = 1u128;
    loop {
        let f = |x: u128| (mulmod(x, x, n) + c) % n;
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            let diff = if x > y { x - y } else { y - x };
            d = gcd_u128(diff, n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn factor_u128_into(mut n: u128, out: &mut BTreeMap<u64, i64>, sign: i64) {
    for p in 2u128..1000 {
        if p * p > n {
            break;
        }
        while n % p == 0 {
            *out.entry(p as u64).or_insert(0) += sign;
            n /= p;
        }
    }
    if n == 1 {
        return;
    }
    if is_prime_u128(n) {
        *out.entry(n as u64).or_insert(0) += sign;
        return;
    }
    let d = pollard_rho(n);
    factor_u128_into(d, out, sign);
    factor_u128_into(n / d, out, sign);
}

/// Adds the prime factorization of `n`, weighted by `sign`, into `out`.
pub(crate) fn accumulate_factors(n: &BigUint, sign: i64, out: &mut BTreeMap<u64, i64>) -> Result<()> {
    if n.is_zero() {
        return Err(Error::NonPositiveBase("0".into()));
    }
    if n.is_one() {
        return Ok(());
    }
    if n.bits() > FACTOR_BIT_CAP {
        return Err(Error::FactorTooLarge(n.to_string()));
    }
    let v = n.to_u128().expect("bit cap checked");
    factor_u128_into(v, out, sign);
    Ok(())
}

/// Prime factorization of a small positive integer.
pub(crate) fn factor_u64(n: u64) -> BTreeMap<u64, i64> {
    let mut out = BTreeMap::new();
    factor_u128_into(n as u128, &mut out, 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorizations() {
        assert_eq!(factor_u64(1), BTreeMap::new());
        assert_eq!(factor_u64(12), BTreeMap::from([(2, 2), (3, 1)]));
        assert_eq!(factor_u64(1125), BTreeMap::from([(3, 2), (5, 3)]));
        assert_eq!(factor_u64(875), BTreeMap::from([(5, 3), (7, 1)]));
    }

    #[test]
    fn primality() {
        assert!(is_prime_u128(2));
        assert!(is_prime_u128(1_000_000_007));
        assert!(!is_prime_u128(1_000_000_007u128 * 998_244_353));
        assert!(is_prime_u128((1u128 << 61) - 1));
    }

    #[test]
    fn rho_splits_semiprime() {
        let n = 1_000_003u128 * 1_000_033;
        let mut out = BTreeMap::new();
        factor_u128_into(n, &mut out, 1);
        assert_eq!(out, BTreeMap::from([(1_000_003, 1), (1_000_033, 1)]));
    }

    #[test]
    fn signed_accumulation() {
        let mut out = BTreeMap::new();
        accumulate_factors(&BigUint::from(20u32), 1, &mut out).unwrap();
        accumulate_factors(&BigUint::from(4u32), -1, &mut out).unwrap();
        // 20/4 = 5
        assert_eq!(out, BTreeMap::from([(2, 0), (5, 1)]));
    }
}
