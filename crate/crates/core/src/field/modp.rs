//! Arithmetic modulo an odd prime: Euler's criterion and Tonelli-Shanks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
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

/// Inverse of `a` modulo the prime `p`; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
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

pub fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::InvalidField(
            "characteristic 2 is not supported".into(),
        ));
    }
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// Residue of a big integer in `[0, p)`.
pub fn reduce(a: &BigInt, p: u64) -> u64 {
    a.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Euler's criterion without validating `p`.
pub(crate) fn legendre_unchecked(a: u64, p: u64) -> i8 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Legendre symbol `(a | p)` by Euler's criterion.
pub fn legendre(a: &BigInt, p: u64) -> Result<i8> {
    check_odd_prime(p)?;
    Ok(legendre_unchecked(reduce(a, p), p))
}

pub fn legendre_i64(a: i64, p: u64) -> Result<i8> {
    legendre(&BigInt::from(a), p)
}

/// Square root of `a` modulo the odd prime `p`, the smaller of the two roots.
pub fn sqrt_mod_p(a: u64, p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    sqrt_mod_p_unchecked(a, p)
}

pub(crate) fn sqrt_mod_p_unchecked(a: u64, p: u64) -> Result<u64> {
    let a = a % p;
    if a == 0 {
        return Ok(0);
    }
    if legendre_unchecked(a, p) != 1 {
        return Err(Error::NoSquareRoot(format!("{a} mod {p}")));
    }
    let root = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        tonelli_shanks(a, p)
    };
    debug_assert_eq!(mul_mod(root, root, p), a);
    Ok(root.min(p - root))
}

fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = least_nonresidue(p);
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// Least positive quadratic non-residue modulo the odd prime `p`.
pub fn least_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&n| legendre_unchecked(n, p) == -1)
        .expect("every odd prime has a non-residue")
}

/// Residue of `num / den` modulo `p`, or `None` when `p | den`.
pub fn residue_of_ratio(num: &BigInt, den: &BigInt, p: u64) -> Option<u64> {
    let d = reduce(den, p);
    if d == 0 {
        return None;
    }
    Some(mul_mod(reduce(num, p), inv_mod(d, p), p))
}
