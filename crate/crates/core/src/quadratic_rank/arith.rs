use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::modp::is_prime;
use crate::field::Rational;

/// Strips every prime `q <= bound` from `n`, toggling `odd` for each odd
/// exponent. Returns the cofactor.
fn strip_small<T>(mut n: T, bound: u64, odd: &mut BTreeSet<u64>) -> T
where
    T: Integer + Clone + From<u64>,
{
    let mut q = 2u64;
    while q <= bound {
        let tq = T::from(q);
        if tq.clone() * tq.clone() > n {
            break;
        }
        let mut e = 0u32;
        loop {
            let (quot, rem) = n.div_rem(&tq);
            if !rem.is_zero() {
                break;
            }
            n = quot;
            e += 1;
        }
        if e % 2 == 1 {
            odd.insert(q);
        }
        q += if q == 2 { 1 } else { 2 };
    }
    n
}

/// Primes with odd exponent in `n`, plus the leftover cofactor when it is
/// not a square and could not be split (returned as `Err`).
fn odd_part(n: &BigUint, bound: u64) -> std::result::Result<(BTreeSet<u64>, BigUint), BigUint> {
    let mut odd = BTreeSet::new();
    let rest = match n.to_u128() {
        Some(small) => BigUint::from(strip_small(small, bound, &mut odd)),
        None => strip_small(n.clone(), bound, &mut odd),
    };
    if rest.is_one() {
        return Ok((odd, BigUint::one()));
    }
    let b = BigUint::from(bound);
    let root = rest.sqrt();
    if &root * &root == rest {
        return Ok((odd, BigUint::one()));
    }
    // no factor <= bound, so anything below bound^2 is prime
    if rest < &b * &b || rest.to_u64().is_some_and(is_prime) {
        return Ok((odd, rest));
    }
    Err(rest)
}

/// The squarefree integer `d` with `r = d * (rational square)`; the sign of
/// `r` is kept.
pub fn squarefree_part(r: &Rational, bound: u64) -> Result<i64> {
    if r.is_zero() {
        return Err(Error::Precondition("squarefree part of 0".into()));
    }
    let mut d = BigUint::one();
    for part in [r.numer(), r.denom()] {
        let (odd, big) =
            odd_part(part.magnitude(), bound).map_err(|c| Error::FactorizationLimit {
                cofactor: c.to_string(),
                bound,
            })?;
        for q in odd {
            d *= q;
        }
        d *= big;
    }
    let d = d.to_i64().ok_or_else(|| Error::ResourceLimit {
        what: format!("squarefree part {d} exceeds 64 bits"),
        reached: 0,
    })?;
    Ok(if r.is_negative() { -d } else { d })
}

pub fn is_squarefree(d: i64) -> bool {
    d != 0 && squarefree_part(&Rational::from_integer(d.into()), 1_000_000).is_ok_and(|s| s == d)
}

/// Refines `values` into pairwise coprime factors > 1 such that each input
/// is a product of some of them.
fn coprime_base(values: &[u64]) -> Vec<u64> {
    let mut work: Vec<u64> = values.to_vec();
    let mut base: Vec<u64> = Vec::new();
    while let Some(x) = work.pop() {
        if x == 1 {
            continue;
        }
        match base.iter().position(|&b| b.gcd(&x) > 1) {
            Some(i) => {
                let b = base.swap_remove(i);
                let g = b.gcd(&x);
                work.extend([g, b / g, x / g]);
            }
            None => base.push(x),
        }
    }
    base.sort_unstable();
    base.dedup();
    base
}

/// True iff the class of `d` in `Q^x / (Q^x)^2` is outside the span of the
/// classes of `previous`. All inputs must be squarefree.
///
/// Exponent-parity vectors are taken over a coprime base of the inputs, so
/// no factoring is needed; the sign is coordinate 0.
pub fn fresh_class_check(d: i64, previous: &[i64]) -> bool {
    let all: Vec<i64> = previous.iter().copied().chain([d]).collect();
    let base = coprime_base(&all.iter().map(|v| v.unsigned_abs()).collect::<Vec<_>>());
    let vector = |v: i64| -> BTreeSet<usize> {
        let mut row: BTreeSet<usize> = base
            .iter()
            .enumerate()
            .filter(|(_, &q)| v.unsigned_abs() % q == 0)
            .map(|(i, _)| i + 1)
            .collect();
        if v < 0 {
            row.insert(0);
        }
        row
    };
    // echelon form keyed by pivot (largest coordinate)
    let mut rows: Vec<BTreeSet<usize>> = Vec::new();
    let reduce = |mut v: BTreeSet<usize>, rows: &[BTreeSet<usize>]| {
        while let Some(&top) = v.last() {
            match rows.iter().find(|r| r.last() == Some(&top)) {
                Some(r) => v = v.symmetric_difference(r).copied().collect(),
                None => break,
            }
        }
        v
    };
    for &p in previous {
        let r = reduce(vector(p), &rows);
        if !r.is_empty() {
            rows.push(r);
        }
    }
    !reduce(vector(d), &rows).is_empty()
}

/// `(prime, exponent)` pairs of `n >= 1` by trial division.
pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        let mut e = 0;
        while n % q == 0 {
            n /= q;
            e += 1;
        }
        if e > 0 {
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Sorted divisors of `n >= 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (q, e) in factor_u64(n) {
        let current = ds.clone();
        let mut pow = 1;
        for _ in 0..e {
            pow *= q;
            ds.extend(current.iter().map(|d| d * pow));
        }
    }
    ds.sort_unstable();
    ds
}

pub(crate) fn valuation_u64(mut n: u64, l: u64) -> u32 {
    let mut e = 0;
    while n > 0 && n % l == 0 {
        n /= l;
        e += 1;
    }
    e
}
