//! Rationals viewed inside `Q_p`: valuations, unit parts and Hensel lifting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::modp::{check_odd_prime, sqrt_mod_p_unchecked};
use super::Rational;
use crate::error::{Error, Result};

fn strip(n: &BigInt, p: &BigInt) -> (i64, BigInt) {
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// Writes a nonzero rational as `p^v * u` with `u` a p-adic unit.
pub fn padic_split(r: &Rational, p: u64) -> Result<(i64, Rational)> {
    if r.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let pb = BigInt::from(p);
    let (vn, n) = strip(r.numer(), &pb);
    let (vd, d) = strip(r.denom(), &pb);
    Ok((vn - vd, Rational::new(n, d)))
}

/// p-adic valuation; `None` for zero.
pub fn valuation(r: &Rational, p: u64) -> Option<i64> {
    padic_split(r, p).ok().map(|(v, _)| v)
}

/// `p^e` as an exact rational, `e` may be negative.
pub fn rational_pow(p: u64, e: i64) -> Rational {
    let base = BigInt::from(p).pow(e.unsigned_abs());
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

/// A square root in `Q_p` known modulo a power of `p`.
///
/// The root is `p^half_valuation * unit_root`, where `unit_root` squares to
/// the unit part of the input modulo `p^unit_precision`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicSqrt {
    pub p: u64,
    pub half_valuation: i64,
    pub unit_root: BigInt,
    pub unit_precision: u32,
}

impl PadicSqrt {
    pub fn value(&self) -> Rational {
        rational_pow(self.p, self.half_valuation) * Rational::from_integer(self.unit_root.clone())
    }
}

/// Square root of `r` in `Q_p` with absolute precision at least `p^k`.
///
/// The unit part is lifted to precision `k + max(0, -v)`, so `y^2 - r` has
/// valuation at least `max(k, k + v)`. Of the two lifts `±y` the smaller
/// residue is returned.
pub fn hensel_sqrt(r: &Rational, p: u64, k: u32) -> Result<PadicSqrt> {
    check_odd_prime(p)?;
    if k == 0 {
        return Err(Error::Precondition(
            "p-adic precision must be at least 1".into(),
        ));
    }
    let (v, unit) = padic_split(r, p)?;
    if v % 2 != 0 {
        return Err(Error::OddValuation(v));
    }
    let precision = k + u32::try_from((-v).max(0))
        .map_err(|_| Error::Precondition("valuation too large".into()))?;
    let modulus = BigInt::from(p).pow(precision);
    let unit_mod = unit_residue(&unit, &modulus)?;
    let base = sqrt_mod_p_unchecked(super::modp::reduce(&unit_mod, p), p)
        .map_err(|_| Error::NoSquareRoot(format!("{r} in Q_{p}")))?;
    let root = newton_lift(&unit_mod, BigInt::from(base), p, precision);
    let root = (&modulus - &root).min(root);
    Ok(PadicSqrt {
        p,
        half_valuation: v / 2,
        unit_root: root,
        unit_precision: precision,
    })
}

/// Image of a p-adic unit rational in `Z / modulus`.
fn unit_residue(unit: &Rational, modulus: &BigInt) -> Result<BigInt> {
    let inv = mod_inverse(unit.denom(), modulus)
        .ok_or_else(|| Error::Precondition("denominator not a unit".into()))?;
    Ok((unit.numer() * inv).mod_floor(modulus))
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Newton iteration `y <- y - (y^2 - a) / 2y`, doubling precision each step.
fn newton_lift(a: &BigInt, mut y: BigInt, p: u64, target: u32) -> BigInt {
    let pb = BigInt::from(p);
    let mut have = 1u32;
    while have < target {
        have = (2 * have).min(target);
        let m = (&pb).pow(have);
        let two_y = (&y * 2u32).mod_floor(&m);
        let inv = mod_inverse(&two_y, &m).expect("2y is a unit for odd p and unit a");
        let err = (&y * &y - a).mod_floor(&m);
        y = (&y - err * inv).mod_floor(&m);
    }
    y.mod_floor(&(&pb).pow(target))
}

/// Valuation of `a - b`, `None` when they are equal.
pub fn agreement(a: &Rational, b: &Rational, p: u64) -> Option<i64> {
    valuation(&(a - b), p)
}
