use std::collections::BTreeSet;

use num_integer::Roots;

use super::curve::EllipticCurveQ;
use crate::error::{Error, Result};
use crate::field::modp::{check_odd_prime, is_prime, legendre_unchecked};

/// `2g^2 + 2g + 3 + 2g ceil(sqrt(g^2 + 2g + 3))`: above this size every
/// residue field has an x with `f(x)` a nonresidue.
pub fn threshold_constant(g: u64) -> u64 {
    let r = g * g + 2 * g + 3;
    let mut root = r.sqrt();
    if root * root < r {
        root += 1;
    }
    2 * g * g + 2 * g + 3 + 2 * g * root
}

/// Smallest `x` in `[0, p)` with `f(x)` a quadratic nonresidue mod `p`.
///
/// Requires `p > threshold_constant(1)` and good reduction unless `forced`.
pub fn nonresidue_x(curve: &EllipticCurveQ, p: u64, forced: bool) -> Result<u64> {
    check_odd_prime(p)?;
    if !forced {
        if p <= threshold_constant(1) {
            return Err(Error::Precondition(format!(
                "{p} <= {}",
                threshold_constant(1)
            )));
        }
        if !curve.has_good_reduction(p) {
            return Err(Error::Precondition(format!("bad reduction at {p}")));
        }
    }
    (0..p)
        .find(|&x| legendre_unchecked(curve.eval_mod(x, p), p) == -1)
        .ok_or_else(|| Error::NotFound(format!("every f(x) is a square mod {p}")))
}

pub const DEFAULT_PRIME_SEARCH_CAP: u64 = 10_000_000;

fn legendre_signed(d: i64, p: u64) -> i8 {
    legendre_unchecked(d.rem_euclid(p as i64) as u64, p)
}

/// Smallest prime `p >= start`, `p > 13`, of good reduction, dividing no
/// `d_i`, at which every previous `d_i` is a nonzero square.
pub fn steering_prime(
    curve: &EllipticCurveQ,
    previous_d: &[i64],
    start: u64,
    cap: u64,
) -> Result<u64> {
    let lo = start.max(threshold_constant(1) + 1);
    (lo..=cap)
        .filter(|&p| is_prime(p) && curve.has_good_reduction(p))
        .find(|&p| previous_d.iter().all(|&d| legendre_signed(d, p) == 1))
        .ok_or_else(|| Error::NotFound(format!("no steering prime in [{lo}, {cap}]")))
}

/// Smallest `c >= 0`, `c = x_target (mod p)`, not excluded and not a root.
pub fn steer_c(curve: &EllipticCurveQ, p: u64, x_target: u64, exclusions: &BTreeSet<i64>) -> i64 {
    let roots = curve.roots();
    (0..)
        .map(|k| x_target as i64 + k * p as i64)
        .find(|c| !exclusions.contains(c) && !roots.contains(c))
        .expect("progression is infinite")
}
