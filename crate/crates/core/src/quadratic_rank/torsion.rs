use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::arith::{divisors, factor_u64, valuation_u64};
use super::curve::EllipticCurveQ;
use super::quad::{quad_mul, QuadField, QuadPoint};
use crate::field::modp::is_prime;

/// A multiple of every torsion order in `E(Q(sqrt d))`, read off from the
/// point counts over `F_{p^2}` at two primes of good reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionBound {
    #[serde(rename = "B")]
    pub bound: u64,
    pub p1: u64,
    pub p2: u64,
    #[serde(skip)]
    pub n1: u64,
    #[serde(skip)]
    pub n2: u64,
}

/// Prime-to-`p` torsion over `Q(sqrt d)` injects into `E(F_{p^2})` for odd
/// good `p` not dividing `d`, so for each `l` the `l`-part of the torsion
/// divides `l^{ord_l(n_{p^2})}` for every such `p != l`.
pub fn torsion_bound(curve: &EllipticCurveQ, field: QuadField) -> TorsionBound {
    let d = field.d();
    let mut primes =
        (3u64..).filter(|&p| is_prime(p) && curve.has_good_reduction(p) && d % p as i64 != 0);
    let (p1, p2) = (primes.next().unwrap(), primes.next().unwrap());
    let n1 = curve.count_points_ext(p1).expect("good prime");
    let n2 = curve.count_points_ext(p2).expect("good prime");
    let ells: BTreeSet<u64> = factor_u64(n1)
        .into_iter()
        .chain(factor_u64(n2))
        .map(|(l, _)| l)
        .collect();
    let mut bound = 1u64;
    for l in ells {
        let e = [(p1, n1), (p2, n2)]
            .iter()
            .filter(|&&(p, _)| p != l)
            .map(|&(_, n)| valuation_u64(n, l))
            .min()
            .unwrap_or(0);
        bound *= l.pow(e);
    }
    TorsionBound {
        bound,
        p1,
        p2,
        n1,
        n2,
    }
}

/// The divisors `m` of `B` at which `m P` must be checked.
pub fn multiples_to_check(bound: &TorsionBound) -> Vec<u64> {
    divisors(bound.bound)
}

/// True iff `m P` is not the identity for every divisor `m` of `B`.
pub fn certify_nontorsion(
    curve: &EllipticCurveQ,
    field: QuadField,
    p: &QuadPoint,
    bound: &TorsionBound,
) -> bool {
    multiples_to_check(bound)
        .into_iter()
        .all(|m| !quad_mul(curve, field, p, m as i64).is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;
    use crate::quadratic_rank::quad::{point_from_x, quad_add, XLift};

    fn e() -> EllipticCurveQ {
        EllipticCurveQ::new([-1, 0, 1]).unwrap()
    }

    #[test]
    fn bound_examples() {
        let b = torsion_bound(&e(), QuadField::new(6).unwrap());
        assert_eq!((b.p1, b.p2), (5, 7));
        assert_eq!(b.n1, 32);
        assert_eq!(b.n2, e().count_points_ext(7).unwrap());
        let two = valuation_u64(b.n2, 2).min(5);
        assert_eq!(b.bound, 1 << two);
        assert_eq!(b.bound % 4, 0);
        // same primes, same bound
        let b3 = torsion_bound(&e(), QuadField::new(-3).unwrap());
        assert_eq!((b3.p1, b3.p2, b3.bound), (b.p1, b.p2, b.bound));
    }

    #[test]
    fn four_divides_every_bound() {
        for d in [-5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 15, 21, 30, 105] {
            let b = torsion_bound(&e(), QuadField::new(d).unwrap());
            assert_eq!(b.bound % 4, 0, "d = {d}");
            assert!(b.p1 % 2 == 1 && b.p2 % 2 == 1 && d % b.p1 as i64 != 0 && d % b.p2 as i64 != 0);
        }
    }

    /// Smallest `m` in `1..=limit` with `m P = O`, by repeated addition.
    fn order_by_addition(
        c: &EllipticCurveQ,
        k: QuadField,
        p: &QuadPoint,
        limit: u64,
    ) -> Option<u64> {
        let mut acc = p.clone();
        for m in 1..=limit {
            if acc.is_identity() {
                return Some(m);
            }
            acc = quad_add(c, k, &acc, p);
        }
        None
    }

    #[test]
    fn torsion_points_fail_and_agree_with_brute_force() {
        let c = e();
        let k = QuadField::new(6).unwrap();
        let b = torsion_bound(&c, k);
        assert!(!certify_nontorsion(&c, k, &QuadPoint::Identity, &b));
        for a in [-1, 0, 1] {
            assert!(!certify_nontorsion(&c, k, &QuadPoint::two_torsion(a), &b));
        }
        let XLift::Quadratic { field, point } = point_from_x(&c, &int(2), 1000).unwrap() else {
            panic!()
        };
        let certified = certify_nontorsion(&c, field, &point, &b);
        let brute = order_by_addition(&c, field, &point, b.bound).is_none();
        assert_eq!(certified, brute);
        assert!(certified);
    }
}
