use crate::error::{Error, Result};
use crate::field::modp::{check_odd_prime, legendre_unchecked};
use crate::field::{int, Rational};

/// `y^2 = (x - a_1)(x - a_2)(x - a_3)` over `Q`, roots pairwise distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EllipticCurveQ {
    roots: [i64; 3],
}

impl EllipticCurveQ {
    pub fn new(roots: [i64; 3]) -> Result<Self> {
        let [a, b, c] = roots;
        if a == b || b == c || a == c {
            return Err(Error::InvalidCurve(format!(
                "roots {roots:?} are not distinct"
            )));
        }
        Ok(EllipticCurveQ { roots })
    }

    pub fn from_slice(roots: &[i64]) -> Result<Self> {
        let roots: [i64; 3] = roots.try_into().map_err(|_| {
            Error::InvalidCurve(format!("need exactly 3 roots, got {}", roots.len()))
        })?;
        Self::new(roots)
    }

    pub fn roots(&self) -> [i64; 3] {
        self.roots
    }

    /// `(s1, s2)` with `f = x^3 - s1 x^2 + s2 x - s3`.
    pub(crate) fn s1_s2(&self) -> (i64, i64) {
        let [a, b, c] = self.roots;
        (a + b + c, a * b + b * c + a * c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.roots.iter().fold(int(1), |acc, &a| acc * (x - int(a)))
    }

    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        self.roots.iter().fold(1u64, |acc, &a| {
            let t = (x as i128 - a as i128).rem_euclid(p as i128) as u64;
            ((acc as u128 * t as u128) % p as u128) as u64
        })
    }

    /// `16 prod (a_i - a_j)^2`.
    pub fn discriminant(&self) -> i128 {
        let [a, b, c] = self.roots.map(|r| r as i128);
        let v = (a - b) * (b - c) * (a - c);
        16 * v * v
    }

    /// Odd `p` with the roots distinct mod `p`.
    pub fn has_good_reduction(&self, p: u64) -> bool {
        if p % 2 == 0 {
            return false;
        }
        let [a, b, c] = self.roots.map(|r| r.rem_euclid(p as i64));
        a != b && b != c && a != c
    }

    fn check_good(&self, p: u64) -> Result<()> {
        check_odd_prime(p)?;
        if !self.has_good_reduction(p) {
            return Err(Error::Precondition(format!("bad reduction at {p}")));
        }
        Ok(())
    }

    /// `#E(F_p)` including the point at infinity.
    pub fn count_points(&self, p: u64) -> Result<u64> {
        self.check_good(p)?;
        Ok((0..p).fold(1, |n, x| {
            n + (1 + legendre_unchecked(self.eval_mod(x, p), p) as i64) as u64
        }))
    }

    /// `p + 1 - #E(F_p)`.
    pub fn trace(&self, p: u64) -> Result<i64> {
        Ok(p as i64 + 1 - self.count_points(p)? as i64)
    }

    /// `#E(F_{p^2})` from the trace: `p^2 + 1 - (t^2 - 2p)`.
    pub fn count_points_ext(&self, p: u64) -> Result<u64> {
        let t = self.trace(p)? as i128;
        let p = p as i128;
        Ok((p * p + 1 - (t * t - 2 * p)) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::modp::{is_prime, least_nonresidue};

    /// Direct count over `F_{p^2} = F_p[t]/(t^2 - n)`.
    fn count_ext_oracle(curve: &EllipticCurveQ, p: u64) -> u64 {
        let n = least_nonresidue(p);
        type E = (u64, u64);
        let mul = |a: E, b: E| {
            (
                (a.0 * b.0 + n * a.1 % p * b.1) % p,
                (a.0 * b.1 + a.1 * b.0) % p,
            )
        };
        let mut square_count = vec![0u64; (p * p) as usize];
        for u in 0..p {
            for v in 0..p {
                let s = mul((u, v), (u, v));
                square_count[(s.0 * p + s.1) as usize] += 1;
            }
        }
        let mut total = 1;
        for u in 0..p {
            for v in 0..p {
                let fx = curve.roots().iter().fold((1, 0), |acc, &a| {
                    mul(acc, ((u as i64 - a).rem_euclid(p as i64) as u64, v))
                });
                total += square_count[(fx.0 * p + fx.1) as usize];
            }
        }
        total
    }

    fn count_oracle(curve: &EllipticCurveQ, p: u64) -> u64 {
        let mut total = 1;
        for x in 0..p {
            for y in 0..p {
                if y * y % p == curve.eval_mod(x, p) {
                    total += 1;
                }
            }
        }
        total
    }

    #[test]
    fn counting_examples() {
        let e = EllipticCurveQ::new([-1, 0, 1]).unwrap();
        assert_eq!(e.count_points(5).unwrap(), 8);
        assert_eq!(e.trace(5).unwrap(), -2);
        assert_eq!(e.count_points_ext(5).unwrap(), 32);
        assert_eq!(count_ext_oracle(&e, 5), 32);
        assert!(e.count_points(2).is_err());
        assert!(EllipticCurveQ::new([0, 1, 4])
            .unwrap()
            .count_points(3)
            .is_err());
        assert!(EllipticCurveQ::new([0, 1, 1]).is_err());
    }

    #[test]
    fn extension_counts_match_enumeration() {
        for roots in [[-1, 0, 1], [0, 1, 2], [0, 2, 4], [-2, 1, 5]] {
            let e = EllipticCurveQ::new(roots).unwrap();
            for p in [3u64, 5, 7] {
                if !e.has_good_reduction(p) {
                    continue;
                }
                assert_eq!(
                    e.count_points(p).unwrap(),
                    count_oracle(&e, p),
                    "{roots:?} {p}"
                );
                assert_eq!(
                    e.count_points_ext(p).unwrap(),
                    count_ext_oracle(&e, p),
                    "{roots:?} {p}"
                );
            }
        }
    }

    #[test]
    fn hasse_window() {
        let e = EllipticCurveQ::new([-1, 0, 1]).unwrap();
        for p in (3..=200).filter(|&p| is_prime(p)) {
            let t = e.trace(p).unwrap();
            assert!((t * t) as u64 <= 4 * p, "p = {p}, t = {t}");
        }
    }
}
