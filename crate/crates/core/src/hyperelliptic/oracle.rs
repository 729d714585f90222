use num_traits::ToPrimitive;

use super::curve::SplitHyperellipticCurve;
use crate::error::{Error, Result};
use crate::field::FieldTag;

/// Largest prime for which [`brute_force_points`] will scan.
pub const BRUTE_FORCE_MAX_P: u64 = 10_000_000;

/// Every affine point `(x, y)` over `F_p`, sorted, found by tabulating
/// all squares `y^2` and scanning every `x`.
pub fn brute_force_points(curve: &SplitHyperellipticCurve) -> Result<Vec<(u64, u64)>> {
    let FieldTag::PrimeField { p } = *curve.field() else {
        return Err(Error::UnsupportedField {
            field: curve.field().to_string(),
            reason: "brute force needs a finite field".into(),
        });
    };
    if p > BRUTE_FORCE_MAX_P {
        return Err(Error::ResourceLimit {
            what: format!("brute force over F_{p}"),
            reached: 0,
        });
    }
    let mut roots_of: Vec<Vec<u64>> = vec![Vec::new(); p as usize];
    for y in 0..p {
        roots_of[((y * y) % p) as usize].push(y);
    }
    let mut points = Vec::new();
    for x in 0..p {
        let fx = curve
            .eval(&curve.field().from_i64(x as i64))
            .to_integer()
            .to_u64()
            .expect("canonical F_p element");
        for &y in &roots_of[fx as usize] {
            points.push((x, y));
        }
    }
    Ok(points)
}

/// The x-coordinates of [`brute_force_points`].
pub fn brute_force_x_set(curve: &SplitHyperellipticCurve) -> Result<Vec<u64>> {
    let mut xs: Vec<u64> = brute_force_points(curve)?
        .into_iter()
        .map(|(x, _)| x)
        .collect();
    xs.dedup();
    Ok(xs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_rational_list;

    #[test]
    fn examples_over_f17() {
        let curve = SplitHyperellipticCurve::new(
            FieldTag::prime(17).unwrap(),
            &parse_rational_list("0,1,2,3").unwrap(),
        )
        .unwrap();
        let pts = brute_force_points(&curve).unwrap();
        assert!(pts.contains(&(5, 1)) && pts.contains(&(5, 16)));
        for a in 0..4 {
            assert!(pts.contains(&(a, 0)));
        }
        let off_locus = pts.iter().filter(|(_, y)| *y != 0).count();
        assert_eq!(off_locus % 2, 0);
        for &(x, y) in &pts {
            assert_eq!((y * y) % 17, (x * (x + 16) * (x + 15) * (x + 14)) % 17);
        }
    }

    #[test]
    fn rejects_infinite_fields() {
        let curve = SplitHyperellipticCurve::new(
            FieldTag::padic(5, 4).unwrap(),
            &parse_rational_list("0,1").unwrap(),
        )
        .unwrap();
        assert!(matches!(
            brute_force_points(&curve),
            Err(Error::UnsupportedField { .. })
        ));
    }
}
