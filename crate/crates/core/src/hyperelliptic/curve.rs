use crate::error::{Error, Result};
use crate::field::{format_rational, FieldTag, Rational};

/// The affine curve `y^2 = (x - a_1) ... (x - a_{2g+2})` with pairwise
/// distinct roots in the base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitHyperellipticCurve {
    field: FieldTag,
    roots: Vec<Rational>,
}

impl SplitHyperellipticCurve {
    pub fn new(field: FieldTag, roots: &[Rational]) -> Result<Self> {
        field.validate()?;
        if roots.len() < 2 || roots.len() % 2 != 0 {
            return Err(Error::InvalidCurve(format!(
                "need an even number (at least 2) of roots, got {}",
                roots.len()
            )));
        }
        let roots = roots
            .iter()
            .map(|r| field.element(r))
            .collect::<Result<Vec<_>>>()?;
        for (i, a) in roots.iter().enumerate() {
            if roots[..i].contains(a) {
                return Err(Error::InvalidCurve(format!(
                    "repeated root {} in {field}",
                    format_rational(a)
                )));
            }
        }
        Ok(SplitHyperellipticCurve { field, roots })
    }

    pub fn field(&self) -> &FieldTag {
        &self.field
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn genus(&self) -> usize {
        self.roots.len() / 2 - 1
    }

    /// Alphabet size `2g + 2` of the coloring board.
    pub fn m(&self) -> usize {
        self.roots.len()
    }

    /// `f(x) = prod (x - a_j)` in the base field.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.roots.iter().fold(self.field.from_i64(1), |acc, a| {
            self.field.mul(&acc, &self.field.sub(x, a))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, parse_rational_list};

    #[test]
    fn validation() {
        let f17 = FieldTag::prime(17).unwrap();
        let roots = parse_rational_list("0,1,2,3").unwrap();
        let c = SplitHyperellipticCurve::new(f17, &roots).unwrap();
        assert_eq!((c.genus(), c.m()), (1, 4));
        assert_eq!(c.eval(&int(5)), int(1));
        assert!(SplitHyperellipticCurve::new(f17, &parse_rational_list("0,1,2").unwrap()).is_err());
        assert!(SplitHyperellipticCurve::new(f17, &parse_rational_list("0,17").unwrap()).is_err());
        assert!(
            SplitHyperellipticCurve::new(f17, &parse_rational_list("1/17,2").unwrap()).is_err()
        );
        let g0 = SplitHyperellipticCurve::new(FieldTag::RationalField, &[int(0), int(1)]).unwrap();
        assert_eq!(g0.genus(), 0);
    }
}
