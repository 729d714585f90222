//! Exact arithmetic for the supported base fields: `F_p`, `Q`, and `Q`
//! embedded in `Q_p`, all for odd `p`.
//!
//! Field elements are carried as exact rationals. Over `F_p` every element
//! is normalized to its integer representative in `[0, p)`; over `Q` and
//! `Q_p` the rational itself is the element.

pub mod modp;
pub mod padic;
pub mod square_class;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use modp::{legendre, legendre_i64, sqrt_mod_p};
pub use padic::{hensel_sqrt, padic_split, PadicSqrt};
pub use square_class::{square_class, square_class_group, SquareClass, SquareClassGroup};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `n`, `-n` or `n/d`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(
            s.parse::<BigInt>().map_err(|_| bad())?,
        )),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Always `num/den`, with the sign on the numerator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    PrimeField { p: u64 },
    RationalField,
    PadicField { p: u64, precision: u32 },
}

impl FieldTag {
    pub fn prime(p: u64) -> Result<Self> {
        modp::check_odd_prime(p)?;
        Ok(FieldTag::PrimeField { p })
    }

    pub fn padic(p: u64, precision: u32) -> Result<Self> {
        modp::check_odd_prime(p)?;
        if precision == 0 {
            return Err(Error::InvalidField(
                "p-adic precision must be at least 1".into(),
            ));
        }
        Ok(FieldTag::PadicField { p, precision })
    }

    pub fn rational() -> Self {
        FieldTag::RationalField
    }

    /// Re-checks the invariants of a tag built by hand.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldTag::PrimeField { p } => FieldTag::prime(p).map(|_| ()),
            FieldTag::PadicField { p, precision } => FieldTag::padic(p, precision).map(|_| ()),
            FieldTag::RationalField => Ok(()),
        }
    }

    /// The residue characteristic used for square classes, if any.
    pub fn prime_p(&self) -> Option<u64> {
        match *self {
            FieldTag::PrimeField { p } | FieldTag::PadicField { p, .. } => Some(p),
            FieldTag::RationalField => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldTag::PrimeField { .. })
    }

    /// Number of bits in a square class, `None` when the group is infinite.
    pub fn class_width(&self) -> Option<u8> {
        match self {
            FieldTag::PrimeField { .. } => Some(1),
            FieldTag::PadicField { .. } => Some(2),
            FieldTag::RationalField => None,
        }
    }

    /// Canonical form of `r` as an element of this field.
    pub fn element(&self, r: &Rational) -> Result<Rational> {
        match *self {
            FieldTag::PrimeField { p } => modp::residue_of_ratio(r.numer(), r.denom(), p)
                .map(|v| Rational::from_integer(BigInt::from(v)))
                .ok_or_else(|| {
                    Error::Precondition(format!("{} is not defined in F_{p}", format_rational(r)))
                }),
            _ => Ok(r.clone()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Rational {
        self.element(&int(n))
            .expect("integers are defined in every supported field")
    }

    pub fn add(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(a * b)
    }

    pub fn div(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        if self.is_zero(b) {
            return Err(Error::Precondition("division by zero".into()));
        }
        match *self {
            FieldTag::PrimeField { p } => {
                let bi = modp::inv_mod(self.residue(b), p);
                Ok(self.reduce(a * Rational::from_integer(BigInt::from(bi))))
            }
            _ => Ok(a / b),
        }
    }

    pub fn is_zero(&self, a: &Rational) -> bool {
        match *self {
            FieldTag::PrimeField { .. } => self.residue(a) == 0,
            _ => a.is_zero(),
        }
    }

    /// Element from an already-canonical-or-integral value; panics on
    /// rationals whose denominator vanishes mod p, which the arithmetic above
    /// never produces from canonical inputs.
    fn reduce(&self, r: Rational) -> Rational {
        match self {
            FieldTag::PrimeField { .. } => self.element(&r).expect("canonical F_p arithmetic"),
            _ => r,
        }
    }

    fn residue(&self, a: &Rational) -> u64 {
        match *self {
            FieldTag::PrimeField { p } => {
                modp::residue_of_ratio(a.numer(), a.denom(), p).expect("canonical F_p element")
            }
            _ => unreachable!("residue only applies to F_p"),
        }
    }

    /// Elements `0, 1, -1, 2, -2, ...` over `Q`/`Q_p`, `0, 1, ..., p-1` over `F_p`.
    pub fn parameter_stream(&self) -> Box<dyn Iterator<Item = Rational>> {
        match *self {
            FieldTag::PrimeField { p } => {
                Box::new((0..p).map(|v| Rational::from_integer(BigInt::from(v))))
            }
            _ => Box::new((0i64..).flat_map(|n| {
                if n == 0 {
                    vec![int(0)]
                } else {
                    vec![int(n), int(-n)]
                }
            })),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::PrimeField { p } => write!(f, "fp:{p}"),
            FieldTag::RationalField => write!(f, "q"),
            FieldTag::PadicField { p, precision } => write!(f, "qp:{p}:{precision}"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad number {t:?} in field tag {s:?}")))
        };
        match parts.as_slice() {
            ["q"] => Ok(FieldTag::RationalField),
            ["fp", p] => FieldTag::prime(num(p)?),
            ["qp", p, k] => {
                let k = u32::try_from(num(k)?)
                    .map_err(|_| Error::Parse(format!("precision out of range in {s:?}")))?;
                FieldTag::padic(num(p)?, k)
            }
            _ => Err(Error::Parse(format!(
                "unknown field tag {s:?}; expected fp:<p>, q or qp:<p>:<k>"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tag_round_trip() {
        for s in ["fp:17", "q", "qp:5:16"] {
            assert_eq!(s.parse::<FieldTag>().unwrap().to_string(), s);
        }
        assert!("fp:2".parse::<FieldTag>().is_err());
        assert!("fp:15".parse::<FieldTag>().is_err());
        assert!("qp:2:4".parse::<FieldTag>().is_err());
        assert!("qp:5:0".parse::<FieldTag>().is_err());
        assert!("fq:5".parse::<FieldTag>().is_err());
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(format_rational(&parse_rational("-12/8").unwrap()), "-3/2");
        assert_eq!(format_rational(&parse_rational("4").unwrap()), "4/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldTag::prime(7).unwrap();
        assert_eq!(f.element(&parse_rational("1/2").unwrap()).unwrap(), int(4));
        assert_eq!(f.element(&int(-1)).unwrap(), int(6));
        assert_eq!(f.add(&int(4), &int(5)), int(2));
        assert_eq!(f.div(&int(1), &int(3)).unwrap(), int(5));
        assert!(f.is_zero(&int(0)));
        assert!(f.div(&int(1), &int(0)).is_err());
        assert!(f.element(&parse_rational("1/7").unwrap()).is_err());
    }

    #[test]
    fn parameter_streams() {
        let q: Vec<_> = FieldTag::RationalField.parameter_stream().take(5).collect();
        assert_eq!(q, vec![int(0), int(1), int(-1), int(2), int(-2)]);
        let fp: Vec<_> = FieldTag::prime(3).unwrap().parameter_stream().collect();
        assert_eq!(fp, vec![int(0), int(1), int(2)]);
    }
}
