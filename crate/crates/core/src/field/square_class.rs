//! The square-class group `K^x / (K^x)^2` for `F_p` and `Q_p`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::modp::{least_nonresidue, legendre_unchecked, residue_of_ratio};
use super::padic::padic_split;
use super::{FieldTag, Rational};
use crate::error::{Error, Result};

/// An element of an elementary abelian 2-group of width 1 or 2.
///
/// For `Q_p`, bit 0 is the valuation parity and bit 1 flags a non-residue
/// unit part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass {
    bits: u8,
    width: u8,
}

impl SquareClass {
    pub fn identity(width: u8) -> Self {
        SquareClass { bits: 0, width }
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() || bits.len() > 8 || bits.iter().any(|&b| b > 1) {
            return Err(Error::Parse(format!("bad class bits {bits:?}")));
        }
        let packed = bits
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, &b)| acc | (b << i));
        Ok(SquareClass {
            bits: packed,
            width: bits.len() as u8,
        })
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.width).map(|i| (self.bits >> i) & 1).collect()
    }

    /// Index in `0..2^width`, used as a color.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    pub fn from_index(index: usize, width: u8) -> Self {
        SquareClass {
            bits: index as u8,
            width,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.bits == 0
    }

    pub fn combine(&self, other: &SquareClass) -> SquareClass {
        debug_assert_eq!(self.width, other.width);
        SquareClass {
            bits: self.bits ^ other.bits,
            width: self.width,
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn unsupported(field: &FieldTag) -> Error {
    Error::UnsupportedField {
        field: field.to_string(),
        reason: "the square-class group of Q is infinite".into(),
    }
}

/// Class `[x]` of a nonzero element.
pub fn square_class(field: &FieldTag, x: &Rational) -> Result<SquareClass> {
    match *field {
        FieldTag::RationalField => Err(unsupported(field)),
        FieldTag::PrimeField { p } => {
            let r = residue_of_ratio(x.numer(), x.denom(), p)
                .ok_or_else(|| Error::Precondition(format!("{x} is not an element of F_{p}")))?;
            if r == 0 {
                return Err(Error::UndefinedClass);
            }
            Ok(class_from_legendre(legendre_unchecked(r, p), 0, 1))
        }
        FieldTag::PadicField { p, .. } => {
            if x.is_zero() {
                return Err(Error::UndefinedClass);
            }
            let (v, u) = padic_split(x, p)?;
            let r = residue_of_ratio(u.numer(), u.denom(), p).expect("unit part is a p-adic unit");
            Ok(class_from_legendre(
                legendre_unchecked(r, p),
                v.rem_euclid(2) as u8,
                2,
            ))
        }
    }
}

fn class_from_legendre(symbol: i8, parity: u8, width: u8) -> SquareClass {
    let nonresidue = u8::from(symbol == -1);
    let bits = if width == 1 {
        nonresidue
    } else {
        parity | (nonresidue << 1)
    };
    SquareClass { bits, width }
}

/// The finite group `K^x / (K^x)^2` with one fixed representative per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareClassGroup {
    pub field: FieldTag,
    pub width: u8,
    pub representatives: Vec<Rational>,
}

impl SquareClassGroup {
    pub fn order(&self) -> usize {
        1 << self.width
    }

    pub fn class_of(&self, x: &Rational) -> Result<SquareClass> {
        square_class(&self.field, x)
    }

    /// The representative of a class.
    pub fn representative(&self, class: &SquareClass) -> &Rational {
        self.representatives
            .iter()
            .find(|r| square_class(&self.field, r).ok().as_ref() == Some(class))
            .expect("every class has a representative")
    }
}

pub fn square_class_group(field: &FieldTag) -> Result<SquareClassGroup> {
    let int = |n: u64| Rational::from_integer(BigInt::from(n));
    match *field {
        FieldTag::RationalField => Err(unsupported(field)),
        FieldTag::PrimeField { p } => Ok(SquareClassGroup {
            field: *field,
            width: 1,
            representatives: vec![int(1), int(least_nonresidue(p))],
        }),
        FieldTag::PadicField { p, .. } => {
            let n0 = least_nonresidue(p);
            Ok(SquareClassGroup {
                field: *field,
                width: 2,
                representatives: vec![int(1), int(n0), int(p), int(p * n0)],
            })
        }
    }
}
