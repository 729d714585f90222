use std::fmt;

use num_traits::{Signed, Zero};

use super::arith::{is_squarefree, squarefree_part};
use super::curve::EllipticCurveQ;
use crate::error::{Error, Result};
use crate::field::{format_rational, int, Rational};

/// `Q(sqrt d)` for squarefree `d` outside `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadField {
    d: i64,
}

impl QuadField {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(Error::Precondition(format!(
                "{d} is not a squarefree integer other than 0, 1"
            )));
        }
        Ok(QuadField { d })
    }

    pub fn d(&self) -> i64 {
        self.d
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt {})", self.d)
    }
}

/// A point of `E(Q(sqrt d))` whose x is rational and whose y is a rational
/// multiple of `sqrt d`. These points form a subgroup (the twist by `d`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadPoint {
    Identity,
    /// `(x, w sqrt d)` with `d w^2 = f(x)`.
    Affine {
        x: Rational,
        w: Rational,
    },
}

impl QuadPoint {
    pub fn new(curve: &EllipticCurveQ, field: QuadField, x: Rational, w: Rational) -> Result<Self> {
        let p = QuadPoint::Affine { x, w };
        if !p.is_on(curve, field) {
            return Err(Error::Precondition(format!(
                "{p} is not on the curve over {field}"
            )));
        }
        Ok(p)
    }

    /// The rational 2-torsion point `(a, 0)`; it lies in every twist.
    pub fn two_torsion(a: i64) -> Self {
        QuadPoint::Affine {
            x: int(a),
            w: int(0),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, QuadPoint::Identity)
    }

    pub fn is_on(&self, curve: &EllipticCurveQ, field: QuadField) -> bool {
        match self {
            QuadPoint::Identity => true,
            QuadPoint::Affine { x, w } => int(field.d) * w * w == curve.eval(x),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            QuadPoint::Identity => QuadPoint::Identity,
            QuadPoint::Affine { x, w } => QuadPoint::Affine {
                x: x.clone(),
                w: -w,
            },
        }
    }
}

impl fmt::Display for QuadPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadPoint::Identity => write!(f, "O"),
            QuadPoint::Affine { x, w } => {
                write!(f, "({}, {} sqrt d)", format_rational(x), format_rational(w))
            }
        }
    }
}

/// Chord-tangent addition. With `y = w sqrt d` the slope is `mu sqrt d`
/// for rational `mu`, so `x3 = d mu^2 + s1 - x1 - x2`.
pub fn quad_add(
    curve: &EllipticCurveQ,
    field: QuadField,
    p: &QuadPoint,
    q: &QuadPoint,
) -> QuadPoint {
    let (x1, w1, x2, w2) = match (p, q) {
        (QuadPoint::Identity, _) => return q.clone(),
        (_, QuadPoint::Identity) => return p.clone(),
        (QuadPoint::Affine { x: x1, w: w1 }, QuadPoint::Affine { x: x2, w: w2 }) => {
            (x1, w1, x2, w2)
        }
    };
    let d = int(field.d);
    let (s1, s2) = curve.s1_s2();
    let mu = if x1 != x2 {
        (w2 - w1) / (x2 - x1)
    } else if w1 == w2 && !w1.is_zero() {
        (int(3) * x1 * x1 - int(2 * s1) * x1 + int(s2)) / (int(2) * &d * w1)
    } else {
        return QuadPoint::Identity;
    };
    let x3 = &d * &mu * &mu + int(s1) - x1 - x2;
    let w3 = -(w1 + &mu * (&x3 - x1));
    let r = QuadPoint::Affine { x: x3, w: w3 };
    debug_assert!(r.is_on(curve, field));
    r
}

/// `m P` by double-and-add; negative `m` negates.
pub fn quad_mul(curve: &EllipticCurveQ, field: QuadField, p: &QuadPoint, m: i64) -> QuadPoint {
    let mut acc = QuadPoint::Identity;
    let mut base = if m < 0 { p.neg() } else { p.clone() };
    let mut k = m.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = quad_add(curve, field, &acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = quad_add(curve, field, &base, &base);
        }
    }
    acc
}

/// What a rational x-coordinate lifts to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XLift {
    /// `f(x) = 0`: the rational 2-torsion point `(x, 0)`.
    Weierstrass {
        x: Rational,
    },
    /// `f(x)` is a rational square: a point over `Q` itself.
    Rational {
        x: Rational,
        y: Rational,
    },
    Quadratic {
        field: QuadField,
        point: QuadPoint,
    },
}

/// Lifts `x` to the point `(x, w sqrt d)` with `d` the squarefree part of
/// `f(x)`.
pub fn point_from_x(curve: &EllipticCurveQ, x: &Rational, trial_bound: u64) -> Result<XLift> {
    let fx = curve.eval(x);
    if fx.is_zero() {
        return Ok(XLift::Weierstrass { x: x.clone() });
    }
    let d = squarefree_part(&fx, trial_bound)?;
    let w = rational_sqrt(&(&fx / int(d))).expect("f(x) / d is a square");
    if d == 1 {
        return Ok(XLift::Rational { x: x.clone(), y: w });
    }
    let field = QuadField::new(d)?;
    let point = QuadPoint::new(curve, field, x.clone(), w)?;
    Ok(XLift::Quadratic { field, point })
}

/// The nonnegative square root of a rational square.
pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}
