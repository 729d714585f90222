//! Rank growth for `y^2 = (x - a_1)(x - a_2)(x - a_3)` over a tower of
//! quadratic fields `Q(sqrt d_1), Q(sqrt d_2), ...`.
//!
//! Each new point comes from a parameter `c` steered, modulo a prime at which
//! all earlier `d_j` are squares, onto an `x` where `f(x)` is a nonresidue.
//! Its square class `d` therefore lies outside the span of the earlier ones.
//! Non-torsion is certified by checking `m P` for every divisor `m` of a
//! torsion bound taken from point counts at two primes of good reduction.

mod arith;
mod curve;
mod family;
mod quad;
mod steer;
mod torsion;

pub use arith::{divisors, fresh_class_check, is_squarefree, squarefree_part};
pub use curve::EllipticCurveQ;
pub use family::{
    build_independent_family, verify_family, FamilyConfig, FamilyDocument, FamilyMember,
    FamilyRecord, IndependentFamily, TorsionBoundRecord,
};
pub use quad::{point_from_x, quad_add, quad_mul, QuadField, QuadPoint, XLift};
pub use steer::{
    nonresidue_x, steer_c, steering_prime, threshold_constant, DEFAULT_PRIME_SEARCH_CAP,
};
pub use torsion::{certify_nontorsion, multiples_to_check, torsion_bound, TorsionBound};
