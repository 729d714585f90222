//! Points on split hyperelliptic curves from monochromatic lines.
//!
//! For a parameter `c` outside the finite set `C` of subset-weighted root
//! sums, cell `(j_1, ..., j_N)` of `[1, 2g+2]^N` is colored by the square
//! class of `c - sum_i b_i a_{j_i}`. A monochromatic line with wildcard set
//! `S` makes every `c - r - s a_j` lie in one class, so
//! `f((c - r) / s)` is a square and `x = (c - r) / s` carries a point.

mod certificate;
mod curve;
pub mod oracle;
mod pipeline;

pub use certificate::{
    verify_certificate, CertificateFailure, CertificateRecord, Check, PointCertificate,
};
pub use curve::SplitHyperellipticCurve;
pub use oracle::{brute_force_points, brute_force_x_set};
pub use pipeline::{
    choose_b, coloring_for_c, enumerate_points, exclusion_set, find_point_for_c, is_zero_sum_free,
    linear_family, BVector, Enumeration, ExclusionSet, LinearMap, PointFinder,
};
