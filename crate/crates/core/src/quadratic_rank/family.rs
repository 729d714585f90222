use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::arith::{fresh_class_check, is_squarefree};
use super::curve::EllipticCurveQ;
use super::quad::{point_from_x, QuadField, QuadPoint, XLift};
use super::steer::{
    nonresidue_x, steer_c, steering_prime, threshold_constant, DEFAULT_PRIME_SEARCH_CAP,
};
use super::torsion::{certify_nontorsion, multiples_to_check, torsion_bound, TorsionBound};
use crate::budget::DEFAULT_TRIAL_DIVISION_BOUND;
use crate::error::{Error, Result};
use crate::field::modp::{is_prime, legendre_unchecked};
use crate::field::{format_rational, int, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyConfig {
    /// Lower end of the first steering-prime search; later searches start
    /// just above the previous steering prime.
    pub start: u64,
    /// Parameters tried per member before giving up.
    pub retry_budget: usize,
    pub trial_division_bound: u64,
    pub prime_search_cap: u64,
}

impl Default for FamilyConfig {
    fn default() -> Self {
        FamilyConfig {
            start: threshold_constant(1) + 1,
            retry_budget: 32,
            trial_division_bound: DEFAULT_TRIAL_DIVISION_BOUND,
            prime_search_cap: DEFAULT_PRIME_SEARCH_CAP,
        }
    }
}

/// One point of the family with its freshness and non-torsion witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub p_steer: u64,
    pub x_target: u64,
    pub c: i64,
    pub field: QuadField,
    pub point: QuadPoint,
    pub torsion: TorsionBound,
    pub multiples_checked: Vec<u64>,
}

impl FamilyMember {
    pub fn d(&self) -> i64 {
        self.field.d()
    }

    pub fn x(&self) -> Rational {
        match &self.point {
            QuadPoint::Affine { x, .. } => x.clone(),
            QuadPoint::Identity => unreachable!("members are affine"),
        }
    }

    pub fn w(&self) -> Rational {
        match &self.point {
            QuadPoint::Affine { w, .. } => w.clone(),
            QuadPoint::Identity => unreachable!("members are affine"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentFamily {
    pub curve: EllipticCurveQ,
    pub members: Vec<FamilyMember>,
    /// Set when construction stopped early.
    pub diagnostic: Option<String>,
}

impl IndependentFamily {
    pub fn ds(&self) -> Vec<i64> {
        self.members.iter().map(FamilyMember::d).collect()
    }

    /// `(d_i / p_i) = -1` and `(d_j / p_i) = +1` for all `j < i`.
    pub fn legendre_audit(&self) -> bool {
        self.members.iter().enumerate().all(|(i, m)| {
            let l = |d: i64| legendre_unchecked(d.rem_euclid(m.p_steer as i64) as u64, m.p_steer);
            l(m.d()) == -1 && self.members[..i].iter().all(|prev| l(prev.d()) == 1)
        })
    }
}

/// Builds `n` points over quadratic fields with independent square classes,
/// each certified non-torsion.
///
/// Member `i` steers `c` so that `f(c)` is a nonresidue mod `p_i` while all
/// earlier `d_j` are residues there; hence `d_i` leaves their span.
pub fn build_independent_family(
    curve: &EllipticCurveQ,
    n: usize,
    config: &FamilyConfig,
) -> Result<IndependentFamily> {
    if n == 0 {
        return Err(Error::Precondition("family size must be at least 1".into()));
    }
    let mut members: Vec<FamilyMember> = Vec::new();
    let mut used: BTreeSet<i64> = BTreeSet::new();
    let mut start = config.start;
    while members.len() < n {
        let previous: Vec<i64> = members.iter().map(FamilyMember::d).collect();
        let p = steering_prime(curve, &previous, start, config.prime_search_cap)?;
        let x_target = nonresidue_x(curve, p, false)?;
        let mut found = None;
        for _ in 0..config.retry_budget {
            let c = steer_c(curve, p, x_target, &used);
            used.insert(c);
            let XLift::Quadratic { field, point } =
                point_from_x(curve, &int(c), config.trial_division_bound)?
            else {
                unreachable!("f(c) is a nonresidue mod {p}, so neither zero nor a square");
            };
            assert!(
                fresh_class_check(field.d(), &previous),
                "steering guarantees a fresh class"
            );
            let torsion = torsion_bound(curve, field);
            if certify_nontorsion(curve, field, &point, &torsion) {
                found = Some(FamilyMember {
                    p_steer: p,
                    x_target,
                    c,
                    field,
                    point,
                    multiples_checked: multiples_to_check(&torsion),
                    torsion,
                });
                break;
            }
        }
        match found {
            Some(m) => members.push(m),
            None => {
                let diagnostic = format!(
                    "member {}: no non-torsion point among {} parameters c = {x_target} mod {p}",
                    members.len() + 1,
                    config.retry_budget
                );
                return Ok(IndependentFamily {
                    curve: *curve,
                    members,
                    diagnostic: Some(diagnostic),
                });
            }
        }
        start = p + 1;
    }
    Ok(IndependentFamily {
        curve: *curve,
        members,
        diagnostic: None,
    })
}

/// Re-derives every claim of a family from its records.
pub fn verify_family(family: &IndependentFamily) -> std::result::Result<(), String> {
    let curve = &family.curve;
    let mut previous: Vec<i64> = Vec::new();
    for (i, m) in family.members.iter().enumerate() {
        let tag = format!("member {}", i + 1);
        let (x, w, d) = (m.x(), m.w(), m.d());
        if x != int(m.c) {
            return Err(format!("{tag}: x != c"));
        }
        if !is_squarefree(d) || d == 1 {
            return Err(format!(
                "{tag}: d = {d} is not a squarefree integer other than 1"
            ));
        }
        if int(d) * &w * &w != curve.eval(&x) {
            return Err(format!("{tag}: d w^2 != f(x)"));
        }
        let p = m.p_steer;
        if !is_prime(p) || p <= threshold_constant(1) || !curve.has_good_reduction(p) {
            return Err(format!("{tag}: {p} is not an admissible steering prime"));
        }
        if nonresidue_x(curve, p, false).ok() != Some(m.x_target)
            || m.c.rem_euclid(p as i64) as u64 != m.x_target
        {
            return Err(format!(
                "{tag}: c is not steered to the least nonresidue x mod {p}"
            ));
        }
        let l = |v: i64| legendre_unchecked(v.rem_euclid(p as i64) as u64, p);
        if l(d) != -1 || previous.iter().any(|&dj| l(dj) != 1) {
            return Err(format!("{tag}: Legendre audit at {p} fails"));
        }
        if !fresh_class_check(d, &previous) {
            return Err(format!(
                "{tag}: class of {d} is in the span of {previous:?}"
            ));
        }
        let field = QuadField::new(d).map_err(|e| format!("{tag}: {e}"))?;
        let expected = torsion_bound(curve, field);
        if (expected.bound, expected.p1, expected.p2)
            != (m.torsion.bound, m.torsion.p1, m.torsion.p2)
        {
            return Err(format!(
                "{tag}: torsion bound differs from the recomputed {}",
                expected.bound
            ));
        }
        if m.multiples_checked != multiples_to_check(&expected) {
            return Err(format!(
                "{tag}: multiples checked are not the divisors of B"
            ));
        }
        if !certify_nontorsion(curve, field, &m.point, &expected) {
            return Err(format!("{tag}: point is torsion"));
        }
        previous.push(d);
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionBoundRecord {
    #[serde(rename = "B")]
    pub bound: u64,
    pub p1: u64,
    pub p2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub p_steer: u64,
    pub x_target: u64,
    pub c: i64,
    pub d: i64,
    pub x: String,
    pub w: String,
    pub torsion_bound: TorsionBoundRecord,
    pub multiples_checked: Vec<u64>,
}

/// JSON form of a family: the curve's roots and one record per member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub roots: Vec<i64>,
    pub records: Vec<FamilyRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl From<&IndependentFamily> for FamilyDocument {
    fn from(f: &IndependentFamily) -> Self {
        FamilyDocument {
            roots: f.curve.roots().to_vec(),
            records: f
                .members
                .iter()
                .map(|m| FamilyRecord {
                    p_steer: m.p_steer,
                    x_target: m.x_target,
                    c: m.c,
                    d: m.d(),
                    x: format_rational(&m.x()),
                    w: format_rational(&m.w()),
                    torsion_bound: TorsionBoundRecord {
                        bound: m.torsion.bound,
                        p1: m.torsion.p1,
                        p2: m.torsion.p2,
                    },
                    multiples_checked: m.multiples_checked.clone(),
                })
                .collect(),
            diagnostic: f.diagnostic.clone(),
        }
    }
}

impl FamilyDocument {
    /// Rebuilds the family; the point counts `n1, n2` are recomputed from
    /// the recorded primes.
    pub fn to_family(&self) -> Result<IndependentFamily> {
        let curve = EllipticCurveQ::from_slice(&self.roots)?;
        let members = self
            .records
            .iter()
            .map(|r| {
                let field = QuadField::new(r.d)?;
                let point =
                    QuadPoint::new(&curve, field, parse_rational(&r.x)?, parse_rational(&r.w)?)?;
                let count = |p: u64| curve.count_points_ext(p);
                Ok(FamilyMember {
                    p_steer: r.p_steer,
                    x_target: r.x_target,
                    c: r.c,
                    field,
                    point,
                    torsion: TorsionBound {
                        bound: r.torsion_bound.bound,
                        p1: r.torsion_bound.p1,
                        p2: r.torsion_bound.p2,
                        n1: count(r.torsion_bound.p1)?,
                        n2: count(r.torsion_bound.p2)?,
                    },
                    multiples_checked: r.multiples_checked.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IndependentFamily {
            curve,
            members,
            diagnostic: self.diagnostic.clone(),
        })
    }
}

impl IndependentFamily {
    pub fn to_document(&self) -> FamilyDocument {
        FamilyDocument::from(self)
    }
}
