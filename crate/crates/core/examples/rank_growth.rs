//! Five independent non-torsion points on y^2 = x^3 - x over growing
//! quadratic fields.

use hj_field::field::format_rational;
use hj_field::quadratic_rank::{
    build_independent_family, verify_family, EllipticCurveQ, FamilyConfig,
};

fn main() -> hj_field::Result<()> {
    let curve = EllipticCurveQ::new([-1, 0, 1])?;
    let family = build_independent_family(&curve, 5, &FamilyConfig::default())?;
    for (i, m) in family.members.iter().enumerate() {
        println!(
            "P{}: p={:<4} c={:<3} d={:<4} (x, w) = ({}, {}) torsion bound {} from ({}, {})",
            i + 1,
            m.p_steer,
            m.c,
            m.d(),
            format_rational(&m.x()),
            format_rational(&m.w()),
            m.torsion.bound,
            m.torsion.p1,
            m.torsion.p2
        );
    }
    println!("Legendre audit: {}", family.legendre_audit());
    println!("re-verified: {:?}", verify_family(&family));
    println!("{}", serde_json::to_string(&family.to_document())?);
    Ok(())
}
