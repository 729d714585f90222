//! Point counts, the trace relation and torsion bounds over Q(sqrt d).

use hj_field::field::int;
use hj_field::field::modp::is_prime;
use hj_field::quadratic_rank::{
    certify_nontorsion, point_from_x, torsion_bound, EllipticCurveQ, QuadField, QuadPoint, XLift,
};

fn main() -> hj_field::Result<()> {
    let curve = EllipticCurveQ::new([-1, 0, 1])?;
    for p in (3..40).filter(|&p| is_prime(p)) {
        println!(
            "p={p:>2}: #E(F_p)={:>3} t={:>3} #E(F_p^2)={}",
            curve.count_points(p)?,
            curve.trace(p)?,
            curve.count_points_ext(p)?
        );
    }
    for d in [6, -1, 15, 210] {
        let b = torsion_bound(&curve, QuadField::new(d)?);
        println!(
            "d={d:>4}: B={} from n({}^2)={} and n({}^2)={}",
            b.bound, b.p1, b.n1, b.p2, b.n2
        );
    }
    let XLift::Quadratic { field, point } = point_from_x(&curve, &int(2), 1_000_000)? else {
        unreachable!()
    };
    let b = torsion_bound(&curve, field);
    println!(
        "(2, sqrt 6) non-torsion: {}",
        certify_nontorsion(&curve, field, &point, &b)
    );
    println!(
        "(0, 0) non-torsion: {}",
        certify_nontorsion(&curve, field, &QuadPoint::two_torsion(0), &b)
    );
    Ok(())
}
