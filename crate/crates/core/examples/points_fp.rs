//! Certified points on y^2 = x(x-1)(x-2)(x-3) over F_97, checked against
//! brute force.

use hj_field::field::{format_rational, parse_rational_list, FieldTag};
use hj_field::hyperelliptic::{
    brute_force_x_set, enumerate_points, verify_certificate, SplitHyperellipticCurve,
};
use hj_field::Budget;

fn main() -> hj_field::Result<()> {
    let field = FieldTag::prime(97)?;
    let curve = SplitHyperellipticCurve::new(field, &parse_rational_list("0,1,2,3")?)?;
    let run = enumerate_points(
        &curve,
        field.parameter_stream(),
        usize::MAX,
        6,
        &Budget::default(),
    )?;
    let xs = brute_force_x_set(&curve)?;
    for cert in &run.certificates {
        verify_certificate(&curve, cert).expect("pipeline output verifies");
        let x = cert.x.to_integer().try_into().unwrap_or(u64::MAX);
        assert!(xs.contains(&x));
        println!(
            "c={:>2} N={} line {:<6} -> ({}, {})",
            format_rational(&cert.c),
            cert.n,
            cert.template.to_string(),
            format_rational(&cert.x),
            format_rational(&cert.y)
        );
    }
    println!(
        "{} admissible c, {} lines, {} distinct x of {} possible; bound ceil({}/{}) = {}",
        run.admissible,
        run.successes,
        run.distinct_x(),
        xs.len(),
        run.successes,
        run.family_size,
        run.distinct_lower_bound()
    );
    Ok(())
}
