//! Writes a certificate as JSON, reads it back, verifies it, then shows the
//! checks that catch tampering.

use hj_field::field::{int, parse_rational_list, FieldTag};
use hj_field::hyperelliptic::{
    find_point_for_c, verify_certificate, PointCertificate, SplitHyperellipticCurve,
};
use hj_field::Budget;

fn main() -> hj_field::Result<()> {
    let field = FieldTag::prime(97)?;
    let curve = SplitHyperellipticCurve::new(field, &parse_rational_list("0,1,2,3")?)?;
    let cert =
        find_point_for_c(&curve, &int(41), 6, &Budget::default())?.expect("c = 41 yields a line");
    let json = cert.to_json()?;
    println!("{json}");
    let back = PointCertificate::from_json(&json)?;
    println!(
        "round trip verifies: {:?}",
        verify_certificate(&curve, &back)
    );

    let mut bad = back.clone();
    bad.y = field.add(&bad.y, &int(1));
    println!("y + 1: {}", verify_certificate(&curve, &bad).unwrap_err());
    let mut bad = back.clone();
    bad.star_set.push(bad.n + 1);
    println!(
        "extra star: {}",
        verify_certificate(&curve, &bad).unwrap_err()
    );
    let mut bad = back;
    bad.r = field.add(&bad.r, &int(1));
    println!("r + 1: {}", verify_certificate(&curve, &bad).unwrap_err());
    Ok(())
}
