//! Square-class groups of F_p and Q_p, and the class of a few elements.

use hj_field::field::{int, parse_rational, square_class, square_class_group, FieldTag};

fn main() -> hj_field::Result<()> {
    for field in [
        FieldTag::prime(7)?,
        FieldTag::prime(17)?,
        FieldTag::padic(5, 16)?,
    ] {
        let group = square_class_group(&field)?;
        let reps: Vec<String> = group
            .representatives
            .iter()
            .map(|r| r.to_string())
            .collect();
        println!(
            "{field}: order {} with representatives {}",
            group.order(),
            reps.join(", ")
        );
    }

    let q5 = FieldTag::padic(5, 16)?;
    for s in ["50", "9", "3/25", "-1", "10"] {
        let r = parse_rational(s)?;
        println!("class of {s} in {q5}: {}", square_class(&q5, &r)?);
    }

    // the class map is a homomorphism
    let (a, b) = (int(6), int(35));
    let lhs = square_class(&q5, &(&a * &b))?;
    let rhs = square_class(&q5, &a)?.combine(&square_class(&q5, &b)?);
    println!("[6 * 35] = {lhs} = [6][35] = {rhs}");
    Ok(())
}
