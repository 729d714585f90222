//! Points over Q_5 with y known to 5^16, from the first admissible c.

use hj_field::field::padic::agreement;
use hj_field::field::{format_rational, parse_rational_list, FieldTag};
use hj_field::hyperelliptic::{enumerate_points, SplitHyperellipticCurve};
use hj_field::Budget;

fn main() -> hj_field::Result<()> {
    let field = FieldTag::padic(5, 16)?;
    let curve = SplitHyperellipticCurve::new(field, &parse_rational_list("0,1,2,3")?)?;
    let run = enumerate_points(
        &curve,
        field.parameter_stream().take(12),
        usize::MAX,
        6,
        &Budget::default(),
    )?;
    for cert in &run.certificates {
        let fx = curve.eval(&cert.x);
        let digits = agreement(&(&cert.y * &cert.y), &fx, 5)
            .map_or("exact".to_string(), |v| format!("5^{v}"));
        println!(
            "c={:>3} N={} x={:<6} y^2 = f(x) mod {digits}",
            format_rational(&cert.c),
            cert.n,
            format_rational(&cert.x)
        );
    }
    Ok(())
}
