use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::curve::SplitHyperellipticCurve;
use super::pipeline::{choose_b, BVector};
use crate::error::{Error, Result};
use crate::field::padic::valuation;
use crate::field::{
    format_rational, parse_rational, square_class, FieldTag, Rational, SquareClass,
};
use crate::hales_jewett::{LineTemplate, Slot};

/// Audit trail of one point produced from a monochromatic line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCertificate {
    pub curve: SplitHyperellipticCurve,
    pub c: Rational,
    pub n: usize,
    pub b: BVector,
    pub template: LineTemplate,
    /// One-based wildcard positions of the template.
    pub star_set: Vec<usize>,
    pub r: Rational,
    pub s: Rational,
    pub class: SquareClass,
    pub x: Rational,
    pub y: Rational,
    /// p-adic precision of `y`; `None` over `F_p`, where `y` is exact.
    pub y_precision: Option<u32>,
}

/// Which of the five certificate checks failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Template wildcards match the star set and the line is monochromatic.
    Line,
    /// `s` is the nonzero subset sum of `b` over the star set.
    Scaling,
    /// `r` is the constant-slot sum and `x s + r = c`.
    Offset,
    /// `f(x)` is a square or zero.
    SquareValue,
    /// `y^2 = f(x)` to the stated precision.
    YCoordinate,
}

impl Check {
    pub fn label(&self) -> &'static str {
        match self {
            Check::Line => "(i) line",
            Check::Scaling => "(ii) scaling",
            Check::Offset => "(iii) offset",
            Check::SquareValue => "(iv) square value",
            Check::YCoordinate => "(v) y-coordinate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFailure {
    pub check: Check,
    pub detail: String,
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check {} failed: {}", self.check.label(), self.detail)
    }
}

impl std::error::Error for CertificateFailure {}

fn fail<T>(check: Check, detail: impl Into<String>) -> std::result::Result<T, CertificateFailure> {
    Err(CertificateFailure {
        check,
        detail: detail.into(),
    })
}

/// Re-derives every claim of a certificate from the curve alone.
pub fn verify_certificate(
    curve: &SplitHyperellipticCurve,
    cert: &PointCertificate,
) -> std::result::Result<(), CertificateFailure> {
    let field = *curve.field();
    let m = curve.m();
    let n = cert.n;
    if cert.curve != *curve {
        return fail(Check::Line, "certificate belongs to a different curve");
    }

    // (i)
    if cert.template.dim() != n || LineTemplate::new(cert.template.slots().to_vec(), m).is_err() {
        return fail(
            Check::Line,
            format!("template {} is not a line in [1,{m}]^{n}", cert.template),
        );
    }
    let stars: Vec<usize> = cert
        .template
        .star_positions()
        .iter()
        .map(|i| i + 1)
        .collect();
    if stars != cert.star_set {
        return fail(
            Check::Line,
            format!(
                "star set {:?} != template wildcards {stars:?}",
                cert.star_set
            ),
        );
    }
    let b = match choose_b(&field, n) {
        Ok(b) => b,
        Err(e) => {
            return fail(
                Check::Scaling,
                format!("no coefficient vector for N = {n}: {e}"),
            )
        }
    };
    if b != cert.b {
        return fail(
            Check::Scaling,
            "b differs from the canonical zero-sum-free choice",
        );
    }
    for j in 1..=m {
        let cell = cert.template.cell(j);
        let value = cell
            .coords
            .iter()
            .zip(b.values())
            .fold(cert.c.clone(), |acc, (&sym, bi)| {
                field.sub(&acc, &field.mul(bi, &curve.roots()[sym - 1]))
            });
        match square_class(&field, &value) {
            Ok(q) if q == cert.class => {}
            Ok(q) => {
                return fail(
                    Check::Line,
                    format!("cell {cell} has class {q}, line claims {}", cert.class),
                )
            }
            Err(e) => return fail(Check::Line, format!("cell {cell}: {e}")),
        }
    }

    // (ii)
    let positions: Vec<usize> = stars.iter().map(|i| i - 1).collect();
    let s = b.subset_sum(&field, &positions);
    if field.is_zero(&s) || s != cert.s {
        return fail(
            Check::Scaling,
            format!(
                "s = {} but the star-set sum is {}",
                format_rational(&cert.s),
                format_rational(&s)
            ),
        );
    }

    // (iii)
    let r =
        cert.template
            .slots()
            .iter()
            .zip(b.values())
            .fold(field.from_i64(0), |acc, (slot, bi)| match *slot {
                Slot::Fixed(j) => field.add(&acc, &field.mul(bi, &curve.roots()[j - 1])),
                Slot::Star => acc,
            });
    if r != cert.r {
        return fail(
            Check::Offset,
            format!(
                "r = {} but the constant slots sum to {}",
                format_rational(&cert.r),
                format_rational(&r)
            ),
        );
    }
    if field.add(&field.mul(&cert.x, &s), &r) != cert.c {
        return fail(Check::Offset, "x * s + r != c");
    }

    // (iv)
    let fx = curve.eval(&cert.x);
    let is_zero = field.is_zero(&fx);
    if !is_zero {
        match square_class(&field, &fx) {
            Ok(q) if q.is_identity() => {}
            Ok(q) => return fail(Check::SquareValue, format!("f(x) has class {q}")),
            Err(e) => return fail(Check::SquareValue, e.to_string()),
        }
    }

    // (v)
    let y2 = field.mul(&cert.y, &cert.y);
    match field {
        FieldTag::PrimeField { .. } => {
            if cert.y_precision.is_some() {
                return fail(
                    Check::YCoordinate,
                    "F_p coordinates are exact; precision must be absent",
                );
            }
            if y2 != fx {
                return fail(Check::YCoordinate, "y^2 != f(x)");
            }
        }
        FieldTag::PadicField { p, precision } => {
            if cert.y_precision != Some(precision) {
                return fail(
                    Check::YCoordinate,
                    format!(
                        "precision {:?} != field precision {precision}",
                        cert.y_precision
                    ),
                );
            }
            let diff = &y2 - &fx;
            if !diff.is_zero() {
                let needed = precision as i64 + valuation(&fx, p).unwrap_or(0).max(0);
                let got = valuation(&diff, p).expect("nonzero");
                if got < needed {
                    return fail(
                        Check::YCoordinate,
                        format!("y^2 agrees with f(x) only to p^{got}, need p^{needed}"),
                    );
                }
            }
        }
        FieldTag::RationalField => {
            return fail(Check::Line, "square classes of Q are not supported")
        }
    }
    Ok(())
}

/// JSON form of a [`PointCertificate`]; field elements are `num/den` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub field: String,
    pub roots: Vec<String>,
    pub c: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub template: String,
    pub star_set: Vec<usize>,
    pub r: String,
    pub s: String,
    pub class_bits: Vec<u8>,
    pub x: String,
    pub y: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_precision: Option<u32>,
}

impl From<&PointCertificate> for CertificateRecord {
    fn from(cert: &PointCertificate) -> Self {
        CertificateRecord {
            field: cert.curve.field().to_string(),
            roots: cert.curve.roots().iter().map(format_rational).collect(),
            c: format_rational(&cert.c),
            n: cert.n,
            template: cert.template.to_string(),
            star_set: cert.star_set.clone(),
            r: format_rational(&cert.r),
            s: format_rational(&cert.s),
            class_bits: cert.class.bits(),
            x: format_rational(&cert.x),
            y: format_rational(&cert.y),
            y_precision: cert.y_precision,
        }
    }
}

impl CertificateRecord {
    /// Rebuilds the certificate; `b` is recomputed from the field and `N`.
    pub fn to_certificate(&self) -> Result<PointCertificate> {
        let field: FieldTag = self.field.parse()?;
        let roots = self
            .roots
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        let curve = SplitHyperellipticCurve::new(field, &roots)?;
        let template: LineTemplate = self.template.parse()?;
        let class = SquareClass::from_bits(&self.class_bits)?;
        if Some(class.width()) != field.class_width() {
            return Err(Error::Parse(format!(
                "class_bits has width {}, field needs {:?}",
                class.width(),
                field.class_width()
            )));
        }
        let b = choose_b(&field, self.n)?;
        // values are kept as written so tampering stays visible to the checks
        Ok(PointCertificate {
            curve,
            c: parse_rational(&self.c)?,
            n: self.n,
            b,
            template,
            star_set: self.star_set.clone(),
            r: parse_rational(&self.r)?,
            s: parse_rational(&self.s)?,
            class,
            x: parse_rational(&self.x)?,
            y: parse_rational(&self.y)?,
            y_precision: self.y_precision,
        })
    }
}

impl PointCertificate {
    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord::from(self)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_record())?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<CertificateRecord>(text)?.to_certificate()
    }

    /// `x,y` line for CSV point lists.
    pub fn csv_row(&self) -> String {
        format!("{},{}", format_rational(&self.x), format_rational(&self.y))
    }
}
