use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::certificate::PointCertificate;
use super::curve::SplitHyperellipticCurve;
use crate::budget::{checked_power, Budget};
use crate::error::{Error, Result};
use crate::field::{
    format_rational, hensel_sqrt, modp, square_class, FieldTag, Rational, SquareClass,
};
use crate::hales_jewett::{find_line_incremental, Coloring, Slot};

/// Largest `N` for which subset sums are checked exhaustively.
const MAX_B_LEN: usize = 24;

/// Coefficients `b_1, ..., b_N` with no vanishing nonempty subset sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BVector {
    values: Vec<Rational>,
}

impl BVector {
    pub fn new(field: &FieldTag, values: &[Rational]) -> Result<Self> {
        let values = values
            .iter()
            .map(|v| field.element(v))
            .collect::<Result<Vec<_>>>()?;
        if values.is_empty() || values.len() > MAX_B_LEN {
            return Err(Error::Precondition(format!(
                "b must have between 1 and {MAX_B_LEN} entries"
            )));
        }
        if !is_zero_sum_free(field, &values) {
            return Err(Error::Precondition("b has a vanishing subset sum".into()));
        }
        Ok(BVector { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sum of `b_i` over the given zero-based positions.
    pub fn subset_sum(&self, field: &FieldTag, positions: &[usize]) -> Rational {
        positions.iter().fold(field.from_i64(0), |acc, &i| {
            field.add(&acc, &self.values[i])
        })
    }
}

/// Checks all `2^N - 1` nonempty subset sums.
pub fn is_zero_sum_free(field: &FieldTag, values: &[Rational]) -> bool {
    if values.len() > MAX_B_LEN {
        return false;
    }
    let mut sums = vec![field.from_i64(0); 1 << values.len()];
    for mask in 1usize..sums.len() {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = field.add(&sums[mask & (mask - 1)], &values[low]);
        if field.is_zero(&sums[mask]) {
            return false;
        }
    }
    true
}

/// First zero-sum-free candidate `b_i = B^(i-1)` for `B = 2, 3, 4, ...`.
///
/// Over `F_p` the bases run up to `p + 1`, which is the all-ones sequence
/// again; past that every residue has been tried.
pub fn choose_b(field: &FieldTag, n: usize) -> Result<BVector> {
    if n == 0 {
        return Err(Error::Precondition("N must be at least 1".into()));
    }
    let too_small = || Error::FieldTooSmall {
        field: field.to_string(),
        n,
    };
    if n > MAX_B_LEN {
        return Err(too_small());
    }
    let last_base = match *field {
        FieldTag::PrimeField { p } => p + 1,
        _ => 2,
    };
    for base in 2..=last_base {
        let base = field.from_i64(base as i64);
        let mut values = Vec::with_capacity(n);
        let mut power = field.from_i64(1);
        for _ in 0..n {
            values.push(power.clone());
            power = field.mul(&power, &base);
        }
        if is_zero_sum_free(field, &values) {
            return Ok(BVector { values });
        }
    }
    Err(too_small())
}

/// `sum_i b_i a_{j_i}` for every cell `(j_1, ..., j_N)`, in lexicographic
/// cell order.
fn cell_sums(
    curve: &SplitHyperellipticCurve,
    b: &BVector,
    max_cells: usize,
) -> Result<Vec<Rational>> {
    let m = curve.m();
    let n = b.len();
    checked_power(m, n, max_cells).ok_or_else(|| Error::ResourceLimit {
        what: format!("{m}^{n} cells exceeds cap {max_cells}"),
        reached: n,
    })?;
    let field = curve.field();
    let mut sums = vec![field.from_i64(0)];
    for bi in b.values() {
        let terms: Vec<Rational> = curve.roots().iter().map(|a| field.mul(bi, a)).collect();
        sums = sums
            .iter()
            .flat_map(|prefix| terms.iter().map(move |t| field.add(prefix, t)))
            .collect();
    }
    Ok(sums)
}

/// The finite set `C` of parameters whose coloring would hit zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionSet {
    pub n: usize,
    pub elements: BTreeSet<Rational>,
}

impl ExclusionSet {
    pub fn contains(&self, c: &Rational) -> bool {
        self.elements.contains(c)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn exclusion_set(
    curve: &SplitHyperellipticCurve,
    b: &BVector,
    budget: &Budget,
) -> Result<ExclusionSet> {
    Ok(ExclusionSet {
        n: b.len(),
        elements: cell_sums(curve, b, budget.max_cells)?.into_iter().collect(),
    })
}

fn coloring_from_sums(
    curve: &SplitHyperellipticCurve,
    n: usize,
    sums: &[Rational],
    c: &Rational,
) -> Result<Coloring> {
    let field = curve.field();
    let width = field.class_width().ok_or_else(|| unsupported(field))?;
    let table = sums
        .iter()
        .map(|s| square_class(field, &field.sub(c, s)).map(|q| q.index()))
        .collect::<Result<Vec<_>>>()?;
    Coloring::from_table(curve.m(), n, 1 << width, table)
}

/// Colors cell `(j_1, ..., j_N)` by the square class of `c - sum_i b_i a_{j_i}`.
pub fn coloring_for_c(
    curve: &SplitHyperellipticCurve,
    b: &BVector,
    c: &Rational,
    budget: &Budget,
) -> Result<Coloring> {
    let c = curve.field().element(c)?;
    let sums = cell_sums(curve, b, budget.max_cells)?;
    if sums.contains(&c) {
        return Err(Error::ExcludedParameter(format_rational(&c)));
    }
    coloring_from_sums(curve, b.len(), &sums, &c)
}

fn unsupported(field: &FieldTag) -> Error {
    Error::UnsupportedField {
        field: field.to_string(),
        reason: "the square-class group must be finite".into(),
    }
}

/// The affine map `t -> (t - r) / s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearMap {
    pub r: Rational,
    pub s: Rational,
}

impl LinearMap {
    pub fn apply(&self, field: &FieldTag, t: &Rational) -> Result<Rational> {
        field.div(&field.sub(t, &self.r), &self.s)
    }
}

/// All maps `(t - r) / s` with `s` a nonempty subset sum of `b` and `r`
/// any constant assignment on the complementary positions.
pub fn linear_family(
    curve: &SplitHyperellipticCurve,
    b: &BVector,
    budget: &Budget,
) -> Result<BTreeSet<LinearMap>> {
    let field = curve.field();
    let m = curve.m();
    let n = b.len();
    let upper = checked_power(m + 1, n, budget.max_cells).ok_or_else(|| Error::ResourceLimit {
        what: format!("linear family of size up to {}^{n}", m + 1),
        reached: n,
    })?;
    let mut family = BTreeSet::new();
    for mask in 1usize..(1 << n) {
        let stars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let fixed: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let s = b.subset_sum(field, &stars);
        debug_assert!(!field.is_zero(&s));
        let mut offsets = vec![field.from_i64(0)];
        for &i in &fixed {
            offsets = offsets
                .iter()
                .flat_map(|acc| {
                    curve
                        .roots()
                        .iter()
                        .map(move |a| field.add(acc, &field.mul(&b.values()[i], a)))
                })
                .collect();
        }
        family.extend(offsets.into_iter().map(|r| LinearMap { r, s: s.clone() }));
    }
    debug_assert!(family.len() <= upper);
    Ok(family)
}

struct Stage {
    b: BVector,
    sums: Vec<Rational>,
    exclusion: BTreeSet<Rational>,
}

fn load_stage<'a>(
    stages: &'a mut BTreeMap<usize, Stage>,
    curve: &SplitHyperellipticCurve,
    max_cells: usize,
    n: usize,
) -> Result<&'a Stage> {
    if !stages.contains_key(&n) {
        let b = choose_b(curve.field(), n)?;
        let sums = cell_sums(curve, &b, max_cells)?;
        let exclusion = sums.iter().cloned().collect();
        stages.insert(n, Stage { b, sums, exclusion });
    }
    Ok(&stages[&n])
}

/// Runs the line-to-point pipeline for one curve, caching the per-`N`
/// coefficient vectors and cell sums across parameters.
pub struct PointFinder {
    curve: SplitHyperellipticCurve,
    n_max: usize,
    budget: Budget,
    stages: BTreeMap<usize, Stage>,
}

impl PointFinder {
    pub fn new(curve: SplitHyperellipticCurve, n_max: usize, budget: Budget) -> Result<Self> {
        if curve.field().class_width().is_none() {
            return Err(unsupported(curve.field()));
        }
        Ok(PointFinder {
            curve,
            n_max,
            budget,
            stages: BTreeMap::new(),
        })
    }

    pub fn curve(&self) -> &SplitHyperellipticCurve {
        &self.curve
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn stage(&mut self, n: usize) -> Result<&Stage> {
        load_stage(&mut self.stages, &self.curve, self.budget.max_cells, n)
    }

    pub fn b(&mut self, n: usize) -> Result<BVector> {
        Ok(self.stage(n)?.b.clone())
    }

    /// A parameter is admissible when it avoids the `N = 1` exclusion set,
    /// i.e. it is not a root; larger `N` whose exclusion set contains it
    /// are skipped by [`PointFinder::find`].
    pub fn is_admissible(&mut self, c: &Rational) -> Result<bool> {
        let c = self.curve.field().element(c)?;
        Ok(!self.stage(1)?.exclusion.contains(&c))
    }

    /// Searches `N = 1..=n_max` for a monochromatic line of the coloring
    /// attached to `c` and turns the first one into a certified point.
    pub fn find(&mut self, c: &Rational) -> Result<Option<PointCertificate>> {
        let field = *self.curve.field();
        let c = field.element(c)?;
        let m = self.curve.m();
        let (n_max, max_cells) = (self.n_max, self.budget.max_cells);
        let (curve, stages) = (&self.curve, &mut self.stages);
        let found = find_line_incremental(
            |n| {
                let stage = load_stage(stages, curve, max_cells, n)?;
                if stage.exclusion.contains(&c) {
                    return Ok(None);
                }
                coloring_from_sums(curve, n, &stage.sums, &c).map(Some)
            },
            m,
            n_max,
            max_cells,
        )?;
        let Some(line) = found else { return Ok(None) };

        let b = self.stage(line.n)?.b.clone();
        let curve = &self.curve;
        let stars = line.template.star_positions();
        let mut r = field.from_i64(0);
        for (i, slot) in line.template.slots().iter().enumerate() {
            if let Slot::Fixed(j) = *slot {
                r = field.add(&r, &field.mul(&b.values()[i], &curve.roots()[j - 1]));
            }
        }
        let s = b.subset_sum(&field, &stars);
        let x = field.div(&field.sub(&c, &r), &s)?;
        let fx = curve.eval(&x);
        let width = field.class_width().expect("checked in new");
        let class = SquareClass::from_index(line.color, width);
        let (y, y_precision) = square_root(&field, &fx)?;
        Ok(Some(PointCertificate {
            curve: curve.clone(),
            c,
            n: line.n,
            b,
            template: line.template,
            star_set: stars.iter().map(|i| i + 1).collect(),
            r,
            s,
            class,
            x,
            y,
            y_precision,
        }))
    }
}

/// `y` with `y^2 = v` (exactly over `F_p`, to the field's precision over `Q_p`).
fn square_root(field: &FieldTag, v: &Rational) -> Result<(Rational, Option<u32>)> {
    match *field {
        FieldTag::PrimeField { p } => {
            let residue = modp::reduce(&v.to_integer(), p);
            let y = modp::sqrt_mod_p(residue, p)?;
            Ok((field.from_i64(y as i64), None))
        }
        FieldTag::PadicField { p, precision } => {
            if v.is_zero() {
                return Ok((Rational::zero(), Some(precision)));
            }
            Ok((hensel_sqrt(v, p, precision)?.value(), Some(precision)))
        }
        FieldTag::RationalField => Err(unsupported(field)),
    }
}

pub fn find_point_for_c(
    curve: &SplitHyperellipticCurve,
    c: &Rational,
    n_max: usize,
    budget: &Budget,
) -> Result<Option<PointCertificate>> {
    PointFinder::new(curve.clone(), n_max, *budget)?.find(c)
}

/// Outcome of running the pipeline over a stream of parameters.
#[derive(Debug, Clone)]
pub struct Enumeration {
    /// One certificate per distinct x, first parameter wins.
    pub certificates: Vec<PointCertificate>,
    pub admissible: usize,
    pub successes: usize,
    pub failures: usize,
    pub skipped: usize,
    /// Dimensions at which lines were found.
    pub dimensions_used: BTreeSet<usize>,
    /// Size of the union of the linear families at those dimensions.
    pub family_size: usize,
}

impl Enumeration {
    pub fn distinct_x(&self) -> usize {
        self.certificates.len()
    }

    /// `ceil(successes / |L|)`, the least number of distinct x the
    /// successes can account for.
    pub fn distinct_lower_bound(&self) -> usize {
        if self.successes == 0 {
            0
        } else {
            self.successes.div_ceil(self.family_size.max(1))
        }
    }

    pub fn distinctness_holds(&self) -> bool {
        self.distinct_x() >= self.distinct_lower_bound()
    }
}

/// Runs the pipeline on each admissible parameter until `limit` distinct
/// x-coordinates are certified or the stream ends.
pub fn enumerate_points<I>(
    curve: &SplitHyperellipticCurve,
    c_stream: I,
    limit: usize,
    n_max: usize,
    budget: &Budget,
) -> Result<Enumeration>
where
    I: IntoIterator<Item = Rational>,
{
    let mut finder = PointFinder::new(curve.clone(), n_max, *budget)?;
    let mut out = Enumeration {
        certificates: Vec::new(),
        admissible: 0,
        successes: 0,
        failures: 0,
        skipped: 0,
        dimensions_used: BTreeSet::new(),
        family_size: 0,
    };
    let mut seen_x = BTreeSet::new();
    if limit > 0 {
        for c in c_stream {
            if !finder.is_admissible(&c)? {
                out.skipped += 1;
                continue;
            }
            out.admissible += 1;
            match finder.find(&c)? {
                Some(cert) => {
                    out.successes += 1;
                    out.dimensions_used.insert(cert.n);
                    if seen_x.insert(cert.x.clone()) {
                        out.certificates.push(cert);
                        if out.certificates.len() == limit {
                            break;
                        }
                    }
                }
                None => out.failures += 1,
            }
        }
    }
    let mut family = BTreeSet::new();
    for &n in &out.dimensions_used {
        let b = finder.b(n)?;
        family.extend(linear_family(curve, &b, budget)?);
    }
    out.family_size = family.len();
    Ok(out)
}
