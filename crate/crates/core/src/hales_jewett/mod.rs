//! Combinatorial lines in `[1, m]^N`: template enumeration, monochromatic
//! line search, line-free colorings by backtracking, and exact
//! Hales-Jewett numbers for tiny parameters.

mod coloring;
mod template;

pub use coloring::{ColorId, Coloring};
pub use template::{enumerate_templates, line_cells, Cell, LineTemplate, Slot, TemplateIter};

use crate::budget::checked_power;
use crate::error::{Error, Result};

/// A monochromatic line found at some dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundLine {
    pub n: usize,
    pub template: LineTemplate,
    pub color: ColorId,
}

/// The first monochromatic line in enumeration order, with its color.
pub fn find_monochromatic_line(coloring: &Coloring) -> Option<(LineTemplate, ColorId)> {
    let m = coloring.m();
    enumerate_templates(m, coloring.n()).find_map(|t| {
        let first = coloring.color_at(t.cell_indices(m).next()?);
        let mono = t.cell_indices(m).all(|i| coloring.color_at(i) == first);
        mono.then_some((t, first))
    })
}

/// Tries `N = 1, 2, ..., n_max` and stops at the first dimension whose
/// coloring has a monochromatic line.
///
/// `family` may return `Ok(None)` to skip a dimension. Boards larger than
/// `max_cells` abort with a resource-limit error naming the dimension.
pub fn find_line_incremental<F>(
    mut family: F,
    m: usize,
    n_max: usize,
    max_cells: usize,
) -> Result<Option<FoundLine>>
where
    F: FnMut(usize) -> Result<Option<Coloring>>,
{
    for n in 1..=n_max {
        if checked_power(m, n, max_cells).is_none() {
            return Err(Error::ResourceLimit {
                what: format!("{m}^{n} cells exceeds cap {max_cells}"),
                reached: n,
            });
        }
        let Some(coloring) = family(n)? else { continue };
        if coloring.m() != m || coloring.n() != n {
            return Err(Error::Precondition(format!(
                "family returned a coloring of [1,{}]^{} at N = {n}",
                coloring.m(),
                coloring.n()
            )));
        }
        if let Some((template, color)) = find_monochromatic_line(&coloring) {
            return Ok(Some(FoundLine { n, template, color }));
        }
    }
    Ok(None)
}

/// The lexicographically first `k`-coloring of `[1, m]^N` without a
/// monochromatic line, if any.
///
/// Cells are assigned in lexicographic order and colors in ascending order;
/// a line is checked as soon as its last cell is colored. A cell never
/// opens a color more than one above those already used, which only prunes
/// relabelings of colorings that come later in the order.
pub fn line_free_coloring(m: usize, k: usize, n: usize, cap: usize) -> Result<Option<Coloring>> {
    if m == 0 || k == 0 || n == 0 {
        return Err(Error::Precondition("m, k and N must be positive".into()));
    }
    let cells = checked_power(m, n, cap).ok_or(Error::SearchSpaceTooLarge {
        cells: (m as u128).saturating_pow(n as u32),
        cap: cap as u128,
    })?;
    // lines grouped by their last (largest-index) cell
    let mut closing: Vec<Vec<Vec<usize>>> = vec![Vec::new(); cells];
    for t in enumerate_templates(m, n) {
        let idx: Vec<usize> = t.cell_indices(m).collect();
        let last = *idx.iter().max().expect("m >= 1");
        closing[last].push(idx);
    }
    let mut colors = vec![usize::MAX; cells];
    if backtrack(0, 0, k, &closing, &mut colors) {
        Coloring::from_table(m, n, k, colors).map(Some)
    } else {
        Ok(None)
    }
}

fn backtrack(
    cell: usize,
    used: usize,
    k: usize,
    closing: &[Vec<Vec<usize>>],
    colors: &mut [usize],
) -> bool {
    if cell == colors.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        colors[cell] = c;
        let ok = closing[cell]
            .iter()
            .all(|line| line.iter().any(|&i| colors[i] != c));
        if ok && backtrack(cell + 1, used.max(c + 1), k, closing, colors) {
            return true;
        }
    }
    colors[cell] = usize::MAX;
    false
}

/// Least `N <= n_cap` such that every `k`-coloring of `[1, m]^N` has a
/// monochromatic line.
pub fn hj_number_exact(m: usize, k: usize, n_cap: usize, cap: usize) -> Result<Option<usize>> {
    for n in 1..=n_cap {
        if line_free_coloring(m, k, n, cap)?.is_none() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// True when no template over the coloring's board is monochromatic.
pub fn is_line_free(coloring: &Coloring) -> bool {
    find_monochromatic_line(coloring).is_none()
}
