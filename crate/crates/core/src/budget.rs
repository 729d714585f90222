//! Resource caps shared by the search routines.

use std::env;

/// Cells above which a coloring is evaluated on demand instead of tabulated.
pub const DEFAULT_MAX_CELLS: usize = 10_000_000;
/// Trial-division bound used by squarefree-part computations.
pub const DEFAULT_TRIAL_DIVISION_BOUND: u64 = 1_000_000;
/// Largest board the line-free backtracking search will attempt.
pub const DEFAULT_BACKTRACK_CELLS: usize = 64;
/// Default cap on the incremental dimension search.
pub const DEFAULT_N_MAX: usize = 6;
/// Default working precision for p-adic square roots.
pub const DEFAULT_PADIC_PRECISION: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Dense coloring tables are only built up to this many cells; it also
    /// bounds exclusion sets and linear families.
    pub max_cells: usize,
    pub trial_division_bound: u64,
    pub backtrack_cells: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_cells: DEFAULT_MAX_CELLS,
            trial_division_bound: DEFAULT_TRIAL_DIVISION_BOUND,
            backtrack_cells: DEFAULT_BACKTRACK_CELLS,
        }
    }
}

impl Budget {
    /// Defaults overridden by `HP_MAX_CELLS` and `HP_TRIAL_DIVISION_BOUND`.
    pub fn from_env() -> Self {
        let mut budget = Budget::default();
        if let Some(v) = env::var("HP_MAX_CELLS").ok().and_then(|s| s.parse().ok()) {
            budget.max_cells = v;
        }
        if let Some(v) = env::var("HP_TRIAL_DIVISION_BOUND")
            .ok()
            .and_then(|s| s.parse().ok())
        {
            budget.trial_division_bound = v;
        }
        budget
    }
}

/// `base^exp` if it does not exceed `cap`.
pub(crate) fn checked_power(base: usize, exp: usize, cap: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > cap {
            return None;
        }
    }
    Some(acc)
}
