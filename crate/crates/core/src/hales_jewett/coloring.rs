use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::template::Cell;
use crate::budget::checked_power;
use crate::error::{Error, Result};

pub type ColorId = usize;

type ColorFn = dyn Fn(&Cell) -> ColorId + Send + Sync;

#[derive(Clone)]
enum Storage {
    Dense(Vec<u16>),
    OnDemand(Arc<ColorFn>),
}

/// A `k`-coloring of `[1, m]^N`.
///
/// Small boards are stored as a table in lexicographic cell order; boards
/// above the cell cap keep the coloring function and evaluate on demand.
#[derive(Clone)]
pub struct Coloring {
    m: usize,
    n: usize,
    k: usize,
    storage: Storage,
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Coloring");
        d.field("m", &self.m)
            .field("n", &self.n)
            .field("k", &self.k);
        match &self.storage {
            Storage::Dense(t) => d.field("table", t),
            Storage::OnDemand(_) => d.field("table", &"<on demand>"),
        };
        d.finish()
    }
}

impl PartialEq for Coloring {
    fn eq(&self, other: &Self) -> bool {
        match (&self.storage, &other.storage) {
            (Storage::Dense(a), Storage::Dense(b)) => {
                self.m == other.m && self.n == other.n && self.k == other.k && a == b
            }
            _ => false,
        }
    }
}

impl Coloring {
    pub fn from_table(m: usize, n: usize, k: usize, table: Vec<ColorId>) -> Result<Self> {
        if m == 0 || n == 0 || k == 0 {
            return Err(Error::Precondition("m, N and k must be positive".into()));
        }
        let cells = checked_power(m, n, usize::MAX)
            .ok_or_else(|| Error::Precondition("board size overflows".into()))?;
        if table.len() != cells {
            return Err(Error::Parse(format!(
                "coloring has {} cells, expected {m}^{n} = {cells}",
                table.len()
            )));
        }
        if k > u16::MAX as usize + 1 {
            return Err(Error::Precondition(format!("too many colors: {k}")));
        }
        if let Some(&c) = table.iter().find(|&&c| c >= k) {
            return Err(Error::Parse(format!("color {c} out of range for k = {k}")));
        }
        Ok(Coloring {
            m,
            n,
            k,
            storage: Storage::Dense(table.into_iter().map(|c| c as u16).collect()),
        })
    }

    /// Tabulates `f` when the board has at most `max_cells` cells.
    pub fn from_fn<F>(m: usize, n: usize, k: usize, max_cells: usize, f: F) -> Result<Self>
    where
        F: Fn(&Cell) -> ColorId + Send + Sync + 'static,
    {
        match checked_power(m, n, max_cells) {
            Some(cells) => {
                let table = (0..cells).map(|i| f(&Cell::from_index(i, m, n))).collect();
                Coloring::from_table(m, n, k, table)
            }
            None => Ok(Coloring {
                m,
                n,
                k,
                storage: Storage::OnDemand(Arc::new(f)),
            }),
        }
    }

    /// Uniformly random coloring from a fixed seed.
    pub fn random(m: usize, n: usize, k: usize, seed: u64, max_cells: usize) -> Result<Self> {
        let cells = checked_power(m, n, max_cells).ok_or(Error::ResourceLimit {
            what: format!("random coloring of {m}^{n} cells"),
            reached: n,
        })?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let table = (0..cells).map(|_| rng.gen_range(0..k)).collect();
        Coloring::from_table(m, n, k, table)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cell_count(&self) -> usize {
        self.m.pow(self.n as u32)
    }

    pub fn color(&self, cell: &Cell) -> ColorId {
        match &self.storage {
            Storage::Dense(t) => t[cell.index(self.m)] as ColorId,
            Storage::OnDemand(f) => f(cell),
        }
    }

    pub fn color_at(&self, index: usize) -> ColorId {
        match &self.storage {
            Storage::Dense(t) => t[index] as ColorId,
            Storage::OnDemand(f) => f(&Cell::from_index(index, self.m, self.n)),
        }
    }

    pub fn table(&self) -> Vec<ColorId> {
        (0..self.cell_count()).map(|i| self.color_at(i)).collect()
    }

    /// File form: header `m N k`, then one `coords:color` line per cell.
    pub fn to_sparse_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.m, self.n, self.k);
        for i in 0..self.cell_count() {
            let cell = Cell::from_index(i, self.m, self.n);
            let coords: Vec<String> = cell.coords.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("{}:{}\n", coords.join(","), self.color_at(i)));
        }
        out
    }

    /// File form: header `m N k`, then a single line of color digits.
    pub fn to_dense_text(&self) -> Result<String> {
        if self.k > 10 {
            return Err(Error::Precondition("dense form needs k <= 10".into()));
        }
        let digits: String = (0..self.cell_count())
            .map(|i| char::from(b'0' + self.color_at(i) as u8))
            .collect();
        Ok(format!("{} {} {}\n{}\n", self.m, self.n, self.k, digits))
    }

    /// Parses either file form.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty coloring file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header {header:?}")))
            })
            .collect::<Result<_>>()?;
        let [m, n, k] = nums[..] else {
            return Err(Error::Parse(format!(
                "header must be `m N k`, got {header:?}"
            )));
        };
        let cells = checked_power(m, n, usize::MAX)
            .ok_or_else(|| Error::Parse("board size overflows".into()))?;
        let body: Vec<&str> = lines.collect();
        if body.len() == 1 && !body[0].contains(':') {
            let table = body[0]
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad color digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Coloring::from_table(m, n, k, table);
        }
        if body.len() != cells {
            return Err(Error::Parse(format!(
                "expected {cells} cell lines, got {}",
                body.len()
            )));
        }
        let mut table = vec![usize::MAX; cells];
        for line in body {
            let (coords, color) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad cell line {line:?}")))?;
            let coords = coords
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cell {line:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != n {
                return Err(Error::Parse(format!("cell {line:?} has wrong dimension")));
            }
            let cell = Cell::new(coords, m).map_err(|e| Error::Parse(e.to_string()))?;
            let color = color
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad color in {line:?}")))?;
            let slot = &mut table[cell.index(m)];
            if *slot != usize::MAX {
                return Err(Error::Parse(format!("duplicate cell {line:?}")));
            }
            *slot = color;
        }
        Coloring::from_table(m, n, k, table)
    }
}
