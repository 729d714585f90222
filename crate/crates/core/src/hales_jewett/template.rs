use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A point of `[1, m]^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub coords: Vec<usize>,
}

impl Cell {
    pub fn new(coords: Vec<usize>, m: usize) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidTemplate(
                "cell needs at least one coordinate".into(),
            ));
        }
        if let Some(&bad) = coords.iter().find(|&&c| c == 0 || c > m) {
            return Err(Error::InvalidTemplate(format!(
                "symbol {bad} outside [1, {m}]"
            )));
        }
        Ok(Cell { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Position in lexicographic order, first coordinate most significant.
    pub fn index(&self, m: usize) -> usize {
        self.coords.iter().fold(0, |acc, &c| acc * m + (c - 1))
    }

    pub fn from_index(mut index: usize, m: usize, n: usize) -> Cell {
        let mut coords = vec![0; n];
        for slot in coords.iter_mut().rev() {
            *slot = index % m + 1;
            index /= m;
        }
        Cell { coords }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    /// The wildcard; sorts before every fixed symbol.
    Star,
    Fixed(usize),
}

/// A combinatorial line: fixed symbols plus at least one wildcard slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineTemplate {
    slots: Vec<Slot>,
}

impl LineTemplate {
    pub fn new(slots: Vec<Slot>, m: usize) -> Result<Self> {
        if slots.is_empty() {
            return Err(Error::InvalidTemplate("empty template".into()));
        }
        for s in &slots {
            if let Slot::Fixed(j) = *s {
                if j == 0 || j > m {
                    return Err(Error::InvalidTemplate(format!(
                        "symbol {j} outside [1, {m}]"
                    )));
                }
            }
        }
        if !slots.contains(&Slot::Star) {
            return Err(Error::DegenerateLine);
        }
        Ok(LineTemplate { slots })
    }

    pub(crate) fn from_slots_unchecked(slots: Vec<Slot>) -> Self {
        LineTemplate { slots }
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    /// Zero-based positions of the wildcard slots.
    pub fn star_positions(&self) -> Vec<usize> {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Slot::Star)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn star_count(&self) -> usize {
        self.slots.iter().filter(|s| **s == Slot::Star).count()
    }

    /// The cell obtained by writing `symbol` into every wildcard.
    pub fn cell(&self, symbol: usize) -> Cell {
        Cell {
            coords: self
                .slots
                .iter()
                .map(|s| match *s {
                    Slot::Star => symbol,
                    Slot::Fixed(j) => j,
                })
                .collect(),
        }
    }

    /// Lexicographic indices of the line's cells for symbols `1..=m`.
    pub(crate) fn cell_indices(&self, m: usize) -> impl Iterator<Item = usize> + '_ {
        let mut base = 0;
        let mut step = 0;
        for s in &self.slots {
            base *= m;
            step *= m;
            match *s {
                Slot::Star => step += 1,
                Slot::Fixed(j) => base += j - 1,
            }
        }
        (0..m).map(move |j| base + j * step)
    }
}

/// The `m` cells of a line, ordered by the wildcard symbol.
pub fn line_cells(template: &LineTemplate, m: usize) -> Result<Vec<Cell>> {
    let checked = LineTemplate::new(template.slots.clone(), m)?;
    Ok((1..=m).map(|j| checked.cell(j)).collect())
}

impl fmt::Display for LineTemplate {
    /// Symbols are written without separators when every symbol is a single
    /// digit, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.slots.iter().all(|s| match s {
            Slot::Star => true,
            Slot::Fixed(j) => *j < 10,
        });
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Star => "*".to_string(),
                Slot::Fixed(j) => j.to_string(),
            })
            .collect();
        if compact {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for LineTemplate {
    type Err = Error;

    /// Parses without an alphabet bound; use [`LineTemplate::new`] to check
    /// symbols against `m`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<String> = if s.contains(',') {
            s.split(',').map(|t| t.trim().to_string()).collect()
        } else {
            s.chars().map(|c| c.to_string()).collect()
        };
        let slots = tokens
            .iter()
            .map(|t| match t.as_str() {
                "*" => Ok(Slot::Star),
                t => t
                    .parse::<usize>()
                    .map(Slot::Fixed)
                    .map_err(|_| Error::Parse(format!("bad template symbol {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LineTemplate::new(slots, usize::MAX)
    }
}

/// Every template over `[1, m]^N`: fewest wildcards first, then
/// lexicographic with the wildcard before `1`.
pub fn enumerate_templates(m: usize, n: usize) -> TemplateIter {
    TemplateIter {
        m,
        n,
        stars: 1,
        word: vec![0; n],
        started: false,
        done: m == 0 || n == 0,
    }
}

pub struct TemplateIter {
    m: usize,
    n: usize,
    stars: usize,
    /// 0 encodes the wildcard, `1..=m` the fixed symbols.
    word: Vec<usize>,
    started: bool,
    done: bool,
}

impl TemplateIter {
    /// Advances the odometer; false once it wraps.
    fn step(&mut self) -> bool {
        for i in (0..self.n).rev() {
            if self.word[i] < self.m {
                self.word[i] += 1;
                return true;
            }
            self.word[i] = 0;
        }
        false
    }
}

impl Iterator for TemplateIter {
    type Item = LineTemplate;

    fn next(&mut self) -> Option<LineTemplate> {
        loop {
            if self.done {
                return None;
            }
            if self.started {
                if !self.step() {
                    self.stars += 1;
                    if self.stars > self.n {
                        self.done = true;
                        return None;
                    }
                }
            } else {
                self.started = true;
            }
            if self.word.iter().filter(|&&w| w == 0).count() == self.stars {
                let slots = self
                    .word
                    .iter()
                    .map(|&w| if w == 0 { Slot::Star } else { Slot::Fixed(w) })
                    .collect();
                return Some(LineTemplate::from_slots_unchecked(slots));
            }
        }
    }
}
