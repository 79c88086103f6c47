//! Exhaustive search for α-colorings over all admissible recording tableaux.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{associated_permutation, validate_alpha_coloring, Coloring, ColoringOutcome};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{enumerate_syt, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Stop at the first coloring in search order.
    First,
    /// Count every coloring. Colors with equal counts are interchangeable,
    /// so each coloring is counted once up to relabeling them.
    Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum SearchOutcome {
    Found { outcome: Box<ColoringOutcome>, checked: u64 },
    Absent { checked: u64 },
    BudgetExhausted { checked: u64 },
    Counted { colorings: u64, checked: u64 },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&ColoringOutcome> {
        match self {
            SearchOutcome::Found { outcome, .. } => Some(outcome),
            _ => None,
        }
    }

    pub fn checked(&self) -> u64 {
        match *self {
            SearchOutcome::Found { checked, .. }
            | SearchOutcome::Absent { checked }
            | SearchOutcome::BudgetExhausted { checked }
            | SearchOutcome::Counted { checked, .. } => checked,
        }
    }
}

/// Admissible standard tableaux of `shape`, `T_shape` first.
pub fn admissible_tableaux(shape: &Partition) -> Vec<Tableau> {
    let canonical = Tableau::canonical(shape);
    let mut out = vec![canonical.clone()];
    out.extend(
        enumerate_syt(shape)
            .into_iter()
            .filter(|t| *t != canonical && t.is_admissible().unwrap_or(false)),
    );
    out
}

struct QResult {
    first: Option<Coloring>,
    found: u64,
    checked: u64,
    exhausted: bool,
}

/// Searches admissible `Q` of shape `shape` (T_shape first) and all colorings
/// with counts `alpha`. `budget` caps the number of colorings evaluated.
///
/// Shapes outside `B_alpha` are reported absent without searching.
pub fn search_alpha_coloring(alpha: &Partition, shape: &Partition, budget: u64, mode: SearchMode) -> Result<SearchOutcome> {
    if alpha.size() != shape.size() {
        return Err(Error::SizeMismatch {
            expected: alpha.size(),
            found: shape.size(),
        });
    }
    if shape.is_empty() {
        return Err(Error::Empty("shape"));
    }
    if !alpha.bounding_box().contains(shape) {
        return Ok(match mode {
            SearchMode::First => SearchOutcome::Absent { checked: 0 },
            SearchMode::Count => SearchOutcome::Counted { colorings: 0, checked: 0 },
        });
    }
    let candidates = admissible_tableaux(shape);
    let results: Vec<QResult> = candidates
        .par_iter()
        .map(|q| search_one(q, alpha, budget, mode))
        .collect();

    let mut checked = 0u64;
    let mut colorings = 0u64;
    for (q, r) in candidates.iter().zip(results) {
        checked += r.checked;
        colorings += r.found;
        if checked > budget || r.exhausted {
            return Ok(SearchOutcome::BudgetExhausted { checked: checked.min(budget) });
        }
        if mode == SearchMode::First {
            if let Some(coloring) = r.first {
                let outcome = validate_alpha_coloring(q, &coloring, alpha)?;
                return Ok(SearchOutcome::Found {
                    outcome: Box::new(outcome),
                    checked,
                });
            }
        }
    }
    Ok(match mode {
        SearchMode::First => SearchOutcome::Absent { checked },
        SearchMode::Count => SearchOutcome::Counted { colorings, checked },
    })
}

fn search_one(q: &Tableau, alpha: &Partition, budget: u64, mode: SearchMode) -> QResult {
    let up = q.column_reverse();
    let shape = q.shape();
    let cells: Vec<(usize, usize)> = (1..=shape.num_cols())
        .flat_map(|j| (1..=shape.column_length(j)).map(move |i| (i, j)))
        .collect();
    let mut state = Dfs {
        up: &up,
        cells: &cells,
        left: alpha.parts().to_vec(),
        parts: alpha.parts(),
        grid: shape.parts().iter().map(|&l| vec![0; l]).collect(),
        used: vec![false; alpha.len()],
        budget,
        mode,
        result: QResult {
            first: None,
            found: 0,
            checked: 0,
            exhausted: false,
        },
    };
    state.go(0);
    state.result
}

struct Dfs<'a> {
    up: &'a Tableau,
    cells: &'a [(usize, usize)],
    left: Vec<usize>,
    parts: &'a [usize],
    grid: Vec<Vec<usize>>,
    used: Vec<bool>,
    budget: u64,
    mode: SearchMode,
    result: QResult,
}

impl Dfs<'_> {
    /// Returns true to stop.
    fn go(&mut self, k: usize) -> bool {
        if k == self.cells.len() {
            return self.evaluate();
        }
        let (i, j) = self.cells[k];
        for c in 0..self.left.len() {
            if self.left[c] == 0 {
                continue;
            }
            // equal-size colors are interchangeable: open them in order
            if c > 0 && self.parts[c] == self.parts[c - 1] && !self.used[c - 1] {
                continue;
            }
            let first_use = !self.used[c];
            self.used[c] = true;
            self.left[c] -= 1;
            self.grid[i - 1][j - 1] = c + 1;
            let stop = self.go(k + 1);
            self.left[c] += 1;
            if first_use {
                self.used[c] = false;
            }
            if stop {
                return true;
            }
        }
        false
    }

    fn evaluate(&mut self) -> bool {
        if self.result.checked >= self.budget {
            self.result.exhausted = true;
            return true;
        }
        self.result.checked += 1;
        let coloring = Coloring::from_rows(self.grid.clone()).expect("complete coloring");
        let sigma = associated_permutation(self.up, &coloring).expect("valid coloring");
        let p = self.up.apply_permutation(&sigma).expect("same size");
        if !p.is_standard() {
            return false;
        }
        self.result.found += 1;
        match self.mode {
            SearchMode::First => {
                self.result.first = Some(coloring);
                true
            }
            SearchMode::Count => false,
        }
    }
}
