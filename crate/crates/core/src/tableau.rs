//! Fillings of Young diagrams with distinct positive integers.
//!
//! One type covers standard tableaux, the column-reversed `Q↑`, and the
//! partial tableaux produced during insertion. Rows and columns are 1-based
//! and rows are counted from the top.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        let t = Tableau::from_rows(raw.rows)?;
        if t.shape.parts() != raw.shape.as_slice() {
            return Err(Error::ShapeMismatch(format!(
                "declared shape {:?} but rows have shape {}",
                raw.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl From<Tableau> for RawTableau {
    fn from(t: Tableau) -> Self {
        RawTableau {
            shape: t.shape.parts().to_vec(),
            rows: t.rows,
        }
    }
}

impl Tableau {
    /// Validates that the row lengths form a partition and that entries are
    /// distinct and positive.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = if lengths.is_empty() {
            Partition::empty()
        } else {
            Partition::new(lengths).map_err(|e| Error::InvalidTableau(e.to_string()))?
        };
        let mut seen = std::collections::HashSet::new();
        for &v in rows.iter().flatten() {
            if v == 0 {
                return Err(Error::InvalidTableau("zero entry".into()));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidTableau(format!("entry {v} repeated")));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::from_parts_unchecked(rows.iter().map(Vec::len).collect());
        Tableau { shape, rows }
    }

    /// Builds a tableau of `shape` from its columns, each listed top to bottom.
    pub fn from_columns(shape: &Partition, columns: &[Vec<usize>]) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        for col in columns {
            for (i, &v) in col.iter().enumerate() {
                rows[i].push(v);
            }
        }
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn position_of(&self, value: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter().position(|&v| v == value).map(|j| (i + 1, j + 1))
        })
    }

    /// Entries of column `j`, top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows
            .iter()
            .take_while(|row| row.len() >= j)
            .map(|row| row[j - 1])
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (1..=self.shape.num_cols()).map(|j| self.column(j)).collect()
    }

    /// True when the entries are exactly `{1..n}`.
    pub fn is_permutation_filling(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        self.rows
            .iter()
            .flatten()
            .all(|&v| v <= n && !std::mem::replace(&mut seen[v], true))
    }

    /// The standard tableau whose column word is `1..n`.
    pub fn canonical(shape: &Partition) -> Tableau {
        let mut next = 1;
        let columns: Vec<Vec<usize>> = shape
            .column_lengths()
            .iter()
            .map(|&len| {
                let col: Vec<usize> = (next..next + len).collect();
                next += len;
                col
            })
            .collect();
        Tableau::from_columns(shape, &columns)
    }

    /// Reverses the entries of every column (`Q ↦ Q↑`).
    pub fn column_reverse(&self) -> Tableau {
        let columns: Vec<Vec<usize>> = self
            .columns()
            .into_iter()
            .map(|mut c| {
                c.reverse();
                c
            })
            .collect();
        Tableau::from_columns(&self.shape, &columns)
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    /// Whether every row of `Q↑` increases. Errors when `Q` is not standard.
    pub fn is_admissible(&self) -> Result<bool> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        Ok(self
            .column_reverse()
            .rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] < w[1])))
    }

    /// Second characterisation of admissibility: push every column to the
    /// bottom of a `rows × cols` box and check that the result is standard.
    pub fn bottom_justified_is_standard(&self) -> bool {
        let height = self.shape.num_rows();
        let width = self.shape.num_cols();
        let mut grid: Vec<Vec<Option<usize>>> = vec![vec![None; width]; height];
        for (j, col) in self.columns().iter().enumerate() {
            let offset = height - col.len();
            for (i, &v) in col.iter().enumerate() {
                grid[offset + i][j] = Some(v);
            }
        }
        for i in 0..height {
            for j in 0..width {
                let Some(v) = grid[i][j] else { continue };
                if let Some(Some(below)) = grid.get(i + 1).map(|r| r[j]) {
                    if below <= v {
                        return false;
                    }
                }
                if let Some(Some(right)) = grid[i].get(j + 1) {
                    if *right <= v {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Concatenation of columns left to right, each read top to bottom.
    pub fn column_word(&self) -> Vec<usize> {
        self.columns().into_iter().flatten().collect()
    }

    /// Concatenation of columns left to right, each read bottom to top.
    pub fn reverse_column_word(&self) -> Vec<usize> {
        self.columns()
            .into_iter()
            .flat_map(|c| c.into_iter().rev())
            .collect()
    }

    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Replaces each entry `i` by `sigma(i)`.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Tableau> {
        if sigma.n() != self.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                found: sigma.n(),
            });
        }
        if !self.is_permutation_filling() {
            return Err(Error::InvalidTableau("entries are not 1..n".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| sigma.apply(v)).collect())
            .collect();
        Ok(Tableau {
            shape: self.shape.clone(),
            rows,
        })
    }

    /// Exchanges the positions of entries `a` and `b`.
    pub fn swap_entries(&self, a: usize, b: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| match v {
                        v if v == a => b,
                        v if v == b => a,
                        v => v,
                    })
                    .collect()
            })
            .collect();
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

/// Number of standard tableaux of `shape`, by the hook length formula.
pub fn count_syt(shape: &Partition) -> u128 {
    let n = shape.size() as u128;
    let conj = shape.conjugate();
    // The hook product divides n!, and n! fits in u128 up to n = 34.
    let factorial: u128 = (1..=n).product();
    let hooks: u128 = shape
        .cells()
        .map(|(i, j)| (shape.part(i) - j + conj.part(j) - i + 1) as u128)
        .product();
    factorial / hooks
}

/// All standard tableaux of `shape`, sorted by row-reading word.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut fill = vec![Vec::<usize>::new(); shape.num_rows()];
    place_next(shape, &mut fill, 1, n, &mut out);
    out.sort_by_cached_key(|t| t.row_word());
    out
}

fn place_next(
    shape: &Partition,
    fill: &mut Vec<Vec<usize>>,
    value: usize,
    n: usize,
    out: &mut Vec<Tableau>,
) {
    if value > n {
        out.push(Tableau::from_rows_unchecked(fill.clone()));
        return;
    }
    for i in 0..fill.len() {
        let len = fill[i].len();
        let fits_row = len < shape.part(i + 1);
        let fits_above = i == 0 || fill[i - 1].len() > len;
        if fits_row && fits_above {
            fill[i].push(value);
            place_next(shape, fill, value + 1, n, out);
            fill[i].pop();
        }
    }
}
