//! Integer partitions, used both as tableau shapes and as cycle types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The parts are stored densely with no trailing zeros. The empty partition
/// is representable (it is the shape of the empty tableau during insertion)
/// but every public constructor that takes user input rejects it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    parts: Vec<usize>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = Error;
    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::new(raw.parts)
    }
}

impl From<Partition> for RawPartition {
    fn from(p: Partition) -> Self {
        RawPartition { parts: p.parts }
    }
}

/// Bounds on the number of rows and columns of the shapes in `B_alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub max_rows: usize,
    pub max_cols: usize,
}

impl BoundingBox {
    pub fn contains(&self, shape: &Partition) -> bool {
        shape.num_rows() <= self.max_rows && shape.first_row() <= self.max_cols
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeStats {
    pub tail_length: usize,
    pub is_hook: bool,
    pub odd_column_count: usize,
}

impl Partition {
    /// Builds a partition from its parts, rejecting empty, zero or increasing input.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Empty("partition has no parts"));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single_row(n: usize) -> Self {
        Partition::from_parts_unchecked(vec![n])
    }

    pub fn single_column(n: usize) -> Self {
        Partition::from_parts_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the diagram, or cycles of a cycle type).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part, 1-based, with zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(1)
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.first_row()
    }

    /// Length of column `j` (1-based).
    pub fn column_length(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        let parts = (1..=cols).map(|j| self.column_length(j)).collect();
        Partition { parts }
    }

    /// Column lengths, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().parts
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn stats(&self) -> ShapeStats {
        let tail_length = self.part(1) - self.part(2);
        let is_hook = self.len() >= 2 && self.part(2) == 1 && self.part(1) > 1;
        let odd_column_count = self.column_lengths().iter().filter(|&&c| c % 2 == 1).count();
        ShapeStats {
            tail_length,
            is_hook,
            odd_column_count,
        }
    }

    /// The bounding box of this partition read as a cycle type.
    pub fn bounding_box(&self) -> BoundingBox {
        let n = self.size();
        let r = self.len();
        let twos = self.multiplicity(2);
        let ones = self.multiplicity(1);
        let has_fixed_point = usize::from(self.parts.last() == Some(&1));
        BoundingBox {
            max_rows: n - r + twos + has_fixed_point,
            max_cols: n - r + ones,
        }
    }

    /// All cells `(row, col)`, 1-based, in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    /// Whether `self` is contained in `other` as a Young diagram.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Exponent form is accepted on input only, e.g. `2^4,1^2`.
    pub fn parse(text: &str) -> Result<Self> {
        let body = text.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        if body.trim().is_empty() {
            return Err(Error::Empty("partition literal"));
        }
        let mut parts = Vec::new();
        for token in body.split(|c: char| c == ',' || c.is_whitespace()) {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (value, reps) = match token.split_once('^') {
                Some((v, e)) => (v, e),
                None => (token, "1"),
            };
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {token:?}")))?;
            let reps: usize = reps
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
            parts.extend(std::iter::repeat_n(value, reps));
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

/// Iterator over the partitions of `n` in reverse lexicographic order,
/// starting at `(n)` and ending at `(1^n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_parts_unchecked(cur.clone());
        self.current = successor(cur);
        Some(out)
    }
}

fn successor(mut parts: Vec<usize>) -> Option<Vec<usize>> {
    let mut ones = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        ones += 1;
    }
    let last = parts.last_mut()?;
    *last -= 1;
    let cap = *last;
    let mut rest = ones + 1;
    while rest > 0 {
        let p = rest.min(cap);
        parts.push(p);
        rest -= p;
    }
    Some(parts)
}

pub fn partitions(n: usize) -> Result<Partitions> {
    if n == 0 {
        return Err(Error::Empty("partitions of zero"));
    }
    Ok(Partitions {
        current: Some(vec![n]),
    })
}

pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    Ok(partitions(n)?.collect())
}

/// `B_alpha`: partitions of `|alpha|` inside the bounding box, in enumeration order.
pub fn enumerate_b_alpha(alpha: &Partition) -> Vec<Partition> {
    let bbox = alpha.bounding_box();
    match partitions(alpha.size()) {
        Ok(iter) => iter.filter(|l| bbox.contains(l)).collect(),
        Err(_) => Vec::new(),
    }
}
