//! Colorings of `Q↑` whose per-color arrow cycles produce a standard tableau.
//!
//! For every color, the boxes of that color are treated as a diagram of their
//! own: column lengths are the number of boxes of the color in each column,
//! the rightmost column is the rightmost one containing the color, and boxes
//! are ordered top to bottom. In that restricted diagram the bottom box of
//! every column except the rightmost (and except columns with one box) is
//! slashed. Arrows start at the top of the leftmost column, zig-zag
//! bottom/top through the unslashed boxes, hop to the top of the next
//! column, and after the rightmost column return through the slashed boxes
//! from right to left. An arrow `x → y` means the entry at `x` moves to `y`.

mod construct;
pub mod search;

use serde::{Deserialize, Serialize};

pub use construct::{construct_two_cycle, is_unattainable_pair};
pub use search::{search_alpha_coloring, SearchMode, SearchOutcome};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::rs::{rs_forward, RsPair};
use crate::tableau::Tableau;

/// Color index 1, matched with the largest part of a two-part cycle type.
pub const BLUE: usize = 1;
/// Color index 2, matched with the smaller part.
pub const RED: usize = 2;

/// An assignment of color indices `1..=r` to the cells of a shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct Coloring {
    shape: Partition,
    colors: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    shape: Vec<usize>,
    colors: Vec<[usize; 3]>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;
    fn try_from(raw: RawColoring) -> Result<Self> {
        let shape = Partition::new(raw.shape)?;
        let mut colors: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        for [row, col, color] in raw.colors {
            if !shape.contains_cell(row, col) {
                return Err(Error::ColoringMismatch(format!("cell ({row},{col}) outside shape")));
            }
            if color == 0 {
                return Err(Error::ColoringMismatch("color indices start at 1".into()));
            }
            if std::mem::replace(&mut colors[row - 1][col - 1], color) != 0 {
                return Err(Error::ColoringMismatch(format!("cell ({row},{col}) colored twice")));
            }
        }
        Coloring::from_rows(colors)
    }
}

impl From<Coloring> for RawColoring {
    fn from(c: Coloring) -> Self {
        let colors = c
            .shape
            .cells()
            .map(|(i, j)| [i, j, c.colors[i - 1][j - 1]])
            .collect();
        RawColoring {
            shape: c.shape.parts().to_vec(),
            colors,
        }
    }
}

impl Coloring {
    pub fn from_rows(colors: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = colors.iter().map(Vec::len).collect();
        let shape = Partition::new(lengths)?;
        if colors.iter().flatten().any(|&c| c == 0) {
            return Err(Error::ColoringMismatch("uncolored cell".into()));
        }
        Ok(Coloring { shape, colors })
    }

    /// Every cell gets color 1.
    pub fn uniform(shape: &Partition) -> Self {
        Coloring {
            shape: shape.clone(),
            colors: shape.parts().iter().map(|&l| vec![1; l]).collect(),
        }
    }

    /// Colors the cells of `tableau` by the color assigned to their entry.
    pub fn from_entry_colors(tableau: &Tableau, color_of_entry: impl Fn(usize) -> usize) -> Result<Self> {
        let colors = tableau
            .rows()
            .iter()
            .map(|r| r.iter().map(|&v| color_of_entry(v)).collect())
            .collect();
        Coloring::from_rows(colors)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.colors
    }

    pub fn color(&self, row: usize, col: usize) -> usize {
        self.colors[row - 1][col - 1]
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `counts()[c - 1]` is the number of cells of color `c`.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.num_colors()];
        for &c in self.colors.iter().flatten() {
            counts[c - 1] += 1;
        }
        counts
    }

    /// Entries of `tableau` carrying color `c`, in row-reading order.
    pub fn entries_of(&self, tableau: &Tableau, c: usize) -> Vec<usize> {
        self.shape
            .cells()
            .filter(|&(i, j)| self.color(i, j) == c)
            .filter_map(|(i, j)| tableau.entry(i, j))
            .collect()
    }
}

/// Per-box colors of one column and the terminal box of each color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpiralResult {
    /// Colors top to bottom.
    pub color_of: Vec<usize>,
    /// `(color, row)` with `row` counted from the top, 1-based.
    pub terminal_box: Vec<(usize, usize)>,
}

impl SpiralResult {
    pub fn terminal(&self, color: usize) -> Option<usize> {
        self.terminal_box.iter().find(|(c, _)| *c == color).map(|&(_, r)| r)
    }

    /// Terminal row counted from the bottom, matching entries of the first
    /// column of `T↑`.
    pub fn terminal_from_bottom(&self, color: usize) -> Option<usize> {
        self.terminal(color).map(|r| self.color_of.len() + 1 - r)
    }

    /// Color of the lower of the two terminal boxes.
    pub fn lower_terminal_color(&self) -> Option<usize> {
        self.terminal_box.iter().max_by_key(|(_, r)| *r).map(|&(c, _)| c)
    }

    /// Color of the higher of the two terminal boxes.
    pub fn higher_terminal_color(&self) -> Option<usize> {
        self.terminal_box.iter().min_by_key(|(_, r)| *r).map(|&(c, _)| c)
    }
}

/// Indices `0..len` visited bottom, top, next bottom, next top, ...
/// (rows counted from the top). Flipped when `upside_down`.
fn spiral_positions(len: usize, upside_down: bool) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    let (mut lo, mut hi) = (0usize, len);
    let mut take_bottom = !upside_down;
    while lo < hi {
        if take_bottom {
            hi -= 1;
            out.push(hi);
        } else {
            out.push(lo);
            lo += 1;
        }
        take_bottom = !take_bottom;
    }
    out
}

/// Spiral coloring of a column of `length` boxes.
///
/// Starting with `outside`, each color in turn takes the bottommost then the
/// topmost free box; once a color runs out, the remaining boxes go to the
/// other color. The terminal box of a color is the last box of its own
/// bottom/top zig-zag through the boxes it received.
pub fn spiral_coloring(
    length: usize,
    count_outside: usize,
    count_inside: usize,
    outside: usize,
    inside: usize,
) -> Result<SpiralResult> {
    spiral_impl(length, count_outside, count_inside, outside, inside, false)
}

/// The same scheme reflected vertically: top first, then bottom.
pub fn upside_down_spiral_coloring(
    length: usize,
    count_outside: usize,
    count_inside: usize,
    outside: usize,
    inside: usize,
) -> Result<SpiralResult> {
    spiral_impl(length, count_outside, count_inside, outside, inside, true)
}

fn spiral_impl(
    length: usize,
    count_outside: usize,
    count_inside: usize,
    outside: usize,
    inside: usize,
    upside_down: bool,
) -> Result<SpiralResult> {
    if count_outside + count_inside != length {
        return Err(Error::ColoringMismatch(format!(
            "spiral counts {count_outside} + {count_inside} != column length {length}"
        )));
    }
    let mut color_of = vec![0; length];
    let (mut lo, mut hi) = (0usize, length);
    let mut left = [count_outside, count_inside];
    let colors = [outside, inside];
    let mut turn = 0;
    while lo < hi && left[0] > 0 && left[1] > 0 {
        for step in 0..2 {
            if left[turn] == 0 || lo >= hi {
                break;
            }
            let bottom_first = !upside_down;
            let idx = if (step == 0) == bottom_first {
                hi -= 1;
                hi
            } else {
                lo += 1;
                lo - 1
            };
            color_of[idx] = colors[turn];
            left[turn] -= 1;
        }
        turn = 1 - turn;
    }
    let survivor = if left[0] > 0 { 0 } else { 1 };
    for slot in color_of[lo..hi].iter_mut() {
        *slot = colors[survivor];
    }
    let mut terminal_box = Vec::new();
    for &c in &colors {
        let own: Vec<usize> = (0..length).filter(|&i| color_of[i] == c).collect();
        if let Some(&last) = spiral_positions(own.len(), upside_down).last() {
            terminal_box.push((c, own[last] + 1));
        }
    }
    terminal_box.dedup();
    Ok(SpiralResult {
        color_of,
        terminal_box,
    })
}

/// The cyclic arrow order through the boxes of one color. `columns` holds,
/// for each column containing the color (left to right), its rows top to
/// bottom.
fn arrow_order(columns: &[(usize, Vec<usize>)]) -> Vec<(usize, usize)> {
    let last = columns.len().saturating_sub(1);
    let mut order = Vec::new();
    let mut slashed = Vec::new();
    for (k, (col, rows)) in columns.iter().enumerate() {
        let slash = k != last && rows.len() >= 2;
        let live = if slash { &rows[..rows.len() - 1] } else { &rows[..] };
        if slash {
            slashed.push((rows[rows.len() - 1], *col));
        }
        let (mut lo, mut hi) = (0usize, live.len());
        let mut top = true;
        while lo < hi {
            if top {
                order.push((live[lo], *col));
                lo += 1;
            } else {
                hi -= 1;
                order.push((live[hi], *col));
            }
            top = !top;
        }
    }
    order.extend(slashed.into_iter().rev());
    order
}

/// The permutation `sigma` such that `sigma · Q↑` is obtained by moving every
/// entry of `q_up` one step along the arrows of its color.
pub fn associated_permutation(q_up: &Tableau, coloring: &Coloring) -> Result<Permutation> {
    if q_up.shape() != coloring.shape() {
        return Err(Error::ShapeMismatch(format!(
            "coloring of shape {} on tableau of shape {}",
            coloring.shape(),
            q_up.shape()
        )));
    }
    if !q_up.is_permutation_filling() {
        return Err(Error::InvalidTableau("entries are not 1..n".into()));
    }
    let n = q_up.size();
    let mut one_line = vec![0; n];
    let counts = coloring.counts();
    let shape = q_up.shape();
    for (idx, &count) in counts.iter().enumerate() {
        let c = idx + 1;
        if count == 0 {
            return Err(Error::ColoringMismatch(format!("color {c} is empty")));
        }
        let columns: Vec<(usize, Vec<usize>)> = (1..=shape.num_cols())
            .filter_map(|j| {
                let rows: Vec<usize> = (1..=shape.column_length(j))
                    .filter(|&i| coloring.color(i, j) == c)
                    .collect();
                (!rows.is_empty()).then_some((j, rows))
            })
            .collect();
        let order = arrow_order(&columns);
        for k in 0..order.len() {
            let (fi, fj) = order[k];
            let (ti, tj) = order[(k + 1) % order.len()];
            let from = q_up.entry(fi, fj).expect("cell in shape");
            let to = q_up.entry(ti, tj).expect("cell in shape");
            one_line[to - 1] = from;
        }
    }
    Permutation::from_one_line(one_line)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutcomeKind {
    Coloring,
    ExplicitPermutation,
    Unattainable,
    Rejected,
}

/// Result of validating or constructing a witness for `shape ∈ S_alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ColoringOutcome {
    pub kind: OutcomeKind,
    pub alpha: Partition,
    pub shape: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Coloring>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Tableau>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Permutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_p: Option<Tableau>,
}

impl ColoringOutcome {
    pub fn unattainable(alpha: &Partition, shape: &Partition) -> Self {
        ColoringOutcome {
            kind: OutcomeKind::Unattainable,
            alpha: alpha.clone(),
            shape: shape.clone(),
            coloring: None,
            q: None,
            sigma: None,
            witness_p: None,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self.kind, OutcomeKind::Coloring | OutcomeKind::ExplicitPermutation)
    }

    /// Re-checks the witness from scratch with insertion: the permutation has
    /// cycle type `alpha` and shape `shape`.
    pub fn verify_witness(&self) -> bool {
        let Some(sigma) = &self.sigma else { return false };
        if sigma.cycle_type() != self.alpha {
            return false;
        }
        let pair = rs_forward(sigma);
        if pair.shape() != &self.shape {
            return false;
        }
        match (self.kind, &self.q, &self.witness_p) {
            (OutcomeKind::Coloring, Some(q), Some(p)) => pair == RsPair { p: p.clone(), q: q.clone() },
            (OutcomeKind::ExplicitPermutation, _, _) => true,
            _ => false,
        }
    }
}

/// Checks whether `coloring` of `Q↑` is an `alpha`-coloring.
///
/// Errors when `q` is not standard and admissible or the color counts do not
/// match `alpha`. Otherwise returns an outcome of kind `Coloring` (when
/// `sigma · Q↑` is standard) or `Rejected`.
pub fn validate_alpha_coloring(q: &Tableau, coloring: &Coloring, alpha: &Partition) -> Result<ColoringOutcome> {
    if !q.is_admissible()? {
        return Err(Error::NotAdmissible);
    }
    let mut counts = coloring.counts();
    counts.sort_unstable_by(|a, b| b.cmp(a));
    if counts != alpha.parts() {
        return Err(Error::ColoringMismatch(format!(
            "color counts {counts:?} do not match cycle type {alpha}"
        )));
    }
    let q_up = q.column_reverse();
    let sigma = associated_permutation(&q_up, coloring)?;
    let p = q_up.apply_permutation(&sigma)?;
    let accepted = p.is_standard();
    if accepted {
        let pair = rs_forward(&sigma);
        assert!(
            pair.p == p && &pair.q == q,
            "insertion disagrees with an accepted coloring"
        );
    }
    Ok(ColoringOutcome {
        kind: if accepted { OutcomeKind::Coloring } else { OutcomeKind::Rejected },
        alpha: alpha.clone(),
        shape: q.shape().clone(),
        coloring: Some(coloring.clone()),
        q: Some(q.clone()),
        sigma: Some(sigma),
        witness_p: Some(p),
    })
}

/// The single-color case: an `n`-cycle with shape `shape`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalCycle {
    pub sigma: Permutation,
    pub p: Tableau,
}

pub fn canonical_cycle(shape: &Partition) -> Result<CanonicalCycle> {
    let n = shape.size();
    let alpha = Partition::single_row(n);
    if n == 0 || !alpha.bounding_box().contains(shape) {
        return Err(Error::OutsideBox {
            alpha: alpha.to_string(),
            shape: shape.to_string(),
        });
    }
    let q_up = Tableau::canonical(shape).column_reverse();
    let sigma = associated_permutation(&q_up, &Coloring::uniform(shape))?;
    let p = q_up.apply_permutation(&sigma)?;
    Ok(CanonicalCycle { sigma, p })
}

/// For `alpha = (2^(r-k), 1^k)` and a shape with exactly `k` odd columns:
/// the middle box of each odd column is a singleton color, and the other
/// boxes of each column are paired symmetrically about its middle.
pub fn involution_canonical_coloring(alpha: &Partition, shape: &Partition) -> Result<ColoringOutcome> {
    if alpha.parts().iter().any(|&a| a > 2) || alpha.size() != shape.size() {
        return Err(Error::Precondition(format!(
            "{alpha} is not an involution cycle type of size {}",
            shape.size()
        )));
    }
    let k = alpha.multiplicity(1);
    let pairs = alpha.multiplicity(2);
    let odd = shape.stats().odd_column_count;
    if odd != k {
        return Err(Error::Precondition(format!(
            "shape {shape} has {odd} odd columns, cycle type {alpha} needs {k}"
        )));
    }
    let mut colors: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let (mut next_pair, mut next_single) = (1, pairs + 1);
    for (j, &len) in shape.column_lengths().iter().enumerate() {
        for i in 0..len / 2 {
            colors[i][j] = next_pair;
            colors[len - 1 - i][j] = next_pair;
            next_pair += 1;
        }
        if len % 2 == 1 {
            colors[len / 2][j] = next_single;
            next_single += 1;
        }
    }
    let coloring = Coloring::from_rows(colors)?;
    validate_alpha_coloring(&Tableau::canonical(shape), &coloring, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_b_alpha, enumerate_partitions};
    use crate::rs::rs_shape;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Colors from bottom-to-top entries `1..=len`.
    fn bottom_up(res: &SpiralResult, color: usize) -> Vec<usize> {
        let len = res.color_of.len();
        (1..=len).filter(|&e| res.color_of[len - e] == color).collect()
    }

    #[test]
    fn spiral_examples() {
        let a = spiral_coloring(10, 7, 3, RED, BLUE).unwrap();
        assert_eq!(bottom_up(&a, RED), vec![1, 3, 5, 6, 7, 8, 10]);
        assert_eq!(bottom_up(&a, BLUE), vec![2, 4, 9]);
        assert_eq!(a.terminal_from_bottom(BLUE), Some(4));
        assert_eq!(a.terminal_from_bottom(RED), Some(6));

        let b = spiral_coloring(10, 5, 5, BLUE, RED).unwrap();
        assert_eq!(bottom_up(&b, BLUE), vec![1, 3, 5, 8, 10]);
        assert_eq!(bottom_up(&b, RED), vec![2, 4, 6, 7, 9]);
        assert_eq!(b.terminal_from_bottom(BLUE), Some(5));
        assert_eq!(b.terminal_from_bottom(RED), Some(6));

        let c = spiral_coloring(5, 5, 0, RED, BLUE).unwrap();
        assert!(c.color_of.iter().all(|&x| x == RED));
        // bottom, top, bottom, top, bottom: 1, 5, 2, 4, 3
        assert_eq!(c.terminal_from_bottom(RED), Some(3));
        assert_eq!(c.terminal(BLUE), None);

        assert!(spiral_coloring(4, 2, 1, RED, BLUE).is_err());
    }

    #[test]
    fn spiral_terminal_boxes_are_adjacent_across_colors() {
        for len in 2..=14 {
            for out in 1..len {
                let s = spiral_coloring(len, out, len - out, BLUE, RED).unwrap();
                let a = s.terminal(BLUE).unwrap();
                let b = s.terminal(RED).unwrap();
                let (lo, hi) = (a.min(b), a.max(b));
                // everything strictly between the two terminals was colored earlier
                // in the spiral, so the two are adjacent in the remaining column
                assert!(hi - lo >= 1);
                let between = (lo + 1..hi).count();
                assert!(between <= len - 2, "len={len} out={out}");
            }
        }
    }

    #[test]
    fn canonical_cycle_examples() {
        let cc = canonical_cycle(&p("3,3,3,2,1,1")).unwrap();
        assert_eq!(cc.sigma.one_line(), &[7, 6, 5, 3, 2, 1, 12, 10, 8, 4, 13, 11, 9]);
        assert_eq!(cc.sigma.inverse().format_cycles(), "(1,6,2,5,3,4,10,8,9,13,11,12,7)");
        assert!(canonical_cycle(&p("1")).unwrap().sigma.is_identity());
        assert_eq!(canonical_cycle(&p("1,1")).unwrap().sigma.format_cycles(), "(1,2)");
        let cc = canonical_cycle(&p("2,1")).unwrap();
        assert_eq!(cc.sigma.one_line(), &[3, 1, 2]);
        assert_eq!(cc.sigma.format_cycles(), "(1,3,2)");
        assert_eq!(rs_shape(&cc.sigma), p("2,1"));
        assert!(matches!(canonical_cycle(&p("1,1,1")), Err(Error::OutsideBox { .. })));
        assert!(matches!(canonical_cycle(&p("3")), Err(Error::OutsideBox { .. })));
    }

    #[test]
    fn canonical_cycle_is_sound() {
        for n in 1..=30 {
            for shape in enumerate_b_alpha(&Partition::single_row(n)) {
                let cc = canonical_cycle(&shape).unwrap();
                assert_eq!(cc.sigma.cycle_type(), Partition::single_row(n));
                let pair = rs_forward(&cc.sigma);
                assert_eq!(pair.p, cc.p);
                assert_eq!(pair.q, Tableau::canonical(&shape));
                assert_eq!(cc.sigma.one_line(), cc.p.reverse_column_word().as_slice());
            }
        }
    }

    fn seven_six_coloring() -> (Tableau, Coloring) {
        let shape = p("3,3,3,2,1,1");
        let q = Tableau::canonical(&shape);
        let up = q.column_reverse();
        let red = [1, 3, 4, 6, 8, 10];
        let coloring = Coloring::from_entry_colors(&up, |v| if red.contains(&v) { RED } else { BLUE }).unwrap();
        (q, coloring)
    }

    #[test]
    fn seven_six_associated_permutation() {
        let (q, coloring) = seven_six_coloring();
        let sigma = associated_permutation(&q.column_reverse(), &coloring).unwrap();
        assert_eq!(sigma.inverse().format_cycles(), "(2,5,9,13,11,12,7)(1,6,3,4,10,8)");
        let out = validate_alpha_coloring(&q, &coloring, &p("7,6")).unwrap();
        assert_eq!(out.kind, OutcomeKind::Coloring);
        assert_eq!(
            out.witness_p.unwrap(),
            t(&[&[1, 4, 9], &[2, 5, 11], &[3, 10, 13], &[6, 12], &[7], &[8]])
        );
    }

    #[test]
    fn swapping_two_colors_breaks_seven_six() {
        let (q, coloring) = seven_six_coloring();
        let up = q.column_reverse();
        let (r5, c5) = up.position_of(5).unwrap();
        let (r6, c6) = up.position_of(6).unwrap();
        let mut rows = coloring.rows().to_vec();
        rows[r5 - 1][c5 - 1] = coloring.color(r6, c6);
        rows[r6 - 1][c6 - 1] = coloring.color(r5, c5);
        let swapped = Coloring::from_rows(rows).unwrap();
        let out = validate_alpha_coloring(&q, &swapped, &p("7,6")).unwrap();
        assert_eq!(out.kind, OutcomeKind::Rejected);
    }

    #[test]
    fn uniform_coloring_reproduces_canonical_cycle() {
        let shape = p("3,3,3,2,1,1");
        let q = Tableau::canonical(&shape);
        let out = validate_alpha_coloring(&q, &Coloring::uniform(&shape), &p("13")).unwrap();
        assert_eq!(out.kind, OutcomeKind::Coloring);
        assert_eq!(out.sigma.unwrap(), canonical_cycle(&shape).unwrap().sigma);
        for n in 1..=12 {
            for shape in enumerate_b_alpha(&Partition::single_row(n)) {
                let up = Tableau::canonical(&shape).column_reverse();
                let via_coloring = associated_permutation(&up, &Coloring::uniform(&shape)).unwrap();
                assert_eq!(via_coloring, canonical_cycle(&shape).unwrap().sigma);
            }
        }
    }

    #[test]
    fn singleton_colors_give_identity() {
        let shape = p("4");
        let q = Tableau::canonical(&shape);
        let coloring = Coloring::from_rows(vec![vec![1, 2, 3, 4]]).unwrap();
        let sigma = associated_permutation(&q.column_reverse(), &coloring).unwrap();
        assert!(sigma.is_identity());
    }

    #[test]
    fn validation_errors() {
        let (q, coloring) = seven_six_coloring();
        assert!(matches!(
            validate_alpha_coloring(&q, &coloring, &p("8,5")),
            Err(Error::ColoringMismatch(_))
        ));
        let not_admissible = t(&[&[1, 2, 4], &[3, 7], &[5], &[6]]);
        let c = Coloring::uniform(not_admissible.shape());
        assert_eq!(validate_alpha_coloring(&not_admissible, &c, &p("7")), Err(Error::NotAdmissible));
    }

    #[test]
    fn coloring_json() {
        let c = Coloring::from_rows(vec![vec![2, 1], vec![1]]).unwrap();
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"shape":[2,1],"colors":[[1,1,2],[1,2,1],[2,1,1]]}"#);
        assert_eq!(serde_json::from_str::<Coloring>(&j).unwrap(), c);
        assert!(serde_json::from_str::<Coloring>(r#"{"shape":[2],"colors":[[1,1,1]]}"#).is_err());
    }

    #[test]
    fn involution_examples() {
        let out = involution_canonical_coloring(&p("2^4,1^2"), &p("4,3,2,1")).unwrap();
        assert_eq!(out.kind, OutcomeKind::Coloring);
        let s = out.sigma.unwrap();
        assert!(s.compose(&s).unwrap().is_identity());
        assert_eq!(s.cycle_type(), p("2^4,1^2"));

        let out = involution_canonical_coloring(&p("1^5"), &p("5")).unwrap();
        assert!(out.sigma.unwrap().is_identity());

        let out = involution_canonical_coloring(&p("2"), &p("1,1")).unwrap();
        assert_eq!(out.sigma.unwrap().format_cycles(), "(1,2)");

        assert!(involution_canonical_coloring(&p("2,2"), &p("3,1")).is_err());
    }

    #[test]
    fn involution_coloring_on_all_members() {
        for n in 1..=10 {
            for shape in enumerate_partitions(n).unwrap() {
                let k = shape.stats().odd_column_count;
                let alpha = Partition::new(
                    std::iter::repeat_n(2, (n - k) / 2).chain(std::iter::repeat_n(1, k)).collect(),
                )
                .unwrap();
                let out = involution_canonical_coloring(&alpha, &shape).unwrap();
                assert_eq!(out.kind, OutcomeKind::Coloring, "shape {shape}");
                assert!(out.verify_witness());
            }
        }
    }
}
