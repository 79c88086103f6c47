//! Explicit α-colorings for cycle types with two parts.

use super::{
    spiral_coloring, upside_down_spiral_coloring, validate_alpha_coloring, Coloring, ColoringOutcome,
    OutcomeKind, SpiralResult, BLUE, RED,
};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::rs::rs_forward;
use crate::tableau::Tableau;

/// True for the pairs with `shape ∈ B_alpha` but `shape ∉ S_alpha`.
pub fn is_unattainable_pair(alpha: &Partition, shape: &Partition) -> bool {
    let n = alpha.size();
    if alpha.len() != 2 || shape.size() != n || n % 2 == 1 {
        return false;
    }
    let (a1, a2) = (alpha.part(1), alpha.part(2));
    let half = n / 2;
    let is = |parts: &[usize]| shape.parts() == parts;
    if a2 == 1 && is(&[half, half]) {
        return true;
    }
    if a1 == half && a2 == half && n >= 4 {
        if is(&[n - 2, 1, 1]) {
            return true;
        }
        if n.is_multiple_of(4) {
            let mut hook = vec![3];
            hook.extend(std::iter::repeat_n(1, n - 3));
            if is(&hook) {
                return true;
            }
        }
    }
    (a1, a2) == (4, 2) && is(&[2, 2, 2]) || (a1, a2) == (5, 3) && is(&[2, 2, 2, 2])
}

/// Builds a witness for `shape ∈ S_alpha` where `alpha` has two parts, or
/// reports the pair as unattainable.
pub fn construct_two_cycle(alpha: &Partition, shape: &Partition) -> Result<ColoringOutcome> {
    if alpha.len() != 2 {
        return Err(Error::Precondition(format!("{alpha} does not have exactly two parts")));
    }
    if shape.size() != alpha.size() || !alpha.bounding_box().contains(shape) {
        return Err(Error::OutsideBox {
            alpha: alpha.to_string(),
            shape: shape.to_string(),
        });
    }
    if is_unattainable_pair(alpha, shape) {
        return Ok(ColoringOutcome::unattainable(alpha, shape));
    }
    let s = Setup::new(alpha, shape);
    let painter = if s.a2 == 1 {
        alpha2_is_one(&s)
    } else if s.a2 == 2 {
        alpha2_is_two(&s)
    } else if s.a2 == 3 && s.c1 == 3 {
        alpha2_and_height_three(&s)
    } else if s.l1 == 2 {
        if s.c2 == 2 && s.a1 == s.a2 && s.a2 % 2 == 1 {
            return two_column_explicit(&s);
        }
        two_columns(&s)
    } else if s.l2 == 1 {
        hook(&s)
    } else if s.a2 <= s.c1 {
        tricky_left(&s)
    } else if s.a2 + s.l1 >= s.n + s.l2 {
        long_tail(&s)
    } else {
        nice(&s)
    }?;
    painter.finish(alpha)
}

struct Setup {
    n: usize,
    a1: usize,
    a2: usize,
    l1: usize,
    l2: usize,
    c1: usize,
    c2: usize,
    shape: Partition,
}

impl Setup {
    fn new(alpha: &Partition, shape: &Partition) -> Self {
        Setup {
            n: shape.size(),
            a1: alpha.part(1),
            a2: alpha.part(2),
            l1: shape.part(1),
            l2: shape.part(2),
            c1: shape.column_length(1),
            c2: shape.column_length(2),
            shape: shape.clone(),
        }
    }

    fn painter(&self) -> Painter {
        Painter::new(Tableau::canonical(&self.shape))
    }
}

/// Colors the cells of `Q↑`, addressed by entry or by (row, column).
struct Painter {
    q: Tableau,
    up: Tableau,
    colors: Vec<Vec<usize>>,
}

impl Painter {
    fn new(q: Tableau) -> Self {
        let up = q.column_reverse();
        let colors = q.shape().parts().iter().map(|&l| vec![0; l]).collect();
        Painter { q, up, colors }
    }

    fn entry(&mut self, value: usize, color: usize) -> &mut Self {
        let (i, j) = self.up.position_of(value).expect("entry in tableau");
        self.colors[i - 1][j - 1] = color;
        self
    }

    fn cell(&mut self, row: usize, col: usize, color: usize) -> &mut Self {
        self.colors[row - 1][col - 1] = color;
        self
    }

    fn fill_column(&mut self, col: usize, color: usize) {
        for i in 1..=self.q.shape().column_length(col) {
            self.cell(i, col, color);
        }
    }

    /// Spiral coloring of rows `top..top + len` of column `col`.
    fn spiral(
        &mut self,
        col: usize,
        top: usize,
        len: usize,
        count_outside: usize,
        outside: usize,
        upside_down: bool,
    ) -> Result<SpiralResult> {
        let inside = other(outside);
        let count_inside = len.saturating_sub(count_outside);
        let res = if upside_down {
            upside_down_spiral_coloring(len, count_outside, count_inside, outside, inside)?
        } else {
            spiral_coloring(len, count_outside, count_inside, outside, inside)?
        };
        for (k, &c) in res.color_of.iter().enumerate() {
            self.cell(top + k, col, c);
        }
        Ok(res)
    }

    /// Spiral of a whole column with `red` red boxes.
    fn spiral_red(&mut self, col: usize, red: usize, outside: usize) -> Result<SpiralResult> {
        let len = self.q.shape().column_length(col);
        let count_outside = if outside == RED { red } else { len - red };
        self.spiral(col, 1, len, count_outside, outside, false)
    }

    fn fill_rest(&mut self, color: usize) -> &mut Self {
        for c in self.colors.iter_mut().flatten().filter(|c| **c == 0) {
            *c = color;
        }
        self
    }

    fn finish(mut self, alpha: &Partition) -> Result<ColoringOutcome> {
        self.fill_rest(BLUE);
        let coloring = Coloring::from_rows(self.colors)?;
        let out = validate_alpha_coloring(&self.q, &coloring, alpha)?;
        if out.kind != OutcomeKind::Coloring {
            return Err(Error::Precondition(format!(
                "construction for {alpha} on {} did not produce a standard tableau",
                self.q.shape()
            )));
        }
        Ok(out)
    }
}

fn other(color: usize) -> usize {
    if color == RED {
        BLUE
    } else {
        RED
    }
}

/// Alternates colors along the cells, starting with `first`, until one of
/// the budgets runs out; the rest take the surviving color.
fn alternate(p: &mut Painter, cells: &[(usize, usize)], first: usize, mut red: usize, mut blue: usize) {
    let mut next = first;
    for &(i, j) in cells {
        let c = if red == 0 {
            BLUE
        } else if blue == 0 {
            RED
        } else {
            next
        };
        if c == RED {
            red -= 1;
        } else {
            blue -= 1;
        }
        p.cell(i, j, c);
        next = other(c);
    }
}

fn alpha2_is_one(s: &Setup) -> Result<Painter> {
    let mut p = s.painter();
    let red = if s.c1 <= 2 { s.n } else { (s.c1 + 2) / 2 };
    p.entry(red, RED);
    Ok(p)
}

fn alpha2_is_two(s: &Setup) -> Result<Painter> {
    if s.c1 != 3 {
        let mut p = s.painter();
        let m = s.c1.div_ceil(2);
        p.entry(m, RED).entry(m + 1, RED);
        return Ok(p);
    }
    if s.c2 <= 1 {
        let mut p = s.painter();
        p.entry(2, RED).entry(4, RED);
        return Ok(p);
    }
    let mut p = Painter::new(Tableau::canonical(&s.shape).swap_entries(3, 4));
    p.entry(1, RED).entry(4, RED);
    Ok(p)
}

fn alpha2_and_height_three(s: &Setup) -> Result<Painter> {
    let (q, red): (Tableau, [usize; 3]) = match s.c2 {
        1 => (Tableau::canonical(&s.shape), [2, 4, 6]),
        2 => (Tableau::canonical(&s.shape), [2, 4, 5]),
        _ => (Tableau::canonical(&s.shape).swap_entries(3, 4), [1, 4, 5]),
    };
    let mut p = Painter::new(q);
    for v in red {
        p.entry(v, RED);
    }
    Ok(p)
}

/// Equal odd parts on a shape `(2,2,1,...,1)`: no coloring exists, but this
/// permutation does the job.
fn two_column_explicit(s: &Setup) -> Result<ColoringOutcome> {
    let n = s.n;
    let half = n / 2;
    let mut one_line: Vec<usize> = (half + 1..n).rev().collect();
    one_line.push(1);
    one_line.push(n);
    one_line.extend((2..=half).rev());
    let sigma = Permutation::from_one_line(one_line)?;
    let alpha = Partition::new(vec![s.a1, s.a2])?;
    let pair = rs_forward(&sigma);
    if sigma.cycle_type() != alpha || pair.shape() != &s.shape {
        return Err(Error::Precondition(format!("explicit permutation fails for {alpha} on {}", s.shape)));
    }
    Ok(ColoringOutcome {
        kind: OutcomeKind::ExplicitPermutation,
        alpha,
        shape: s.shape.clone(),
        coloring: None,
        q: Some(pair.q),
        sigma: Some(sigma),
        witness_p: Some(pair.p),
    })
}

fn two_columns(s: &Setup) -> Result<Painter> {
    let mut p = s.painter();
    if s.c2 == 2 {
        let (outside, top) = if s.a2.is_multiple_of(2) { (RED, RED) } else { (BLUE, BLUE) };
        p.spiral_red(1, s.a2 - 1, outside)?;
        p.cell(1, 2, top).cell(2, 2, other(top));
    } else if s.c1 == s.c2 {
        let col2 = p.spiral(2, 1, s.c2, s.c2 + 2 - s.a2, BLUE, true)?;
        let outside = col2.higher_terminal_color().expect("two colors in column 2");
        p.spiral_red(1, 2, outside)?;
    } else {
        let col1 = p.spiral_red(1, s.a2 - 1, RED)?;
        let top = col1.lower_terminal_color().expect("two colors in column 1");
        p.cell(1, 2, top).cell(2, 2, other(top));
        p.fill_rest(BLUE);
    }
    Ok(p)
}

fn hook(s: &Setup) -> Result<Painter> {
    let mut p = s.painter();
    if s.c1 == 3 {
        for k in 1..=s.a2 {
            p.entry(2 * k, RED);
        }
        return Ok(p);
    }
    if s.l1 == 3 {
        // the two tail boxes hold n - 1 and n
        let (main, count) = if s.a2 % 2 == 1 { (RED, s.a2 - 1) } else { (BLUE, s.a1 - 1) };
        p.entry(s.n, main);
        p.spiral_red(1, if main == RED { count } else { s.c1 - count }, main)?;
        p.entry(s.n - 1, other(main));
        return Ok(p);
    }
    let red = (s.c1 - 2).min(s.a2 - 1);
    let col1 = p.spiral_red(1, red, BLUE)?;
    let first = col1.lower_terminal_color().expect("two colors in column 1");
    let tail: Vec<(usize, usize)> = (2..=s.l1).map(|j| (1, j)).collect();
    let tail_red = s.a2 - red;
    alternate(&mut p, &tail, first, tail_red, tail.len() - tail_red);
    Ok(p)
}

fn tricky_left(s: &Setup) -> Result<Painter> {
    let mut p = s.painter();
    if s.a2 < s.c1 {
        let outside = if s.c2 == 2 { BLUE } else { RED };
        let col1 = p.spiral_red(1, s.a2 - 1, outside)?;
        let top = col1.lower_terminal_color().expect("two colors in column 1");
        p.cell(1, 2, top).cell(2, 2, other(top));
    } else if s.c2 <= 3 {
        p.spiral_red(1, s.a2 - 2, BLUE)?;
        p.cell(1, 2, RED).cell(s.c2, 2, RED);
    } else {
        let col1 = p.spiral_red(1, s.a2 - 2, RED)?;
        let top = col1.lower_terminal_color().expect("two colors in column 1");
        p.cell(1, 2, top).cell(2, 2, other(top));
        p.cell(s.c2 - 1, 2, RED);
    }
    p.fill_rest(BLUE);
    Ok(p)
}

fn long_tail(s: &Setup) -> Result<Painter> {
    let mut p = s.painter();
    for j in 1..=s.l2 {
        p.fill_column(j, RED);
    }
    p.cell(s.shape.column_length(s.l2), s.l2, BLUE);
    let left_red = s.n - (s.l1 - s.l2) - 1;
    let tail: Vec<(usize, usize)> = (s.l2 + 1..=s.l1).map(|j| (1, j)).collect();
    let tail_red = s.a2 - left_red;
    alternate(&mut p, &tail, BLUE, tail_red, tail.len() - tail_red);
    Ok(p)
}

fn nice(s: &Setup) -> Result<Painter> {
    let mut p = s.painter();
    let mut red = s.a2;
    let mut col = 1;
    while red > 0 && red >= s.shape.column_length(col) {
        p.fill_column(col, RED);
        red -= s.shape.column_length(col);
        col += 1;
    }
    if red > 0 {
        let len = s.shape.column_length(col);
        p.cell(1, col, RED);
        p.spiral(col, 2, len - 1, len - red, BLUE, false)?;
    }
    p.fill_rest(BLUE);
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_b_alpha, Partition};
    use crate::rs::rs_shape;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn nice_worked_example() {
        let out = construct_two_cycle(&p("8,7"), &p("5,3,3,3,1")).unwrap();
        assert_eq!(out.kind, OutcomeKind::Coloring);
        let q = out.q.as_ref().unwrap();
        let mut red = out.coloring.as_ref().unwrap().entries_of(&q.column_reverse(), RED);
        red.sort_unstable();
        assert_eq!(red, vec![1, 2, 3, 4, 5, 7, 9]);
        assert_eq!(
            out.sigma.as_ref().unwrap().inverse().format_cycles(),
            "(6,8,13,11,12,14,15,10)(1,5,2,4,3,9,7)"
        );
        assert!(out.verify_witness());
    }

    #[test]
    fn two_column_explicit_example() {
        let out = construct_two_cycle(&p("5,5"), &p("2,2,1^6")).unwrap();
        assert_eq!(out.kind, OutcomeKind::ExplicitPermutation);
        assert_eq!(out.sigma.as_ref().unwrap().one_line(), &[9, 8, 7, 6, 1, 10, 5, 4, 3, 2]);
        assert!(out.verify_witness());
    }

    #[test]
    fn table_pairs_are_unattainable() {
        for (a, l) in [
            ("4,2", "2,2,2"),
            ("5,3", "2,2,2,2"),
            ("7,1", "4,4"),
            ("4,4", "6,1,1"),
            ("4,4", "3,1^5"),
            ("5,5", "8,1,1"),
            ("2,2", "2,1,1"),
        ] {
            let out = construct_two_cycle(&p(a), &p(l)).unwrap();
            assert_eq!(out.kind, OutcomeKind::Unattainable, "{a} {l}");
        }
        assert!(!is_unattainable_pair(&p("5,5"), &p("3,1^7")));
        // the 4 | n hook at n = 4 is (3,1), which already lies outside the box
        assert!(!p("2,2").bounding_box().contains(&p("3,1")));
        assert!(!is_unattainable_pair(&p("4,3"), &p("4,3")));
    }

    #[test]
    fn errors() {
        assert!(matches!(construct_two_cycle(&p("6"), &p("3,3")), Err(Error::Precondition(_))));
        assert!(matches!(construct_two_cycle(&p("4,2"), &p("6")), Err(Error::OutsideBox { .. })));
        assert!(matches!(construct_two_cycle(&p("4,2"), &p("3,3,1")), Err(Error::OutsideBox { .. })));
    }

    #[test]
    fn soundness_small() {
        for n in 2..=16 {
            for a2 in 1..=n / 2 {
                let alpha = Partition::new(vec![n - a2, a2]).unwrap();
                for shape in enumerate_b_alpha(&alpha) {
                    let out = construct_two_cycle(&alpha, &shape)
                        .unwrap_or_else(|e| panic!("{alpha} on {shape}: {e}"));
                    if out.kind == OutcomeKind::Unattainable {
                        continue;
                    }
                    let sigma = out.sigma.as_ref().unwrap();
                    assert_eq!(sigma.cycle_type(), alpha);
                    assert_eq!(rs_shape(sigma), shape);
                    assert!(out.verify_witness());
                }
            }
        }
    }
}
