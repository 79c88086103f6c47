//! Row insertion, its inverse, and the Greene invariants used to check it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::tableau::Tableau;

/// Insertion tableau `p` and recording tableau `q` of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl RsPair {
    pub fn shape(&self) -> &Partition {
        self.p.shape()
    }
}

/// One step of the insertion: the tableaux after inserting `sigma(step)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: usize,
    pub inserted: usize,
    pub p: Tableau,
    pub q: Tableau,
}

/// Inserts `value` into `rows`, returning the (0-based) row where a box was added.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut value: usize) -> usize {
    for (k, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&x| x < value);
        if pos == row.len() {
            row.push(value);
            return k;
        }
        value = std::mem::replace(&mut row[pos], value);
    }
    rows.push(vec![value]);
    rows.len() - 1
}

pub fn rs_forward(sigma: &Permutation) -> RsPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in sigma.one_line().iter().enumerate() {
        let k = row_insert(&mut p, v);
        if k == q.len() {
            q.push(Vec::new());
        }
        q[k].push(i + 1);
    }
    RsPair {
        p: Tableau::from_rows_unchecked(p),
        q: Tableau::from_rows_unchecked(q),
    }
}

/// Every intermediate pair `(P_i, Q_i)` for `i = 1..n`.
pub fn rs_trace(sigma: &Permutation) -> Vec<TraceStep> {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::with_capacity(sigma.n());
    for (i, &v) in sigma.one_line().iter().enumerate() {
        let k = row_insert(&mut p, v);
        if k == q.len() {
            q.push(Vec::new());
        }
        q[k].push(i + 1);
        out.push(TraceStep {
            step: i + 1,
            inserted: v,
            p: Tableau::from_rows_unchecked(p.clone()),
            q: Tableau::from_rows_unchecked(q.clone()),
        });
    }
    out
}

pub fn rs_shape(sigma: &Permutation) -> Partition {
    ShapeScratch::default().shape_of(sigma.one_line())
}

/// Reusable buffers for computing only the shape, used by the brute-force sweeps.
#[derive(Debug, Default)]
pub struct ShapeScratch {
    rows: Vec<Vec<usize>>,
}

impl ShapeScratch {
    pub fn shape_parts(&mut self, one_line: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        self.shape_parts_into(one_line, &mut out);
        out
    }

    /// Writes the row lengths into `out`, reusing its allocation.
    pub fn shape_parts_into(&mut self, one_line: &[usize], out: &mut Vec<usize>) {
        for r in &mut self.rows {
            r.clear();
        }
        let mut used = 0;
        for &v in one_line {
            let mut value = v;
            let mut k = 0;
            loop {
                if k == used {
                    if self.rows.len() == used {
                        self.rows.push(Vec::new());
                    }
                    self.rows[k].push(value);
                    used += 1;
                    break;
                }
                let row = &mut self.rows[k];
                let pos = row.partition_point(|&x| x < value);
                if pos == row.len() {
                    row.push(value);
                    break;
                }
                value = std::mem::replace(&mut row[pos], value);
                k += 1;
            }
        }
        out.clear();
        out.extend(self.rows[..used].iter().map(Vec::len));
    }

    pub fn shape_of(&mut self, one_line: &[usize]) -> Partition {
        Partition::from_parts_unchecked(self.shape_parts(one_line))
    }
}

/// Reverse bumping: recovers the permutation with `rs_forward(sigma) = (p, q)`.
pub fn rs_inverse(pair: &RsPair) -> Result<Permutation> {
    let RsPair { p, q } = pair;
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!("P has shape {}, Q has shape {}", p.shape(), q.shape())));
    }
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::NotStandard);
    }
    if !p.is_permutation_filling() || !q.is_permutation_filling() {
        return Err(Error::InvalidTableau("entries are not 1..n".into()));
    }
    let n = p.size();
    let mut rows: Vec<Vec<usize>> = p.rows().to_vec();
    let mut where_q = vec![0usize; n + 1];
    for (i, row) in q.rows().iter().enumerate() {
        for &v in row {
            where_q[v] = i;
        }
    }
    let mut one_line = vec![0; n];
    for step in (1..=n).rev() {
        let mut k = where_q[step];
        let mut value = rows[k].pop().expect("recording tableau matches shape");
        if rows[k].is_empty() {
            rows.pop();
        }
        while k > 0 {
            k -= 1;
            let row = &mut rows[k];
            // rightmost entry smaller than the bumped value
            let pos = row.partition_point(|&x| x < value) - 1;
            value = std::mem::replace(&mut row[pos], value);
        }
        one_line[step - 1] = value;
    }
    Permutation::from_one_line(one_line)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Asc,
    Desc,
}

/// Largest word size accepted by the exhaustive `k >= 2` oracle.
pub const GREENE_EXHAUSTIVE_LIMIT: usize = 12;

/// `a_k` or `d_k`: the largest union of `k` disjoint ascending (descending)
/// subsequences of the one-line word. Computed without insertion: patience
/// sorting for `k = 1`, and a scan over all subsets for `k >= 2`.
pub fn greene_invariant(sigma: &Permutation, k: usize, direction: Direction) -> Result<usize> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let word: Vec<usize> = match direction {
        Direction::Asc => sigma.one_line().to_vec(),
        Direction::Desc => sigma.one_line().iter().rev().copied().collect(),
    };
    let n = word.len();
    if k == 1 {
        return Ok(longest_increasing(&word));
    }
    if k >= n {
        return Ok(n);
    }
    if n > GREENE_EXHAUSTIVE_LIMIT {
        return Err(Error::Precondition(format!(
            "exhaustive oracle is limited to n <= {GREENE_EXHAUSTIVE_LIMIT}"
        )));
    }
    let mut masks: Vec<u32> = (0u32..(1 << n)).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut sub = Vec::with_capacity(n);
    for mask in masks {
        sub.clear();
        sub.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| word[i]));
        if min_increasing_cover(&sub) <= k {
            return Ok(sub.len());
        }
    }
    unreachable!("the empty subsequence is always covered")
}

/// Patience sorting: length of the longest strictly increasing subsequence.
pub fn longest_increasing(word: &[usize]) -> usize {
    let mut tops: Vec<usize> = Vec::new();
    for &x in word {
        let pos = tops.partition_point(|&t| t < x);
        if pos == tops.len() {
            tops.push(x);
        } else {
            tops[pos] = x;
        }
    }
    tops.len()
}

/// Minimum number of increasing subsequences covering `word`, by greedily
/// extending the subsequence with the largest last element below `x`.
fn min_increasing_cover(word: &[usize]) -> usize {
    let mut lasts: Vec<usize> = Vec::new(); // kept sorted descending
    for &x in word {
        match lasts.iter().position(|&l| l < x) {
            Some(i) => lasts[i] = x,
            None => lasts.push(x),
        }
        lasts.sort_unstable_by(|a, b| b.cmp(a));
    }
    lasts.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::all_permutations;
    use crate::tableau::enumerate_syt;
    use crate::partition::enumerate_partitions;

    fn perm(s: &str) -> Permutation {
        Permutation::parse_one_line(s).unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn forward_examples() {
        let pair = rs_forward(&perm("2 6 5 7 4 1 3"));
        assert_eq!(pair.p, t(&[&[1, 3, 7], &[2, 4], &[5], &[6]]));
        assert_eq!(pair.q, t(&[&[1, 2, 4], &[3, 7], &[5], &[6]]));
        let id = rs_forward(&Permutation::identity(5));
        assert_eq!(id.p, t(&[&[1, 2, 3, 4, 5]]));
        assert_eq!(id.q, id.p);
        let dec = rs_forward(&perm("5 4 3 2 1"));
        assert_eq!(dec.p, t(&[&[1], &[2], &[3], &[4], &[5]]));
        assert_eq!(dec.q, dec.p);
    }

    #[test]
    fn inverse_examples() {
        let pair = RsPair {
            p: t(&[&[1, 3, 7], &[2, 4], &[5], &[6]]),
            q: t(&[&[1, 2, 4], &[3, 7], &[5], &[6]]),
        };
        assert_eq!(rs_inverse(&pair).unwrap(), perm("2 6 5 7 4 1 3"));
        let row = t(&[&[1, 2, 3, 4]]);
        assert!(rs_inverse(&RsPair { p: row.clone(), q: row }).unwrap().is_identity());
        let bad = RsPair { p: t(&[&[1, 2]]), q: t(&[&[1], &[2]]) };
        assert!(matches!(rs_inverse(&bad), Err(Error::ShapeMismatch(_))));
        let bad = RsPair { p: t(&[&[2, 1]]), q: t(&[&[1, 2]]) };
        assert_eq!(rs_inverse(&bad), Err(Error::NotStandard));
    }

    #[test]
    fn all_pairs_round_trip_at_six() {
        let mut total = 0;
        for l in enumerate_partitions(6).unwrap() {
            let syt = enumerate_syt(&l);
            for p in &syt {
                for q in &syt {
                    let pair = RsPair { p: p.clone(), q: q.clone() };
                    let s = rs_inverse(&pair).unwrap();
                    assert_eq!(rs_forward(&s), pair);
                    total += 1;
                }
            }
        }
        assert_eq!(total, 720);
    }

    #[test]
    fn shape_examples() {
        assert_eq!(rs_shape(&perm("2 6 5 7 4 1 3")).to_string(), "3,2,1,1");
        assert_eq!(rs_shape(&Permutation::identity(4)).to_string(), "4");
        assert_eq!(rs_shape(&perm("9 8 7 6 1 10 5 4 3 2")).to_string(), "2,2,1,1,1,1,1,1");
    }

    #[test]
    fn trace_ends_at_forward() {
        let s = perm("2 6 5 7 4 1 3");
        let trace = rs_trace(&s);
        assert_eq!(trace.len(), 7);
        let last = trace.last().unwrap();
        assert_eq!(RsPair { p: last.p.clone(), q: last.q.clone() }, rs_forward(&s));
    }

    #[test]
    fn greene_examples() {
        let s = perm("2 6 5 7 4 1 3");
        assert_eq!(greene_invariant(&s, 1, Direction::Asc).unwrap(), 3);
        assert_eq!(greene_invariant(&s, 1, Direction::Desc).unwrap(), 4);
        let id = Permutation::identity(6);
        for k in 1..=6 {
            assert_eq!(greene_invariant(&id, k, Direction::Desc).unwrap(), k);
        }
        assert!(greene_invariant(&id, 0, Direction::Asc).is_err());
        assert!(greene_invariant(&Permutation::identity(13), 2, Direction::Asc).is_err());
    }

    #[test]
    fn schensted_on_small_groups() {
        for n in 1..=7 {
            for s in all_permutations(n) {
                let shape = rs_shape(&s);
                let rev: Vec<usize> = s.one_line().iter().rev().copied().collect();
                assert_eq!(shape.first_row(), longest_increasing(s.one_line()));
                assert_eq!(shape.num_rows(), longest_increasing(&rev));
            }
        }
    }
}
