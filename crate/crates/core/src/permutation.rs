//! Permutations of `{1..n}` in one-line and cycle notation, and generation
//! of conjugacy classes by cycle type.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A bijection of `{1..n}` stored by its one-line notation (1-based values).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation", into = "RawPermutation")]
pub struct Permutation {
    one_line: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct RawPermutation {
    n: usize,
    one_line: Vec<usize>,
}

impl TryFrom<RawPermutation> for Permutation {
    type Error = Error;
    fn try_from(raw: RawPermutation) -> Result<Self> {
        if raw.n != raw.one_line.len() {
            return Err(Error::SizeMismatch {
                expected: raw.n,
                found: raw.one_line.len(),
            });
        }
        Permutation::from_one_line(raw.one_line)
    }
}

impl From<Permutation> for RawPermutation {
    fn from(p: Permutation) -> Self {
        RawPermutation {
            n: p.one_line.len(),
            one_line: p.one_line,
        }
    }
}

impl Permutation {
    pub fn from_one_line(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..{n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { one_line })
    }

    pub(crate) fn from_one_line_unchecked(one_line: Vec<usize>) -> Self {
        Permutation { one_line }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles on `{1..n}`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut one_line: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for cycle in cycles {
            for &v in cycle {
                if v == 0 || v > n {
                    return Err(Error::InvalidPermutation(format!("element {v} outside 1..{n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "element {v} appears in more than one place"
                    )));
                }
            }
            for (i, &v) in cycle.iter().enumerate() {
                one_line[v - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { one_line })
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self ∘ other`, mapping `i` to `self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Permutation {
            one_line: other.one_line.iter().map(|&j| self.apply(j)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Disjoint cycles in canonical order: each cycle starts at its minimum,
    /// longer cycles first, ties broken by the leading element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        cycles
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts_unchecked(lengths)
    }

    pub fn format_cycles(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                format!("({})", body.join(","))
            })
            .collect()
    }

    pub fn format_one_line(&self) -> String {
        let body: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        body.join(" ")
    }

    /// Parses cycle notation such as `(3,5,4,7)(1,2,6)`. When `n` is absent
    /// it is taken to be the largest element mentioned.
    pub fn parse_cycles(text: &str, n: Option<usize>) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cycle element {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if cycle.is_empty() {
                return Err(Error::Parse("empty cycle".into()));
            }
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = n.unwrap_or(max);
        Permutation::from_cycles(n, &cycles)
    }

    /// Parses one-line notation, `2 6 5 7 4 1 3` or `[2,6,5,7,4,1,3]`.
    pub fn parse_one_line(text: &str) -> Result<Self> {
        let body = text.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body);
        let values = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad one-line value {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.is_empty() {
            return Err(Error::Empty("permutation literal"));
        }
        Permutation::from_one_line(values)
    }

    /// Accepts either notation, dispatching on a leading `(`.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let t = text.trim();
        let p = if t.starts_with('(') || t.is_empty() {
            Permutation::parse_cycles(t, n)?
        } else {
            Permutation::parse_one_line(t)?
        };
        match n {
            Some(n) if n != p.n() => Err(Error::SizeMismatch {
                expected: n,
                found: p.n(),
            }),
            _ => Ok(p),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut v: Vec<usize> = (1..=n).collect();
        v.shuffle(rng);
        Permutation { one_line: v }
    }

    /// Uniform random element of the conjugacy class `C_alpha`.
    pub fn random_of_type<R: Rng + ?Sized>(alpha: &Partition, rng: &mut R) -> Self {
        let n = alpha.size();
        let mut v: Vec<usize> = (1..=n).collect();
        v.shuffle(rng);
        let mut one_line = vec![0; n];
        let mut start = 0;
        for &len in alpha.parts() {
            let cycle = &v[start..start + len];
            for i in 0..len {
                one_line[cycle[i] - 1] = cycle[(i + 1) % len];
            }
            start += len;
        }
        Permutation { one_line }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

/// `n! / (prod alpha_i * prod m_j!)`.
pub fn class_size(alpha: &Partition) -> u128 {
    let n = alpha.size() as u128;
    let mut size: u128 = (1..=n).product();
    for &a in alpha.parts() {
        size /= a as u128;
    }
    let mut values: Vec<usize> = alpha.parts().to_vec();
    values.dedup();
    for v in values {
        let m = alpha.multiplicity(v) as u128;
        size /= (1..=m).product::<u128>();
    }
    size
}

/// Generator for the elements of a conjugacy class.
///
/// Elements are produced by repeatedly opening a cycle at the smallest
/// unused element, choosing its length among the remaining cycle lengths,
/// then choosing its remaining members in order. Every element of `C_alpha`
/// corresponds to exactly one such decision sequence, so there are no
/// duplicates and no dead ends.
#[derive(Debug, Clone)]
pub struct ClassEnumerator {
    n: usize,
    /// Distinct cycle lengths (descending) and how many remain unplaced.
    lengths: Vec<(usize, usize)>,
    sigma: Vec<usize>,
    used: Vec<bool>,
    open: Option<OpenCycle>,
    placed: usize,
    stack: Vec<Frame>,
    base: usize,
    started: bool,
    finished: bool,
}

#[derive(Debug, Clone, Copy)]
struct OpenCycle {
    head: usize,
    last: usize,
    left: usize,
}

#[derive(Debug, Clone, Copy)]
enum Frame {
    /// Chose `lengths[slot]` for a cycle headed at `head`.
    Length { slot: usize, head: usize },
    /// Appended `value` after `prev`.
    Member { value: usize, prev: OpenCycle },
}

impl ClassEnumerator {
    pub fn new(alpha: &Partition) -> Self {
        let n = alpha.size();
        let mut lengths: Vec<(usize, usize)> = Vec::new();
        for &a in alpha.parts() {
            match lengths.last_mut() {
                Some((len, count)) if *len == a => *count += 1,
                _ => lengths.push((a, 1)),
            }
        }
        ClassEnumerator {
            n,
            lengths,
            sigma: vec![0; n],
            used: vec![false; n + 1],
            open: None,
            placed: 0,
            stack: Vec::new(),
            base: 0,
            started: false,
            finished: n == 0,
        }
    }

    fn smallest_unused(&self) -> usize {
        (1..=self.n).find(|&v| !self.used[v]).unwrap_or(0)
    }

    /// Options at the current state, starting from `from` (a slot index for
    /// length choices, or an element value for member choices).
    fn first_option(&self, from: usize) -> Option<usize> {
        match self.open {
            None => (from..self.lengths.len()).find(|&s| self.lengths[s].1 > 0),
            Some(_) => (from.max(1)..=self.n).find(|&v| !self.used[v]),
        }
    }

    fn apply(&mut self, option: usize) {
        match self.open {
            None => {
                let head = self.smallest_unused();
                let len = self.lengths[option].0;
                self.lengths[option].1 -= 1;
                self.used[head] = true;
                self.placed += 1;
                if len == 1 {
                    self.sigma[head - 1] = head;
                } else {
                    self.open = Some(OpenCycle {
                        head,
                        last: head,
                        left: len - 1,
                    });
                }
                self.stack.push(Frame::Length { slot: option, head });
            }
            Some(cyc) => {
                let value = option;
                self.used[value] = true;
                self.placed += 1;
                self.sigma[cyc.last - 1] = value;
                if cyc.left == 1 {
                    self.sigma[value - 1] = cyc.head;
                    self.open = None;
                } else {
                    self.open = Some(OpenCycle {
                        head: cyc.head,
                        last: value,
                        left: cyc.left - 1,
                    });
                }
                self.stack.push(Frame::Member { value, prev: cyc });
            }
        }
    }

    /// Undoes the top frame, returning the option to resume after.
    fn undo(&mut self) -> usize {
        match self.stack.pop().expect("undo on empty stack") {
            Frame::Length { slot, head } => {
                self.lengths[slot].1 += 1;
                self.used[head] = false;
                self.placed -= 1;
                self.open = None;
                slot + 1
            }
            Frame::Member { value, prev } => {
                self.used[value] = false;
                self.placed -= 1;
                self.open = Some(prev);
                value + 1
            }
        }
    }

    /// Extends the current state with first options until complete.
    fn descend(&mut self) {
        while self.placed < self.n {
            let opt = self
                .first_option(if self.open.is_none() { 0 } else { 1 })
                .expect("class enumeration never dead-ends");
            self.apply(opt);
        }
    }

    fn advance(&mut self) -> bool {
        while self.stack.len() > self.base {
            let resume = self.undo();
            if let Some(opt) = self.first_option(resume) {
                self.apply(opt);
                self.descend();
                return true;
            }
        }
        false
    }

    /// Splits the remaining enumeration into disjoint sub-enumerators by
    /// fixing the first `depth` decisions. Only valid before iteration starts.
    pub fn split(&self, depth: usize) -> Vec<ClassEnumerator> {
        assert!(!self.started, "split must precede iteration");
        let mut out = Vec::new();
        let mut probe = self.clone();
        probe.split_rec(depth, &mut out);
        out
    }

    fn split_rec(&mut self, depth: usize, out: &mut Vec<ClassEnumerator>) {
        if depth == 0 || self.placed == self.n {
            let mut chunk = self.clone();
            chunk.base = chunk.stack.len();
            out.push(chunk);
            return;
        }
        let mut from = if self.open.is_none() { 0 } else { 1 };
        while let Some(opt) = self.first_option(from) {
            self.apply(opt);
            self.split_rec(depth - 1, out);
            from = self.undo();
        }
    }

    /// Visits every remaining element without allocating per element.
    pub fn for_each_one_line(mut self, mut f: impl FnMut(&[usize])) {
        if self.finished {
            return;
        }
        if !self.started {
            self.started = true;
            self.descend();
            f(&self.sigma);
        }
        while self.advance() {
            f(&self.sigma);
        }
    }
}

impl Iterator for ClassEnumerator {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
        } else if !self.advance() {
            self.finished = true;
            return None;
        }
        Some(Permutation::from_one_line_unchecked(self.sigma.clone()))
    }
}

pub fn enumerate_conjugacy_class(alpha: &Partition) -> ClassEnumerator {
    ClassEnumerator::new(alpha)
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let cur = current.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(Permutation::from_one_line_unchecked(cur))
    })
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_cycles_examples() {
        let s = Permutation::parse_cycles("(3,5,4,7)(1,2,6)", Some(7)).unwrap();
        assert_eq!(s.one_line(), &[2, 6, 5, 7, 4, 1, 3]);
        let s = Permutation::parse_cycles("(1,2,4,7)(3,9,6)(5,10,12)(8,14)(11)(13)", None).unwrap();
        assert_eq!(s.one_line(), &[2, 4, 9, 7, 10, 3, 1, 14, 6, 12, 11, 5, 13, 8]);
        assert_eq!(Permutation::parse_cycles("", Some(3)).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn parse_cycles_errors() {
        assert!(Permutation::parse_cycles("(1,2)(2,3)", None).is_err());
        assert!(Permutation::parse_cycles("(1,9)", Some(3)).is_err());
        assert!(Permutation::parse_cycles("(1,2", None).is_err());
        assert!(Permutation::parse_cycles("()", None).is_err());
        assert!(Permutation::parse("bogus", None).is_err());
    }

    #[test]
    fn format_is_canonical() {
        let s = Permutation::parse_one_line("2 6 5 7 4 1 3").unwrap();
        assert_eq!(s.format_cycles(), "(3,5,4,7)(1,2,6)");
        let s = Permutation::identity(3);
        assert_eq!(s.format_cycles(), "(1)(2)(3)");
        let s = Permutation::parse_cycles("(13)(11)(8,14)(5,10,12)(3,9,6)(1,2,4,7)", None).unwrap();
        assert_eq!(s.format_cycles(), "(1,2,4,7)(3,9,6)(5,10,12)(8,14)(11)(13)");
    }

    #[test]
    fn cycle_type_examples() {
        let s = Permutation::parse_one_line("2 4 9 7 10 3 1 14 6 12 11 5 13 8").unwrap();
        assert_eq!(s.cycle_type(), p("4,3,3,2,1,1"));
        assert_eq!(Permutation::identity(5).cycle_type(), p("1^5"));
        let s = Permutation::parse_one_line("2 6 5 7 4 1 3").unwrap();
        assert_eq!(s.cycle_type(), p("4,3"));
    }

    #[test]
    fn inverse_and_compose() {
        let s = Permutation::parse_one_line("7 6 5 3 2 1 12 10 8 4 13 11 9").unwrap();
        assert_eq!(s.inverse().format_cycles(), "(1,6,2,5,3,4,10,8,9,13,11,12,7)");
        assert!(Permutation::identity(4).inverse().is_identity());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let s = Permutation::random(10, &mut rng);
            assert!(s.compose(&s.inverse()).unwrap().is_identity());
        }
        assert!(Permutation::identity(3).compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn class_examples() {
        assert_eq!(enumerate_conjugacy_class(&p("1,1,1")).count(), 1);
        assert_eq!(enumerate_conjugacy_class(&p("3")).count(), 2);
        assert_eq!(enumerate_conjugacy_class(&p("4,2")).count(), 90);
        assert_eq!(class_size(&p("4,2")), 90);
    }

    #[test]
    fn class_counts_match_formula() {
        for n in 1..=9 {
            for alpha in enumerate_partitions(n).unwrap() {
                let mut count = 0u128;
                enumerate_conjugacy_class(&alpha).for_each_one_line(|_| count += 1);
                assert_eq!(count, class_size(&alpha), "alpha={alpha}");
            }
        }
    }

    #[test]
    fn class_matches_filter() {
        for n in 1..=7 {
            for alpha in enumerate_partitions(n).unwrap() {
                let generated: BTreeSet<Permutation> = enumerate_conjugacy_class(&alpha).collect();
                let filtered: BTreeSet<Permutation> =
                    all_permutations(n).filter(|s| s.cycle_type() == alpha).collect();
                assert_eq!(generated, filtered, "alpha={alpha}");
            }
        }
    }

    #[test]
    fn split_partitions_the_class() {
        let alpha = p("3,2,2,1");
        let whole: Vec<Permutation> = enumerate_conjugacy_class(&alpha).collect();
        for depth in 0..5 {
            let mut pieces = Vec::new();
            for chunk in enumerate_conjugacy_class(&alpha).split(depth) {
                pieces.extend(chunk);
            }
            assert_eq!(pieces, whole, "depth={depth}");
        }
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(5).count(), 120);
        assert_eq!(all_permutations(1).count(), 1);
    }

    #[test]
    fn json_form() {
        let s = Permutation::parse_one_line("2 6 5 7 4 1 3").unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"n":7,"oneLine":[2,6,5,7,4,1,3]}"#);
        assert_eq!(serde_json::from_str::<Permutation>(&j).unwrap(), s);
        assert!(serde_json::from_str::<Permutation>(r#"{"n":2,"oneLine":[1,1]}"#).is_err());
    }

    proptest::proptest! {
        #[test]
        fn cycle_type_is_a_class_invariant(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = Permutation::random(8, &mut rng);
            let g = Permutation::random(8, &mut rng);
            let conj = g.compose(&s).unwrap().compose(&g.inverse()).unwrap();
            proptest::prop_assert_eq!(conj.cycle_type(), s.cycle_type());
        }

        #[test]
        fn cycle_text_round_trips(seed in 0u64..1000, n in 1usize..15) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = Permutation::random(n, &mut rng);
            let back = Permutation::parse_cycles(&s.format_cycles(), Some(n)).unwrap();
            proptest::prop_assert_eq!(back, s);
        }
    }
}
