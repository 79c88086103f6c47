//! Shape sets `S_alpha`: brute force over conjugacy classes, predictions for
//! two-part cycle types, theorem and conjecture checks, and a result cache.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::time::Duration;
#[cfg(not(target_arch = "wasm32"))]
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{
    construct_two_cycle, involution_canonical_coloring, is_unattainable_pair, search_alpha_coloring, OutcomeKind,
    SearchMode, SearchOutcome,
};
use crate::error::{Error, Result};
use crate::partition::{enumerate_b_alpha, enumerate_partitions, Partition};
use crate::permutation::{class_size, ClassEnumerator, Permutation};
use crate::rs::ShapeScratch;
use crate::tableau::{count_syt, enumerate_syt};

/// Default cap on the number of class elements a brute-force run may visit.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Bumped whenever a change could alter cached results.
pub const CACHE_VERSION: &str = "1";

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "RS_CYCLES_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    Constructive,
    Cached,
    /// Random sampling; the shape list is only a lower bound for `S_alpha`.
    Sampled,
}

impl Method {
    fn tag(self) -> &'static str {
        match self {
            Method::BruteForce => "brute-force",
            Method::Constructive => "constructive",
            Method::Cached => "cached",
            Method::Sampled => "sampled",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ShapeSetReport {
    pub alpha: Partition,
    pub b_alpha: Vec<Partition>,
    pub s_alpha: Vec<Partition>,
    /// `b_alpha` minus `s_alpha`, in `b_alpha` order.
    pub missing: Vec<Partition>,
    /// Shapes found outside `b_alpha`; empty unless the bounding box fails.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outside_box: Vec<Partition>,
    pub method: Method,
    /// Method that originally produced a cached report.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cached_from: Option<Method>,
    pub class_size: u128,
    /// Number of class elements looked at (sampled runs only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    /// Multiplicity of each shape over the class, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub histogram: Option<Vec<(Partition, u64)>>,
    /// Wall time; kept out of the serialized form so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ShapeSetReport {
    fn assemble(alpha: &Partition, mut shapes: Vec<Partition>, method: Method, started: Stopwatch) -> Self {
        shapes.sort_unstable_by(|a, b| b.cmp(a));
        shapes.dedup();
        let b_alpha = enumerate_b_alpha(alpha);
        let missing = b_alpha.iter().filter(|b| !shapes.contains(b)).cloned().collect();
        let outside_box = shapes.iter().filter(|s| !b_alpha.contains(s)).cloned().collect();
        ShapeSetReport {
            alpha: alpha.clone(),
            b_alpha,
            s_alpha: shapes,
            missing,
            outside_box,
            method,
            cached_from: None,
            class_size: class_size(alpha),
            samples: None,
            histogram: None,
            elapsed: started.elapsed(),
        }
    }

    pub fn is_lower_bound(&self) -> bool {
        self.method == Method::Sampled
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Debug, Clone)]
pub struct BruteForceConfig {
    pub jobs: usize,
    pub budget: u128,
    pub histogram: bool,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        BruteForceConfig {
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: DEFAULT_BUDGET,
            histogram: false,
        }
    }
}

impl BruteForceConfig {
    pub fn with_jobs(jobs: usize) -> Self {
        BruteForceConfig {
            jobs: jobs.max(1),
            ..Default::default()
        }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.max(1))
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))
    }
}

/// Wall clock for report timings. Reads zero on targets without a clock.
#[derive(Clone, Copy)]
struct Stopwatch(#[cfg(not(target_arch = "wasm32"))] Instant);

impl Stopwatch {
    fn start() -> Self {
        #[cfg(not(target_arch = "wasm32"))]
        return Stopwatch(Instant::now());
        #[cfg(target_arch = "wasm32")]
        Stopwatch()
    }

    fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed();
        #[cfg(target_arch = "wasm32")]
        Duration::ZERO
    }
}

fn check_budget(alpha: &Partition, budget: u128) -> Result<()> {
    let needed = class_size(alpha);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Chunks of the class enumeration, enough to keep `jobs` workers busy.
fn chunks(alpha: &Partition, jobs: usize) -> Vec<ClassEnumerator> {
    let root = ClassEnumerator::new(alpha);
    let want = jobs * 8;
    let mut depth = 1;
    loop {
        let parts = root.split(depth);
        if parts.len() >= want || depth >= alpha.size() {
            return parts;
        }
        depth += 1;
    }
}

/// Shape multiplicities over the whole class `C_alpha`.
fn class_histogram(alpha: &Partition, cfg: &BruteForceConfig) -> Result<BTreeMap<Partition, u64>> {
    check_budget(alpha, cfg.budget)?;
    let work = chunks(alpha, cfg.jobs.max(1));
    let count = |chunk: ClassEnumerator| {
        let mut scratch = ShapeScratch::default();
        let mut buf = Vec::new();
        let mut map: HashMap<Vec<usize>, u64> = HashMap::new();
        chunk.for_each_one_line(|w| {
            scratch.shape_parts_into(w, &mut buf);
            match map.get_mut(buf.as_slice()) {
                Some(c) => *c += 1,
                None => {
                    map.insert(buf.clone(), 1);
                }
            }
        });
        map
    };
    // one job runs on the calling thread, so no pool is needed
    let maps: Vec<HashMap<Vec<usize>, u64>> = if cfg.jobs <= 1 {
        work.into_iter().map(count).collect()
    } else {
        cfg.pool()?.install(|| work.into_par_iter().map(count).collect())
    };
    let mut merged = BTreeMap::new();
    for map in maps {
        for (k, v) in map {
            *merged.entry(Partition::from_parts_unchecked(k)).or_insert(0) += v;
        }
    }
    Ok(merged)
}

/// `S_alpha` by running insertion on every element of `C_alpha`.
pub fn brute_force_s_alpha(alpha: &Partition, cfg: &BruteForceConfig) -> Result<ShapeSetReport> {
    if alpha.is_empty() {
        return Err(Error::Empty("cycle type"));
    }
    let started = Stopwatch::start();
    let hist = class_histogram(alpha, cfg)?;
    let mut report = ShapeSetReport::assemble(alpha, hist.keys().cloned().collect(), Method::BruteForce, started);
    if cfg.histogram {
        let mut h: Vec<(Partition, u64)> = hist.into_iter().collect();
        h.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        report.histogram = Some(h);
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Shapes of `samples` seeded random elements of `C_alpha`. The result is a
/// lower bound for `S_alpha` and is labeled as such.
pub fn sample_s_alpha(alpha: &Partition, samples: u64, seed: u64) -> Result<ShapeSetReport> {
    if alpha.is_empty() {
        return Err(Error::Empty("cycle type"));
    }
    let started = Stopwatch::start();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scratch = ShapeScratch::default();
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..samples {
        let sigma = Permutation::random_of_type(alpha, &mut rng);
        seen.insert(scratch.shape_of(sigma.one_line()));
    }
    let mut report = ShapeSetReport::assemble(alpha, seen.into_iter().collect(), Method::Sampled, started);
    report.samples = Some(samples);
    Ok(report)
}

/// `S_alpha` for two-part `alpha`, as classified: all of `B_alpha` except the
/// listed exceptions for even `n`.
pub fn predicted_s_alpha_two_cycle(alpha: &Partition) -> Result<Vec<Partition>> {
    if alpha.len() != 2 {
        return Err(Error::Precondition(format!("{alpha} does not have exactly two parts")));
    }
    Ok(enumerate_b_alpha(alpha).into_iter().filter(|l| !is_unattainable_pair(alpha, l)).collect())
}

/// `S_alpha` for two-part `alpha` from the explicit constructions, each
/// witness re-checked with insertion.
pub fn constructive_s_alpha(alpha: &Partition) -> Result<ShapeSetReport> {
    let started = Stopwatch::start();
    let mut shapes = Vec::new();
    for shape in enumerate_b_alpha(alpha) {
        let out = construct_two_cycle(alpha, &shape)?;
        if out.is_witness() {
            if !out.verify_witness() {
                return Err(Error::Precondition(format!("witness for {alpha} on {shape} fails insertion")));
            }
            shapes.push(shape);
        }
    }
    Ok(ShapeSetReport::assemble(alpha, shapes, Method::Constructive, started))
}

/// Two-part cycle types of `n`, largest first part first.
pub fn two_part_types(n: usize) -> Vec<Partition> {
    (1..=n / 2).map(|a2| Partition::from_parts_unchecked(vec![n - a2, a2])).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremEntry {
    pub alpha: Partition,
    pub missing: Vec<Partition>,
    pub brute_equals_predicted: bool,
    pub constructed_equals_predicted: bool,
    /// Shapes on which brute force and prediction disagree.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremReport {
    pub n: usize,
    pub entries: Vec<TheoremEntry>,
    pub ok: bool,
}

fn symmetric_difference(a: &[Partition], b: &[Partition]) -> Vec<Partition> {
    let mut out: Vec<Partition> = a.iter().filter(|x| !b.contains(x)).chain(b.iter().filter(|x| !a.contains(x))).cloned().collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// Brute force, prediction, and constructions agree for every two-part
/// cycle type of `n`.
pub fn verify_main_theorem(n: usize, cfg: &BruteForceConfig) -> Result<TheoremReport> {
    if n < 2 {
        return Err(Error::Precondition("two-part cycle types need n >= 2".into()));
    }
    let mut entries = Vec::new();
    for alpha in two_part_types(n) {
        let brute = brute_force_s_alpha(&alpha, cfg)?;
        let predicted = predicted_s_alpha_two_cycle(&alpha)?;
        let constructed = constructive_s_alpha(&alpha)?;
        let mismatches = symmetric_difference(&brute.s_alpha, &predicted);
        entries.push(TheoremEntry {
            alpha,
            missing: brute.missing,
            brute_equals_predicted: mismatches.is_empty(),
            constructed_equals_predicted: constructed.s_alpha == predicted,
            mismatches,
        });
    }
    let ok = entries.iter().all(|e| e.brute_equals_predicted && e.constructed_equals_predicted);
    Ok(TheoremReport { n, entries, ok })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ContainmentReport {
    pub n: usize,
    pub classes: usize,
    /// `(alpha, shape)` with `shape ∈ S_alpha` but outside `B_alpha`.
    pub violations: Vec<(Partition, Partition)>,
}

/// `S_alpha ⊆ B_alpha` for every cycle type of `n`.
pub fn verify_containment(n: usize, cfg: &BruteForceConfig) -> Result<ContainmentReport> {
    let mut violations = Vec::new();
    let types = enumerate_partitions(n)?;
    for alpha in &types {
        let report = brute_force_s_alpha(alpha, cfg)?;
        violations.extend(report.outside_box.into_iter().map(|s| (alpha.clone(), s)));
    }
    Ok(ContainmentReport {
        n,
        classes: types.len(),
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Checked exhaustively within the configured budget.
    VerifiedUpToBudget,
    Falsified,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub checked: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
}

impl Verdict {
    fn new(claim: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            status: Status::VerifiedUpToBudget,
            checked: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    fn fail(&mut self, what: String) {
        self.status = Status::Falsified;
        self.counterexamples.push(what);
    }

    pub fn merge(&mut self, other: Verdict) {
        self.checked.extend(other.checked);
        self.counterexamples.extend(other.counterexamples);
        self.status = match (self.status, other.status) {
            (Status::Falsified, _) | (_, Status::Falsified) => Status::Falsified,
            (Status::BudgetExceeded, _) | (_, Status::BudgetExceeded) => Status::BudgetExceeded,
            _ => Status::VerifiedUpToBudget,
        };
    }

    pub fn holds(&self) -> bool {
        self.status == Status::VerifiedUpToBudget
    }

    fn over_budget(claim: &str, e: Error) -> Result<Verdict> {
        match e {
            Error::BudgetExceeded { .. } => {
                let mut v = Verdict::new(claim);
                v.status = Status::BudgetExceeded;
                v.counterexamples.push(e.to_string());
                Ok(v)
            }
            other => Err(other),
        }
    }
}

fn fmt_list(shapes: &[Partition]) -> String {
    let inner: Vec<String> = shapes.iter().map(|s| format!("({s})")).collect();
    format!("{{{}}}", inner.join(" "))
}

/// Strict `alpha` with at least three parts: `S_alpha = B_alpha`, except that
/// for `alpha_r = 1` and even `n` exactly `(n/2, n/2)` is missing.
pub fn check_strict_conjecture(alpha: &Partition, cfg: &BruteForceConfig) -> Result<Verdict> {
    if !alpha.is_strict() || alpha.len() < 3 {
        return Err(Error::Precondition(format!("{alpha} is not strict with at least three parts")));
    }
    let claim = "strict cycle types with r >= 3";
    let report = match brute_force_s_alpha(alpha, cfg) {
        Ok(r) => r,
        Err(e) => return Verdict::over_budget(claim, e),
    };
    let n = alpha.size();
    let expected = if alpha.part(alpha.len()) == 1 && n.is_multiple_of(2) {
        vec![Partition::from_parts_unchecked(vec![n / 2, n / 2])]
    } else {
        Vec::new()
    };
    let mut v = Verdict::new(claim);
    v.checked.push(format!("{alpha}: missing {}", fmt_list(&report.missing)));
    if report.missing != expected {
        v.fail(format!("{alpha}: missing {} expected {}", fmt_list(&report.missing), fmt_list(&expected)));
    }
    Ok(v)
}

/// Strict partitions of `n` with at least `min_parts` parts.
pub fn strict_types(n: usize, min_parts: usize) -> Result<Vec<Partition>> {
    Ok(enumerate_partitions(n)?.into_iter().filter(|a| a.is_strict() && a.len() >= min_parts).collect())
}

/// Involution classes of `n`: `S_alpha` is the set of shapes with exactly `k`
/// odd columns, and the symmetric coloring works on each of them.
pub fn check_involution_shapes(n: usize, cfg: &BruteForceConfig) -> Result<Verdict> {
    let claim = "involution shapes are the shapes with k odd columns";
    let all = enumerate_partitions(n)?;
    let mut v = Verdict::new(claim);
    for k in (0..=n).rev().filter(|k| (n - k).is_multiple_of(2)) {
        let mut parts = vec![2; (n - k) / 2];
        parts.extend(std::iter::repeat_n(1, k));
        let alpha = Partition::from_parts_unchecked(parts);
        let report = match brute_force_s_alpha(&alpha, cfg) {
            Ok(r) => r,
            Err(e) => {
                v.merge(Verdict::over_budget(claim, e)?);
                continue;
            }
        };
        let expected: Vec<Partition> = all.iter().filter(|l| l.stats().odd_column_count == k).cloned().collect();
        if report.s_alpha != expected {
            v.fail(format!("{alpha}: brute force {} expected {}", fmt_list(&report.s_alpha), fmt_list(&expected)));
        }
        for shape in &report.s_alpha {
            match involution_canonical_coloring(&alpha, shape) {
                Ok(out) if out.kind == OutcomeKind::Coloring => {}
                Ok(_) => v.fail(format!("{alpha}: symmetric coloring of {shape} rejected")),
                Err(e) => v.fail(format!("{alpha}: symmetric coloring of {shape}: {e}")),
            }
        }
        v.checked.push(format!("{alpha}: {} shapes", report.s_alpha.len()));
    }
    Ok(v)
}

/// `lambda / mu` is a horizontal strip: `mu ⊆ lambda` with no two added
/// boxes in one column.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    mu.len() <= lambda.len()
        && (1..=lambda.len()).all(|i| mu.part(i) <= lambda.part(i) && mu.part(i) >= lambda.part(i + 1))
}

/// Shapes of `B_{alpha + 1^k}` reachable from `S_alpha` by a horizontal strip
/// of `k` boxes, where two-row-deep results must have the strip in row 1.
pub fn almost_pieri_prediction(s_alpha: &[Partition], alpha_tilde: &Partition, k: usize) -> Vec<Partition> {
    enumerate_b_alpha(alpha_tilde)
        .into_iter()
        .filter(|lambda| {
            s_alpha.iter().any(|mu| {
                mu.size() + k == lambda.size()
                    && is_horizontal_strip(lambda, mu)
                    && (lambda.column_length(1) != 2 || (2..=lambda.len()).all(|i| lambda.part(i) == mu.part(i)))
            })
        })
        .collect()
}

/// Adding `k` fixed points to a class with no fixed points acts on shapes
/// like a Pieri rule, with the two-row exception.
pub fn check_almost_pieri(alpha: &Partition, k: usize, cfg: &BruteForceConfig) -> Result<Verdict> {
    if alpha.is_empty() || alpha.part(alpha.len()) <= 1 || k == 0 {
        return Err(Error::Precondition(format!("need alpha_r > 1 and k >= 1, got {alpha} and {k}")));
    }
    let claim = "almost Pieri rule for added fixed points";
    let mut parts = alpha.parts().to_vec();
    parts.extend(std::iter::repeat_n(1, k));
    let alpha_tilde = Partition::from_parts_unchecked(parts);
    let (base, tilde) = match (brute_force_s_alpha(alpha, cfg), brute_force_s_alpha(&alpha_tilde, cfg)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Verdict::over_budget(claim, e),
    };
    let predicted = almost_pieri_prediction(&base.s_alpha, &alpha_tilde, k);
    let mut v = Verdict::new(claim);
    v.checked.push(format!("{alpha} + 1^{k}: {} shapes", tilde.s_alpha.len()));
    let diff = symmetric_difference(&tilde.s_alpha, &predicted);
    if !diff.is_empty() {
        v.fail(format!("{alpha} + 1^{k}: brute force and prediction differ on {}", fmt_list(&diff)));
    }
    Ok(v)
}

/// Every shape of `S_alpha` (strict `alpha`) carries an α-coloring of some
/// admissible `Q↑`. `budget` caps colorings tried per shape.
pub fn check_coloring_conjecture(alpha: &Partition, cfg: &BruteForceConfig, budget: u64) -> Result<Verdict> {
    if !alpha.is_strict() {
        return Err(Error::Precondition(format!("{alpha} is not strict")));
    }
    let claim = "strict cycle types admit colorings";
    let report = match brute_force_s_alpha(alpha, cfg) {
        Ok(r) => r,
        Err(e) => return Verdict::over_budget(claim, e),
    };
    let mut v = Verdict::new(claim);
    for shape in &report.s_alpha {
        match search_alpha_coloring(alpha, shape, budget, SearchMode::First)? {
            SearchOutcome::Found { .. } => {}
            SearchOutcome::BudgetExhausted { checked } => {
                v.status = Status::BudgetExceeded;
                v.counterexamples.push(format!("{alpha} on {shape}: budget exhausted after {checked}"));
            }
            _ => v.fail(format!("{alpha} on {shape}: no coloring")),
        }
    }
    v.checked.push(format!("{alpha}: {} shapes", report.s_alpha.len()));
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub admissible: u128,
    pub total: u128,
}

impl Fraction {
    pub fn value(&self) -> f64 {
        self.admissible as f64 / self.total as f64
    }
}

/// Admissible standard tableaux of size `n` over all standard tableaux.
pub fn admissible_fraction(n: usize) -> Result<Fraction> {
    let shapes = enumerate_partitions(n)?;
    let admissible: u128 = shapes
        .par_iter()
        .map(|s| enumerate_syt(s).iter().filter(|t| t.is_admissible().unwrap_or(false)).count() as u128)
        .sum();
    let total = shapes.iter().map(count_syt).sum();
    Ok(Fraction { admissible, total })
}

/// Brute-force results stored as one JSON file per `n`, keyed by
/// `alpha|method|version`.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `explicit`, else the directory named by the environment variable;
    /// `None` when neither is set.
    pub fn resolve(explicit: Option<&Path>) -> Option<Self> {
        explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn file(&self, n: usize) -> PathBuf {
        self.dir.join(format!("n{n}.json"))
    }

    fn key(alpha: &Partition, method: Method) -> String {
        format!("{alpha}|{}|{CACHE_VERSION}", method.tag())
    }

    fn load_all(&self, n: usize) -> Result<BTreeMap<String, ShapeSetReport>> {
        match std::fs::read_to_string(self.file(n)) {
            Ok(text) => Ok(serde_json::from_str(&text)?),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(BTreeMap::new()),
            Err(e) => Err(e.into()),
        }
    }

    /// The stored report exactly as it was produced.
    pub fn get_raw(&self, alpha: &Partition, method: Method) -> Result<Option<ShapeSetReport>> {
        Ok(self.load_all(alpha.size())?.remove(&Self::key(alpha, method)))
    }

    /// A stored report marked as a cache hit.
    pub fn get(&self, alpha: &Partition, method: Method) -> Result<Option<ShapeSetReport>> {
        Ok(self.get_raw(alpha, method)?.map(|mut r| {
            r.cached_from = Some(r.method);
            r.method = Method::Cached;
            r
        }))
    }

    pub fn put(&self, report: &ShapeSetReport) -> Result<()> {
        if matches!(report.method, Method::Cached | Method::Sampled) {
            return Ok(());
        }
        std::fs::create_dir_all(&self.dir)?;
        let n = report.alpha.size();
        let mut all = self.load_all(n)?;
        all.insert(Self::key(&report.alpha, report.method), report.clone());
        let tmp = self.dir.join(format!("n{n}.json.tmp"));
        std::fs::write(&tmp, serde_json::to_string_pretty(&all)?)?;
        std::fs::rename(tmp, self.file(n))?;
        Ok(())
    }
}

/// Brute force through the cache.
pub fn brute_force_cached(alpha: &Partition, cfg: &BruteForceConfig, cache: &Cache) -> Result<ShapeSetReport> {
    if !cfg.histogram {
        if let Some(hit) = cache.get(alpha, Method::BruteForce)? {
            return Ok(hit);
        }
    }
    let report = brute_force_s_alpha(alpha, cfg)?;
    let mut stored = report.clone();
    stored.histogram = None;
    cache.put(&stored)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ps(list: &[&str]) -> Vec<Partition> {
        list.iter().map(|s| p(s)).collect()
    }

    fn cfg() -> BruteForceConfig {
        BruteForceConfig::with_jobs(2)
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_s_alpha(&p("3"), &cfg()).unwrap().s_alpha, ps(&["2,1"]));
        assert_eq!(brute_force_s_alpha(&p("2,1"), &cfg()).unwrap().s_alpha, ps(&["2,1", "1,1,1"]));
        let r = brute_force_s_alpha(&p("4,2"), &cfg()).unwrap();
        assert_eq!(r.s_alpha.len(), 7);
        assert_eq!(r.missing, ps(&["2,2,2"]));
        assert_eq!(r.class_size, 90);
    }

    #[test]
    fn single_cycle_shapes() {
        for n in 3..=8 {
            let r = brute_force_s_alpha(&Partition::single_row(n), &cfg()).unwrap();
            let expected: Vec<Partition> = enumerate_partitions(n)
                .unwrap()
                .into_iter()
                .filter(|l| l.len() > 1 && l.first_row() > 1)
                .collect();
            assert_eq!(r.s_alpha, expected);
        }
    }

    #[test]
    fn histogram_counts_whole_class() {
        let c = BruteForceConfig {
            histogram: true,
            ..cfg()
        };
        let r = brute_force_s_alpha(&p("3,2,1"), &c).unwrap();
        let total: u64 = r.histogram.as_ref().unwrap().iter().map(|(_, c)| c).sum();
        assert_eq!(total as u128, r.class_size);
    }

    #[test]
    fn budget_is_enforced() {
        let c = BruteForceConfig { budget: 10, ..cfg() };
        assert!(matches!(brute_force_s_alpha(&p("4,2"), &c), Err(Error::BudgetExceeded { needed: 90, budget: 10 })));
    }

    #[test]
    fn sampling_is_a_labeled_lower_bound() {
        let r = sample_s_alpha(&p("5,3"), 200, 0).unwrap();
        assert!(r.is_lower_bound());
        let full = brute_force_s_alpha(&p("5,3"), &cfg()).unwrap();
        assert!(r.s_alpha.iter().all(|s| full.s_alpha.contains(s)));
        assert_eq!(r.to_json(), sample_s_alpha(&p("5,3"), 200, 0).unwrap().to_json());
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_s_alpha_two_cycle(&p("4,3")).unwrap(), enumerate_b_alpha(&p("4,3")));
        let b = enumerate_b_alpha(&p("5,5"));
        let s = predicted_s_alpha_two_cycle(&p("5,5")).unwrap();
        assert_eq!(symmetric_difference(&b, &s), ps(&["8,1,1"]));
        let b = enumerate_b_alpha(&p("4,4"));
        let s = predicted_s_alpha_two_cycle(&p("4,4")).unwrap();
        assert_eq!(symmetric_difference(&b, &s), ps(&["6,1,1", "3,1^5"]));
    }

    #[test]
    fn theorem_small() {
        for n in 2..=8 {
            let r = verify_main_theorem(n, &cfg()).unwrap();
            assert!(r.ok, "n = {n}: {r:?}");
        }
        let r = verify_main_theorem(8, &cfg()).unwrap();
        let missing = |a: &str| r.entries.iter().find(|e| e.alpha == p(a)).unwrap().missing.clone();
        assert_eq!(missing("5,3"), ps(&["2,2,2,2"]));
        assert_eq!(missing("7,1"), ps(&["4,4"]));
        assert_eq!(missing("4,4"), ps(&["6,1,1", "3,1^5"]));
        assert!(verify_main_theorem(7, &cfg()).unwrap().entries.iter().all(|e| e.missing.is_empty()));
    }

    #[test]
    fn containment_small() {
        for n in 1..=6 {
            assert!(verify_containment(n, &cfg()).unwrap().violations.is_empty());
        }
    }

    #[test]
    fn strict_examples() {
        assert!(check_strict_conjecture(&p("4,3,2"), &cfg()).unwrap().holds());
        assert!(check_strict_conjecture(&p("3,2,1"), &cfg()).unwrap().holds());
        assert!(check_strict_conjecture(&p("4,2"), &cfg()).is_err());
    }

    #[test]
    fn involution_examples() {
        for n in 1..=7 {
            assert!(check_involution_shapes(n, &cfg()).unwrap().holds(), "n = {n}");
        }
    }

    #[test]
    fn horizontal_strips() {
        assert!(is_horizontal_strip(&p("3,1"), &p("2,1")));
        assert!(is_horizontal_strip(&p("2,1,1"), &p("1,1")));
        assert!(!is_horizontal_strip(&p("1,1,1"), &p("1")));
        assert!(is_horizontal_strip(&p("2,2"), &p("2")));
        assert!(!is_horizontal_strip(&p("3"), &p("2,1")));
        assert!(!is_horizontal_strip(&p("2"), &p("1,1")));
    }

    #[test]
    fn almost_pieri_examples() {
        // S_(3) = {(2,1)}; (2,2) has two rows and the added box is not in row 1
        let pred = almost_pieri_prediction(&ps(&["2,1"]), &p("3,1"), 1);
        assert_eq!(pred, ps(&["3,1", "2,1,1"]));
        assert!(check_almost_pieri(&p("3"), 1, &cfg()).unwrap().holds());
        assert!(check_almost_pieri(&p("2"), 2, &cfg()).unwrap().holds());
        assert!(check_almost_pieri(&p("2,1"), 1, &cfg()).is_err());
    }

    #[test]
    fn coloring_conjecture_small() {
        for a in ["3", "2,1", "3,2", "4,2,1"] {
            assert!(check_coloring_conjecture(&p(a), &cfg(), 1_000_000).unwrap().holds(), "{a}");
        }
    }

    #[test]
    fn admissible_fraction_small() {
        let f = admissible_fraction(2).unwrap();
        assert_eq!((f.admissible, f.total), (2, 2));
        let f = admissible_fraction(6).unwrap();
        assert_eq!(f.total, 76);
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let alpha = p("4,2");
        let fresh = brute_force_cached(&alpha, &cfg(), &cache).unwrap();
        assert_eq!(fresh.method, Method::BruteForce);
        let hit = brute_force_cached(&alpha, &cfg(), &cache).unwrap();
        assert_eq!(hit.method, Method::Cached);
        assert_eq!(hit.cached_from, Some(Method::BruteForce));
        let stored = cache.get_raw(&alpha, Method::BruteForce).unwrap().unwrap();
        let again = brute_force_s_alpha(&alpha, &cfg()).unwrap();
        assert_eq!(stored.to_json(), again.to_json());
    }

    #[test]
    fn job_count_does_not_change_bytes() {
        let a = brute_force_s_alpha(&p("4,3,1"), &BruteForceConfig::with_jobs(1)).unwrap();
        let b = brute_force_s_alpha(&p("4,3,1"), &BruteForceConfig::with_jobs(8)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }
}
