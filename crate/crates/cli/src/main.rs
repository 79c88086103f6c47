mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rs_cycles::coloring::OutcomeKind;
use rs_cycles::partition::enumerate_partitions;
use rs_cycles::rs::rs_trace;
use rs_cycles::shapeset::{
    brute_force_cached, check_almost_pieri, check_coloring_conjecture, check_involution_shapes, check_strict_conjecture,
    constructive_s_alpha, sample_s_alpha, strict_types, verify_containment, verify_main_theorem, Cache, Status, Verdict,
    DEFAULT_BUDGET,
};
use rs_cycles::{
    brute_force_s_alpha, construct_two_cycle, enumerate_b_alpha, render_coloring, render_partition, render_report,
    render_tableau, rs_forward, rs_inverse, search_alpha_coloring, validate_alpha_coloring, BruteForceConfig,
    ColoringOutcome, Format, Partition, Permutation, RsPair, SearchMode, SearchOutcome, ShapeSetReport, Tableau,
};

const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Parser)]
#[command(name = "rs-cycles", version, about = "Robinson-Schensted shapes of permutations by cycle type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Output format: text, json or latex.
    #[arg(long, global = true, alias = "render", default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Worker threads; all cores when absent.
    #[arg(long, global = true, value_parser = parse_jobs)]
    jobs: Option<usize>,
    /// Seed for sampled runs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest conjugacy class enumerated, and colorings tried per search.
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Cache directory for brute-force reports. Falls back to RS_CYCLES_CACHE_DIR.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: rs_cycles::Error| e.to_string())
}

fn parse_jobs(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("jobs must be at least 1".into()),
        Ok(j) => Ok(j),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Row insertion and its inverse.
    #[command(subcommand)]
    Rs(RsCommand),
    /// Shapes reached by a conjugacy class.
    Salpha {
        #[arg(long)]
        alpha: Partition,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        /// Count class elements per shape (brute force only).
        #[arg(long)]
        histogram: bool,
        /// Class elements drawn by the sampling method.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Bounding-box shapes of a cycle type.
    Balpha {
        #[arg(long)]
        alpha: Partition,
    },
    /// Colorings of admissible tableaux.
    #[command(subcommand)]
    Color(ColorCommand),
    /// Exhaustive checks of proven statements.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Bounded checks of open statements.
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
    /// Renders a shape, tableau, coloring or saved report.
    Render {
        #[arg(long)]
        shape: Option<Partition>,
        #[arg(long)]
        tableau: Option<String>,
        #[arg(long)]
        coloring: Option<String>,
        /// JSON file written by `salpha --format json`.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RsCommand {
    /// Insertion and recording tableaux of a permutation.
    Apply(SigmaArgs),
    /// The permutation of a pair of tableaux.
    Invert {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Shape only.
    Shape(SigmaArgs),
    /// Every intermediate pair.
    Trace(SigmaArgs),
}

#[derive(Args)]
struct SigmaArgs {
    /// Cycle notation `(1,2)(3,4)` or one-line notation `2 1 4 3`.
    #[arg(long)]
    sigma: String,
    /// Size, for cycle notation with trailing fixed points.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum ColorCommand {
    /// Explicit witness for a two-part cycle type.
    Construct {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        shape: Partition,
    },
    /// Exhaustive search over admissible tableaux and colorings.
    Search {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        shape: Partition,
        /// Count colorings instead of stopping at the first.
        #[arg(long)]
        count: bool,
    },
    /// Checks a given coloring of a given tableau.
    Validate {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        q: String,
        #[arg(long)]
        coloring: String,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// No class reaches a shape outside its bounding box.
    Containment {
        #[arg(long)]
        n: usize,
    },
    /// Brute force, prediction and constructions agree on two-part classes.
    Theorem {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    alpha: Option<Partition>,
}

#[derive(Subcommand)]
enum ConjectureCommand {
    /// Strict cycle types with at least three parts.
    Strict(TypeArgs),
    /// Every shape of a strict class carries a coloring.
    Coloring(TypeArgs),
    /// Adding fixed points acts like a Pieri rule.
    Pieri {
        #[command(flatten)]
        types: TypeArgs,
        /// Fixed points added; with --n, all k when absent.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Involution classes and odd columns.
    Involutions {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    #[value(alias = "brute-force")]
    Brute,
    #[value(alias = "constructive")]
    Construct,
    #[value(alias = "sampled")]
    Sample,
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }

    fn checked(text: String, passed: bool) -> Self {
        Output {
            text,
            code: if passed { 0 } else { 2 },
        }
    }
}

type Run = Result<Output, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.global.jobs {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let timed = matches!(cli.command, Command::Salpha { .. } | Command::Verify(_) | Command::Conjecture(_))
        || matches!(cli.command, Command::Color(ColorCommand::Search { .. }));
    let started = Instant::now();
    let result = run(&cli);
    if timed {
        eprintln!("elapsed {:.3}s", started.elapsed().as_secs_f64());
    }
    match result {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Run {
    let g = &cli.global;
    let f = g.format;
    match &cli.command {
        Command::Rs(cmd) => run_rs(cmd, f),
        Command::Salpha {
            alpha,
            method,
            histogram,
            samples,
        } => {
            let report = match method {
                MethodArg::Brute => {
                    let cfg = BruteForceConfig {
                        histogram: *histogram,
                        ..brute_config(g)
                    };
                    match Cache::resolve(g.cache_dir.as_deref()) {
                        Some(cache) => brute_force_cached(alpha, &cfg, &cache),
                        None => brute_force_s_alpha(alpha, &cfg),
                    }
                }
                MethodArg::Construct => constructive_s_alpha(alpha),
                MethodArg::Sample => sample_s_alpha(alpha, *samples, g.seed),
            }
            .map_err(err)?;
            Ok(Output::checked(render_report(&report, f).map_err(err)?, report.outside_box.is_empty()))
        }
        Command::Balpha { alpha } => {
            let shapes = enumerate_b_alpha(alpha);
            Ok(Output::ok(match f {
                Format::Json => json(&shapes),
                _ => shapes
                    .iter()
                    .map(|s| shape_line(s, f))
                    .collect::<Result<Vec<_>, _>>()?
                    .join("\n"),
            }))
        }
        Command::Color(cmd) => run_color(cmd, g),
        Command::Verify(cmd) => run_verify(cmd, g),
        Command::Conjecture(cmd) => run_conjecture(cmd, g),
        Command::Render {
            shape,
            tableau,
            coloring,
            report,
        } => {
            let text = match (shape, tableau, coloring, report) {
                (Some(s), None, None, None) => render_partition(s, f),
                (None, Some(t), None, None) => render_tableau(&input::tableau(t).map_err(err)?, f),
                (None, t, Some(c), None) => {
                    let t = t.as_deref().map(input::tableau).transpose().map_err(err)?;
                    render_coloring(t.as_ref(), &input::coloring(c).map_err(err)?, f)
                }
                (None, None, None, Some(path)) => {
                    let raw = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                    let report: ShapeSetReport = serde_json::from_str(&raw).map_err(err)?;
                    render_report(&report, f)
                }
                _ => return Err("give exactly one of --shape, --tableau, --coloring (with optional --tableau), --report".into()),
            };
            Ok(Output::ok(text.map_err(err)?))
        }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("value serializes")
}

fn no_latex(what: &str) -> String {
    format!("{what} has no LaTeX rendering")
}

fn brute_config(g: &Global) -> BruteForceConfig {
    let mut cfg = match g.jobs {
        Some(j) => BruteForceConfig::with_jobs(j),
        None => BruteForceConfig::default(),
    };
    cfg.budget = g.budget.unwrap_or(DEFAULT_BUDGET);
    cfg
}

fn search_budget(g: &Global) -> u64 {
    g.budget.map_or(DEFAULT_SEARCH_BUDGET, |b| b.min(u64::MAX as u128) as u64)
}

fn shape_line(shape: &Partition, f: Format) -> Result<String, String> {
    match f {
        Format::Text => Ok(format!("({shape})")),
        _ => render_partition(shape, f).map_err(err),
    }
}

fn sigma(args: &SigmaArgs) -> Result<Permutation, String> {
    Permutation::parse(&args.sigma, args.n).map_err(err)
}

fn run_rs(cmd: &RsCommand, f: Format) -> Run {
    match cmd {
        RsCommand::Apply(args) => {
            let pair = rs_forward(&sigma(args)?);
            Ok(Output::ok(match f {
                Format::Json => json(&serde_json::json!({ "p": pair.p, "q": pair.q, "shape": pair.shape() })),
                _ => format!(
                    "P\n{}\n\nQ\n{}\n\nshape {}",
                    render_tableau(&pair.p, f).map_err(err)?,
                    render_tableau(&pair.q, f).map_err(err)?,
                    shape_line(pair.shape(), f)?
                ),
            }))
        }
        RsCommand::Invert { p, q } => {
            let pair = RsPair {
                p: input::tableau(p).map_err(err)?,
                q: input::tableau(q).map_err(err)?,
            };
            let sigma = rs_inverse(&pair).map_err(err)?;
            Ok(Output::ok(match f {
                Format::Text => format!("sigma  {}\ncycles {}", sigma.format_one_line(), sigma.format_cycles()),
                Format::Json => json(&serde_json::json!({ "sigma": sigma, "cycles": sigma.format_cycles() })),
                Format::Latex => return Err(no_latex("a permutation")),
            }))
        }
        RsCommand::Shape(args) => Ok(Output::ok(match f {
            Format::Json => json(&rs_forward(&sigma(args)?).shape()),
            _ => shape_line(rs_forward(&sigma(args)?).shape(), f)?,
        })),
        RsCommand::Trace(args) => {
            let steps = rs_trace(&sigma(args)?);
            match f {
                Format::Json => Ok(Output::ok(json(&steps))),
                Format::Latex => Err(no_latex("an insertion trace")),
                Format::Text => {
                    let inline = |t: &Tableau| {
                        t.rows()
                            .iter()
                            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                            .collect::<Vec<_>>()
                            .join(" / ")
                    };
                    let rows: Vec<[String; 4]> = steps
                        .iter()
                        .map(|s| [s.step.to_string(), s.inserted.to_string(), inline(&s.p), inline(&s.q)])
                        .collect();
                    Ok(Output::ok(table(&["i", "sigma(i)", "P", "Q"], &rows)))
                }
            }
        }
    }
}

fn table<const N: usize>(header: &[&str; N], rows: &[[String; N]]) -> String {
    let mut widths = header.map(str::len);
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    std::iter::once(line(header.to_vec()))
        .chain(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())))
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_outcome(o: &ColoringOutcome, f: Format) -> Result<String, String> {
    let text_or_json = |text: String| -> Result<String, String> {
        match f {
            Format::Json => Ok(json(o)),
            _ => Ok(text),
        }
    };
    let head = format!("alpha ({})  shape ({})", o.alpha, o.shape);
    let sigma = o.sigma.as_ref().map(|s| format!("sigma  {}\ncycles {}", s.format_one_line(), s.format_cycles()));
    match o.kind {
        OutcomeKind::Coloring | OutcomeKind::Rejected => {
            let (q, c, p) = (o.q.as_ref().unwrap(), o.coloring.as_ref().unwrap(), o.witness_p.as_ref().unwrap());
            let up = q.column_reverse();
            if f == Format::Latex {
                return render_coloring(Some(&up), c, f).map_err(err);
            }
            let verdict = if o.kind == OutcomeKind::Coloring { "coloring" } else { "rejected: P is not standard" };
            text_or_json(format!(
                "{head}  {verdict}\nQ reversed by columns, with colors\n{}\n{}\nP\n{}",
                render_coloring(Some(&up), c, Format::Text).map_err(err)?,
                sigma.unwrap_or_default(),
                render_tableau(p, Format::Text).map_err(err)?
            ))
        }
        OutcomeKind::ExplicitPermutation => {
            let s = o.sigma.as_ref().unwrap();
            let p = rs_forward(s).p;
            if f == Format::Latex {
                return render_tableau(&p, f).map_err(err);
            }
            text_or_json(format!(
                "{head}  explicit permutation\n{}\nP\n{}",
                sigma.unwrap_or_default(),
                render_tableau(&p, Format::Text).map_err(err)?
            ))
        }
        OutcomeKind::Unattainable => match f {
            Format::Latex => Err(no_latex("an unattainable shape")),
            _ => text_or_json(format!("{head}  unattainable: no permutation of this cycle type has this shape")),
        },
    }
}

fn run_color(cmd: &ColorCommand, g: &Global) -> Run {
    let f = g.format;
    match cmd {
        ColorCommand::Construct { alpha, shape } => {
            let outcome = construct_two_cycle(alpha, shape).map_err(err)?;
            Ok(Output::ok(render_outcome(&outcome, f)?))
        }
        ColorCommand::Search { alpha, shape, count } => {
            let budget = search_budget(g);
            let mode = if *count { SearchMode::Count } else { SearchMode::First };
            let result = search_alpha_coloring(alpha, shape, budget, mode).map_err(err)?;
            match (&result, f) {
                (SearchOutcome::BudgetExhausted { checked }, _) => {
                    Err(format!("search budget exhausted after {checked} colorings"))
                }
                (SearchOutcome::Found { outcome, .. }, _) if f != Format::Json => Ok(Output::ok(render_outcome(outcome, f)?)),
                (_, Format::Json) => Ok(Output::ok(json(&result))),
                (_, Format::Latex) => Err(no_latex("a search count")),
                (SearchOutcome::Absent { checked }, _) => Ok(Output::ok(format!(
                    "alpha ({alpha})  shape ({shape})  no coloring of any admissible tableau ({checked} checked)"
                ))),
                (SearchOutcome::Counted { colorings, checked }, _) => Ok(Output::ok(format!(
                    "alpha ({alpha})  shape ({shape})  {colorings} colorings ({checked} checked)"
                ))),
                (SearchOutcome::Found { .. }, _) => unreachable!(),
            }
        }
        ColorCommand::Validate { alpha, q, coloring } => {
            let q = input::tableau(q).map_err(err)?;
            let coloring = input::coloring(coloring).map_err(err)?;
            let outcome = validate_alpha_coloring(&q, &coloring, alpha).map_err(err)?;
            Ok(Output::checked(render_outcome(&outcome, f)?, outcome.kind == OutcomeKind::Coloring))
        }
    }
}

fn shape_list(shapes: &[Partition]) -> String {
    if shapes.is_empty() {
        return "none".into();
    }
    shapes.iter().map(|s| format!("({s})")).collect::<Vec<_>>().join(" ")
}

fn run_verify(cmd: &VerifyCommand, g: &Global) -> Run {
    let cfg = brute_config(g);
    match cmd {
        VerifyCommand::Theorem { n } => {
            let report = verify_main_theorem(*n, &cfg).map_err(err)?;
            let text = match g.format {
                Format::Json => json(&report),
                Format::Latex => return Err(no_latex("a theorem report")),
                Format::Text => {
                    let rows: Vec<[String; 3]> = report
                        .entries
                        .iter()
                        .map(|e| {
                            let status = if e.brute_equals_predicted && e.constructed_equals_predicted {
                                "ok".to_string()
                            } else if !e.mismatches.is_empty() {
                                format!("MISMATCH {}", shape_list(&e.mismatches))
                            } else {
                                "MISMATCH constructions".to_string()
                            };
                            [format!("({})", e.alpha), shape_list(&e.missing), status]
                        })
                        .collect();
                    let verdict = if report.ok { "all two-part cycle types agree" } else { "FAILED" };
                    format!("n {n}\n{}\n{verdict}", table(&["alpha", "missing", "status"], &rows))
                }
            };
            Ok(Output::checked(text, report.ok))
        }
        VerifyCommand::Containment { n } => {
            let report = verify_containment(*n, &cfg).map_err(err)?;
            let text = match g.format {
                Format::Json => json(&report),
                Format::Latex => return Err(no_latex("a containment report")),
                Format::Text if report.violations.is_empty() => {
                    format!("n {n}: {} cycle types, no shape outside its bounding box", report.classes)
                }
                Format::Text => {
                    let lines: Vec<String> =
                        report.violations.iter().map(|(a, s)| format!("({a}) reaches ({s})")).collect();
                    format!("n {n}: {} cycle types, VIOLATIONS\n{}", report.classes, lines.join("\n"))
                }
            };
            Ok(Output::checked(text, report.violations.is_empty()))
        }
    }
}

fn types(args: &TypeArgs, all: impl FnOnce(usize) -> rs_cycles::Result<Vec<Partition>>) -> Result<Vec<Partition>, String> {
    match (&args.alpha, args.n) {
        (Some(a), None) => Ok(vec![a.clone()]),
        (None, Some(n)) => all(n).map_err(err),
        _ => Err("give exactly one of --n and --alpha".into()),
    }
}

fn combine(claim: &str, verdicts: Vec<Verdict>) -> Verdict {
    let mut total = Verdict {
        claim: claim.into(),
        status: Status::VerifiedUpToBudget,
        checked: Vec::new(),
        counterexamples: Vec::new(),
    };
    for v in verdicts {
        total.merge(v);
    }
    total
}

fn run_conjecture(cmd: &ConjectureCommand, g: &Global) -> Run {
    let cfg = brute_config(g);
    let verdict = match cmd {
        ConjectureCommand::Strict(args) => {
            let verdicts = types(args, |n| strict_types(n, 3))?
                .iter()
                .map(|a| check_strict_conjecture(a, &cfg))
                .collect::<rs_cycles::Result<Vec<_>>>()
                .map_err(err)?;
            combine("strict cycle types with r >= 3", verdicts)
        }
        ConjectureCommand::Coloring(args) => {
            let budget = search_budget(g);
            let verdicts = types(args, |n| strict_types(n, 1))?
                .iter()
                .map(|a| check_coloring_conjecture(a, &cfg, budget))
                .collect::<rs_cycles::Result<Vec<_>>>()
                .map_err(err)?;
            combine("strict cycle types admit colorings", verdicts)
        }
        ConjectureCommand::Pieri { types: args, k } => {
            let pairs: Vec<(Partition, usize)> = match (&args.alpha, args.n) {
                (Some(a), None) => vec![(a.clone(), k.unwrap_or(1))],
                (None, Some(n)) => {
                    let ks: Vec<usize> = match k {
                        Some(k) => vec![*k],
                        None => (1..n).collect(),
                    };
                    let mut pairs = Vec::new();
                    for k in ks.into_iter().filter(|&k| k >= 1 && k < n) {
                        for a in enumerate_partitions(n - k).map_err(err)? {
                            if a.parts().last().is_some_and(|&last| last > 1) {
                                pairs.push((a, k));
                            }
                        }
                    }
                    pairs
                }
                _ => return Err("give exactly one of --n and --alpha".into()),
            };
            let verdicts = pairs
                .iter()
                .map(|(a, k)| check_almost_pieri(a, *k, &cfg))
                .collect::<rs_cycles::Result<Vec<_>>>()
                .map_err(err)?;
            combine("almost Pieri rule for added fixed points", verdicts)
        }
        ConjectureCommand::Involutions { n } => check_involution_shapes(*n, &cfg).map_err(err)?,
    };
    let text = match g.format {
        Format::Json => json(&verdict),
        Format::Latex => return Err(no_latex("a verdict")),
        Format::Text => {
            let status = json(&verdict.status).trim_matches('"').to_string();
            let mut lines = vec![format!("claim   {}", verdict.claim), format!("status  {status}")];
            lines.extend(verdict.checked.iter().map(|c| format!("checked {c}")));
            lines.extend(verdict.counterexamples.iter().map(|c| format!("counter {c}")));
            lines.join("\n")
        }
    };
    Ok(Output {
        text,
        code: match verdict.status {
            Status::VerifiedUpToBudget => 0,
            Status::Falsified => 2,
            Status::BudgetExceeded => 1,
        },
    })
}
