//! Text, LaTeX (`ytableau`) and JSON renderings.

use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::shapeset::ShapeSetReport;
use crate::tableau::Tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "ascii" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" | "tex" => Ok(Format::Latex),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

const LATEX_COLORS: [&str; 8] = ["blue!40", "red!40", "green!40", "yellow!50", "magenta!40", "cyan!40", "orange!50", "gray!40"];

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("value serializes")
}

pub fn render_partition(shape: &Partition, format: Format) -> Result<String> {
    if shape.is_empty() {
        return Err(Error::Empty("partition"));
    }
    Ok(match format {
        Format::Text => shape.parts().iter().map(|&l| "[]".repeat(l)).collect::<Vec<_>>().join("\n"),
        Format::Json => json(shape),
        Format::Latex => format!("\\ydiagram{{{shape}}}"),
    })
}

/// One row per line, entries right-aligned to a common width.
pub fn render_tableau(t: &Tableau, format: Format) -> Result<String> {
    if t.shape().is_empty() {
        return Err(Error::Empty("tableau"));
    }
    Ok(match format {
        Format::Text => {
            let width = t.rows().iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
            grid(t.rows(), |_, _, v| format!("{v:>width$}"))
        }
        Format::Json => json(t),
        Format::Latex => latex(t.rows(), |_, _, v| v.to_string()),
    })
}

/// Cells as `entry:color`, or just the color index without a tableau.
pub fn render_coloring(t: Option<&Tableau>, coloring: &Coloring, format: Format) -> Result<String> {
    if coloring.shape().is_empty() {
        return Err(Error::Empty("coloring"));
    }
    if let Some(t) = t {
        if t.shape() != coloring.shape() {
            return Err(Error::ShapeMismatch(format!(
                "tableau of shape {} with coloring of shape {}",
                t.shape(),
                coloring.shape()
            )));
        }
    }
    let label = |i: usize, j: usize| match t {
        Some(t) => format!("{}:{}", t.entry(i, j).expect("same shape"), coloring.color(i, j)),
        None => coloring.color(i, j).to_string(),
    };
    Ok(match format {
        Format::Text => {
            let width = coloring.shape().cells().map(|(i, j)| label(i, j).len()).max().unwrap_or(1);
            grid(coloring.rows(), |i, j, _| format!("{:>width$}", label(i, j)))
        }
        Format::Json => match t {
            Some(t) => json(&serde_json::json!({ "tableau": t, "coloring": coloring })),
            None => json(coloring),
        },
        Format::Latex => latex(coloring.rows(), |i, j, c| {
            let body = t.map_or(String::new(), |t| t.entry(i, j).expect("same shape").to_string());
            format!("*({}) {body}", LATEX_COLORS[(c - 1) % LATEX_COLORS.len()])
        }),
    })
}

pub fn render_report(report: &ShapeSetReport, format: Format) -> Result<String> {
    let list = |v: &[Partition]| v.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join(" ");
    match format {
        Format::Json => Ok(report.to_json()),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "alpha      ({})", report.alpha).unwrap();
            writeln!(out, "class size {}", report.class_size).unwrap();
            let method = match report.cached_from {
                Some(m) => format!("cached ({})", json(&m).trim_matches('"')),
                None => json(&report.method).trim_matches('"').to_string(),
            };
            writeln!(out, "method     {method}").unwrap();
            if let Some(n) = report.samples {
                writeln!(out, "samples    {n} (shapes below are a lower bound)").unwrap();
            }
            writeln!(out, "B_alpha    {} shapes", report.b_alpha.len()).unwrap();
            writeln!(out, "S_alpha    {} shapes: {}", report.s_alpha.len(), list(&report.s_alpha)).unwrap();
            writeln!(out, "missing    {}", if report.missing.is_empty() { "none".into() } else { list(&report.missing) }).unwrap();
            if !report.outside_box.is_empty() {
                writeln!(out, "OUTSIDE B  {}", list(&report.outside_box)).unwrap();
            }
            if let Some(h) = &report.histogram {
                for (shape, count) in h {
                    writeln!(out, "  ({shape}) {count}").unwrap();
                }
            }
            Ok(out.trim_end().to_string())
        }
        Format::Latex => Err(Error::Precondition("reports have no LaTeX rendering".into())),
    }
}

fn grid(rows: &[Vec<usize>], cell: impl Fn(usize, usize, usize) -> String) -> String {
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &v)| cell(i + 1, j + 1, v))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn latex(rows: &[Vec<usize>], cell: impl Fn(usize, usize, usize) -> String) -> String {
    let body = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &v)| cell(i + 1, j + 1, v))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect::<Vec<_>>()
        .join(" \\\\\n  ");
    format!("\\begin{{ytableau}}\n  {body}\n\\end{{ytableau}}")
}
