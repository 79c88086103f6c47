//! Literal syntax for tableaux and colorings on the command line.
//!
//! Either JSON (`{"shape":..,"rows":..}`, `[[1,3],[2]]`) or rows separated by
//! `/` with entries separated by spaces or commas: `1 3/2`.

use rs_cycles::{Coloring, Error, Result, Tableau};

fn grid(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Empty("tableau literal"));
    }
    if text.starts_with('[') {
        return Ok(serde_json::from_str(text)?);
    }
    text.split('/')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect()
        })
        .collect()
}

pub fn tableau(text: &str) -> Result<Tableau> {
    if text.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    Tableau::from_rows(grid(text)?)
}

pub fn coloring(text: &str) -> Result<Coloring> {
    if text.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    Coloring::from_rows(grid(text)?)
}
