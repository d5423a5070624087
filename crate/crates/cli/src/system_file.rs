//! The `.cox` system definition format.
//!
//! ```text
//! # affine A2
//! generators: s t u
//! m: s t 3
//! m: t u 3
//! m: s u 3
//! ```
//!
//! Pairs without an `m:` line commute. Orders are integers `>= 2` or `inf`.

use coxeter_core::{CoxeterMatrix, Order};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SystemFileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn fail(line: usize, column: usize, message: impl Into<String>) -> SystemFileError {
    SystemFileError {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens of `raw` starting at byte `from`, with 1-based
/// character columns.
fn tokens(raw: &str, from: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in raw.char_indices().skip_while(|&(i, _)| i < from) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &raw[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &raw[s..]));
    }
    out.into_iter()
        .map(|(byte, t)| (raw[..byte].chars().count() + 1, t))
        .collect()
}

pub fn parse_system_file(text: &str) -> Result<CoxeterMatrix, SystemFileError> {
    let mut names: Option<(usize, Vec<String>)> = None;
    let mut entries: Vec<Vec<Order>> = Vec::new();
    let mut listed: Vec<Vec<Option<usize>>> = Vec::new();
    let mut last_line = 0;

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.len() - trimmed.len();
        let column_at = |byte: usize| raw[..byte].chars().count() + 1;

        if let Some(rest) = trimmed.strip_prefix("generators:") {
            if let Some((first, _)) = &names {
                return Err(fail(
                    line,
                    column_at(indent),
                    format!("second `generators:` line (first on line {first})"),
                ));
            }
            let declared = tokens(raw, raw.len() - rest.len());
            if declared.is_empty() {
                return Err(fail(
                    line,
                    raw.chars().count() + 1,
                    "no generators declared",
                ));
            }
            let mut seen: Vec<String> = Vec::new();
            for &(column, token) in &declared {
                if seen.iter().any(|s| s == token) {
                    return Err(fail(
                        line,
                        column,
                        format!("generator `{token}` declared twice"),
                    ));
                }
                seen.push(token.to_string());
            }
            let rank = seen.len();
            entries = (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| Order::Finite(if i == j { 1 } else { 2 }))
                        .collect()
                })
                .collect();
            listed = vec![vec![None; rank]; rank];
            CoxeterMatrix::new(seen.clone(), entries.clone())
                .map_err(|e| fail(line, column_at(indent), e.to_string()))?;
            names = Some((line, seen));
        } else if let Some(rest) = trimmed.strip_prefix("m:") {
            let Some((_, declared)) = &names else {
                return Err(fail(
                    line,
                    column_at(indent),
                    "`m:` line before the `generators:` line",
                ));
            };
            let fields = tokens(raw, raw.len() - rest.len());
            if fields.len() != 3 {
                let column = fields.get(3).map_or(raw.chars().count() + 1, |f| f.0);
                return Err(fail(
                    line,
                    column,
                    "expected `m: <generator> <generator> <order>`",
                ));
            }
            let index = |(column, token): (usize, &str)| {
                declared
                    .iter()
                    .position(|s| s == token)
                    .ok_or_else(|| fail(line, column, format!("undeclared generator `{token}`")))
            };
            let a = index(fields[0])?;
            let b = index(fields[1])?;
            if a == b {
                return Err(fail(
                    line,
                    fields[1].0,
                    "a generator cannot be paired with itself",
                ));
            }
            if let Some(previous) = listed[a][b] {
                return Err(fail(
                    line,
                    fields[0].0,
                    format!("pair listed twice (first on line {previous})"),
                ));
            }
            let (column, value) = fields[2];
            let order = if value == "inf" {
                Order::Infinite
            } else {
                match value.parse::<u32>() {
                    Ok(m) if m >= 2 => Order::Finite(m),
                    _ => {
                        return Err(fail(
                            line,
                            column,
                            format!("order `{value}` is neither an integer >= 2 nor `inf`"),
                        ))
                    }
                }
            };
            entries[a][b] = order;
            entries[b][a] = order;
            listed[a][b] = Some(line);
            listed[b][a] = Some(line);
        } else {
            return Err(fail(
                line,
                column_at(indent),
                "expected a `generators:` or `m:` line",
            ));
        }
    }

    let (line, names) =
        names.ok_or_else(|| fail(last_line.max(1), 1, "missing `generators:` line"))?;
    CoxeterMatrix::new(names, entries).map_err(|e| fail(line, 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_affine_a2() {
        let m = parse_system_file("# comment\n\ngenerators: s t u\nm: s t 3\nm: t u 3\nm: s u 3\n")
            .unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.m(0, 2), Order::Finite(3));
    }

    #[test]
    fn defaults_and_infinity() {
        let m = parse_system_file("generators: a b c\nm: a b inf\n").unwrap();
        assert_eq!(m.m(0, 1), Order::Infinite);
        assert_eq!(m.m(1, 2), Order::Finite(2));
    }

    #[test]
    fn diagnostics_name_line_and_column() {
        let e = parse_system_file("generators: s t\nm: s x 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
        let e = parse_system_file("generators: s t\nm: s t 3\nm: t s 4\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 4));
        let e = parse_system_file("generators: s t\nm: s t 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
        let e = parse_system_file("m: s t 3\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_system_file("generators: s s\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 15));
        assert!(parse_system_file("# nothing\n").is_err());
        assert!(parse_system_file("generators: s t\nbogus\n").is_err());
    }
}
