//! Text and JSON input formats for matrices and permutations.
//!
//! Matrix text: an optional `n <size>` line, then one line of whitespace
//! separated integers per row. Blank lines and lines starting with `#` are
//! skipped. Permutations: `perm:3412` (digits, only when `n <= 9`) or
//! `perm:3,4,1,2`. JSON: `{"n": int, "entries": [[int]]}`.

use crate::asm::{Asm, Permutation, RawMatrix};
use crate::error::{Error, Result};

pub fn parse_matrix_text(text: &str) -> Result<Asm> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let declared = match lines.peek() {
        Some(first) if first.starts_with('n') => {
            let size = first[1..]
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size line {first:?}")))?;
            lines.next();
            Some(size)
        }
        _ => None,
    };
    let rows: Vec<Vec<i64>> = lines
        .map(|l| {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if let Some(n) = declared {
        if rows.len() != n {
            return Err(Error::Parse(format!(
                "declared size {n} but found {} rows",
                rows.len()
            )));
        }
    }
    Asm::validate(&rows)
}

/// Parses `perm:<images>`; the `perm:` prefix is optional.
pub fn parse_permutation(token: &str) -> Result<Permutation> {
    let body = token.trim();
    let body = body.strip_prefix("perm:").unwrap_or(body);
    if body.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    let images: Vec<usize> = if body.contains(',') {
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad image {t:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        if body.len() > 9 {
            return Err(Error::Parse(
                "digit shorthand only allowed for n <= 9; use commas".into(),
            ));
        }
        body.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad image {c:?}")))
            })
            .collect::<Result<_>>()?
    };
    Permutation::new(images)
}

pub fn parse_matrix_json(text: &str) -> Result<Asm> {
    let raw: RawMatrix = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Asm::try_from(raw)
}

/// Dispatches on the content: JSON object, `perm:` shorthand or text.
pub fn parse_matrix_input(text: &str) -> Result<Asm> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_matrix_json(trimmed)
    } else if trimmed.starts_with("perm:") {
        parse_permutation(trimmed).map(|w| Asm::from_permutation(&w))
    } else {
        parse_matrix_text(text)
    }
}
