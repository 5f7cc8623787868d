//! Text file formats: plain and RLE inputs, query lines, answer lines.

use std::fmt::Write as _;

use sups_core::{RleString, SupsAnswer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    /// Raw bytes; one trailing newline is stripped.
    Plain,
    /// Whitespace-separated `<char>:<count>` tokens.
    Rle,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("token {index} ({token:?}): expected <char>:<count>")]
    MalformedToken { index: usize, token: String },
    #[error("token {index} ({token:?}): count must be a positive decimal integer")]
    BadCount { index: usize, token: String },
    #[error("invalid run sequence: {0}")]
    Runs(#[from] sups_core::Error),
}

/// Parses the RLE file format. Adjacent equal symbols and zero counts are
/// rejected, not merged.
pub fn parse_rle_text(text: &str) -> Result<RleString, InputError> {
    let mut tokens = Vec::new();
    for (index, token) in text.split_ascii_whitespace().enumerate() {
        let malformed = || InputError::MalformedToken {
            index,
            token: token.to_string(),
        };
        let bytes = token.as_bytes();
        if bytes.len() < 3 || bytes[1] != b':' {
            return Err(malformed());
        }
        let symbol = bytes[0];
        if symbol == b':' || !symbol.is_ascii_graphic() {
            return Err(malformed());
        }
        let digits = &token[2..];
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(InputError::BadCount {
                index,
                token: token.to_string(),
            });
        }
        let count: u64 = digits.parse().map_err(|_| InputError::BadCount {
            index,
            token: token.to_string(),
        })?;
        tokens.push((symbol, count));
    }
    Ok(RleString::from_runs(tokens)?)
}

/// Run-length encodes a plain input, dropping at most one trailing `\n`.
pub fn parse_plain(bytes: &[u8]) -> RleString {
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    RleString::encode(bytes)
}

pub fn parse_input(format: InputFormat, bytes: &[u8]) -> Result<RleString, InputError> {
    match format {
        InputFormat::Plain => Ok(parse_plain(bytes)),
        InputFormat::Rle => parse_rle_text(&String::from_utf8_lossy(bytes)),
    }
}

/// Writes an RLE string back in the `<char>:<count>` format.
pub fn format_rle(rle: &RleString) -> String {
    let mut out = String::new();
    for (i, run) in rle.runs().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{}:{}", run.symbol as char, run.exponent);
    }
    out
}

/// A query line is two decimal positions `s t`.
pub fn parse_query_line(line: &str) -> Result<(u64, u64), String> {
    let mut fields = line.split_ascii_whitespace();
    let (Some(s), Some(t), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err("expected two positions `s t`".to_string());
    };
    let s = s.parse().map_err(|_| format!("invalid position {s:?}"))?;
    let t = t.parse().map_err(|_| format!("invalid position {t:?}"))?;
    Ok((s, t))
}

/// `none`, or space-separated `beg-end` pairs.
pub fn format_answer(answer: &SupsAnswer) -> String {
    if answer.is_empty() {
        return "none".to_string();
    }
    answer
        .intervals()
        .iter()
        .map(|i| format!("{}-{}", i.beg, i.end))
        .collect::<Vec<_>>()
        .join(" ")
}
