//! Batch query answering over one index.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use sups_core::SupsIndex;

use crate::input::{format_answer, parse_query_line};

/// Output lines for a batch of query lines, in input order, and whether
/// any line was an error. Blank lines are skipped.
pub fn answer_lines(index: &SupsIndex, lines: &[String]) -> (Vec<String>, bool) {
    let outputs: Vec<Result<String, String>> = lines
        .par_iter()
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let (s, t) = parse_query_line(line)?;
            index
                .query(s, t)
                .map(|answer| format_answer(&answer))
                .map_err(|e| e.to_string())
        })
        .collect();
    let failed = outputs.iter().any(Result::is_err);
    let lines = outputs
        .into_iter()
        .map(|r| r.unwrap_or_else(|e| format!("error: {e}")))
        .collect();
    (lines, failed)
}

/// Reads every query line from `queries`, writes one answer line each.
/// Returns whether any query line failed.
pub fn run_queries<R: BufRead, W: Write>(
    index: &SupsIndex,
    queries: R,
    mut out: W,
) -> std::io::Result<bool> {
    let lines: Vec<String> = queries.lines().collect::<std::io::Result<_>>()?;
    let (answers, failed) = answer_lines(index, &lines);
    for answer in answers {
        writeln!(out, "{answer}")?;
    }
    out.flush()?;
    Ok(failed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_rle_text;

    #[test]
    fn sample_batch() {
        let rle = parse_rle_text("b:3 a:2 b:2 a:1 b:2 a:3 b:2 a:3 b:3").unwrap();
        let index = SupsIndex::build(rle).unwrap();
        let mut out = Vec::new();
        let failed = run_queries(&index, &b"6 7\n3 9\n\n0 5\n9 11\nfoo\n"[..], &mut out).unwrap();
        assert!(failed);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "6-10\nnone\nerror: interval out of range [1,21]\n5-11\nerror: expected two positions `s t`\n"
        );
    }
}
