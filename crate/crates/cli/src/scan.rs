//! Streaming corpus scan: graph6 lines in, JSONL records out.

use std::io::{BufRead, Write};

use anyhow::Result;
use rayon::prelude::*;

use crate::report::{process_line, ScanOpts, ScanRecord};

/// Lines per parallel batch; batches are emitted in input order.
const BATCH: usize = 1024;

#[derive(Debug, Default, Clone, Copy)]
pub struct ExitState {
    pub format_error: bool,
    pub inconsistency: bool,
}

impl ExitState {
    pub fn absorb(&mut self, record: &ScanRecord) {
        if record.error.is_some() {
            self.format_error = true;
        }
        if record.verdict.as_ref().is_some_and(|v| !v.consistent) {
            self.inconsistency = true;
        }
    }

    /// 2 for a verdict inconsistency, 1 for a format error, 0 otherwise.
    pub fn code(&self) -> i32 {
        if self.inconsistency {
            2
        } else if self.format_error {
            1
        } else {
            0
        }
    }
}

pub fn write_record(out: &mut dyn Write, record: &ScanRecord) -> Result<()> {
    serde_json::to_writer(&mut *out, record)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Scans graph6 lines. Blank lines are ignored; malformed lines produce an
/// error record and the stream continues unless `--strict`. Exit code 0 with
/// no findings, 1 after any format error, 2 after any verdict inconsistency.
pub fn cmd_scan(input: &mut dyn BufRead, out: &mut dyn Write, opts: &ScanOpts) -> Result<i32> {
    let mut state = ExitState::default();
    let mut index = 0usize;
    let mut lines = input.lines();
    'stream: loop {
        let mut batch: Vec<String> = Vec::with_capacity(BATCH);
        for line in lines.by_ref() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            batch.push(line);
            if batch.len() == BATCH {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let records: Vec<ScanRecord> = batch
            .par_iter()
            .enumerate()
            .map(|(k, line)| process_line(index + k, line.trim(), opts))
            .collect();
        index += records.len();
        for record in &records {
            write_record(out, record)?;
            state.absorb(record);
            if opts.strict && record.error.is_some() {
                break 'stream;
            }
        }
    }
    out.flush()?;
    Ok(state.code())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(input: &str, opts: &ScanOpts) -> (i32, String) {
        let mut out = Vec::new();
        let code = cmd_scan(&mut input.as_bytes(), &mut out, opts).unwrap();
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn empty_input_is_empty_output() {
        let (code, out) = run("", &ScanOpts::default());
        assert_eq!(code, 0);
        assert!(out.is_empty());
    }

    #[test]
    fn triangle_scan_record() {
        let (code, out) = run("Bw\n", &ScanOpts { verdict: true, ..ScanOpts::default() });
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
        assert_eq!(v["invariants"]["n"], 3);
        assert_eq!(v["invariants"]["m"], 3);
        assert_eq!(v["toughness"]["status"], "ok");
        assert_eq!(v["toughness"]["value"]["infinite"], true);
        assert_eq!(v["verdict"]["order_ok"], false);
        assert_eq!(v["verdict"]["consistent"], true);
    }

    #[test]
    fn malformed_line_is_an_error_record() {
        let (code, out) = run("Bw\n???bad???\nC~\n", &ScanOpts::default());
        assert_eq!(code, 1);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        let bad: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert!(bad["error"].is_string());
        let good: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
        assert_eq!(good["invariants"]["n"], 4);
    }

    #[test]
    fn strict_stops_at_first_error() {
        let opts = ScanOpts { strict: true, ..ScanOpts::default() };
        let (code, out) = run("Bw\n???bad???\nC~\n", &opts);
        assert_eq!(code, 1);
        assert_eq!(out.lines().count(), 2);
    }

    #[test]
    fn tough_limit_skip_is_explicit() {
        // C_30 exceeds the default tough-limit.
        let g = toughgraph::Graph::cycle(30).unwrap();
        let line = toughgraph::graph6::encode(&g);
        let (code, out) = run(&format!("{line}\n"), &ScanOpts::default());
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
        assert_eq!(v["toughness"]["status"], "skipped");
        assert!(v["toughness"]["reason"].as_str().unwrap().contains("tough-limit"));
    }
}
