//! Harness library behind the `toughgraph` binary: JSONL report types and the
//! four subcommand drivers (scan, verify-lemmas, families, random).

pub mod families;
pub mod lemmas;
pub mod report;
pub mod sample;
pub mod scan;
