//! Per-timestamp run log, written as JSON lines.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::CellState;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub t: u64,
    pub x: i32,
    pub y: i32,
    pub obs: CellState,
    pub area_n: usize,
    pub area_max_p: f64,
    /// `validated`, `localized`, `false_positive`, or `spread` when the fire
    /// advanced this timestamp and nothing else happened.
    pub event: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub records: Vec<TraceRecord>,
}

impl RunTrace {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn push(&mut self, record: TraceRecord) {
        debug_assert_eq!(record.t, self.records.len() as u64);
        self.records.push(record);
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r).map_err(|e| Error::Io(e.to_string()))?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serde_json emits UTF-8")
    }

    pub fn read_jsonl<R: BufRead>(input: R) -> Result<Self> {
        let mut records = Vec::new();
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let r: TraceRecord =
                serde_json::from_str(&line).map_err(|e| Error::Io(format!("trace line {}: {e}", i + 1)))?;
            records.push(r);
        }
        Ok(Self { records })
    }
}
