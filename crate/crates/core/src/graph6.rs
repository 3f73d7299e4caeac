//! graph6 encoding for graphs of order at most 31.
//!
//! One size byte `63 + n`, then the upper triangle in column order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per byte,
//! most significant first, zero padded, each byte offset by 63.

use std::fmt;

use thiserror::Error;

use crate::graph::{SmallGraph, MAX_VERTICES};

/// Optional header some tools put in front of graph6 files.
pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("bad size byte {0:#04x}")]
    BadSizeByte(u8),
    #[error("graph6 order {0} exceeds the 31-vertex limit")]
    TooLarge(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated bit stream: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage: {extra} byte(s) after the bit stream")]
    TrailingGarbage { extra: usize },
    #[error("nonzero padding bits")]
    NonZeroPadding,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn serialize_graph6(g: &SmallGraph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(63 + n as u8);
    let (mut acc, mut k) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn parse_graph6(text: &[u8]) -> Result<SmallGraph, Graph6Error> {
    let text = text.strip_prefix(HEADER.as_bytes()).unwrap_or(text);
    let (&size, data) = text.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&size) {
        return Err(Graph6Error::BadSizeByte(size));
    }
    let n = (size - 63) as usize;
    if size == 126 || n > MAX_VERTICES {
        // 126 introduces the multi-byte order form, always > 62 vertices
        return Err(Graph6Error::TooLarge(if size == 126 { 63 } else { n }));
    }
    let need = data_len(n);
    if data.len() < need {
        return Err(Graph6Error::Truncated {
            expected: need,
            found: data.len(),
        });
    }
    if data.len() > need {
        return Err(Graph6Error::TrailingGarbage {
            extra: data.len() - need,
        });
    }
    for (offset, &byte) in data.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte {
                offset: offset + 1,
                byte,
            });
        }
    }
    let mut g = SmallGraph::empty(n).expect("n <= 31");
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let mask = (1u8 << (6 - bit % 6)) - 1;
        if (data[need - 1] - 63) & mask != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

/// A corpus line that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    /// 1-based line number.
    pub line: usize,
    pub error: Graph6Error,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl std::error::Error for LineError {}

/// Parses a newline-delimited corpus, skipping blank lines and tolerating a
/// leading `>>graph6<<` header. Each entry carries its 1-based line number.
pub fn parse_corpus(text: &str) -> Vec<Result<(usize, SmallGraph), LineError>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.trim_end_matches('\r');
            let line = if i == 0 {
                line.strip_prefix(HEADER).unwrap_or(line)
            } else {
                line
            };
            if line.trim().is_empty() {
                return None;
            }
            Some(
                parse_graph6(line.trim().as_bytes())
                    .map(|g| (i + 1, g))
                    .map_err(|error| LineError { line: i + 1, error }),
            )
        })
        .collect()
}

/// One graph6 line per graph, each terminated by `\n`. Never writes a header.
pub fn write_corpus<'a>(graphs: impl IntoIterator<Item = &'a SmallGraph>) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&serialize_graph6(g));
        out.push('\n');
    }
    out
}
