//! graph6 encoding.
//!
//! A record is a size header followed by the upper-triangle adjacency bits
//! in pair order `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into
//! 6-bit groups, each stored as `value + 63`. Orders up to 62 use a single
//! header byte; larger orders use `~` followed by three 6-bit groups.

use std::io::BufRead;

use thiserror::Error;

use super::{upper_pairs, Graph};

/// Largest order representable with the 4-byte header.
pub const MAX_GRAPH6_ORDER: usize = 258_047;

const BIAS: u8 = 63;
const LONG_HEADER: u8 = 126;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("8-byte graph6 size headers are not supported")]
    HugeHeader,
    #[error("truncated size header")]
    TruncatedHeader,
    #[error("graph of order 0 cannot be encoded")]
    ZeroOrder,
    #[error("expected {expected} payload bytes for order {n}, found {found}")]
    PayloadLength { n: usize, expected: usize, found: usize },
    #[error("padding bits in the last payload byte are not zero")]
    NonZeroPadding,
    #[error("order {0} exceeds the graph6 4-byte header limit")]
    TooLarge(usize),
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<Graph6Error> },
    #[error("line {line}: {message}")]
    Io { line: usize, message: String },
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record (no trailing newline).
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Graph6Error::InvalidByte { byte, offset });
    }
    let (n, header) = if bytes[0] == LONG_HEADER {
        if bytes.get(1) == Some(&LONG_HEADER) {
            return Err(Graph6Error::HugeHeader);
        }
        let groups = bytes.get(1..4).ok_or(Graph6Error::TruncatedHeader)?;
        let n = groups.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
        (n, 4)
    } else {
        (usize::from(bytes[0] - BIAS), 1)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }

    let payload = &bytes[header..];
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Graph6Error::PayloadLength { n, expected, found: payload.len() });
    }

    let pairs = n * (n - 1) / 2;
    let padding = expected * 6 - pairs;
    if let Some(&last) = payload.last() {
        if (last - BIAS) & ((1 << padding) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }

    let bit = |k: usize| (payload[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let edges = upper_pairs(n).enumerate().filter(|&(k, _)| bit(k)).map(|(_, e)| e);
    Ok(Graph::new(n, edges).expect("decoded pairs are in range"))
}

/// Encodes a graph as a graph6 record, without a trailing newline.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_HEADER);
        out.extend([12, 6, 0].map(|shift| ((n >> shift) & 0x3f) as u8 + BIAS));
    }
    let mut group = 0u8;
    let mut filled = 0;
    for (i, j) in upper_pairs(n) {
        group = (group << 1) | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(group + BIAS);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Reads a multi-record graph6 stream, one record per line. Blank lines are
/// skipped; errors carry the 1-based line number.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>, Graph6Error> {
    let mut graphs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Graph6Error::Io { line: line_no, message: e.to_string() })?;
        let record = line.trim_end_matches(['\r', '\n']);
        if record.is_empty() {
            continue;
        }
        let g = parse_graph6(record.as_bytes())
            .map_err(|e| Graph6Error::Line { line: line_no, source: Box::new(e) })?;
        graphs.push(g);
    }
    Ok(graphs)
}
