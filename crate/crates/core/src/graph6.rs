//! graph6 reading and writing, sparse6 reading.
//!
//! Files are newline-delimited with one graph per line. An optional
//! `>>graph6<<` / `>>sparse6<<` header is accepted on input.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Decodes the `N(n)` size prefix; returns `(n, bytes consumed)`.
fn decode_size(data: &[u8]) -> Result<(usize, usize)> {
    let first = *data.first().ok_or_else(|| perr("empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(perr(format!("invalid size byte {first}")));
    }
    if first < 126 {
        return Ok(((first - 63) as usize, 1));
    }
    if data.get(1) == Some(&126) {
        // 8-byte form, n >= 258048: far beyond anything we accept.
        return Err(Error::SizeLimit {
            order: 258_048,
            limit: MAX_ORDER,
        });
    }
    if data.len() < 4 {
        return Err(perr("truncated size field"));
    }
    let mut n = 0usize;
    for &b in &data[1..4] {
        if !(63..=126).contains(&b) {
            return Err(perr(format!("invalid size byte {b}")));
        }
        n = (n << 6) | (b - 63) as usize;
    }
    if n < 63 {
        return Err(perr("non-canonical size field"));
    }
    Ok((n, 4))
}

fn encode_size(n: usize, out: &mut String) {
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::SizeLimit {
            order: n,
            limit: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Parses one graph6 line.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let data = text.as_bytes();
    let (n, used) = decode_size(data)?;
    check_order(n)?;
    let body = &data[used..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(perr(format!(
            "length mismatch: order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(perr(format!("invalid data byte {byte}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        if !(63..=126).contains(&last) {
            return Err(perr(format!("invalid data byte {last}")));
        }
        let pad = expected * 6 - nbits;
        if pad > 0 && (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(perr("non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 string (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses one sparse6 line (the non-incremental `:` form).
pub fn parse_sparse6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>sparse6<<").unwrap_or(text);
    let data = text
        .as_bytes()
        .strip_prefix(b":")
        .ok_or_else(|| perr("sparse6 line must start with ':'"))?;
    let (n, used) = decode_size(data)?;
    check_order(n)?;
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    let mut stream = Vec::new();
    for &b in &data[used..] {
        if !(63..=126).contains(&b) {
            return Err(perr(format!("invalid data byte {b}")));
        }
        for s in (0..6).rev() {
            stream.push((b - 63) >> s & 1);
        }
    }
    let mut g = Graph::empty(n);
    let mut pos = 0;
    let mut v = 0usize;
    while pos + 1 + k <= stream.len() {
        let b = stream[pos];
        let x = stream[pos + 1..pos + 1 + k]
            .iter()
            .fold(0usize, |acc, &bit| (acc << 1) | bit as usize);
        pos += 1 + k;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            if x == v {
                return Err(perr("self-loop in sparse6 data"));
            }
            if g.has_edge(x, v) {
                return Err(perr("multi-edge in sparse6 data"));
            }
            g.add_edge(x, v);
        }
    }
    Ok(g)
}

/// Parses a line in either format, dispatching on the leading `:`.
pub fn parse_any(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.starts_with(':') || t.starts_with(">>sparse6<<") {
        parse_sparse6(t)
    } else {
        parse_graph6(t)
    }
}

/// Parses every non-empty line of a corpus file.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| parse_any(l).map_err(|e| perr(format!("line {}: {e}", i + 1))))
        .collect()
}
