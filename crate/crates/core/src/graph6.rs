//! graph6 interchange format.
//!
//! A line is an order header followed by the upper triangle of the adjacency
//! matrix in column-major order, packed six bits per printable byte (offset
//! 63). Sparse6 (`:`), incremental sparse6 (`;`) and digraph6 (`&`) lines are
//! rejected, never coerced. The optional `>>graph6<<` prefix is tolerated on
//! decode and never emitted on encode.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OPTIONAL_HEADER: &str = ">>graph6<<";

fn fmt_err<T>(offset: usize, reason: impl Into<String>) -> Result<T> {
    Err(Error::Format { offset, reason: reason.into() })
}

/// Decodes one graph6 line (no trailing newline).
pub fn decode(line: &str) -> Result<Graph> {
    let (body, base) = match line.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (rest.as_bytes(), OPTIONAL_HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    if body.is_empty() {
        return fmt_err(base, "empty line");
    }
    match body[0] {
        b':' => return fmt_err(base, "sparse6 input is not supported"),
        b';' => return fmt_err(base, "incremental sparse6 input is not supported"),
        b'&' => return fmt_err(base, "digraph6 input is not supported"),
        _ => {}
    }

    // Order header: one byte below 126, or 126 + three bytes, or 126 126 +
    // six bytes for orders we cap out anyway.
    let val = |i: usize| -> Result<u64> {
        match body.get(i) {
            None => fmt_err(base + body.len(), "truncated order header"),
            Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(_) => fmt_err(base + i, "byte outside the graph6 range 63..=126"),
        }
    };
    let (n, header_len) = if body[0] == 126 {
        if body.get(1) == Some(&126) {
            let mut n = 0u64;
            for i in 2..8 {
                n = n << 6 | val(i)?;
            }
            (n, 8)
        } else {
            let n = val(1)? << 12 | val(2)? << 6 | val(3)?;
            (n, 4)
        }
    } else {
        (val(0)?, 1)
    };
    if n == 0 {
        return fmt_err(base, "order 0 is not representable");
    }
    if n > MAX_ORDER as u64 {
        return Err(Error::TooLarge(n as usize));
    }
    let n = n as usize;

    let bits_needed = n * (n - 1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < bytes_needed {
        return fmt_err(base + body.len(), "truncated adjacency bits");
    }
    if data.len() > bytes_needed {
        return fmt_err(base + header_len + bytes_needed, "trailing bytes after adjacency bits");
    }

    let mut g = Graph::edgeless(n)?;
    let mut bit_idx = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = data[bit_idx / 6];
            if !(63..=126).contains(&byte) {
                return fmt_err(base + header_len + bit_idx / 6, "byte outside the graph6 range 63..=126");
            }
            let bit = (byte - 63) >> (5 - bit_idx % 6) & 1;
            if bit == 1 {
                g.add_edge_mut(i, j);
            }
            bit_idx += 1;
            if bit_idx == bits_needed {
                break 'cols;
            }
        }
    }
    // Padding bits of the last byte must be zero.
    if bits_needed % 6 != 0 {
        let last = data[bytes_needed - 1] - 63;
        let pad = 6 - bits_needed % 6;
        if last & ((1 << pad) - 1) != 0 {
            return fmt_err(base + header_len + bytes_needed - 1, "nonzero padding bits");
        }
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return fmt_err(base + header_len + i, "byte outside the graph6 range 63..=126");
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 line (no trailing newline). Orders up to 62
/// use the one-byte header, larger orders the four-byte form.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut acc_bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            acc_bits += 1;
            if acc_bits == 6 {
                out.push(63 + acc);
                acc = 0;
                acc_bits = 0;
            }
        }
    }
    if acc_bits > 0 {
        out.push(63 + (acc << (6 - acc_bits)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

// ====================================================================
// tests
// ====================================================================
