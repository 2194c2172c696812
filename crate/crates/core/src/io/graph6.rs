use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn err(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, msg: msg.into() }
}

fn sixes(bytes: &[u8]) -> Result<Vec<u8>> {
    bytes
        .iter()
        .map(|&b| if (63..=126).contains(&b) { Ok(b - 63) } else { Err(err(format!("byte {b} outside 63..=126"))) })
        .collect()
}

fn decode_n(d: &[u8]) -> Result<(usize, usize)> {
    let take = |k: usize, from: usize| -> Result<usize> {
        let chunk = d.get(from..from + k).ok_or_else(|| err("truncated vertex count"))?;
        Ok(chunk.iter().fold(0, |acc, &x| acc << 6 | x as usize))
    };
    match d {
        [] => Err(err("empty graph6 string")),
        [63, 63, ..] => Ok((take(6, 2)?, 8)),
        [63, ..] => Ok((take(3, 1)?, 4)),
        [x, ..] => Ok((*x as usize, 1)),
    }
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is allowed).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let d = sixes(s.as_bytes())?;
    let (n, used) = decode_n(&d)?;
    let body = &d[used..];
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(err(format!("expected {} data bytes for n = {n}, got {}", bits.div_ceil(6), body.len())));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(Edge::new(i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && body[k / 6] & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(err("nonzero padding bits"));
    }
    Ok(g)
}

/// One graph per non-empty line.
pub fn parse_graph6_all(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
                other => other,
            })
        })
        .collect()
}
