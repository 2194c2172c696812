use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(line, "expected two integers"))?;
        tok.parse().map_err(|_| parse_err(line, format!("not a non-negative integer: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(line, "trailing tokens"));
    }
    Ok(pair)
}

/// Reads "n m" followed by m lines "u v". Blank lines and `#` comments are
/// skipped; line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line"))?;
    let (n, m) = numbers(hline, header)?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = numbers(line, l)?;
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        let e = Edge::new(u, v);
        if e.v() >= n {
            return Err(parse_err(line, format!("vertex {} outside 0..{n}", e.v())));
        }
        if !g.add_edge(e) {
            return Err(parse_err(line, format!("duplicate edge {e}")));
        }
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(hline, format!("header promises {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(parse_edge_list("3 1\n0 0"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("4 2\n0 1\n0 1"), Err(Error::Parse { line: 3, .. })));
        assert!(parse_edge_list("# c\n\n3 1\n2 1 # x\n").is_ok());
        assert!(parse_edge_list("3 2\n0 1").is_err());
        assert!(parse_edge_list("3 1\n0 3").is_err());
    }
}
