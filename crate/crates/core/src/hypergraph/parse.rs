use std::collections::HashMap;

use super::{Hypergraph, HypergraphError, VertexSet, MAX_VERTICES};

/// Parses the line-oriented `.hg` format.
///
/// The first non-comment line is `n r`; every following non-empty line is
/// one edge of `r` distinct vertex ids. Lines starting with `#` are comments.
/// The result is in canonical edge order regardless of input order.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, HypergraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(HypergraphError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let malformed = |detail: String| HypergraphError::MalformedHeader {
        line: header_line,
        detail,
    };
    if fields.len() != 2 {
        return Err(malformed(format!("expected 2 fields, found {}", fields.len())));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| malformed(format!("invalid vertex count {:?}", fields[0])))?;
    let r: usize = fields[1]
        .parse()
        .map_err(|_| malformed(format!("invalid uniformity {:?}", fields[1])))?;
    if n > MAX_VERTICES {
        return Err(HypergraphError::TooManyVertices(n));
    }
    if r < 2 {
        return Err(HypergraphError::UniformityTooSmall(r));
    }

    let mut seen: HashMap<u64, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (line, body) in lines {
        let mut mask = VertexSet::EMPTY;
        let mut count = 0usize;
        for token in body.split_whitespace() {
            let v: usize = token.parse().map_err(|_| HypergraphError::InvalidToken {
                line,
                token: token.to_string(),
            })?;
            if v >= n {
                return Err(HypergraphError::VertexOutOfRange { line, vertex: v, n });
            }
            if mask.contains(v) {
                return Err(HypergraphError::DuplicateVertex { line, vertex: v });
            }
            mask.insert(v);
            count += 1;
        }
        if count != r {
            return Err(HypergraphError::WrongArity {
                line,
                expected: r,
                found: count,
            });
        }
        if seen.insert(mask.0, line).is_some() {
            return Err(HypergraphError::DuplicateEdge { line });
        }
        edges.push(mask.0);
    }
    edges.sort_unstable();
    Ok(Hypergraph::from_sorted_masks(n, r, edges))
}
