use thiserror::Error;

use crate::hypergraph::EdgeRef;

use super::BergePath;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathLiteralError {
    #[error("empty path literal")]
    Empty,
    #[error("token {position}: invalid {expected} id {token:?}")]
    InvalidToken {
        position: usize,
        expected: &'static str,
        token: String,
    },
    #[error("path literal must end with a vertex")]
    EndsWithEdge,
}

/// Parses `"v0,e1,v1,e2,v2"`: alternating vertex ids and edge indices,
/// comma separated. Tokens may carry a `v`/`e` prefix matching their
/// position (`"v3,e0,v1"`); bare integers are accepted as well.
pub fn parse_path_literal(s: &str) -> Result<BergePath, PathLiteralError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(PathLiteralError::Empty);
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in s.split(',').enumerate() {
        let token = raw.trim();
        let (prefix, expected) = if i % 2 == 0 { ('v', "vertex") } else { ('e', "edge") };
        let digits = token.strip_prefix(prefix).unwrap_or(token);
        let invalid = || PathLiteralError::InvalidToken {
            position: i,
            expected,
            token: token.to_string(),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        let value: usize = digits.parse().map_err(|_| invalid())?;
        if i % 2 == 0 {
            vertices.push(value);
        } else {
            edges.push(EdgeRef(value));
        }
    }
    if vertices.len() != edges.len() + 1 {
        return Err(PathLiteralError::EndsWithEdge);
    }
    Ok(BergePath::from_parts(vertices, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_both_styles() {
        let p = parse_path_literal("0,3,1,0,2").unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2]);
        assert_eq!(p.edges(), &[EdgeRef(3), EdgeRef(0)]);
        assert_eq!(parse_path_literal("v0, e3, v1, e0, v2").unwrap(), p);
        assert_eq!(parse_path_literal("7").unwrap(), BergePath::single(7));
    }

    #[test]
    fn rejects_bad_literals() {
        assert_eq!(parse_path_literal(""), Err(PathLiteralError::Empty));
        assert_eq!(parse_path_literal("0,1"), Err(PathLiteralError::EndsWithEdge));
        assert!(matches!(
            parse_path_literal("0,,1"),
            Err(PathLiteralError::InvalidToken { position: 1, .. })
        ));
        assert!(matches!(
            parse_path_literal("e0,v1,e2"),
            Err(PathLiteralError::InvalidToken { position: 0, .. })
        ));
        assert!(matches!(
            parse_path_literal("0,1,99999999999999999999999"),
            Err(PathLiteralError::InvalidToken { position: 2, .. })
        ));
    }

    proptest! {
        #[test]
        fn rendered_ids_roundtrip(vs in proptest::collection::vec(0usize..64, 1..10), es in proptest::collection::vec(0usize..100, 9)) {
            let edges: Vec<EdgeRef> = es[..vs.len() - 1].iter().map(|&e| EdgeRef(e)).collect();
            let p = BergePath::from_parts(vs.clone(), edges.clone());
            let mut tokens = vec![format!("v{}", vs[0])];
            for (e, v) in edges.iter().zip(&vs[1..]) {
                tokens.push(format!("e{}", e.0));
                tokens.push(format!("v{v}"));
            }
            prop_assert_eq!(parse_path_literal(&tokens.join(",")).unwrap(), p);
        }
    }
}
