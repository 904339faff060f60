//! Edge-list interchange format and DOT export.
//!
//! ```text
//! # comment
//! 3
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment line is the vertex count; each further line is one
//! arc `u v`, 0-indexed. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut digraph: Option<Digraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match digraph.as_mut() {
            None => {
                let [n] = fields[..] else {
                    return Err(err(format!("expected a vertex count, found {line:?}")));
                };
                let n: usize = n
                    .parse()
                    .map_err(|_| err(format!("invalid vertex count {n:?}")))?;
                digraph = Some(Digraph::new(n).map_err(|e| err(e.to_string()))?);
            }
            Some(d) => {
                let [u, v] = fields[..] else {
                    return Err(err(format!("expected an arc \"u v\", found {line:?}")));
                };
                let u: usize = u
                    .parse()
                    .map_err(|_| err(format!("invalid vertex {u:?}")))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| err(format!("invalid vertex {v:?}")))?;
                if u < d.n() && v < d.n() && u != v && d.has_arc(u, v) {
                    return Err(err(format!("duplicate arc {u} {v}")));
                }
                d.add_arc(u, v).map_err(|e| err(e.to_string()))?;
            }
        }
    }
    digraph.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing vertex count".into(),
    })
}

/// Canonical serialisation: vertex count, then arcs in lexicographic order.
pub fn to_edge_list(d: &Digraph) -> String {
    let mut s = format!("{}\n", d.n());
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Graphviz rendering. A digon is drawn once as a `dir=both` edge.
pub fn to_dot(d: &Digraph, name: &str) -> String {
    let mut s = format!("digraph {name} {{\n");
    for v in 0..d.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in d.arcs() {
        if d.has_arc(v, u) {
            if u < v {
                let _ = writeln!(s, "  {u} -> {v} [dir=both];");
            }
        } else {
            let _ = writeln!(s, "  {u} -> {v};");
        }
    }
    s.push_str("}\n");
    s
}

/// SHA-256 of the canonical edge list, hex encoded.
pub fn digraph_hash(d: &Digraph) -> String {
    hex::encode(Sha256::digest(to_edge_list(d).as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let d = parse_edge_list("# header\n3  # three vertices\n0 1\n\n1 2 # tail\n").unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_edge_list("3\n0 1\n0 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse_edge_list("3\n0 7\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_edge_list("x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        assert!(parse_edge_list("# nothing\n").is_err());
        assert!(parse_edge_list("3\n0 1\n0 1\n").is_err());
        assert!(parse_edge_list("3\n0 1 2\n").is_err());
    }

    #[test]
    fn canonical_text_is_stable() {
        let d = parse_edge_list("3\n1 2\n0 1\n").unwrap();
        assert_eq!(to_edge_list(&d), "3\n0 1\n1 2\n");
        assert_eq!(parse_edge_list(&to_edge_list(&d)).unwrap(), d);
        assert_eq!(digraph_hash(&d).len(), 64);
    }

    #[test]
    fn dot_collapses_digons() {
        let d = parse_edge_list("3\n0 1\n1 0\n1 2\n").unwrap();
        let dot = to_dot(&d, "G");
        assert!(dot.contains("0 -> 1 [dir=both];"));
        assert!(!dot.contains("1 -> 0"));
        assert!(dot.contains("1 -> 2;"));
    }
}
