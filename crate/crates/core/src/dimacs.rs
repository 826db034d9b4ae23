//! DIMACS-style edge lists: `p edge <n> <m>` followed by `e <u> <v>` lines
//! with 1-based ids. Lines starting with `c` are comments.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Canonical text form: edges in sorted order, one per line.
pub fn write_dimacs(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "p edge {} {}",
        graph.vertex_count(),
        graph.edge_count()
    )
    .unwrap();
    for &(u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses the text form. Isolated vertices are rejected (except in the
/// one-vertex graph).
pub fn read_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let syntax = |message: &str| DimacsError::Syntax {
            line,
            message: message.to_string(),
        };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(syntax("second `p` line"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(syntax("expected `p edge <n> <m>`"));
                }
                let n = fields[2].parse().map_err(|_| syntax("bad vertex count"))?;
                let m = fields[3].parse().map_err(|_| syntax("bad edge count"))?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or(DimacsError::MissingHeader)?;
                if fields.len() != 3 {
                    return Err(syntax("expected `e <u> <v>`"));
                }
                let mut ends = [0usize; 2];
                for (slot, field) in ends.iter_mut().zip(&fields[1..]) {
                    let id: usize = field.parse().map_err(|_| syntax("bad vertex id"))?;
                    if id == 0 || id > n {
                        return Err(syntax("vertex id outside 1..=n"));
                    }
                    *slot = id - 1;
                }
                edges.push((ends[0], ends[1]));
            }
            Some(_) => return Err(syntax("unknown line type")),
        }
    }
    let (n, m) = header.ok_or(DimacsError::MissingHeader)?;
    if edges.len() != m {
        return Err(DimacsError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    let graph = Graph::from_edges(n, edges)?;
    graph.check_no_isolated()?;
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    #[test]
    fn writes_canonical_text() {
        let g = build_family(&FamilySpec::Cycle(3)).unwrap();
        assert_eq!(write_dimacs(&g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn reads_any_edge_order() {
        let g = read_dimacs("c triangle\np edge 3 3\ne 3 1\ne 2 3\n\ne 2 1\n").unwrap();
        assert_eq!(write_dimacs(&g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            read_dimacs("e 1 2\n"),
            Err(DimacsError::MissingHeader)
        ));
        assert!(matches!(
            read_dimacs("p edge 2 2\ne 1 2\n"),
            Err(DimacsError::EdgeCountMismatch {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            read_dimacs("p edge 2 1\ne 1 3\n"),
            Err(DimacsError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            read_dimacs("p edge 3 1\ne 1 2\n"),
            Err(DimacsError::Graph(GraphError::IsolatedVertex(2)))
        ));
        assert!(matches!(
            read_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"),
            Err(DimacsError::Graph(GraphError::DuplicateEdge(0, 1)))
        ));
        assert!(matches!(
            read_dimacs("p col 2 1\ne 1 2\n"),
            Err(DimacsError::Syntax { line: 1, .. })
        ));
    }
}
