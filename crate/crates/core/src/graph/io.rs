//! Graph file formats.
//!
//! Edge list: the first non-blank line holds the vertex count `n`, each
//! following line one `i j` pair (0-based, whitespace separated). `#` starts a
//! comment that runs to the end of the line.
//!
//! JSON: `{"n": 7, "edges": [[0, 1], [0, 2]]}`.
//!
//! Writers emit the canonical edge order, so `write(read(s))` is byte-stable.

use std::fmt::Write as _;
use std::io::Read;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl GraphFormat {
    /// `.json` selects JSON; anything else is read as an edge list.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Json,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge_list" | "edgelist" | "txt" => Ok(GraphFormat::EdgeList),
            "json" => Ok(GraphFormat::Json),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing vertex count")]
    MissingHeader,
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {source}")]
    InvalidEdge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("invalid graph: {0}")]
    InvalidGraph(#[from] GraphError),
    #[error("input is not valid UTF-8")]
    Encoding,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn read_graph<R: Read>(mut source: R, format: GraphFormat) -> Result<Graph, ParseError> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes).map_err(|_| ParseError::Encoding)?;
    match format {
        GraphFormat::EdgeList => parse_edge_list(&text),
        GraphFormat::Json => parse_json(&text),
    }
}

pub fn write_graph(graph: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(graph),
        GraphFormat::Json => to_json(graph),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut lines_of_edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Syntax {
                line,
                message: format!("expected a non-negative integer, found `{s}`"),
            })
        };
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(ParseError::Syntax {
                        line,
                        message: "expected the vertex count alone on the first line".into(),
                    });
                }
                n = Some(number(fields[0])?);
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(ParseError::Syntax {
                        line,
                        message: format!("expected `i j`, found {} field(s)", fields.len()),
                    });
                }
                edges.push((number(fields[0])?, number(fields[1])?));
                lines_of_edges.push(line);
            }
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    // Validate edge by edge so errors carry the offending line.
    for (k, &(a, b)) in edges.iter().enumerate() {
        if let Err(source) = Graph::new(n.max(1), [(a, b)]) {
            return Err(ParseError::InvalidEdge {
                line: lines_of_edges[k],
                source,
            });
        }
    }
    Graph::new(n, edges.iter().copied()).map_err(|source| match source {
        GraphError::DuplicateEdge { u, v } => {
            let line = edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| (a.min(b), a.max(b)) == (u, v))
                .nth(1)
                .map_or(0, |(k, _)| lines_of_edges[k]);
            ParseError::InvalidEdge { line, source }
        }
        other => ParseError::InvalidGraph(other),
    })
}

pub fn parse_json(text: &str) -> Result<Graph, ParseError> {
    let raw: JsonGraph = serde_json::from_str(text)?;
    Ok(Graph::new(
        raw.n,
        raw.edges.into_iter().map(|[a, b]| (a, b)),
    )?)
}

pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = format!("{}\n", graph.n());
    for &(i, j) in graph.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

pub fn to_json(graph: &Graph) -> String {
    let raw = JsonGraph {
        n: graph.n(),
        edges: graph.edges().iter().map(|&(i, j)| [i, j]).collect(),
    };
    let mut out = serde_json::to_string(&raw).expect("plain data serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CatalogId;

    #[test]
    fn reads_star_edge_list() {
        let text = "# star on seven vertices\n7\n0 1\n0 2\n0 3  # spoke\n\n0 4\n0 5\n0 6\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, CatalogId::Star.graph());
    }

    #[test]
    fn malformed_line_reports_location() {
        let err = parse_edge_list("3\n0 1\na b\n").unwrap_err();
        match err {
            ParseError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("3\n0 1 2\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("# nothing\n"),
            Err(ParseError::MissingHeader)
        ));
    }

    #[test]
    fn invalid_edges_carry_line() {
        assert!(matches!(
            parse_edge_list("2\n0 0\n"),
            Err(ParseError::InvalidEdge {
                line: 2,
                source: GraphError::SelfLoop { vertex: 0 }
            })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1\n1 2\n1 0\n"),
            Err(ParseError::InvalidEdge {
                line: 4,
                source: GraphError::DuplicateEdge { .. }
            })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 5\n"),
            Err(ParseError::InvalidEdge { line: 2, .. })
        ));
    }

    #[test]
    fn json_reader() {
        let g = parse_json(r#"{"n": 3, "edges": [[1, 0], [2, 1]]}"#).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert!(parse_json(r#"{"n": 3}"#).is_err());
        assert!(parse_json(r#"{"n": 2, "edges": [[0, 0]]}"#).is_err());
    }

    #[test]
    fn canonical_writers_are_byte_stable() {
        let s = "4\n2 3\n1 0\n# c\n1 2\n";
        let once = to_edge_list(&parse_edge_list(s).unwrap());
        assert_eq!(once, "4\n0 1\n1 2\n2 3\n");
        assert_eq!(to_edge_list(&parse_edge_list(&once).unwrap()), once);
        let j = to_json(&parse_edge_list(s).unwrap());
        assert_eq!(j, "{\"n\":4,\"edges\":[[0,1],[1,2],[2,3]]}\n");
    }

    #[test]
    fn format_from_path() {
        use std::path::Path;
        assert_eq!(
            GraphFormat::from_path(Path::new("g.JSON")),
            GraphFormat::Json
        );
        assert_eq!(
            GraphFormat::from_path(Path::new("g.txt")),
            GraphFormat::EdgeList
        );
    }
}
