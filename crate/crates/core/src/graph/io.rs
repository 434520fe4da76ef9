//! graph6 and edge-list JSON encodings of [`Graph`].

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

impl Graph {
    /// Standard graph6 encoding (no header, no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out: Vec<u8> = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else if n <= 258_047 {
            out.push(126);
            push_sextets(&mut out, n as u64, 3);
        } else {
            out.extend([126, 126]);
            push_sextets(&mut out, n as u64, 6);
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Parses one graph6 line. An optional `>>graph6<<` header and trailing
    /// whitespace are accepted.
    pub fn from_graph6(text: &str, name: impl Into<String>) -> Result<Graph> {
        let text = text.trim_end();
        let bytes = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
        }
        let (n, body) = match bytes {
            [] => return Err(Error::Graph6("empty input".into())),
            [126, 126, rest @ ..] => (read_sextets(rest, 6)?, &rest[6..]),
            [126, rest @ ..] => (read_sextets(rest, 3)?, &rest[3..]),
            [b, rest @ ..] => ((b - 63) as usize, rest),
        };
        let bits = n * n.saturating_sub(1) / 2;
        let need = bits.div_ceil(6);
        if body.len() != need {
            return Err(Error::Graph6(format!(
                "expected {need} adjacency bytes for n={n}, found {}",
                body.len()
            )));
        }
        let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(idx) {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, edges, name)
    }

    pub fn to_edge_list(&self) -> EdgeListJson {
        EdgeListJson {
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            name: self.name().to_owned(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let e: EdgeListJson = serde_json::from_str(text)?;
        e.into_graph()
    }
}

/// `{"n": int, "edges": [[u,v],...], "name": string}` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub name: String,
}

impl EdgeListJson {
    pub fn into_graph(self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.into_iter().map(|[u, v]| (u, v)), self.name)
    }
}

fn push_sextets(out: &mut Vec<u8>, value: u64, count: u32) {
    for k in (0..count).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

fn read_sextets(bytes: &[u8], count: usize) -> Result<usize> {
    if bytes.len() < count {
        return Err(Error::Graph6("truncated size prefix".into()));
    }
    Ok(bytes[..count]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{andrasfai, complete, cycle, path};

    #[test]
    fn known_strings() {
        // petgraph / nauty reference encodings
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)], "x").unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(complete(4).unwrap().to_graph6(), "C~");
        assert_eq!(path(2).unwrap().to_graph6(), "A_");
        assert_eq!(complete(1).unwrap().to_graph6(), "@");
        assert_eq!(cycle(5).unwrap().to_graph6(), "Dhc");
    }

    #[test]
    fn parse_with_header_and_newline() {
        let g = Graph::from_graph6(">>graph6<<DQc\n", "x").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn extended_length_prefix() {
        let g = andrasfai(30).unwrap(); // 89 vertices
        let s = g.to_graph6();
        assert_eq!(s.as_bytes()[0], 126);
        let back = Graph::from_graph6(&s, g.name()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(Graph::from_graph6("", "x").is_err());
        assert!(Graph::from_graph6("D", "x").is_err());
        assert!(Graph::from_graph6("DQc?", "x").is_err());
        assert!(Graph::from_graph6("D Q", "x").is_err());
        assert!(Graph::from_graph6("~?", "x").is_err());
    }

    #[test]
    fn json_shape() {
        let g = path(3).unwrap();
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[0,1],[1,2]],"name":"P3"}"#);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,2]],"name":"bad"}"#).is_err());
    }
}
