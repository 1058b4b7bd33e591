//! Text formats.
//!
//! Graphs:
//!
//! ```text
//! c optional comments
//! p graph <n> <m>
//! e <u> <v>        (m lines, 1 <= u < v <= n)
//! ```
//!
//! Hypergraphs:
//!
//! ```text
//! p hypergraph <n> <m>
//! h <v1> ... <vk>  (m lines, k >= 1, strictly increasing, 1-based)
//! ```
//!
//! Vertices are 1-based on disk and 0-based in memory.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !(*l == "c" || l.starts_with("c ") || l.starts_with("c\t")))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    kind: &str,
) -> Result<(usize, usize), ParseError> {
    let Some((no, line)) = lines.next() else {
        return err(0, format!("missing `p {kind}` header"));
    };
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "p" || parts[1] != kind {
        return err(no, format!("expected `p {kind} <n> <m>`, found {line:?}"));
    }
    Ok((number(no, parts[2])?, number(no, parts[3])?))
}

fn number(line: usize, token: &str) -> Result<usize, ParseError> {
    token.parse().or_else(|_| {
        err(
            line,
            format!("expected a non-negative integer, found {token:?}"),
        )
    })
}

fn vertex(line: usize, token: &str, n: usize) -> Result<usize, ParseError> {
    let v = number(line, token)?;
    if v == 0 || v > n {
        return err(line, format!("vertex {v} out of range 1..={n}"));
    }
    Ok(v - 1)
}

/// Which format a text claims to be, from its header.
pub fn detect(text: &str) -> Option<&'static str> {
    let (_, line) = content_lines(text).next()?;
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next()) {
        (Some("p"), Some("graph")) => Some("graph"),
        (Some("p"), Some("hypergraph")) => Some("hypergraph"),
        _ => None,
    }
}

pub fn parse_graph(text: &str) -> Result<Parsed<Graph>, ParseError> {
    let mut lines = content_lines(text);
    let (n, m) = header(&mut lines, "graph")?;
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut warnings = Vec::new();
    let mut count = 0;
    for (no, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "e" {
            return err(no, format!("expected `e <u> <v>`, found {line:?}"));
        }
        let (u, v) = (vertex(no, parts[1], n)?, vertex(no, parts[2], n)?);
        if u >= v {
            return err(
                no,
                format!(
                    "edge endpoints must satisfy u < v, found {} {}",
                    u + 1,
                    v + 1
                ),
            );
        }
        count += 1;
        if count > m {
            return err(no, format!("more than the declared {m} edges"));
        }
        if seen.insert((u, v)) {
            edges.push((u, v));
        } else {
            warnings.push(format!(
                "line {no}: duplicate edge {}-{} ignored",
                u + 1,
                v + 1
            ));
        }
    }
    if count < m {
        return err(0, format!("declared {m} edges, found {count}"));
    }
    let g = Graph::from_edges(n, edges).or_else(|e| err(0, e.to_string()))?;
    Ok(Parsed { value: g, warnings })
}

pub fn parse_hypergraph(text: &str) -> Result<Parsed<Hypergraph>, ParseError> {
    let mut lines = content_lines(text);
    let (n, m) = header(&mut lines, "hypergraph")?;
    let mut edges = Vec::with_capacity(m);
    for (no, line) in lines {
        let mut parts = line.split_whitespace();
        if parts.next() != Some("h") {
            return err(no, format!("expected `h <v1> ... <vk>`, found {line:?}"));
        }
        let e = parts
            .map(|t| vertex(no, t, n))
            .collect::<Result<Vec<usize>, _>>()?;
        if e.is_empty() {
            return err(no, "hyperedge has no vertices");
        }
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return err(no, "hyperedge vertices must be strictly increasing");
        }
        if edges.len() == m {
            return err(no, format!("more than the declared {m} hyperedges"));
        }
        edges.push(e);
    }
    if edges.len() < m {
        return err(0, format!("declared {m} hyperedges, found {}", edges.len()));
    }
    let h = Hypergraph::new(n, edges).or_else(|e| err(0, e.to_string()))?;
    Ok(Parsed {
        value: h,
        warnings: Vec::new(),
    })
}

/// Parses either format, chosen by the header.
pub fn parse_instance(text: &str) -> Result<Parsed<Instance>, ParseError> {
    match detect(text) {
        Some("hypergraph") => parse_hypergraph(text).map(|p| Parsed {
            value: Instance::Hypergraph(p.value),
            warnings: p.warnings,
        }),
        Some(_) => parse_graph(text).map(|p| Parsed {
            value: Instance::Graph(p.value),
            warnings: p.warnings,
        }),
        None => {
            let line = content_lines(text).next().map_or(0, |(no, _)| no);
            err(line, "expected a `p graph` or `p hypergraph` header")
        }
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p graph {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("p hypergraph {} {}\n", h.n(), h.m());
    for e in h.edges() {
        out.push('h');
        for &v in e {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}
