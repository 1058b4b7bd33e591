//! Machine-readable reports and the certificate file format.
//!
//! Certificates are one line of space-separated 1-based tokens: vertex or
//! hyperedge indices, or `u-v` for graph edges.

use serde::{Deserialize, Serialize};

use effdom::Status;

/// One member of a solution, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Item {
    /// A vertex, or a hyperedge index for hypergraph EED, MIM and XC.
    Index(usize),
    Edge([usize; 2]),
}

/// A solution in 1-based numbering. A list of items rather than a tagged
/// union so that empty certificates round-trip.
pub type Certificate = Vec<Item>;

pub fn from_zero_based(set: &[usize]) -> Certificate {
    set.iter().map(|&v| Item::Index(v + 1)).collect()
}

pub fn from_zero_based_edges(edges: &[(usize, usize)]) -> Certificate {
    edges
        .iter()
        .map(|&(u, v)| Item::Edge([u + 1, v + 1]))
        .collect()
}

/// The one-line file form, without a trailing newline.
pub fn to_line(cert: &[Item]) -> String {
    cert.iter()
        .map(|item| match item {
            Item::Index(i) => i.to_string(),
            Item::Edge([u, v]) => format!("{u}-{v}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn index(token: &str) -> Result<usize, String> {
    match token.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive index, found {token:?}")),
        Ok(i) => Ok(i - 1),
    }
}

/// The first non-comment line of a certificate file. An empty file or a
/// blank line is the empty set.
fn certificate_line(text: &str) -> &str {
    text.lines()
        .map(str::trim)
        .find(|l| !l.starts_with('c'))
        .unwrap_or("")
}

/// Parses 1-based indices into 0-based ones.
pub fn parse_indices(text: &str) -> Result<Vec<usize>, String> {
    certificate_line(text)
        .split_whitespace()
        .map(index)
        .collect()
}

/// Parses 1-based `u-v` tokens into 0-based pairs.
pub fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>, String> {
    certificate_line(text)
        .split_whitespace()
        .map(|t| {
            let (u, v) = t
                .split_once('-')
                .ok_or_else(|| format!("expected an edge `u-v`, found {t:?}"))?;
            Ok((index(u)?, index(v)?))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCheck {
    pub sum: u64,
    pub target: u64,
}

/// What `solve` reports. `certificate` is present iff `status` is `solution`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub problem: String,
    pub status: Status,
    pub certificate: Option<Certificate>,
    pub method: String,
    /// For ED and EED `Σ|N[v]|` against `|V|` (or its line graph version);
    /// for XC the covered count against `|V|`; absent for MIM.
    pub weight_check: Option<WeightCheck>,
    pub time_ms: f64,
    pub warnings: Vec<String>,
}

impl RunReport {
    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Solution => "solution",
            Status::Infeasible => "infeasible",
            Status::ResourceLimited => "resource-limited",
        };
        let mut out = format!(
            "problem: {}\nstatus: {status}\nmethod: {}\n",
            self.problem, self.method
        );
        if let Some(c) = &self.certificate {
            out += &format!("certificate ({}): {}\n", c.len(), to_line(c));
        }
        if let Some(w) = &self.weight_check {
            out += &format!("weight check: {} / {}\n", w.sum, w.target);
        }
        out += &format!("time: {:.3} ms\n", self.time_ms);
        for w in &self.warnings {
            out += &format!("warning: {w}\n");
        }
        out
    }
}
