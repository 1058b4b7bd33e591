//! Efficient domination: the reduction to weighted independent sets in `G²`,
//! the linear-time algorithm on dually chordal graphs, and dispatch.

use serde::{Deserialize, Serialize};

use crate::graph::{neighborhood_weights, square, Graph};
use crate::mwis::mwis_chordal_unchecked;
use crate::oracles::{self, OracleGate};
use crate::ordering::{compute_mno, is_chordal, MnoResult};
use crate::recognition::Witness;
use crate::{Error, Result};

/// Largest instance the exhaustive fallbacks accept.
pub const BRUTE_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Solution,
    Infeasible,
    /// No polynomial path applies and the instance is too large to search.
    ResourceLimited,
}

/// Which algorithm produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Maximum neighborhood ordering based, linear time.
    #[serde(rename = "dc")]
    DuallyChordal,
    /// Two-pass weighted independent set on a chordal square.
    ChordalSquare,
    /// Two-pass weighted independent set on a chordal line graph.
    ChordalLineGraph,
    /// Rejected by the forbidden-subgraph screen.
    #[serde(rename = "screen")]
    StructuralScreen,
    /// Exhaustive search.
    Brute,
}

impl Method {
    pub fn is_polynomial(self) -> bool {
        self != Method::Brute
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Method::DuallyChordal => "dc",
            Method::ChordalSquare => "chordal-square",
            Method::ChordalLineGraph => "chordal-line-graph",
            Method::StructuralScreen => "screen",
            Method::Brute => "brute",
        }
    }
}

/// Requested algorithm. Anything other than `Auto` never falls back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    Dc,
    ChordalSquare,
    Brute,
}

impl MethodChoice {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodChoice::Auto => "auto",
            MethodChoice::Dc => "dc",
            MethodChoice::ChordalSquare => "chordal-square",
            MethodChoice::Brute => "brute",
        }
    }
}

impl std::str::FromStr for MethodChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "dc" => Ok(MethodChoice::Dc),
            "chordal-square" => Ok(MethodChoice::ChordalSquare),
            "brute" => Ok(MethodChoice::Brute),
            _ => Err(format!(
                "unknown method {s:?} (expected auto, dc, chordal-square or brute)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdCertificate {
    pub status: Status,
    /// The efficient dominating set, sorted. Empty unless `status` is
    /// `Solution`.
    pub set: Vec<usize>,
    /// `Σ |N[d]|` over the best candidate the method found.
    pub weight_sum: u64,
    /// `|V|`.
    pub target: u64,
    pub method: Method,
}

impl EdCertificate {
    fn from_candidate(g: &Graph, set: Vec<usize>, method: Method) -> Self {
        let weight_sum: u64 = set.iter().map(|&v| g.degree(v) as u64 + 1).sum();
        let target = g.n() as u64;
        let status = if weight_sum == target {
            Status::Solution
        } else {
            Status::Infeasible
        };
        EdCertificate {
            status,
            set: if status == Status::Solution {
                set
            } else {
                Vec::new()
            },
            weight_sum,
            target,
            method,
        }
    }

    fn resource_limited(g: &Graph) -> Self {
        EdCertificate {
            status: Status::ResourceLimited,
            set: Vec::new(),
            weight_sum: 0,
            target: g.n() as u64,
            method: Method::Brute,
        }
    }
}

/// ED through a maximum weight independent set of `G²` under `ω(v) = |N[v]|`:
/// an efficient dominating set exists iff the optimum weight is `|V|`.
///
/// Uses the two-pass algorithm when `G²` is chordal and exhaustive search
/// (flagged as `Method::Brute`) otherwise, up to [`BRUTE_LIMIT`] vertices.
pub fn ed_via_square(g: &Graph) -> EdCertificate {
    let sq = square(g);
    let weights = neighborhood_weights(g);
    match is_chordal(&sq).witness {
        Witness::Ordering(peo) => {
            let mwis = mwis_chordal_unchecked(&sq, &weights, &peo);
            EdCertificate::from_candidate(g, mwis.set, Method::ChordalSquare)
        }
        _ => match oracles::brute_mwis(&sq, &weights, &fallback_gate()) {
            Ok((set, _)) => EdCertificate::from_candidate(g, set, Method::Brute),
            Err(_) => EdCertificate::resource_limited(g),
        },
    }
}

fn fallback_gate() -> OracleGate {
    OracleGate::new(BRUTE_LIMIT, BRUTE_LIMIT)
}

/// ED on a dually chordal graph in linear time, never building `G²`.
pub fn ed_dually_chordal(g: &Graph) -> Result<EdCertificate> {
    let mno = compute_mno(g).map_err(|_| Error::NotDuallyChordal)?;
    Ok(ed_with_mno(g, &mno))
}

/// The ED pass over a given maximum neighborhood ordering.
///
/// This is the two-pass independent set algorithm on `G²` along the
/// ordering, with every `G²` adjacency test replaced by a test on the
/// maximum neighbor: for `i < j`, `v_i v_j ∈ E(G²)` iff `m_i ∈ N[v_j]`.
/// Residual reductions are therefore parked on `m_i` and collected by later
/// vertices over their closed neighborhood, and a selected vertex blocks its
/// closed neighborhood so that earlier candidates can test `m_i` alone.
pub fn ed_with_mno(g: &Graph, mno: &MnoResult) -> EdCertificate {
    let n = g.n();
    let mut pending = vec![0i64; n];
    let mut marked = vec![false; n];
    for &v in &mno.sigma {
        let mut w = g.degree(v) as i64 + 1;
        w -= pending[v];
        for &u in g.neighbors(v) {
            w -= pending[u];
        }
        if w > 0 {
            marked[v] = true;
            pending[mno.max_neighbor[v]] += w;
        }
    }

    let mut blocked = vec![false; n];
    let mut set = Vec::new();
    for &v in mno.sigma.iter().rev() {
        if marked[v] && !blocked[mno.max_neighbor[v]] {
            set.push(v);
            blocked[v] = true;
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    set.sort_unstable();
    let cert = EdCertificate::from_candidate(g, set, Method::DuallyChordal);
    if cert.status == Status::Solution {
        assert!(
            closed_neighborhoods_disjoint(g, &cert.set),
            "selected closed neighborhoods overlap"
        );
    }
    cert
}

fn closed_neighborhoods_disjoint(g: &Graph, set: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &d in set {
        for x in std::iter::once(d).chain(g.neighbors(d).iter().copied()) {
            if std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
    }
    true
}

/// Solves ED with the requested method. Every solution is re-verified.
pub fn solve_ed(g: &Graph, choice: MethodChoice) -> Result<EdCertificate> {
    let cert = match choice {
        MethodChoice::Auto => match compute_mno(g) {
            Ok(mno) => ed_with_mno(g, &mno),
            Err(_) => ed_via_square(g),
        },
        MethodChoice::Dc => match compute_mno(g) {
            Ok(mno) => ed_with_mno(g, &mno),
            Err(_) => {
                return Err(Error::MethodInapplicable {
                    method: "dc",
                    reason: "graph is not dually chordal".into(),
                })
            }
        },
        MethodChoice::ChordalSquare => {
            let sq = square(g);
            match is_chordal(&sq).witness {
                Witness::Ordering(peo) => {
                    let mwis = mwis_chordal_unchecked(&sq, &neighborhood_weights(g), &peo);
                    EdCertificate::from_candidate(g, mwis.set, Method::ChordalSquare)
                }
                _ => {
                    return Err(Error::MethodInapplicable {
                        method: "chordal-square",
                        reason: "square of the graph is not chordal".into(),
                    })
                }
            }
        }
        MethodChoice::Brute => {
            match oracles::brute_ed(g, &OracleGate::new(BRUTE_LIMIT, BRUTE_LIMIT)) {
                Ok(oracles::Found::Solution(set)) => {
                    EdCertificate::from_candidate(g, set, Method::Brute)
                }
                Ok(oracles::Found::Infeasible) => EdCertificate {
                    status: Status::Infeasible,
                    set: Vec::new(),
                    weight_sum: 0,
                    target: g.n() as u64,
                    method: Method::Brute,
                },
                Err(_) => EdCertificate::resource_limited(g),
            }
        }
    };
    if cert.status == Status::Solution {
        assert!(verify_ed(g, &cert.set)?, "solver returned an invalid set");
    }
    Ok(cert)
}

/// True iff every vertex lies in exactly one `N[d]`, `d ∈ set`.
pub fn verify_ed(g: &Graph, set: &[usize]) -> Result<bool> {
    let mut count = vec![0u32; g.n()];
    let mut chosen = vec![false; g.n()];
    for &d in set {
        g.check_vertex(d)?;
        if std::mem::replace(&mut chosen[d], true) {
            return Ok(false);
        }
        count[d] += 1;
        for &u in g.neighbors(d) {
            count[u] += 1;
        }
    }
    Ok(count.iter().all(|&c| c == 1))
}
