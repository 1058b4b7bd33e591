//! ED, EED, induced matching and exact cover on hypergraphs.

use crate::ed::{solve_ed, EdCertificate, Method, MethodChoice, Status, BRUTE_LIMIT};
use crate::eed::{max_independent_in_square, MimCertificate};
use crate::graph::{square, WeightMap};
use crate::hypergraph::{hyper_line_graph, two_section, Hypergraph};
use crate::mwis::mwis_chordal_unchecked;
use crate::oracles::{self, OracleGate};
use crate::ordering::is_chordal;
use crate::recognition::Witness;
use crate::{Error, Result};

/// ED of a hypergraph: an efficient dominating set of its 2-section,
/// reported as plain vertices.
pub fn solve_hyper_ed(h: &Hypergraph, choice: MethodChoice) -> Result<EdCertificate> {
    solve_ed(&two_section(h), choice)
}

/// EED of a hypergraph: hyperedges such that every hyperedge meets exactly
/// one of them. Solved as ED on `L(H)`; `set` holds hyperedge indices.
pub fn solve_hyper_eed(h: &Hypergraph, choice: MethodChoice) -> Result<EdCertificate> {
    let lg = hyper_line_graph(h);
    let cert = solve_ed(&lg.graph, choice)?;
    if cert.status == Status::Solution {
        assert!(verify_hyper_eed(h, &cert.set)?, "invalid hyperedge set");
    }
    Ok(cert)
}

/// Maximum induced matching of a hypergraph: a maximum independent set of
/// `L(H)²`, as hyperedge indices.
pub fn solve_hyper_mim(h: &Hypergraph, choice: MethodChoice) -> Result<MimCertificate<usize>> {
    let sq = square(&hyper_line_graph(h).graph);
    let (status, matching, method) = max_independent_in_square(&sq, choice, Method::ChordalSquare)?;
    if status == Status::Solution {
        assert!(verify_hyper_mim(h, &matching)?, "invalid induced matching");
    }
    Ok(MimCertificate {
        status,
        matching,
        method,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XcCertificate {
    pub status: Status,
    /// Chosen hyperedge indices, sorted. Empty unless `status` is `Solution`.
    pub cover: Vec<usize>,
    /// `Σ |e|` over the best pairwise disjoint family found.
    pub covered_count: u64,
    /// `|V|`.
    pub target: u64,
    pub method: Method,
}

/// Exact cover through a maximum weight independent set of `L(H)` under
/// `ω(e) = |e|`: a cover exists iff the optimum is `|V|`.
///
/// `Auto` runs the two-pass algorithm when `L(H)` is chordal and exhaustive
/// search otherwise. `Dc` and `ChordalSquare` do not apply.
pub fn solve_exact_cover(h: &Hypergraph, choice: MethodChoice) -> Result<XcCertificate> {
    let target = h.n() as u64;
    let weights = WeightMap(h.edges().iter().map(|e| e.len() as u64).collect());
    let lg = hyper_line_graph(h).graph;
    let (set, method) = match choice {
        MethodChoice::Dc | MethodChoice::ChordalSquare => {
            return Err(Error::MethodInapplicable {
                method: choice.as_str(),
                reason: "exact cover runs on the line graph; use auto or brute".into(),
            })
        }
        MethodChoice::Auto => match is_chordal(&lg).witness {
            Witness::Ordering(peo) => (
                Some(mwis_chordal_unchecked(&lg, &weights, &peo).set),
                Method::ChordalLineGraph,
            ),
            _ => (brute(&lg, &weights), Method::Brute),
        },
        MethodChoice::Brute => (brute(&lg, &weights), Method::Brute),
    };
    let Some(set) = set else {
        return Ok(XcCertificate {
            status: Status::ResourceLimited,
            cover: Vec::new(),
            covered_count: 0,
            target,
            method,
        });
    };
    let covered_count = weights.weight_of(&set);
    let status = if covered_count == target {
        Status::Solution
    } else {
        Status::Infeasible
    };
    let cover = if status == Status::Solution {
        set
    } else {
        Vec::new()
    };
    if status == Status::Solution {
        assert!(verify_exact_cover(h, &cover)?, "invalid exact cover");
    }
    Ok(XcCertificate {
        status,
        cover,
        covered_count,
        target,
        method,
    })
}

fn brute(lg: &crate::graph::Graph, weights: &WeightMap) -> Option<Vec<usize>> {
    oracles::brute_mwis(lg, weights, &OracleGate::new(BRUTE_LIMIT, BRUTE_LIMIT))
        .ok()
        .map(|(set, _)| set)
}

fn checked_indices(h: &Hypergraph, set: &[usize]) -> Result<Option<Vec<usize>>> {
    for &i in set {
        h.check_edge(i)?;
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let len = sorted.len();
    sorted.dedup();
    Ok((sorted.len() == len).then_some(sorted))
}

/// True iff the chosen hyperedges are pairwise disjoint and cover every
/// vertex. A repeated index is a failure.
pub fn verify_exact_cover(h: &Hypergraph, cover: &[usize]) -> Result<bool> {
    let Some(cover) = checked_indices(h, cover)? else {
        return Ok(false);
    };
    let mut hit = vec![false; h.n()];
    for &i in &cover {
        for &v in h.edge(i) {
            if std::mem::replace(&mut hit[v], true) {
                return Ok(false);
            }
        }
    }
    Ok(hit.into_iter().all(|x| x))
}

/// For every vertex, how many chosen hyperedges contain it.
fn vertex_load(h: &Hypergraph, set: &[usize]) -> Vec<u32> {
    let mut load = vec![0u32; h.n()];
    for &i in set {
        for &v in h.edge(i) {
            load[v] += 1;
        }
    }
    load
}

/// True iff every hyperedge meets exactly one chosen hyperedge.
pub fn verify_hyper_eed(h: &Hypergraph, set: &[usize]) -> Result<bool> {
    let Some(set) = checked_indices(h, set)? else {
        return Ok(false);
    };
    let load = vertex_load(h, &set);
    // Chosen hyperedges must be pairwise disjoint, so a vertex load above 1
    // already means some hyperedge meets two of them.
    if load.iter().any(|&l| l > 1) {
        return Ok(false);
    }
    let mut owner = vec![usize::MAX; h.n()];
    for &i in &set {
        for &v in h.edge(i) {
            owner[v] = i;
        }
    }
    Ok(h.edges().iter().all(|e| {
        let mut met: Vec<usize> = e
            .iter()
            .filter(|&&v| owner[v] != usize::MAX)
            .map(|&v| owner[v])
            .collect();
        met.sort_unstable();
        met.dedup();
        met.len() == 1
    }))
}

/// True iff the chosen hyperedges are pairwise disjoint and no hyperedge
/// meets two of them.
pub fn verify_hyper_mim(h: &Hypergraph, set: &[usize]) -> Result<bool> {
    let Some(set) = checked_indices(h, set)? else {
        return Ok(false);
    };
    if vertex_load(h, &set).iter().any(|&l| l > 1) {
        return Ok(false);
    }
    let mut owner = vec![usize::MAX; h.n()];
    for &i in &set {
        for &v in h.edge(i) {
            owner[v] = i;
        }
    }
    Ok(h.edges().iter().all(|e| {
        let mut met = e.iter().map(|&v| owner[v]).filter(|&o| o != usize::MAX);
        match met.next() {
            None => true,
            Some(first) => met.all(|o| o == first),
        }
    }))
}
