//! Exhaustive reference solvers.
//!
//! These work straight from the problem definitions on bitmasks and share no
//! code path with the fast solvers. Each refuses inputs beyond its
//! [`OracleGate`] instead of running unbounded.

use crate::graph::{Graph, WeightMap};
use crate::hypergraph::Hypergraph;
use crate::{Error, Result};

/// Size limits for exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleGate {
    /// Largest vertex count for vertex-subset searches.
    pub max_n: usize,
    /// Largest edge or hyperedge count for edge-subset searches.
    pub max_m: usize,
    /// Hard cap on the enumerated universe (bitmask width).
    pub max_subset_bits: usize,
}

impl Default for OracleGate {
    fn default() -> Self {
        OracleGate {
            max_n: 20,
            max_m: 20,
            max_subset_bits: 64,
        }
    }
}

impl OracleGate {
    pub fn new(max_n: usize, max_m: usize) -> Self {
        OracleGate {
            max_n,
            max_m,
            ..Default::default()
        }
    }

    fn check(&self, what: &'static str, value: usize, limit: usize) -> Result<()> {
        let limit = limit.min(self.max_subset_bits).min(64);
        if value > limit {
            Err(Error::GateExceeded { what, value, limit })
        } else {
            Ok(())
        }
    }

    fn check_n(&self, n: usize) -> Result<()> {
        self.check("n", n, self.max_n)
    }

    fn check_m(&self, m: usize) -> Result<()> {
        self.check("m", m, self.max_m)
    }
}

/// Outcome of an exhaustive search: a witness set, or proof by exhaustion
/// that none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Found<T> {
    Solution(T),
    Infeasible,
}

impl<T> Found<T> {
    pub fn is_solution(&self) -> bool {
        matches!(self, Found::Solution(_))
    }

    pub fn solution(&self) -> Option<&T> {
        match self {
            Found::Solution(t) => Some(t),
            Found::Infeasible => None,
        }
    }
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1u64 << i) != 0).collect()
}

fn full(k: usize) -> u64 {
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Searches for sets among `options` that partition `universe` exactly.
/// Always branches on the lowest uncovered element, trying every option that
/// covers it and is disjoint from what is already covered.
fn exact_cover(universe: u64, options: &[u64]) -> Option<Vec<usize>> {
    let mut covering: Vec<Vec<usize>> = vec![Vec::new(); 64];
    for (i, &o) in options.iter().enumerate() {
        for b in bits(o) {
            covering[b].push(i);
        }
    }
    fn go(
        covered: u64,
        universe: u64,
        options: &[u64],
        covering: &[Vec<usize>],
        chosen: &mut Vec<usize>,
    ) -> bool {
        let open = universe & !covered;
        if open == 0 {
            return true;
        }
        let x = open.trailing_zeros() as usize;
        for &i in &covering[x] {
            if options[i] & covered == 0 {
                chosen.push(i);
                if go(covered | options[i], universe, options, covering, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    if options.iter().any(|&o| o & !universe != 0) {
        return None;
    }
    go(0, universe, options, &covering, &mut chosen).then(|| {
        chosen.sort_unstable();
        chosen
    })
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |acc, &w| acc | (1u64 << w))
        })
        .collect()
}

/// Efficient dominating set by exhaustive search over vertex subsets.
pub fn brute_ed(g: &Graph, gate: &OracleGate) -> Result<Found<Vec<usize>>> {
    gate.check_n(g.n())?;
    let masks = closed_masks(g);
    Ok(match exact_cover(full(g.n()), &masks) {
        Some(d) => Found::Solution(d),
        None => Found::Infeasible,
    })
}

/// Edge masks where bit `j` of entry `i` is set iff edges `i` and `j` share
/// an endpoint (including `i == j`).
fn edge_closed_masks(edges: &[(usize, usize)]) -> Vec<u64> {
    edges
        .iter()
        .map(|&(a, b)| {
            edges
                .iter()
                .enumerate()
                .filter(|&(_, &(c, d))| a == c || a == d || b == c || b == d)
                .fold(0u64, |acc, (j, _)| acc | (1u64 << j))
        })
        .collect()
}

/// Efficient edge dominating set by exhaustive search over edge subsets.
/// Returns edges as `(u, v)` pairs with `u < v`.
pub fn brute_eed(g: &Graph, gate: &OracleGate) -> Result<Found<Vec<(usize, usize)>>> {
    gate.check_m(g.m())?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let masks = edge_closed_masks(&edges);
    Ok(match exact_cover(full(edges.len()), &masks) {
        Some(sel) => Found::Solution(sel.into_iter().map(|i| edges[i]).collect()),
        None => Found::Infeasible,
    })
}

/// Maximum weight set with no two members joined in `conflicts` (bitmask
/// adjacency, no self bits). Include/exclude branching with a remaining-weight
/// bound.
fn max_weight_independent(conflicts: &[u64], weights: &[u64]) -> (u64, u64) {
    let k = conflicts.len();
    // suffix[i] = total weight of vertices i..k
    let mut suffix = vec![0u64; k + 1];
    for i in (0..k).rev() {
        suffix[i] = suffix[i + 1] + weights[i];
    }
    struct Search<'a> {
        conflicts: &'a [u64],
        weights: &'a [u64],
        suffix: Vec<u64>,
        best: u64,
        best_set: u64,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize, chosen: u64, forbidden: u64, weight: u64) {
            if weight > self.best || (weight == self.best && chosen < self.best_set) {
                self.best = weight;
                self.best_set = chosen;
            }
            if i == self.conflicts.len() || weight + self.suffix[i] <= self.best {
                return;
            }
            if forbidden & (1u64 << i) == 0 {
                self.go(
                    i + 1,
                    chosen | (1u64 << i),
                    forbidden | self.conflicts[i],
                    weight + self.weights[i],
                );
            }
            self.go(i + 1, chosen, forbidden, weight);
        }
    }
    let mut s = Search {
        conflicts,
        weights,
        suffix,
        best: 0,
        best_set: 0,
    };
    s.go(0, 0, 0, 0);
    (s.best, s.best_set)
}

/// Maximum weight independent set by exhaustive search. Returns the sorted
/// set and its weight.
pub fn brute_mwis(g: &Graph, weights: &WeightMap, gate: &OracleGate) -> Result<(Vec<usize>, u64)> {
    gate.check_n(g.n())?;
    let conflicts: Vec<u64> = closed_masks(g)
        .into_iter()
        .enumerate()
        .map(|(v, m)| m & !(1u64 << v))
        .collect();
    let (w, set) = max_weight_independent(&conflicts, &weights.0);
    Ok((bits(set), w))
}

/// Maximum induced matching by exhaustive search: a maximum set of edges
/// pairwise at distance at least 2 (no shared endpoint, no joining edge).
pub fn brute_mim(g: &Graph, gate: &OracleGate) -> Result<Vec<(usize, usize)>> {
    gate.check_m(g.m())?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let close = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        a == c
            || a == d
            || b == c
            || b == d
            || g.has_edge(a, c)
            || g.has_edge(a, d)
            || g.has_edge(b, c)
            || g.has_edge(b, d)
    };
    let conflicts: Vec<u64> = (0..edges.len())
        .map(|i| {
            (0..edges.len())
                .filter(|&j| j != i && close(edges[i], edges[j]))
                .fold(0u64, |acc, j| acc | (1u64 << j))
        })
        .collect();
    let (_, set) = max_weight_independent(&conflicts, &vec![1; edges.len()]);
    Ok(bits(set).into_iter().map(|i| edges[i]).collect())
}

/// Exact cover by exhaustive search over hyperedge subsets. Returns sorted
/// hyperedge indices.
pub fn brute_exact_cover(h: &Hypergraph, gate: &OracleGate) -> Result<Found<Vec<usize>>> {
    gate.check_m(h.m())?;
    gate.check_n(h.n())?;
    let options: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
        .collect();
    Ok(match exact_cover(full(h.n()), &options) {
        Some(c) => Found::Solution(c),
        None => Found::Infeasible,
    })
}

fn hyperedge_meets(h: &Hypergraph) -> Vec<u64> {
    let m = h.m();
    (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| h.edge(i).iter().any(|v| h.edge(j).binary_search(v).is_ok()))
                .fold(0u64, |acc, j| acc | (1u64 << j))
        })
        .collect()
}

/// Efficient edge dominating set of a hypergraph: hyperedges such that every
/// hyperedge meets exactly one of them.
pub fn brute_hyper_eed(h: &Hypergraph, gate: &OracleGate) -> Result<Found<Vec<usize>>> {
    gate.check_m(h.m())?;
    let masks = hyperedge_meets(h);
    Ok(match exact_cover(full(h.m()), &masks) {
        Some(c) => Found::Solution(c),
        None => Found::Infeasible,
    })
}

/// Maximum induced matching of a hypergraph: a maximum set of pairwise
/// disjoint hyperedges no two of which meet a common third hyperedge.
pub fn brute_hyper_mim(h: &Hypergraph, gate: &OracleGate) -> Result<Vec<usize>> {
    gate.check_m(h.m())?;
    let meets = hyperedge_meets(h);
    let m = h.m();
    let conflicts: Vec<u64> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && (meets[i] & meets[j]) != 0)
                .fold(0u64, |acc, j| acc | (1u64 << j))
        })
        .collect();
    let (_, set) = max_weight_independent(&conflicts, &vec![1; m]);
    Ok(bits(set))
}

/// Minimum weight dominating set by plain enumeration of all `2^n` subsets.
pub fn brute_min_weight_dominating(
    g: &Graph,
    weights: &WeightMap,
    gate: &OracleGate,
) -> Result<(Vec<usize>, u64)> {
    gate.check_n(g.n())?;
    if g.n() > 26 {
        return Err(Error::GateExceeded {
            what: "n",
            value: g.n(),
            limit: 26,
        });
    }
    let masks = closed_masks(g);
    let everything = full(g.n());
    let mut best: Option<(u64, u64)> = None;
    for set in 0u64..=everything {
        let dominated = bits(set).iter().fold(0u64, |acc, &v| acc | masks[v]);
        if dominated == everything {
            let w: u64 = bits(set).iter().map(|&v| weights.get(v)).sum();
            if best.is_none_or(|(bw, _)| w < bw) {
                best = Some((w, set));
            }
        }
    }
    let (w, set) = best.expect("V dominates itself");
    Ok((bits(set), w))
}
