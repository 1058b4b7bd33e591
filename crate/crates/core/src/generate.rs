//! Seeded random instances for every class the solvers dispatch on.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64`, and ranges
//! are reduced by rejection sampling on 64-bit words, so a seed produces the
//! same instance on every platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::hypergraph::{dual, hyper_line_graph, two_section, Hypergraph};
use crate::ordering::{compute_mno, is_chordal};
use crate::recognition::{is_alpha_acyclic, is_hypertree};

#[derive(Debug, Clone)]
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        let n = n as u64;
        let zone = u64::MAX - (u64::MAX - n + 1) % n;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return (x % n) as usize;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    /// Uniform in `[0, 1)` with 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

fn tree_adjacency(n: usize, rng: &mut SeededRng) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut label);
    let mut adj = vec![Vec::new(); n];
    for i in 1..n {
        let (a, b) = (label[i], label[rng.below(i)]);
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// A random labelled tree on `n` vertices (random recursive attachment).
pub fn random_tree(n: usize, rng: &mut SeededRng) -> Graph {
    Graph::from_unsorted_adjacency(tree_adjacency(n, rng))
}

/// Vertex set of a connected subtree with `size` vertices, grown from a
/// random root by repeatedly adding a random frontier vertex.
fn random_subtree(adj: &[Vec<usize>], size: usize, rng: &mut SeededRng) -> Vec<usize> {
    let root = rng.below(adj.len());
    let mut inside = vec![false; adj.len()];
    inside[root] = true;
    let mut set = vec![root];
    let mut frontier: Vec<usize> = adj[root].clone();
    while set.len() < size && !frontier.is_empty() {
        let i = rng.below(frontier.len());
        let v = frontier.swap_remove(i);
        if inside[v] {
            continue;
        }
        inside[v] = true;
        set.push(v);
        frontier.extend(adj[v].iter().copied().filter(|&w| !inside[w]));
    }
    set.sort_unstable();
    set
}

struct TreeHypergraph {
    tree: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
}

fn tree_hypergraph(
    n: usize,
    m: usize,
    max_edge_size: usize,
    rng: &mut SeededRng,
) -> TreeHypergraph {
    assert!(n >= 1 && max_edge_size >= 1);
    let tree = tree_adjacency(n, rng);
    let top = max_edge_size.min(n);
    let edges = (0..m)
        .map(|_| {
            let size = rng.between(1, top);
            random_subtree(&tree, size, rng)
        })
        .collect();
    TreeHypergraph { tree, edges }
}

fn default_edge_size(n: usize) -> usize {
    (n / 2).clamp(2, 6)
}

/// A random hypertree: `m` random subtrees of a random tree on `n` vertices,
/// each of at most `max(2, min(6, n/2))` vertices.
pub fn gen_hypertree(n: usize, m: usize, seed: u64) -> Hypergraph {
    gen_hypertree_with(n, m, default_edge_size(n), seed)
}

/// [`gen_hypertree`] with an explicit bound on hyperedge size.
pub fn gen_hypertree_with(n: usize, m: usize, max_edge_size: usize, seed: u64) -> Hypergraph {
    let mut rng = SeededRng::new(seed);
    let th = tree_hypergraph(n, m, max_edge_size, &mut rng);
    let h = Hypergraph::new(n, th.edges).expect("subtrees are valid hyperedges");
    debug_assert!(is_hypertree(&h).verdict);
    h
}

/// A connected dually chordal graph: the 2-section of a random hypertree
/// whose tree edges are added as extra hyperedges.
pub fn gen_dually_chordal(n: usize, m: usize, seed: u64) -> Graph {
    gen_dually_chordal_with(n, m, default_edge_size(n), seed)
}

/// [`gen_dually_chordal`] with an explicit bound on hyperedge size.
pub fn gen_dually_chordal_with(n: usize, m: usize, max_edge_size: usize, seed: u64) -> Graph {
    let mut rng = SeededRng::new(seed);
    let th = tree_hypergraph(n, m, max_edge_size, &mut rng);
    let mut edges = th.edges;
    for (u, nb) in th.tree.iter().enumerate() {
        edges.extend(nb.iter().filter(|&&v| u < v).map(|&v| vec![u, v]));
    }
    let g = two_section(&Hypergraph::new(n, edges).expect("valid hyperedges"));
    debug_assert!(compute_mno(&g).is_ok());
    g
}

/// A random chordal graph on `n` vertices: the intersection graph of `n`
/// random subtrees of a random tree with `n` nodes.
pub fn gen_chordal(n: usize, seed: u64) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let mut rng = SeededRng::new(seed);
    let max_size = rng.between(1, n.div_ceil(2));
    let th = tree_hypergraph(n, n, max_size, &mut rng);
    let g = hyper_line_graph(&Hypergraph::new(n, th.edges).expect("valid hyperedges")).graph;
    debug_assert!(is_chordal(&g).verdict);
    g
}

/// A random α-acyclic hypergraph with `n` vertices and `m` hyperedges: the
/// dual of a random hypertree on `m` vertices with `n` hyperedges, grown so
/// that every tree node is covered.
pub fn gen_alpha_acyclic(n: usize, m: usize, seed: u64) -> Hypergraph {
    assert!(
        m >= 1 && n >= 1,
        "need at least one vertex and one hyperedge"
    );
    let mut rng = SeededRng::new(seed);
    let th = tree_hypergraph(m, n, default_edge_size(m), &mut rng);
    let mut edges = th.edges;
    // Attach each uncovered tree node to a hyperedge holding one of its tree
    // neighbours; the hyperedge stays a subtree.
    let mut holder: Vec<Option<usize>> = vec![None; m];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            holder[v].get_or_insert(i);
        }
    }
    let mut queue: std::collections::VecDeque<usize> =
        (0..m).filter(|&v| holder[v].is_some()).collect();
    while let Some(v) = queue.pop_front() {
        for &w in &th.tree[v] {
            if holder[w].is_none() {
                let i = holder[v].unwrap();
                edges[i].push(w);
                holder[w] = Some(i);
                queue.push_back(w);
            }
        }
    }
    let tree_side = Hypergraph::new(m, edges).expect("valid hyperedges");
    let h = dual(&tree_side).expect("every node covered");
    debug_assert!(is_alpha_acyclic(&h).verdict);
    h
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, rng: &mut SeededRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// `m` hyperedges, each a uniformly random set of `1..=max_edge_size`
/// distinct vertices.
pub fn gen_random_hypergraph(
    n: usize,
    m: usize,
    max_edge_size: usize,
    rng: &mut SeededRng,
) -> Hypergraph {
    assert!(n >= 1 || m == 0);
    let top = max_edge_size.clamp(1, n.max(1));
    let edges = (0..m)
        .map(|_| {
            let k = rng.between(1, top);
            let mut pool: Vec<usize> = (0..n).collect();
            rng.shuffle(&mut pool);
            pool.truncate(k);
            pool
        })
        .collect();
    Hypergraph::new(n, edges).expect("valid hyperedges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::is_dually_chordal;

    #[test]
    fn rng_is_deterministic() {
        let a: Vec<usize> = {
            let mut r = SeededRng::new(9);
            (0..20).map(|_| r.below(1000)).collect()
        };
        let b: Vec<usize> = {
            let mut r = SeededRng::new(9);
            (0..20).map(|_| r.below(1000)).collect()
        };
        assert_eq!(a, b);
        let mut r = SeededRng::new(1);
        assert!((0..1000).all(|_| r.below(3) < 3));
        assert!((0..1000).all(|_| (0.0..1.0).contains(&r.unit())));
    }

    #[test]
    fn hypertree_golden() {
        let h = gen_hypertree(5, 3, 42);
        assert_eq!(h, gen_hypertree(5, 3, 42));
        assert_eq!(h.n(), 5);
        assert_eq!(h.m(), 3);
        assert!(is_hypertree(&h).verdict);
        assert_eq!(h.edges(), &[vec![4], vec![3], vec![0, 1]]);
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(gen_hypertree(1, 1, 3).edges(), &[vec![0]]);
        assert_eq!(gen_dually_chordal(1, 1, 3), Graph::empty(1));
        assert_eq!(gen_chordal(1, 7), Graph::empty(1));
        assert_eq!(gen_alpha_acyclic(1, 1, 5).edges(), &[vec![0]]);
    }

    #[test]
    fn generators_stay_in_class() {
        for seed in 0..300u64 {
            let n = 1 + (seed as usize % 13);
            let m = 1 + (seed as usize * 7 % 11);
            assert!(is_hypertree(&gen_hypertree(n, m, seed)).verdict);
            let g = gen_dually_chordal(n, m, seed);
            assert!(is_dually_chordal(&g).verdict);
            assert_eq!(g.components().len(), 1);
            assert!(is_chordal(&gen_chordal(n, seed)).verdict);
            let a = gen_alpha_acyclic(n, m, seed);
            assert_eq!((a.n(), a.m()), (n, m));
            assert!(is_alpha_acyclic(&a).verdict);
        }
    }
}
