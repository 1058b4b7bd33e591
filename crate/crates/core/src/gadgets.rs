//! Constructions that tie the problems together; used as test vectors.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::ordering::is_chordal;
use crate::recognition::is_alpha_acyclic;
use crate::{Error, Result};

/// `G` plus a new vertex `n` adjacent to every vertex. The result is dually
/// chordal (the new vertex is a maximum neighbor of everything).
pub fn universal_vertex_gadget(g: &Graph) -> Graph {
    let u = g.n();
    Graph::from_edges(u + 1, g.edges().chain((0..u).map(|v| (v, u)))).expect("valid edges")
}

/// The split graph `F` whose square has independence number `α(G) + 1`.
///
/// Vertices: `0..n` are the vertices of `G`, `n + i` is the `i`-th edge of
/// `G` in [`Graph::edges`] order, then `f = n + m` and `g = n + m + 1`. The
/// edge nodes and `f` form a clique, `f` is joined to `g`, and every edge
/// node is joined to its two endpoints.
pub fn split_square_gadget(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    let (n, m) = (g.n(), g.m());
    let f = n + m;
    let mut edges = Vec::new();
    let edge_nodes: Vec<usize> = (n..n + m).chain(std::iter::once(f)).collect();
    for (i, &a) in edge_nodes.iter().enumerate() {
        for &b in &edge_nodes[i + 1..] {
            edges.push((a, b));
        }
    }
    edges.push((f, f + 1));
    for (i, (x, y)) in g.edges().enumerate() {
        edges.push((x, n + i));
        edges.push((y, n + i));
    }
    let out = Graph::from_edges(n + m + 2, edges)?;
    assert!(is_chordal(&out).verdict, "split graphs are chordal");
    Ok(out)
}

/// `H` plus vertices `u = n`, `v = n + 1` and hyperedges `V ∪ {u}` (index
/// `m`) and `{u, v}` (index `m + 1`). The result is α-acyclic and has an
/// exact cover iff `H` does.
pub fn xc_gadget(h: &Hypergraph) -> Hypergraph {
    let (n, m) = (h.n(), h.m());
    let mut edges = h.edges().to_vec();
    edges.push((0..=n).collect());
    edges.push(vec![n, n + 1]);
    let out = Hypergraph::new(n + 2, edges).expect("valid hyperedges");
    debug_assert_eq!(out.m(), m + 2);
    assert!(
        is_alpha_acyclic(&out).verdict,
        "gadget must be alpha-acyclic"
    );
    out
}
