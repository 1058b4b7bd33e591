//! Hypergraphs and the operators relating them to graphs: dual, 2-section,
//! line graph, closed neighborhood hypergraph and clique hypergraph.

use crate::graph::{Graph, LabeledLineGraph};
use crate::ordering;
use crate::{Error, Result};

/// A hypergraph on vertices `0..n` with an ordered multiset of hyperedges.
///
/// Every hyperedge is a nonempty sorted vertex set. Duplicate hyperedges are
/// kept; a hyperedge's position is its identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each hyperedge and dropping repeated
    /// vertices inside it.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for (i, e) in edges.iter_mut().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyHyperedge(i));
            }
            e.sort_unstable();
            e.dedup();
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// The hypergraph whose hyperedges are the edges of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        Hypergraph {
            n: g.n(),
            edges: g.edges().map(|(u, v)| vec![u, v]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn check_edge(&self, i: usize) -> Result<()> {
        if i < self.m() {
            Ok(())
        } else {
            Err(Error::HyperedgeOutOfRange {
                index: i,
                m: self.m(),
            })
        }
    }

    /// `E_v` for every vertex: the sorted indices of hyperedges containing `v`.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Vertices contained in no hyperedge.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut covered = vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                covered[v] = true;
            }
        }
        (0..self.n).filter(|&v| !covered[v]).collect()
    }

    /// Same vertex set, hyperedges `keep` in the given order.
    pub(crate) fn with_edges(&self, edges: Vec<Vec<usize>>) -> Self {
        Hypergraph { n: self.n, edges }
    }
}

/// The dual `H*`: vertex `i` of the dual is hyperedge `i` of `H`, and hyperedge
/// `v` of the dual is `E_v`.
///
/// Undefined when some vertex lies in no hyperedge, since its dual hyperedge
/// would be empty.
pub fn dual(h: &Hypergraph) -> Result<Hypergraph> {
    if let Some(&v) = h.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(Hypergraph {
        n: h.m(),
        edges: h.incidence(),
    })
}

/// `2sec(H)`: two vertices are adjacent iff some hyperedge contains both.
pub fn two_section(h: &Hypergraph) -> Graph {
    let mut adj = vec![Vec::new(); h.n()];
    for e in h.edges() {
        for (a, &u) in e.iter().enumerate() {
            for &v in &e[a + 1..] {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    Graph::from_unsorted_adjacency(adj)
}

/// `L(H)`: one vertex per hyperedge, adjacent iff the hyperedges intersect.
/// Labels are hyperedge indices (the identity map).
pub fn hyper_line_graph(h: &Hypergraph) -> LabeledLineGraph<usize> {
    let m = h.m();
    let inc = h.incidence();
    let mut stamp = vec![usize::MAX; m];
    let mut adj = vec![Vec::new(); m];
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); m];
    // Gather, for each hyperedge, all hyperedges sharing one of its vertices.
    for (i, e) in h.edges().iter().enumerate() {
        stamp[i] = i;
        for &v in e {
            for &j in &inc[v] {
                if stamp[j] != i {
                    stamp[j] = i;
                    touching[i].push(j);
                }
            }
        }
    }
    for (i, t) in touching.into_iter().enumerate() {
        let mut t = t;
        t.sort_unstable();
        adj[i] = t;
    }
    LabeledLineGraph {
        graph: Graph::from_sorted_adjacency(adj),
        labels: (0..m).collect(),
    }
}

/// `N(G)`: hyperedge `v` is `N[v]`.
pub fn closed_neighborhood_hypergraph(g: &Graph) -> Hypergraph {
    Hypergraph {
        n: g.n(),
        edges: g.vertices().map(|v| g.closed_neighborhood(v)).collect(),
    }
}

/// `C(G)` for a chordal graph: its inclusion-maximal cliques, each listed once.
///
/// Along a perfect elimination ordering every maximal clique is `{v} ∪ later(v)`
/// for some `v`; such a candidate is dominated exactly when some vertex `u`
/// whose first later neighbor is `v` has `|later(u)| = |later(v)| + 1`.
pub fn clique_hypergraph(g: &Graph) -> Result<Hypergraph> {
    let report = ordering::is_chordal(g);
    let peo = match report.witness {
        crate::recognition::Witness::Ordering(peo) => peo,
        _ => return Err(Error::NotChordal),
    };
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let later: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect()
        })
        .collect();
    let mut dominated = vec![false; n];
    for u in 0..n {
        if let Some(&p) = later[u].iter().min_by_key(|&&w| pos[w]) {
            if later[u].len() == later[p].len() + 1 {
                dominated[p] = true;
            }
        }
    }
    let mut edges: Vec<Vec<usize>> = peo
        .iter()
        .filter(|&&v| !dominated[v])
        .map(|&v| {
            let mut c = later[v].clone();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    edges.sort();
    Ok(Hypergraph { n, edges })
}
