//! Simple undirected graphs and the derived graphs the solvers reduce through.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and duplicate-free; there are no self-loops.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// A graph together with the number of duplicate edges that were collapsed
/// while normalizing the input.
#[derive(Debug, Clone)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub collapsed_duplicates: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, collapsing duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        build_graph(n, edges).map(|b| b.graph)
    }

    /// Wraps adjacency lists that are already sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, nb)| nb.windows(2).all(|w| w[0] < w[1]) && !nb.contains(&v)));
        Graph { adj, m }
    }

    /// Sorts and deduplicates raw adjacency lists.
    pub(crate) fn from_unsorted_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for nb in &mut adj {
            nb.sort_unstable();
            nb.dedup();
        }
        Self::from_sorted_adjacency(adj)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// `N[v]` as a sorted vector.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let nb = &self.adj[v];
        let pos = nb.partition_point(|&x| x < v);
        let mut out = Vec::with_capacity(nb.len() + 1);
        out.extend_from_slice(&nb[..pos]);
        out.push(v);
        out.extend_from_slice(&nb[pos..]);
        out
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            let start = nb.partition_point(|&x| x <= u);
            nb[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `vertices`, relabelled to `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Graph::from_unsorted_adjacency(adj)
    }
}

/// Builds a normalized graph from `n` and an edge list.
///
/// Duplicate edges (in either orientation) are collapsed and counted.
pub fn build_graph<I>(n: usize, edges: I) -> Result<BuiltGraph>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut adj = vec![Vec::new(); n];
    let mut raw = 0usize;
    for (u, v) in edges {
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        adj[u].push(v);
        adj[v].push(u);
        raw += 1;
    }
    let graph = Graph::from_unsorted_adjacency(adj);
    Ok(BuiltGraph {
        collapsed_duplicates: raw - graph.m(),
        graph,
    })
}

/// Vertex weights. All weights in this crate are cardinalities, so integers suffice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMap(pub Vec<u64>);

impl WeightMap {
    pub fn uniform(n: usize, w: u64) -> Self {
        WeightMap(vec![w; n])
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn weight_of(&self, set: &[usize]) -> u64 {
        set.iter().map(|&v| self.0[v]).sum()
    }
}

/// `ω(v) = |N[v]| = deg(v) + 1`.
pub fn neighborhood_weights(g: &Graph) -> WeightMap {
    WeightMap(g.vertices().map(|v| g.degree(v) as u64 + 1).collect())
}

/// The square `G²`: `uv` is an edge iff `1 <= dist(u, v) <= 2`.
///
/// Neighbor-of-neighbor merging, `O(Σ deg(v)²)`.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut stamp = vec![usize::MAX; n];
    let mut adj = Vec::with_capacity(n);
    for v in 0..n {
        stamp[v] = v;
        let mut out = Vec::new();
        for &w in g.neighbors(v) {
            if stamp[w] != v {
                stamp[w] = v;
                out.push(w);
            }
            for &x in g.neighbors(w) {
                if stamp[x] != v {
                    stamp[x] = v;
                    out.push(x);
                }
            }
        }
        out.sort_unstable();
        adj.push(out);
    }
    Graph::from_sorted_adjacency(adj)
}

/// A line graph whose vertices carry labels back to the objects they stand for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledLineGraph<L> {
    pub graph: Graph,
    pub labels: Vec<L>,
}

/// `L(G)`: one vertex per edge of `G` (in [`Graph::edges`] order), adjacent
/// iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> LabeledLineGraph<(usize, usize)> {
    let labels: Vec<(usize, usize)> = g.edges().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in labels.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut adj = vec![Vec::new(); labels.len()];
    for inc in &incident {
        for (a, &i) in inc.iter().enumerate() {
            for &j in &inc[a + 1..] {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    // Two distinct edges of a simple graph share at most one endpoint.
    for nb in &mut adj {
        nb.sort_unstable();
    }
    LabeledLineGraph {
        graph: Graph::from_sorted_adjacency(adj),
        labels,
    }
}

/// True iff no two members of `set` are adjacent.
pub fn is_independent_set(g: &Graph, set: &[usize]) -> Result<bool> {
    let mut member = vec![false; g.n()];
    for &v in set {
        g.check_vertex(v)?;
        member[v] = true;
    }
    Ok(set
        .iter()
        .all(|&v| g.neighbors(v).iter().all(|&w| !member[w])))
}
