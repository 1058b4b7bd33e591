//! Class recognition with certificates.
//!
//! Every recognizer returns a [`ClassReport`] carrying evidence either way, and
//! each kind of evidence has a verifier that checks it against the input
//! without trusting the recognizer.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::hypergraph::{dual, hyper_line_graph, two_section, Hypergraph};
use crate::ordering::{self, MnoResult};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Positive evidence that needs no certificate (e.g. the Helly property).
    None,
    /// A perfect elimination ordering.
    Ordering(Vec<usize>),
    /// A maximum neighborhood ordering.
    Mno(MnoResult),
    JoinTree(JoinTree),
    /// A tree on the vertex set in which every hyperedge induces a subtree.
    UnderlyingTree(Vec<(usize, usize)>),
    /// A chordless cycle of length at least 4, as a vertex sequence.
    Hole(Vec<usize>),
    /// A chordless cycle in the line graph of a hypergraph, as hyperedge indices.
    LineGraphHole(Vec<usize>),
    /// Vertices `a, b, c` such that the hyperedges containing at least two of
    /// them have empty common intersection.
    HellyViolation([usize; 3]),
    /// Hyperedges `e, f, g` such that `(e∩f) ∪ (f∩g) ∪ (e∩g)` lies in no
    /// hyperedge although it is a clique of the 2-section.
    NonConformalTriple([usize; 3]),
    /// What is left after GYO reduction; nonempty means not alpha-acyclic.
    GyoResidue(Hypergraph),
    /// Vertices inducing a subgraph in which no vertex has a maximum neighbor.
    MnoObstruction(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub verdict: bool,
    pub witness: Witness,
}

impl ClassReport {
    pub fn yes(witness: Witness) -> Self {
        ClassReport {
            verdict: true,
            witness,
        }
    }

    pub fn no(witness: Witness) -> Self {
        ClassReport {
            verdict: false,
            witness,
        }
    }
}

/// A join tree: a tree whose nodes are the hyperedge indices `0..nodes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinTree {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

/// True iff `edges` form a spanning tree on `0..nodes`.
fn is_spanning_tree(nodes: usize, edges: &[(usize, usize)]) -> bool {
    if nodes == 0 {
        return edges.is_empty();
    }
    if edges.len() != nodes - 1 {
        return false;
    }
    let mut dsu = Dsu::new(nodes);
    edges
        .iter()
        .all(|&(a, b)| a < nodes && b < nodes && dsu.union(a, b))
}

/// Helly test by vertex triples: `H` is Helly iff for every three vertices the
/// hyperedges containing at least two of them share a vertex. Only triples
/// that are triangles of the 2-section can fail, so only those are examined.
pub fn is_helly(h: &Hypergraph) -> ClassReport {
    let inc = h.incidence();
    let sec = two_section(h);
    let mut stamp = vec![usize::MAX; h.n()];
    let mut count = vec![0usize; h.n()];
    let mut family = Vec::new();
    let mut round = 0usize;
    for a in sec.vertices() {
        let na = sec.neighbors(a);
        let above_a = na.partition_point(|&x| x <= a);
        for (i, &b) in na[above_a..].iter().enumerate() {
            for &c in &na[above_a + i + 1..] {
                if !sec.has_edge(b, c) {
                    continue;
                }
                family.clear();
                for (x, y) in [(a, b), (b, c), (a, c)] {
                    family.extend(sorted_intersection(&inc[x], &inc[y]));
                }
                family.sort_unstable();
                family.dedup();
                // Count, for each vertex, how many family members contain it.
                round += 1;
                let mut common = false;
                for &e in &family {
                    for &v in h.edge(e) {
                        if stamp[v] != round {
                            stamp[v] = round;
                            count[v] = 0;
                        }
                        count[v] += 1;
                        if count[v] == family.len() {
                            common = true;
                        }
                    }
                }
                if !common {
                    return ClassReport::no(Witness::HellyViolation([a, b, c]));
                }
            }
        }
    }
    ClassReport::yes(Witness::None)
}

fn sorted_intersection<'a>(x: &'a [usize], y: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
    let mut j = 0;
    x.iter().copied().filter(move |&e| {
        while j < y.len() && y[j] < e {
            j += 1;
        }
        j < y.len() && y[j] == e
    })
}

/// True iff the hyperedges containing at least two of `triple` have an empty
/// common intersection (a refutation of the Helly property).
pub fn verify_helly_violation(h: &Hypergraph, triple: [usize; 3]) -> bool {
    let [a, b, c] = triple;
    if triple.iter().any(|&v| v >= h.n()) || a == b || b == c || a == c {
        return false;
    }
    let family: Vec<&Vec<usize>> = h
        .edges()
        .iter()
        .filter(|e| triple.iter().filter(|v| e.binary_search(v).is_ok()).count() >= 2)
        .collect();
    // The members pairwise intersect (each pair shares one of a, b, c), so an
    // empty total intersection refutes the Helly property.
    !family.is_empty() && !(0..h.n()).any(|v| family.iter().all(|e| e.binary_search(&v).is_ok()))
}

/// Conformality via duality: `H` is conformal iff `H*` is Helly.
///
/// The negative witness is a triple of hyperedges whose pairwise intersections
/// together form a clique of the 2-section contained in no hyperedge.
pub fn is_conformal(h: &Hypergraph) -> Result<ClassReport> {
    let d = dual(h)?;
    let report = is_helly(&d);
    Ok(match report.witness {
        Witness::HellyViolation(t) => ClassReport::no(Witness::NonConformalTriple(t)),
        w => ClassReport {
            verdict: report.verdict,
            witness: w,
        },
    })
}

/// True iff `(e∩f) ∪ (f∩g) ∪ (e∩g)` is contained in no hyperedge of `h`.
pub fn verify_nonconformal_triple(h: &Hypergraph, triple: [usize; 3]) -> bool {
    if triple.iter().any(|&i| i >= h.m()) {
        return false;
    }
    let [e, f, g] = triple.map(|i| h.edge(i));
    let mut clique: Vec<usize> = sorted_intersection(e, f)
        .chain(sorted_intersection(f, g))
        .chain(sorted_intersection(e, g))
        .collect();
    clique.sort_unstable();
    clique.dedup();
    !h.edges()
        .iter()
        .any(|x| clique.iter().all(|v| x.binary_search(v).is_ok()))
}

/// GYO reduction: repeatedly drop vertices that occur in exactly one
/// hyperedge and hyperedges contained in another (or empty). Returns the
/// nonempty hyperedges that survive.
pub fn gyo_reduce(h: &Hypergraph) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
    loop {
        let mut changed = false;
        let mut occurrences = vec![0usize; h.n()];
        for e in &edges {
            for &v in e {
                occurrences[v] += 1;
            }
        }
        for e in edges.iter_mut() {
            let before = e.len();
            e.retain(|&v| occurrences[v] > 1);
            changed |= e.len() != before;
        }
        let mut i = 0;
        while i < edges.len() {
            let contained = edges[i].is_empty()
                || edges
                    .iter()
                    .enumerate()
                    .any(|(j, f)| j != i && edges[i].iter().all(|v| f.binary_search(v).is_ok()));
            if contained {
                edges.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    h.with_edges(edges)
}

/// Alpha-acyclicity, decided twice: by conformality plus a chordal 2-section,
/// and by GYO reduction. The two must agree.
///
/// Isolated vertices get their own singleton hyperedge for the conformality
/// test; they do not affect either answer.
pub fn is_alpha_acyclic(h: &Hypergraph) -> ClassReport {
    let mut padded = h.edges().to_vec();
    padded.extend(h.isolated_vertices().into_iter().map(|v| vec![v]));
    let padded = h.with_edges(padded);
    let conformal = is_conformal(&padded)
        .expect("padding removes isolated vertices")
        .verdict;
    let by_duality = conformal && ordering::is_chordal(&two_section(h)).verdict;

    let residue = gyo_reduce(h);
    let by_gyo = residue.m() == 0;
    assert_eq!(
        by_duality, by_gyo,
        "conformal+chordal and GYO disagree on alpha-acyclicity"
    );
    if by_gyo {
        let tree = join_tree(h).expect("GYO-reducible hypergraphs have join trees");
        ClassReport::yes(Witness::JoinTree(tree))
    } else {
        ClassReport::no(Witness::GyoResidue(residue))
    }
}

/// True iff `residue` is nonempty and admits no further GYO step.
pub fn verify_gyo_residue(residue: &Hypergraph) -> bool {
    residue.m() > 0 && gyo_reduce(residue) == *residue
}

/// A join tree built as a maximum-weight spanning tree of the line graph with
/// weights `|e ∩ f|`; components of the line graph are chained together.
/// The running-intersection property is then verified, and failure means the
/// hypergraph is not alpha-acyclic.
pub fn join_tree(h: &Hypergraph) -> Result<JoinTree> {
    let m = h.m();
    let mut shared: HashMap<(usize, usize), usize> = HashMap::new();
    for list in h.incidence() {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                *shared.entry((i, j)).or_default() += 1;
            }
        }
    }
    let mut candidates: Vec<((usize, usize), usize)> = shared.into_iter().collect();
    candidates.sort_unstable_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut dsu = Dsu::new(m);
    let mut edges = Vec::with_capacity(m.saturating_sub(1));
    for ((i, j), _) in candidates {
        if dsu.union(i, j) {
            edges.push((i, j));
        }
    }
    for i in 1..m {
        if dsu.union(0, i) {
            edges.push((0, i));
        }
    }
    let tree = JoinTree { nodes: m, edges };
    if verify_join_tree(h, &tree) {
        Ok(tree)
    } else {
        Err(Error::NotAlphaAcyclic)
    }
}

/// True iff `tree` is a spanning tree on the hyperedges and, for every
/// vertex, the hyperedges containing it induce a connected subtree.
pub fn verify_join_tree(h: &Hypergraph, tree: &JoinTree) -> bool {
    if tree.nodes != h.m() || !is_spanning_tree(tree.nodes, &tree.edges) {
        return false;
    }
    // A vertex's hyperedges induce a subforest; it is connected iff it has
    // exactly (count - 1) tree edges.
    let mut nodes_with = vec![0usize; h.n()];
    for e in h.edges() {
        for &v in e {
            nodes_with[v] += 1;
        }
    }
    let mut tree_edges_with = vec![0usize; h.n()];
    for &(a, b) in &tree.edges {
        for v in sorted_intersection(h.edge(a), h.edge(b)) {
            tree_edges_with[v] += 1;
        }
    }
    (0..h.n()).all(|v| nodes_with[v] == 0 || tree_edges_with[v] + 1 == nodes_with[v])
}

/// Hypertree test: Helly and a chordal line graph. The positive witness is an
/// underlying tree on the vertices, obtained as a join tree of the dual.
pub fn is_hypertree(h: &Hypergraph) -> ClassReport {
    let helly = is_helly(h);
    if !helly.verdict {
        return helly;
    }
    let line = hyper_line_graph(h);
    let chordal = ordering::is_chordal(&line.graph);
    if let Witness::Hole(hole) = chordal.witness {
        return ClassReport::no(Witness::LineGraphHole(hole));
    }
    let tree = underlying_tree(h).expect("hypertrees have alpha-acyclic duals");
    debug_assert!(verify_underlying_tree(h, &tree));
    ClassReport::yes(Witness::UnderlyingTree(tree))
}

fn underlying_tree(h: &Hypergraph) -> Result<Vec<(usize, usize)>> {
    let isolated = h.isolated_vertices();
    let mut is_isolated = vec![false; h.n()];
    for &v in &isolated {
        is_isolated[v] = true;
    }
    let covered: Vec<usize> = (0..h.n()).filter(|&v| !is_isolated[v]).collect();
    let mut index = vec![usize::MAX; h.n()];
    for (i, &v) in covered.iter().enumerate() {
        index[v] = i;
    }
    let restricted = Hypergraph::new(
        covered.len(),
        h.edges()
            .iter()
            .map(|e| e.iter().map(|&v| index[v]).collect())
            .collect(),
    )?;
    let jt = join_tree(&dual(&restricted)?)?;
    let mut edges: Vec<(usize, usize)> = jt
        .edges
        .iter()
        .map(|&(a, b)| (covered[a], covered[b]))
        .collect();
    // Isolated vertices hang off any vertex; they lie in no hyperedge.
    let mut anchor = covered.first().copied();
    for v in isolated {
        if let Some(a) = anchor {
            edges.push((a, v));
        }
        anchor = anchor.or(Some(v));
    }
    Ok(edges)
}

/// True iff `tree` spans the vertex set and every hyperedge induces a
/// connected subgraph of it.
pub fn verify_underlying_tree(h: &Hypergraph, tree: &[(usize, usize)]) -> bool {
    if !is_spanning_tree(h.n(), tree) {
        return false;
    }
    let t = match Graph::from_edges(h.n(), tree.iter().copied()) {
        Ok(t) => t,
        Err(_) => return false,
    };
    h.edges().iter().all(|e| {
        let sub = t.induced_subgraph(e);
        sub.components().len() == 1
    })
}

/// Union-find with path halving.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
