//! Efficient edge domination (dominating induced matchings) and maximum
//! induced matchings.

use crate::ed::{solve_ed, EdCertificate, Method, MethodChoice, Status, BRUTE_LIMIT};
use crate::graph::{line_graph, square, Graph, WeightMap};
use crate::mwis::mwis_chordal_unchecked;
use crate::oracles::{self, Found, OracleGate};
use crate::ordering::is_chordal;
use crate::recognition::Witness;
use crate::{Error, Result};

/// Why a graph cannot have an efficient edge dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Four pairwise adjacent vertices.
    K4([usize; 4]),
    /// `hub` adjacent to every vertex of the induced 4-cycle `cycle`.
    W4 { hub: usize, cycle: [usize; 4] },
    /// `hub` adjacent to every vertex of the induced path `path`.
    Gem { hub: usize, path: [usize; 4] },
    /// Two edges that every solution must contain but that are not at
    /// distance 2 (they share an endpoint or are joined by an edge).
    ForcedConflict {
        first: (usize, usize),
        second: (usize, usize),
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Screen {
    /// No obstruction; these edges (middle edges of induced diamonds) belong
    /// to every solution.
    Forced(Vec<(usize, usize)>),
    Infeasible(Obstruction),
}

/// Rejects graphs containing an induced K4, W4 or gem and collects the edges
/// every solution must contain.
///
/// A solution contains exactly one edge of every triangle. Looking at each
/// vertex `h`, that rules out anything but a disjoint union of stars in
/// `G[N(h)]`; the first component that is not a star yields the obstruction.
/// An edge with two common neighbors is the middle edge of a diamond and is
/// forced; forced edges must then form an induced matching.
pub fn eed_structural_screen(g: &Graph) -> Screen {
    let n = g.n();
    let mut local = vec![usize::MAX; n];
    for h in g.vertices() {
        let nh = g.neighbors(h);
        for (i, &u) in nh.iter().enumerate() {
            local[u] = i;
        }
        let sub: Vec<Vec<usize>> = nh
            .iter()
            .map(|&u| {
                g.neighbors(u)
                    .iter()
                    .filter(|&&w| g.has_edge(h, w))
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        for &u in nh {
            local[u] = usize::MAX;
        }
        if let Some(ob) = non_star_pattern(h, nh, &sub) {
            return Screen::Infeasible(ob);
        }
    }

    let forced: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| common_neighbors(g, u, v) >= 2)
        .collect();
    let mut owner = vec![usize::MAX; n];
    for (i, &(u, v)) in forced.iter().enumerate() {
        for x in [u, v] {
            if owner[x] != usize::MAX {
                return Screen::Infeasible(Obstruction::ForcedConflict {
                    first: forced[owner[x]],
                    second: (u, v),
                });
            }
            owner[x] = i;
        }
    }
    for (a, b) in g.edges() {
        let (i, j) = (owner[a], owner[b]);
        if i != usize::MAX && j != usize::MAX && i != j {
            return Screen::Infeasible(Obstruction::ForcedConflict {
                first: forced[i.min(j)],
                second: forced[i.max(j)],
            });
        }
    }
    Screen::Forced(forced)
}

fn common_neighbors(g: &Graph, u: usize, v: usize) -> usize {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Finds a K4, W4 or gem centred at `h` if `sub` (the graph induced by `nh`,
/// in local indices) is not a disjoint union of stars.
fn non_star_pattern(h: usize, nh: &[usize], sub: &[Vec<usize>]) -> Option<Obstruction> {
    let k = sub.len();
    let mut comp = vec![usize::MAX; k];
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        comp[start] = start;
        let mut i = 0;
        while i < members.len() {
            for &w in &sub[members[i]] {
                if comp[w] == usize::MAX {
                    comp[w] = start;
                    members.push(w);
                }
            }
            i += 1;
        }
        let edges2: usize = members.iter().map(|&x| sub[x].len()).sum();
        let size = members.len();
        let is_star = edges2 == 2 * (size - 1) && members.iter().any(|&x| sub[x].len() == size - 1);
        if !is_star {
            let map = |l: [usize; 4]| l.map(|x| nh[x]);
            return Some(match pattern_in_component(sub, &members) {
                Pattern::Triangle([a, b, c]) => {
                    let mut q = [h, nh[a], nh[b], nh[c]];
                    q.sort_unstable();
                    Obstruction::K4(q)
                }
                Pattern::C4(c) => Obstruction::W4 {
                    hub: h,
                    cycle: map(c),
                },
                Pattern::P4(p) => Obstruction::Gem {
                    hub: h,
                    path: map(p),
                },
            });
        }
    }
    None
}

enum Pattern {
    Triangle([usize; 3]),
    C4([usize; 4]),
    P4([usize; 4]),
}

/// A connected graph that is not a star contains a triangle, an induced C4
/// or an induced P4.
fn pattern_in_component(sub: &[Vec<usize>], members: &[usize]) -> Pattern {
    let k = sub.len();
    let mut mark = vec![false; k];
    for &a in members {
        for &x in &sub[a] {
            mark[x] = true;
        }
        for &b in &sub[a] {
            if let Some(&c) = sub[b].iter().find(|&&c| c != a && mark[c]) {
                return Pattern::Triangle([a, b, c]);
            }
        }
        for &x in &sub[a] {
            mark[x] = false;
        }
    }

    // Triangle-free: a shortest cycle is induced.
    let mut best: Option<Vec<usize>> = None;
    for &root in members {
        if let Some(cyc) = shortest_cycle_through(sub, root) {
            if best.as_ref().is_none_or(|b| cyc.len() < b.len()) {
                best = Some(cyc);
            }
        }
    }
    if let Some(c) = best {
        let four = [c[0], c[1], c[2], c[3]];
        return if c.len() == 4 {
            Pattern::C4(four)
        } else {
            Pattern::P4(four)
        };
    }

    // A tree that is not a star has diameter at least 3.
    let far = |from: usize| {
        let (dist, parent) = bfs(sub, from);
        let end = *members.iter().max_by_key(|&&x| dist[x]).unwrap();
        (end, parent)
    };
    let (a, _) = far(members[0]);
    let (b, parent) = far(a);
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(parent[*path.last().unwrap()]);
    }
    Pattern::P4([path[0], path[1], path[2], path[3]])
}

fn bfs(sub: &[Vec<usize>], from: usize) -> (Vec<usize>, Vec<usize>) {
    let k = sub.len();
    let mut dist = vec![usize::MAX; k];
    let mut parent = vec![usize::MAX; k];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in &sub[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    for d in dist.iter_mut() {
        if *d == usize::MAX {
            *d = 0;
        }
    }
    (dist, parent)
}

/// Shortest closed walk `root ~ x, y ~ root` closed by a non-tree edge `xy`
/// of the BFS tree from `root`. Minimised over all roots this is a shortest
/// cycle, and its two tree paths are then disjoint.
fn shortest_cycle_through(sub: &[Vec<usize>], root: usize) -> Option<Vec<usize>> {
    let (dist, parent) = bfs(sub, root);
    let reached = |v: usize| v == root || parent[v] != usize::MAX;
    let mut best: Option<(usize, usize, usize)> = None;
    for x in 0..sub.len() {
        if !reached(x) {
            continue;
        }
        for &y in &sub[x] {
            if parent[x] != y && parent[y] != x {
                let len = dist[x] + dist[y] + 1;
                if best.is_none_or(|(l, _, _)| len < l) {
                    best = Some((len, x, y));
                }
            }
        }
    }
    let (_, x, y) = best?;
    let climb = |mut v: usize| {
        let mut p = vec![v];
        while v != root {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let mut cycle = climb(x);
    cycle.reverse();
    let mut back = climb(y);
    back.pop();
    cycle.extend(back);
    Some(cycle)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EedCertificate {
    pub status: Status,
    /// The edges of the solution, `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Edges every solution must contain.
    pub forced: Vec<(usize, usize)>,
    pub method: Method,
    /// `Σ |N[e]|` in the line graph over the best candidate found.
    pub weight_sum: u64,
    /// `|E|`.
    pub target: u64,
}

/// Solves EED by screening for forbidden configurations and then solving ED
/// on the line graph.
///
/// `Brute` searches edge subsets directly. Other choices are applied to the
/// line graph.
pub fn solve_eed(g: &Graph, choice: MethodChoice) -> Result<EedCertificate> {
    let target = g.m() as u64;
    if choice == MethodChoice::Brute {
        let gate = OracleGate::new(BRUTE_LIMIT, BRUTE_LIMIT);
        let (status, edges) = match oracles::brute_eed(g, &gate) {
            Ok(Found::Solution(edges)) => (Status::Solution, edges),
            Ok(Found::Infeasible) => (Status::Infeasible, Vec::new()),
            Err(_) => (Status::ResourceLimited, Vec::new()),
        };
        let weight_sum = if status == Status::Solution {
            target
        } else {
            0
        };
        return finish(
            g,
            EedCertificate {
                status,
                edges,
                forced: Vec::new(),
                method: Method::Brute,
                weight_sum,
                target,
            },
        );
    }

    let forced = match eed_structural_screen(g) {
        Screen::Forced(f) => f,
        Screen::Infeasible(_) => {
            return Ok(EedCertificate {
                status: Status::Infeasible,
                edges: Vec::new(),
                forced: Vec::new(),
                method: Method::StructuralScreen,
                weight_sum: 0,
                target,
            })
        }
    };
    let lg = line_graph(g);
    let EdCertificate {
        status,
        set,
        weight_sum,
        method,
        ..
    } = solve_ed(&lg.graph, choice)?;
    let mut edges: Vec<(usize, usize)> = set.into_iter().map(|i| lg.labels[i]).collect();
    edges.sort_unstable();
    if status == Status::Solution {
        assert!(
            forced.iter().all(|e| edges.binary_search(e).is_ok()),
            "solution misses a forced edge"
        );
    }
    finish(
        g,
        EedCertificate {
            status,
            edges,
            forced,
            method,
            weight_sum,
            target,
        },
    )
}

fn finish(g: &Graph, cert: EedCertificate) -> Result<EedCertificate> {
    if cert.status == Status::Solution {
        assert!(
            verify_eed(g, &cert.edges)?,
            "solver returned an invalid edge set"
        );
    }
    Ok(cert)
}

fn normalized(g: &Graph, set: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(set.len());
    for &(u, v) in set {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        out.push((u.min(v), u.max(v)));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// True iff every edge of `g` shares an endpoint with exactly one member of
/// `set` (members count themselves).
pub fn verify_eed(g: &Graph, set: &[(usize, usize)]) -> Result<bool> {
    let set = normalized(g, set)?;
    let mut incident = vec![0u32; g.n()];
    for &(u, v) in &set {
        incident[u] += 1;
        incident[v] += 1;
    }
    Ok(g.edges().all(|(u, v)| {
        let own = set.binary_search(&(u, v)).is_ok() as u32;
        incident[u] + incident[v] - own == 1
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MimCertificate<T> {
    pub status: Status,
    pub matching: Vec<T>,
    pub method: Method,
}

impl<T> MimCertificate<T> {
    pub fn size(&self) -> usize {
        self.matching.len()
    }
}

/// Maximum independent set of `sq` with unit weights: the two-pass algorithm
/// if `sq` is chordal (unless `Brute` was requested), else exhaustive search.
pub(crate) fn max_independent_in_square(
    sq: &Graph,
    choice: MethodChoice,
    fast: Method,
) -> Result<(Status, Vec<usize>, Method)> {
    if choice == MethodChoice::Dc {
        return Err(Error::MethodInapplicable {
            method: "dc",
            reason: "induced matching has no dually chordal path".into(),
        });
    }
    if choice != MethodChoice::Brute {
        if let Witness::Ordering(peo) = is_chordal(sq).witness {
            let c = mwis_chordal_unchecked(sq, &WeightMap::uniform(sq.n(), 1), &peo);
            return Ok((Status::Solution, c.set, fast));
        }
        if choice == MethodChoice::ChordalSquare {
            return Err(Error::MethodInapplicable {
                method: "chordal-square",
                reason: "square of the line graph is not chordal".into(),
            });
        }
    }
    let gate = OracleGate::new(BRUTE_LIMIT, BRUTE_LIMIT);
    Ok(
        match oracles::brute_mwis(sq, &WeightMap::uniform(sq.n(), 1), &gate) {
            Ok((set, _)) => (Status::Solution, set, Method::Brute),
            Err(_) => (Status::ResourceLimited, Vec::new(), Method::Brute),
        },
    )
}

/// Maximum induced matching, as a maximum independent set of `L(G)²`.
pub fn solve_mim(g: &Graph, choice: MethodChoice) -> Result<MimCertificate<(usize, usize)>> {
    let lg = line_graph(g);
    let sq = square(&lg.graph);
    let (status, set, method) = max_independent_in_square(&sq, choice, Method::ChordalSquare)?;
    let mut matching: Vec<(usize, usize)> = set.into_iter().map(|i| lg.labels[i]).collect();
    matching.sort_unstable();
    if status == Status::Solution {
        assert!(
            verify_mim(g, &matching)?,
            "solver returned a non-induced matching"
        );
    }
    Ok(MimCertificate {
        status,
        matching,
        method,
    })
}

/// True iff `set` is an induced matching: no shared endpoints and no edge of
/// `g` joining two members. Maximality is not checked.
pub fn verify_mim(g: &Graph, set: &[(usize, usize)]) -> Result<bool> {
    let set = normalized(g, set)?;
    let mut owner = vec![usize::MAX; g.n()];
    for (i, &(u, v)) in set.iter().enumerate() {
        for x in [u, v] {
            if owner[x] != usize::MAX {
                return Ok(false);
            }
            owner[x] = i;
        }
    }
    Ok(g.edges()
        .all(|(a, b)| owner[a] == usize::MAX || owner[b] == usize::MAX || owner[a] == owner[b]))
}
