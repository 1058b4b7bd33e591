//! Vertex orderings: maximum cardinality search, perfect elimination orderings,
//! chordality with hole certificates, and maximum neighborhood orderings.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::recognition::{ClassReport, Witness};
use crate::{Error, Result};

/// Maximum cardinality search. Returns vertices in visiting order; on a
/// chordal graph the reverse is a perfect elimination ordering.
///
/// Ties go to the smallest vertex index.
pub fn mcs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    // Lazy buckets: stale entries are skipped on pop.
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    buckets[0].extend((0..n).rev());
    let mut top = 0usize;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !visited[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    order
}

/// Result of checking an ordering for the perfect elimination property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeoResult {
    pub sigma: Vec<usize>,
    pub valid: bool,
    /// `(v, p, w)`: `p` is the earliest later neighbor of `v`, `w` another later
    /// neighbor of `v` not adjacent to `p`.
    pub violation: Option<[usize; 3]>,
}

fn positions(n: usize, sigma: &[usize]) -> Result<Vec<usize>> {
    if sigma.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in sigma.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// Checks that the later neighbors of each vertex form a clique, in `O(n + m)`.
pub fn is_peo(g: &Graph, sigma: &[usize]) -> Result<PeoResult> {
    let n = g.n();
    let pos = positions(n, sigma)?;
    // For each parent p, the (v, w) pairs that require pw ∈ E.
    let mut required: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &v in sigma {
        let parent = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .min_by_key(|&w| pos[w]);
        if let Some(p) = parent {
            for &w in g.neighbors(v) {
                if pos[w] > pos[v] && w != p {
                    required[p].push((v, w));
                }
            }
        }
    }
    let mut stamp = vec![usize::MAX; n];
    for (p, needs) in required.iter().enumerate() {
        if needs.is_empty() {
            continue;
        }
        for &x in g.neighbors(p) {
            stamp[x] = p;
        }
        if let Some(&(v, w)) = needs.iter().find(|&&(_, w)| stamp[w] != p) {
            return Ok(PeoResult {
                sigma: sigma.to_vec(),
                valid: false,
                violation: Some([v, p, w]),
            });
        }
    }
    Ok(PeoResult {
        sigma: sigma.to_vec(),
        valid: true,
        violation: None,
    })
}

/// Chordality test. Positive witness: a perfect elimination ordering.
/// Negative witness: a chordless cycle of length at least 4.
pub fn is_chordal(g: &Graph) -> ClassReport {
    let mut order = mcs(g);
    order.reverse();
    let peo = is_peo(g, &order).expect("mcs returns a permutation");
    if peo.valid {
        return ClassReport::yes(Witness::Ordering(order));
    }
    let [v, p, w] = peo.violation.expect("invalid PEO carries a violation");
    let hole = hole_through(g, v, p, w)
        .or_else(|| find_any_hole(g))
        .expect("a graph without a perfect elimination ordering has a hole");
    debug_assert!(verify_hole(g, &hole));
    ClassReport::no(Witness::Hole(hole))
}

/// Given nonadjacent neighbors `a`, `b` of `v`, looks for a shortest `a`–`b`
/// path avoiding every other vertex of `N[v]`; together with `v` it is a hole.
fn hole_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        if x != a && x != b {
            blocked[x] = true;
        }
    }
    let mut prev = vec![usize::MAX; n];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[b] == usize::MAX {
        return None;
    }
    let mut cycle = vec![b];
    let mut x = b;
    while x != a {
        x = prev[x];
        cycle.push(x);
    }
    cycle.push(v);
    Some(cycle)
}

fn find_any_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(h) = hole_through(g, v, a, b) {
                        return Some(h);
                    }
                }
            }
        }
    }
    None
}

/// True iff `cycle` is an induced cycle of length at least 4.
pub fn verify_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut on_cycle = vec![false; g.n()];
    for &v in cycle {
        if on_cycle[v] {
            return false;
        }
        on_cycle[v] = true;
    }
    (0..k).all(|i| {
        let v = cycle[i];
        g.has_edge(v, cycle[(i + 1) % k])
            && g.neighbors(v).iter().filter(|&&w| on_cycle[w]).count() == 2
    })
}

/// A maximum neighborhood ordering with its chosen maximum neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnoResult {
    /// Elimination order `v_1, ..., v_n`.
    pub sigma: Vec<usize>,
    /// `max_neighbor[v]` is the maximum neighbor of `v` in the graph induced
    /// by `v` and the vertices after it. It differs from `v` unless `v` has
    /// no neighbor there (the last vertex of each component).
    pub max_neighbor: Vec<usize>,
}

/// Greedy elimination got stuck: in the subgraph induced by `remaining`, no
/// vertex has a maximum neighbor other than itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnoObstruction {
    pub remaining: Vec<usize>,
}

/// Computes a maximum neighborhood ordering, or shows that none exists.
///
/// Vertices are eliminated greedily: any vertex that has a maximum neighbor
/// other than itself in the current graph may go next. Removing such a
/// vertex keeps a dually chordal graph dually chordal, so getting stuck
/// proves the input is not dually chordal.
///
/// Components are handled one after another in order of their smallest
/// vertex. Within a component, candidates are first tried in breadth-first
/// order from that vertex and then in the order their neighborhoods change.
///
/// In the current graph `u ∈ N(v)` is a maximum neighbor of `v` iff
/// `N[u] = N²[v]`, so only the highest-degree neighbor needs to be tried.
/// Eliminability survives removals other than of the chosen maximum neighbor,
/// and a vertex that failed can only change status when something within
/// distance 2 disappears, which is what triggers a recheck.
///
/// The returned ordering is verified against the definition before returning.
pub fn compute_mno(g: &Graph) -> std::result::Result<MnoResult, MnoObstruction> {
    let n = g.n();
    let c = Compact::new(g);
    let mut st: Vec<Slot> = (0..n)
        .map(|v| Slot {
            deg: c.neighbors(v).len() as u32,
            stamp: 0,
            alive: true,
            pending: true,
        })
        .collect();
    let mut queue: VecDeque<usize> = VecDeque::new();
    let mut clock = 0u32;

    let mut sigma = Vec::with_capacity(n);
    let mut max_neighbor = vec![usize::MAX; n];
    // Why each vertex last failed: a vertex `x` of `N²[v]` outside the
    // closed neighborhood of the best candidate, reached through `w`.
    let mut blocker: Vec<(u32, u32)> = vec![NO_BLOCKER; n];

    for range in c.component_ranges() {
        queue.extend(range);
        while let Some(v) = queue.pop_front() {
            if !st[v].alive || !st[v].pending {
                continue;
            }
            st[v].pending = false;
            if blocker[v] != NO_BLOCKER {
                let (w, x) = (blocker[v].0 as usize, blocker[v].1 as usize);
                // While the blocker stays within distance 2 it must be adjacent
                // to any maximum neighbor, and the best candidate is fixed by degree.
                if st[x].alive && st[w].alive && st[v].deg > 0 {
                    let best = highest_degree_neighbor(&c, v, &st);
                    if best != x && !c.has_edge(best, x) {
                        continue;
                    }
                }
            }
            if clock == u32::MAX {
                st.iter_mut().for_each(|s| s.stamp = 0);
                clock = 0;
            }
            clock += 1;
            let u = match find_max_neighbor(&c, v, &mut st, clock) {
                Ok(u) => u,
                Err((w, x)) => {
                    blocker[v] = (w as u32, x as u32);
                    continue;
                }
            };

            sigma.push(v);
            max_neighbor[v] = u;
            st[v].alive = false;
            for &w in c.neighbors(v) {
                let w = w as usize;
                if st[w].alive {
                    st[w].deg -= 1;
                }
            }
            // Recheck failed vertices within distance 2 of v.
            for &w in c.neighbors(v) {
                let w = w as usize;
                if !st[w].alive {
                    continue;
                }
                if !st[w].pending {
                    st[w].pending = true;
                    queue.push_back(w);
                }
                for &x in c.neighbors(w) {
                    let x = x as usize;
                    if st[x].alive && !st[x].pending {
                        st[x].pending = true;
                        queue.push_back(x);
                    }
                }
            }
        }
    }

    if sigma.len() < n {
        let mut remaining: Vec<usize> = (0..n)
            .filter(|&v| st[v].alive)
            .map(|v| c.label[v])
            .collect();
        remaining.sort_unstable();
        return Err(MnoObstruction { remaining });
    }
    if let Err(e) = check_mno(&c, &sigma, &max_neighbor) {
        panic!("greedy elimination produced an invalid ordering: {e}");
    }
    let mut mapped = vec![0; n];
    for (v, &u) in max_neighbor.iter().enumerate() {
        mapped[c.label[v]] = c.label[u];
    }
    Ok(MnoResult {
        sigma: sigma.into_iter().map(|v| c.label[v]).collect(),
        max_neighbor: mapped,
    })
}

/// Per-vertex elimination state, kept together so a visit touches one
/// cache line.
#[derive(Clone, Copy)]
struct Slot {
    deg: u32,
    stamp: u32,
    alive: bool,
    pending: bool,
}

const NO_BLOCKER: (u32, u32) = (u32::MAX, u32::MAX);

/// `g` relabelled in breadth-first order, components in order of their
/// smallest vertex, stored as one flat adjacency array. Elimination touches
/// distance-2 neighborhoods, so keeping nearby vertices close in memory
/// matters on large inputs.
struct Compact {
    offset: Vec<usize>,
    adj: Vec<u32>,
    /// Original vertex of each compact vertex.
    label: Vec<usize>,
    /// Start of each component, plus `n` at the end.
    starts: Vec<usize>,
}

impl Compact {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        assert!(n <= u32::MAX as usize, "graph too large");
        let mut label = Vec::with_capacity(n);
        let mut index = vec![usize::MAX; n];
        let mut starts = Vec::new();
        for s in 0..n {
            if index[s] != usize::MAX {
                continue;
            }
            starts.push(label.len());
            index[s] = label.len();
            label.push(s);
            let mut head = starts[starts.len() - 1];
            while head < label.len() {
                let v = label[head];
                head += 1;
                for &w in g.neighbors(v) {
                    if index[w] == usize::MAX {
                        index[w] = label.len();
                        label.push(w);
                    }
                }
            }
        }
        starts.push(n);
        let mut offset = Vec::with_capacity(n + 1);
        let mut adj = Vec::with_capacity(2 * g.m());
        offset.push(0);
        for &v in &label {
            let from = adj.len();
            adj.extend(g.neighbors(v).iter().map(|&w| index[w] as u32));
            adj[from..].sort_unstable();
            offset.push(adj.len());
        }
        Compact {
            offset,
            adj,
            label,
            starts,
        }
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[self.offset[v]..self.offset[v + 1]]
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.neighbors(u).len() <= self.neighbors(v).len() {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    fn component_ranges(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.starts.windows(2).map(|w| w[0]..w[1])
    }
}

fn highest_degree_neighbor(c: &Compact, v: usize, st: &[Slot]) -> usize {
    let mut best = usize::MAX;
    for &w in c.neighbors(v) {
        let w = w as usize;
        if st[w].alive && (best == usize::MAX || st[w].deg > st[best].deg) {
            best = w;
        }
    }
    best
}

/// Returns a maximum neighbor of `v` in the graph of alive vertices, other
/// than `v` itself unless `v` is isolated there. On failure returns `(w, x)`
/// with `w ∈ N(v)`, `x ∈ N[w]` and `x` outside the closed neighborhood of
/// the best candidate.
fn find_max_neighbor(
    c: &Compact,
    v: usize,
    st: &mut [Slot],
    clock: u32,
) -> std::result::Result<usize, (usize, usize)> {
    if st[v].deg == 0 {
        return Ok(v);
    }
    let best = highest_degree_neighbor(c, v, st);
    st[best].stamp = clock;
    for &x in c.neighbors(best) {
        let s = &mut st[x as usize];
        if s.alive {
            s.stamp = clock;
        }
    }
    let st = &*st;
    let outside = |x: &u32| {
        let s = &st[*x as usize];
        s.alive && s.stamp != clock
    };
    for &w in c.neighbors(v) {
        let w = w as usize;
        if !st[w].alive || w == best {
            continue;
        }
        if st[w].stamp != clock {
            return Err((w, w));
        }
        // deg(w) <= deg(best) is necessary for N[w] ⊆ N[best].
        if st[w].deg > st[best].deg {
            let x = c.neighbors(w).iter().find(|x| outside(x));
            return Err((
                w,
                *x.expect("larger neighborhood has a vertex outside") as usize,
            ));
        }
        if let Some(&x) = c.neighbors(w).iter().find(|x| outside(x)) {
            return Err((w, x as usize));
        }
    }
    Ok(best)
}

/// Checks an [`MnoResult`] against the definition directly, in `O(Σ deg²)`.
pub fn verify_mno(g: &Graph, mno: &MnoResult) -> std::result::Result<(), String> {
    check_mno(g, &mno.sigma, &mno.max_neighbor)
}

/// Adjacency access shared by [`Graph`] and the compact copy used during
/// elimination.
trait Adjacency {
    fn order(&self) -> usize;
    fn for_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_;
    fn adjacent(&self, u: usize, v: usize) -> bool;
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.n()
    }
    fn for_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors(v).iter().copied()
    }
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
}

impl Adjacency for Compact {
    fn order(&self) -> usize {
        self.label.len()
    }
    fn for_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors(v).iter().map(|&w| w as usize)
    }
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
}

fn check_mno<A: Adjacency>(
    g: &A,
    sigma: &[usize],
    max_neighbor: &[usize],
) -> std::result::Result<(), String> {
    let n = g.order();
    let pos = positions(n, sigma).map_err(|e| e.to_string())?;
    if max_neighbor.len() != n {
        return Err("max_neighbor has the wrong length".into());
    }
    let mut stamp = vec![usize::MAX; n];
    for (i, &v) in sigma.iter().enumerate() {
        let m = max_neighbor[v];
        if m >= n || pos[m] < i {
            return Err(format!("maximum neighbor of {v} is not in G_{i}"));
        }
        let has_later = g.for_neighbors(v).any(|w| pos[w] > i);
        if m == v {
            if has_later {
                return Err(format!("{v} is its own maximum neighbor but not isolated"));
            }
            continue;
        }
        if !g.adjacent(v, m) {
            return Err(format!("maximum neighbor {m} of {v} is not adjacent"));
        }
        stamp[m] = i;
        for x in g.for_neighbors(m) {
            if pos[x] >= i {
                stamp[x] = i;
            }
        }
        let closed = std::iter::once(v).chain(g.for_neighbors(v));
        for w in closed.filter(|&w| pos[w] >= i) {
            let mut closed_w = std::iter::once(w).chain(g.for_neighbors(w));
            if let Some(x) = closed_w.find(|&x| pos[x] >= i && stamp[x] != i) {
                return Err(format!(
                    "N[{w}] contains {x}, which is outside N[{m}] in G_{i}"
                ));
            }
        }
    }
    Ok(())
}

/// True iff in `G[remaining]` no vertex has a maximum neighbor other than
/// itself and no vertex is isolated, i.e. greedy elimination cannot start.
pub fn verify_mno_obstruction(g: &Graph, remaining: &[usize]) -> bool {
    if remaining.is_empty() || remaining.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let sub = g.induced_subgraph(remaining);
    // Exhaustive over all candidate neighbors, independent of the
    // highest-degree shortcut used during elimination.
    sub.vertices().all(|v| {
        sub.degree(v) > 0
            && sub.neighbors(v).iter().all(|&u| {
                let nu = sub.closed_neighborhood(u);
                !std::iter::once(v)
                    .chain(sub.neighbors(v).iter().copied())
                    .all(|w| {
                        sub.closed_neighborhood(w)
                            .iter()
                            .all(|x| nu.binary_search(x).is_ok())
                    })
            })
    })
}

/// Dually chordal recognition via [`compute_mno`].
pub fn is_dually_chordal(g: &Graph) -> ClassReport {
    match compute_mno(g) {
        Ok(mno) => ClassReport::yes(Witness::Mno(mno)),
        Err(obstruction) => ClassReport::no(Witness::MnoObstruction(obstruction.remaining)),
    }
}
