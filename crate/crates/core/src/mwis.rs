//! Frank's two-pass maximum weight independent set algorithm for chordal graphs.

use crate::graph::{Graph, WeightMap};
use crate::ordering::is_peo;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwisCertificate {
    /// The independent set, sorted.
    pub set: Vec<usize>,
    /// Total original weight of `set`.
    pub weight: u64,
    /// Which vertices the first pass marked.
    pub marks: Vec<bool>,
}

/// Maximum weight independent set of a chordal graph given a perfect
/// elimination ordering. The ordering is verified first.
pub fn mwis_chordal(g: &Graph, weights: &WeightMap, peo: &[usize]) -> Result<MwisCertificate> {
    let check = is_peo(g, peo)?;
    if let Some(violation) = check.violation {
        return Err(Error::NotAPeo(violation));
    }
    Ok(mwis_chordal_unchecked(g, weights, peo))
}

/// [`mwis_chordal`] without the ordering check, for callers that have just
/// verified the ordering themselves.
///
/// Pass 1 scans the ordering forward, marking every vertex whose residual
/// weight is still positive and subtracting that residual from its neighbors
/// (floored at zero). Pass 2 scans backward and keeps each marked vertex
/// that no kept neighbor blocks.
pub fn mwis_chordal_unchecked(g: &Graph, weights: &WeightMap, peo: &[usize]) -> MwisCertificate {
    let n = g.n();
    assert_eq!(weights.len(), n, "one weight per vertex");
    let mut residual = weights.0.clone();
    let mut marks = vec![false; n];
    for &v in peo {
        let r = residual[v];
        if r > 0 {
            marks[v] = true;
            for &u in g.neighbors(v) {
                residual[u] = residual[u].saturating_sub(r);
            }
        }
    }

    let mut blocked = vec![false; n];
    let mut set = Vec::new();
    for &v in peo.iter().rev() {
        if marks[v] && !blocked[v] {
            set.push(v);
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    set.sort_unstable();
    MwisCertificate {
        weight: weights.weight_of(&set),
        set,
        marks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_independent_set, neighborhood_weights};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn brute(g: &Graph, w: &WeightMap) -> u64 {
        let n = g.n();
        (0u32..1 << n)
            .filter_map(|mask| {
                let set: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                is_independent_set(g, &set)
                    .unwrap()
                    .then(|| w.weight_of(&set))
            })
            .max()
            .unwrap()
    }

    #[test]
    fn triangle_takes_heaviest() {
        let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let w = WeightMap(vec![5, 3, 2]);
        for peo in [[0, 1, 2], [2, 1, 0], [1, 2, 0]] {
            let c = mwis_chordal(&k3, &w, &peo).unwrap();
            assert_eq!(c.set, vec![0]);
            assert_eq!(c.weight, 5);
        }
    }

    #[test]
    fn path_examples() {
        let c = mwis_chordal(&path(3), &WeightMap(vec![2, 3, 2]), &[0, 2, 1]).unwrap();
        assert_eq!(c.set, vec![0, 2]);
        assert_eq!(c.weight, 4);

        let p4 = path(4);
        let w = neighborhood_weights(&p4);
        assert_eq!(w.0, vec![2, 3, 3, 2]);
        assert_eq!(brute(&p4, &w), 5);
        let c = mwis_chordal(&p4, &w, &[0, 3, 1, 2]).unwrap();
        assert_eq!(c.weight, 5);
        assert!(is_independent_set(&p4, &c.set).unwrap());

        // In the square only {v1, v4} survives.
        let sq = crate::graph::square(&p4);
        assert_eq!(brute(&sq, &w), 4);
        let c = mwis_chordal(
            &sq,
            &w,
            &crate::ordering::mcs(&sq)
                .into_iter()
                .rev()
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!((c.set, c.weight), (vec![0, 3], 4));
    }

    #[test]
    fn rejects_non_peo() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = WeightMap::uniform(4, 1);
        assert!(matches!(
            mwis_chordal(&c4, &w, &[0, 1, 2, 3]),
            Err(Error::NotAPeo(_))
        ));
        assert_eq!(
            mwis_chordal(&path(3), &w, &[0, 1]),
            Err(Error::NotAPermutation)
        );
    }

    #[test]
    fn zero_weights() {
        let p3 = path(3);
        let c = mwis_chordal(&p3, &WeightMap(vec![0, 0, 0]), &[0, 2, 1]).unwrap();
        assert_eq!(c.weight, 0);
        assert!(c.set.is_empty());
    }
}
