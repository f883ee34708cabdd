use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::Graph;

/// Smallest-last removal order and the exact degeneracy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyResult {
    pub kappa: usize,
    /// Vertices in removal order.
    pub ordering: Vec<u32>,
    /// Degree of `ordering[i]` in the remaining graph when it was removed.
    pub removal_degrees: Vec<usize>,
}

/// Smallest-last ordering: repeatedly removes a vertex of minimum remaining
/// degree, breaking ties by smallest id.
///
/// Bucket queue indexed by degree. Each bucket is a min-heap of ids so the
/// tie rule is exact; a degree decrement pushes the vertex into the next
/// bucket down and leaves a stale entry behind, skipped when popped. The
/// minimum pointer moves down by at most one per removal, so the scan is
/// `O(n + m)` plus the per-bucket heap operations.
pub fn degeneracy(g: &Graph) -> DegeneracyResult {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<Reverse<u32>>> = vec![Vec::new(); max_degree + 1];
    for v in 0..n {
        buckets[degree[v]].push(Reverse(v as u32));
    }
    // ids were pushed in ascending order, so every bucket is already a
    // valid min-heap
    let mut buckets: Vec<BinaryHeap<Reverse<u32>>> =
        buckets.into_iter().map(BinaryHeap::from).collect();
    let mut removed = vec![false; n];
    let mut ordering = Vec::with_capacity(n);
    let mut removal_degrees = Vec::with_capacity(n);
    let mut kappa = 0;
    let mut d = 0;
    while ordering.len() < n {
        let Some(Reverse(v)) = buckets[d].pop() else {
            d += 1;
            continue;
        };
        let vi = v as usize;
        if removed[vi] || degree[vi] != d {
            continue;
        }
        removed[vi] = true;
        kappa = kappa.max(d);
        ordering.push(v);
        removal_degrees.push(d);
        for &w in g.neighbours(vi) {
            let wi = w as usize;
            if !removed[wi] {
                degree[wi] -= 1;
                buckets[degree[wi]].push(Reverse(w));
            }
        }
        d = d.saturating_sub(1);
    }
    DegeneracyResult {
        kappa,
        ordering,
        removal_degrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: u32) -> Graph {
        Graph::from_edges(
            n as usize,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
        )
        .unwrap()
    }

    #[test]
    fn small_known_graphs() {
        assert_eq!(degeneracy(&complete(5)).kappa, 4);
        let cycle = Graph::from_edges(10, (0..10u32).map(|i| (i, (i + 1) % 10))).unwrap();
        assert_eq!(degeneracy(&cycle).kappa, 2);
        let star = Graph::from_edges(10, (1..10u32).map(|i| (0, i))).unwrap();
        assert_eq!(degeneracy(&star).kappa, 1);
        assert_eq!(degeneracy(&Graph::empty(0)).kappa, 0);
        assert_eq!(degeneracy(&Graph::empty(3)).ordering, vec![0, 1, 2]);
    }

    #[test]
    fn ties_break_by_smallest_id() {
        // path 0-1-2-3: leaves 0 and 3 tie at degree 1
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = degeneracy(&path);
        assert_eq!(d.ordering, vec![0, 1, 2, 3]);
        assert_eq!(d.removal_degrees, vec![1, 1, 1, 0]);
    }
}
