use super::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits on the exact clique search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueBudget {
    pub max_vertices: usize,
    /// Recursive expansion steps before giving up.
    pub max_steps: u64,
}

impl Default for CliqueBudget {
    fn default() -> Self {
        CliqueBudget {
            max_vertices: 500,
            max_steps: 100_000_000,
        }
    }
}

#[derive(Clone)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(n: usize) -> Self {
        Bitset(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::new(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_count(&self, other: &Bitset) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    i * 64 + b
                })
            })
        })
    }
}

struct Search<'a> {
    adjacency: &'a [Bitset],
    best: Vec<u32>,
    steps: u64,
    max_steps: u64,
}

impl Search<'_> {
    /// Bron–Kerbosch with Tomita pivoting, pruned by the best size so far.
    fn expand(
        &mut self,
        current: &mut Vec<u32>,
        mut candidates: Bitset,
        mut excluded: Bitset,
    ) -> bool {
        self.steps += 1;
        if self.steps > self.max_steps {
            return false;
        }
        if candidates.is_empty() {
            if excluded.is_empty() && current.len() > self.best.len() {
                self.best = current.clone();
            }
            return true;
        }
        if current.len() + candidates.len() <= self.best.len() {
            return true;
        }
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .max_by_key(|&u| {
                (
                    candidates.and_count(&self.adjacency[u]),
                    std::cmp::Reverse(u),
                )
            })
            .expect("candidates non-empty");
        let branch: Vec<usize> = candidates
            .iter()
            .filter(|&v| !self.adjacency[pivot].0[v / 64] & (1 << (v % 64)) != 0)
            .collect();
        for v in branch {
            current.push(v as u32);
            let ok = self.expand(
                current,
                candidates.and(&self.adjacency[v]),
                excluded.and(&self.adjacency[v]),
            );
            current.pop();
            if !ok {
                return false;
            }
            candidates.remove(v);
            excluded.insert(v);
        }
        true
    }
}

/// A maximum clique of `g`, sorted by id; its length is `ω(g)`.
///
/// Graphs larger than `budget.max_vertices` are refused outright. If the
/// step budget runs out, [`Error::CliqueBudgetExhausted`] carries the
/// largest clique seen so far, which is still a valid lower bound.
pub fn exact_clique(g: &Graph, budget: CliqueBudget) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Err(Error::CliqueTooLarge {
            vertex_count: n,
            limit: budget.max_vertices,
        });
    }
    let adjacency: Vec<Bitset> = (0..n)
        .map(|v| {
            let mut b = Bitset::new(n);
            for &w in g.neighbours(v) {
                b.insert(w as usize);
            }
            b
        })
        .collect();
    let mut search = Search {
        adjacency: &adjacency,
        best: Vec::new(),
        steps: 0,
        max_steps: budget.max_steps,
    };
    let finished = search.expand(&mut Vec::new(), Bitset::full(n), Bitset::new(n));
    let mut best = search.best;
    best.sort_unstable();
    if finished {
        Ok(best)
    } else {
        Err(Error::CliqueBudgetExhausted { best })
    }
}

pub fn is_clique(g: &Graph, vertices: &[u32]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| {
        vertices[i + 1..]
            .iter()
            .all(|&v| u != v && g.has_edge(u as usize, v as usize))
    })
}

/// Grows the core into a larger clique: outer vertices are visited from
/// innermost outwards and kept whenever they are adjacent to every vertex
/// chosen so far. The result is sorted by id.
pub fn extend_core_clique<E: Embedding>(embedding: &E, g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut in_clique = vec![false; n];
    let mut clique = embedding.core();
    for &v in &clique {
        in_clique[v as usize] = true;
    }
    for v in embedding.inner_order() {
        if in_clique[v as usize] {
            continue;
        }
        let hits = g
            .neighbours(v as usize)
            .iter()
            .filter(|&&w| in_clique[w as usize])
            .count();
        if hits == clique.len() {
            in_clique[v as usize] = true;
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}
