use crate::graph::Graph;
use crate::samplers::{GirgPointSet, HrgPointSet};

/// Geometric data attached to the vertices of a sampled graph: which
/// vertices form the core and how "inner" each vertex is.
pub trait Embedding {
    fn vertex_count(&self) -> usize;

    /// Core vertices, ascending by id.
    fn core(&self) -> Vec<u32>;

    /// All vertices from innermost to outermost. The order is strict: equal
    /// radii (or weights) are broken by vertex id.
    fn inner_order(&self) -> Vec<u32>;
}

impl Embedding for HrgPointSet {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    /// Vertices with radius at most `R/2`.
    fn core(&self) -> Vec<u32> {
        let half = self.params.radius() / 2.0;
        (0..self.len() as u32)
            .filter(|&v| self.points[v as usize].radius <= half)
            .collect()
    }

    /// Ascending `(radius, id)`.
    fn inner_order(&self) -> Vec<u32> {
        let mut order: Vec<u32> = (0..self.len() as u32).collect();
        order.sort_by(|&a, &b| {
            self.points[a as usize]
                .radius
                .total_cmp(&self.points[b as usize].radius)
                .then(a.cmp(&b))
        });
        order
    }
}

impl Embedding for GirgPointSet {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    /// Vertices with weight at least `√(n/λ)`.
    fn core(&self) -> Vec<u32> {
        let threshold = self.params.core_weight();
        (0..self.len() as u32)
            .filter(|&v| self.weights[v as usize] >= threshold)
            .collect()
    }

    /// Descending weight, ascending id among equal weights.
    fn inner_order(&self) -> Vec<u32> {
        let mut order: Vec<u32> = (0..self.len() as u32).collect();
        order.sort_by(|&a, &b| {
            self.weights[b as usize]
                .total_cmp(&self.weights[a as usize])
                .then(a.cmp(&b))
        });
        order
    }
}

/// Core vertices of a sampled instance; `σ` is the length.
pub fn core<E: Embedding>(embedding: &E) -> Vec<u32> {
    embedding.core()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDegreeProfile {
    /// Number of strictly more inner neighbours, per vertex.
    pub inner_degree: Vec<usize>,
    /// The vertex `u*` of largest inner-degree (smallest id on ties);
    /// `None` for the empty graph.
    pub argmax_vertex: Option<u32>,
    pub max_inner_degree: usize,
}

/// Inner-degrees of every vertex of `g` under the order of `embedding`.
///
/// Removing vertices from outermost to innermost, each vertex has exactly
/// its inner-degree left, so `max_inner_degree` bounds the degeneracy.
pub fn inner_degrees<E: Embedding>(embedding: &E, g: &Graph) -> InnerDegreeProfile {
    let n = g.vertex_count();
    assert_eq!(
        n,
        embedding.vertex_count(),
        "graph and embedding sizes differ"
    );
    let mut rank = vec![0u32; n];
    for (i, v) in embedding.inner_order().into_iter().enumerate() {
        rank[v as usize] = i as u32;
    }
    let inner_degree: Vec<usize> = (0..n)
        .map(|u| {
            g.neighbours(u)
                .iter()
                .filter(|&&v| rank[v as usize] < rank[u])
                .count()
        })
        .collect();
    let mut argmax_vertex = None;
    let mut max_inner_degree = 0;
    for (v, &d) in inner_degree.iter().enumerate() {
        if argmax_vertex.is_none() || d > max_inner_degree {
            argmax_vertex = Some(v as u32);
            max_inner_degree = d;
        }
    }
    InnerDegreeProfile {
        inner_degree,
        argmax_vertex,
        max_inner_degree,
    }
}
