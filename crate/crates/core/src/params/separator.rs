use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geometry::line_distance;
use crate::graph::Graph;
use crate::samplers::HrgPointSet;

/// Split of an anchor's inner-neighbourhood by the hypercycle of radius
/// `R/2` around the diameter line through the anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorPartition {
    pub anchor: u32,
    /// Inner-neighbours within distance `R/2` of the line.
    pub s0: Vec<u32>,
    /// Remaining inner-neighbours with angle in `(φ, φ + π)`.
    pub s1: Vec<u32>,
    /// Remaining inner-neighbours with angle in `(φ + π, φ + 2π)`.
    pub s2: Vec<u32>,
}

impl SeparatorPartition {
    pub fn inner_degree(&self) -> usize {
        self.s0.len() + self.s1.len() + self.s2.len()
    }

    /// Number of edges between `s1` and `s2`; always zero for a partition
    /// built from the graph's own coordinates.
    pub fn cross_edges(&self, g: &Graph) -> usize {
        let (small, large) = if self.s1.len() <= self.s2.len() {
            (&self.s1, &self.s2)
        } else {
            (&self.s2, &self.s1)
        };
        small
            .iter()
            .map(|&u| {
                g.neighbours(u as usize)
                    .iter()
                    .filter(|v| large.binary_search(v).is_ok())
                    .count()
            })
            .sum()
    }
}

/// Partitions the inner-neighbourhood of `anchor`, which must have radius
/// strictly between `R/2` and `R`.
pub fn separator_partition(
    points: &HrgPointSet,
    g: &Graph,
    anchor: u32,
) -> Result<SeparatorPartition> {
    let a = anchor as usize;
    if a >= points.len() {
        return Err(Error::VertexOutOfRange {
            vertex: a,
            vertex_count: points.len(),
        });
    }
    let big_r = points.params.radius();
    let p = points.points[a];
    if !(p.radius > big_r / 2.0 && p.radius < big_r) {
        return Err(Error::AnchorOutOfRange {
            vertex: a,
            radius: p.radius,
        });
    }
    let mut part = SeparatorPartition {
        anchor,
        s0: Vec::new(),
        s1: Vec::new(),
        s2: Vec::new(),
    };
    for &v in g.neighbours(a) {
        let q = points.points[v as usize];
        let inner = q.radius < p.radius || (q.radius == p.radius && v < anchor);
        if !inner {
            continue;
        }
        if line_distance(q, p.angle) <= big_r / 2.0 {
            part.s0.push(v);
        } else if (q.angle - p.angle).rem_euclid(TAU) < PI {
            part.s1.push(v);
        } else {
            part.s2.push(v);
        }
    }
    Ok(part)
}

/// Vertex whose radius is closest to `target` (smallest id on ties).
pub fn nearest_radius_vertex(points: &HrgPointSet, target: f64) -> Option<u32> {
    points
        .points
        .iter()
        .enumerate()
        .min_by(|(i, a), (j, b)| {
            (a.radius - target)
                .abs()
                .total_cmp(&(b.radius - target).abs())
                .then(i.cmp(j))
        })
        .map(|(i, _)| i as u32)
}
