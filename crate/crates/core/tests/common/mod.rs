//! Brute-force and independent reference implementations shared by the
//! integration tests.
#![allow(dead_code)]

use hrglab::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn induced_min_degree(g: &Graph, mask: u32) -> usize {
    (0..g.vertex_count())
        .filter(|v| mask >> v & 1 == 1)
        .map(|v| {
            g.neighbours(v)
                .iter()
                .filter(|&&w| mask >> w & 1 == 1)
                .count()
        })
        .min()
        .unwrap_or(0)
}

/// Degeneracy as the maximum over all vertex subsets of the minimum degree.
pub fn brute_degeneracy(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    (1u32..1 << n)
        .map(|m| induced_min_degree(g, m))
        .max()
        .unwrap_or(0)
}

/// Clique number by testing every subset.
pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&m| {
            let vs: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Nodes and weights of the `k`-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre_rule(k: usize) -> Vec<(f64, f64)> {
    (1..=k)
        .map(|i| {
            let mut x = (std::f64::consts::PI * (i as f64 - 0.25) / (k as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for j in 2..=k {
                    let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = k as f64 * (x * p1 - p0) / (x * x - 1.0);
                let step = p1 / dp;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// Composite Gauss–Legendre quadrature with `panels` equal panels.
pub fn gauss_legendre(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let rule = gauss_legendre_rule(20);
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let mid = a + (p as f64 + 0.5) * h;
            rule.iter()
                .map(|&(x, w)| w * f(mid + 0.5 * h * x))
                .sum::<f64>()
                * 0.5
                * h
        })
        .sum()
}

/// Minimum of a unimodal function by golden-section search.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    while (b - a).abs() > 1e-12 {
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
        c = b - inv_phi * (b - a);
        d = a + inv_phi * (b - a);
    }
    f(0.5 * (a + b))
}

pub fn median(values: &[f64]) -> f64 {
    hrglab::experiments::median(values)
}
