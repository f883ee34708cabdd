//! Immutable undirected simple graphs in compressed sparse row form.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Undirected simple graph with sorted neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbours: Vec<u32>,
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            offsets: vec![0; vertex_count + 1],
            neighbours: Vec::new(),
        }
    }

    /// Builds a graph from arbitrary undirected edges. Duplicates (in either
    /// orientation) are merged; self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w as usize,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Self::from_unique_pairs(vertex_count, &pairs))
    }

    /// `pairs` must hold each edge once as `(u, v)` with `u < v`, all ids in
    /// range. Order is irrelevant.
    pub(crate) fn from_unique_pairs(vertex_count: usize, pairs: &[(u32, u32)]) -> Self {
        let mut offsets = vec![0usize; vertex_count + 1];
        for &(u, v) in pairs {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..vertex_count {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut neighbours = vec![0u32; offsets[vertex_count]];
        for &(u, v) in pairs {
            neighbours[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbours[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..vertex_count {
            neighbours[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph {
            offsets,
            neighbours,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbours.len() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.neighbours[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbours(a).binary_search(&(b as u32)).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            let nb = self.neighbours(u);
            let start = nb.partition_point(|&v| (v as usize) <= u);
            nb[start..].iter().map(move |&v| (u as u32, v))
        })
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        if perm.len() != self.vertex_count() {
            return Err(Error::invalid(
                "permutation length differs from vertex count",
            ));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p as usize >= perm.len() || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::invalid("relabelling is not a permutation"));
            }
        }
        let pairs: Vec<(u32, u32)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (perm[u as usize], perm[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(Self::from_unique_pairs(self.vertex_count(), &pairs))
    }

    /// Checks sortedness, symmetry and simplicity of the adjacency.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.vertex_count();
        for v in 0..n {
            let nb = self.neighbours(v);
            for w in nb.windows(2) {
                if w[0] >= w[1] {
                    return Err(format!("neighbours of {v} not strictly ascending"));
                }
            }
            for &u in nb {
                if u as usize >= n {
                    return Err(format!("neighbour {u} of {v} out of range"));
                }
                if u as usize == v {
                    return Err(format!("self-loop at {v}"));
                }
                if self
                    .neighbours(u as usize)
                    .binary_search(&(v as u32))
                    .is_err()
                {
                    return Err(format!("edge {v}-{u} is not symmetric"));
                }
            }
        }
        Ok(())
    }

    /// Writes the edge-list format: a `n m` header, then one `u v` line per
    /// edge with `u < v` in ascending order.
    pub fn write_edge_list(&self, path: &Path) -> Result<()> {
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        let mut out = BufWriter::new(file);
        let write = |out: &mut BufWriter<File>| -> std::io::Result<()> {
            writeln!(out, "{} {}", self.vertex_count(), self.edge_count())?;
            for (u, v) in self.edges() {
                writeln!(out, "{u} {v}")?;
            }
            out.flush()
        };
        write(&mut out).map_err(|e| Error::io(path, e))
    }

    pub fn read_edge_list(path: &Path) -> Result<Self> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let parse_err = |line: usize, message: String| Error::Parse {
            path: path.to_path_buf(),
            line,
            message,
        };
        let mut lines = BufReader::new(file).lines();
        let header = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing header".into()))?
            .map_err(|e| Error::io(path, e))?;
        let (n, m) = parse_pair::<usize>(&header).ok_or_else(|| parse_err(1, header.clone()))?;
        let mut pairs = Vec::with_capacity(m);
        let mut prev: Option<(u32, u32)> = None;
        for (i, line) in lines.enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            let lineno = i + 2;
            let (u, v) = parse_pair::<u32>(&line).ok_or_else(|| parse_err(lineno, line.clone()))?;
            if u >= v || v as usize >= n {
                return Err(parse_err(
                    lineno,
                    format!("expected u < v < {n}, got {u} {v}"),
                ));
            }
            if prev.is_some_and(|p| p >= (u, v)) {
                return Err(parse_err(lineno, "edges not in ascending order".into()));
            }
            prev = Some((u, v));
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(parse_err(
                1,
                format!("header promises {m} edges, found {}", pairs.len()),
            ));
        }
        Ok(Self::from_unique_pairs(n, &pairs))
    }
}

fn parse_pair<T: std::str::FromStr>(line: &str) -> Option<(T, T)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}
