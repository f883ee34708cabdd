use super::DegeneracyResult;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colours vertices in reverse removal order, each with the smallest colour
/// not used by an already-coloured neighbour. Uses at most `κ + 1` colours.
pub fn greedy_colour(g: &Graph, result: &DegeneracyResult) -> Vec<u32> {
    let n = g.vertex_count();
    let mut colour = vec![u32::MAX; n];
    // mark[c] == stamp means colour c is taken by a neighbour of the current vertex
    let mut mark: Vec<usize> = vec![usize::MAX; result.kappa + 2];
    for (stamp, &v) in result.ordering.iter().rev().enumerate() {
        for &w in g.neighbours(v as usize) {
            let c = colour[w as usize];
            if (c as usize) < mark.len() {
                mark[c as usize] = stamp;
            }
        }
        let c = mark.iter().position(|&m| m != stamp).unwrap_or(mark.len());
        if c >= mark.len() {
            mark.resize(c + 1, usize::MAX);
        }
        colour[v as usize] = c as u32;
    }
    colour
}

pub fn colour_count(colours: &[u32]) -> usize {
    colours.iter().max().map_or(0, |&c| c as usize + 1)
}

/// Every monochromatic edge, as `(u, v)` with `u < v`. An empty list
/// certifies a proper colouring.
pub fn validate_colouring(g: &Graph, colours: &[u32]) -> Result<Vec<(u32, u32)>> {
    if colours.len() < g.vertex_count() {
        return Err(Error::MissingColour {
            vertex: colours.len(),
        });
    }
    if colours.len() > g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: g.vertex_count(),
            vertex_count: g.vertex_count(),
        });
    }
    Ok(g.edges()
        .filter(|&(u, v)| colours[u as usize] == colours[v as usize])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::degeneracy;

    #[test]
    fn triangle_needs_three() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = greedy_colour(&g, &degeneracy(&g));
        assert_eq!(colour_count(&c), 3);
        assert!(validate_colouring(&g, &c).unwrap().is_empty());
        assert_eq!(validate_colouring(&g, &[0, 0, 0]).unwrap().len(), 3);
    }

    #[test]
    fn path_two_colours() {
        let g = Graph::from_edges(5, (0..4u32).map(|i| (i, i + 1))).unwrap();
        let c = greedy_colour(&g, &degeneracy(&g));
        assert!(colour_count(&c) <= 2);
        assert!(validate_colouring(&g, &c).unwrap().is_empty());
    }

    #[test]
    fn missing_colour_reported() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            validate_colouring(&g, &[0, 1]),
            Err(Error::MissingColour { vertex: 2 })
        ));
    }
}
