//! Proper vertex colouring checks.

use crate::certify::WitnessError;
use crate::constructions::Coloring;
use crate::graph::{Graph, Vertex};

#[derive(Debug, PartialEq, Eq)]
pub enum ColoringVerdict {
    Proper { colors_used: usize },
    MonochromaticEdge { u: Vertex, v: Vertex, color: usize },
}

/// `c.colors[v]` is the colour of vertex v; all colours must be below
/// `c.num_colors`.
pub fn verify_proper_coloring(g: &Graph, c: &Coloring) -> Result<ColoringVerdict, WitnessError> {
    let n = g.vertex_count();
    if c.colors.len() != n {
        return Err(WitnessError::WrongVertexCount { expected: n, got: c.colors.len() });
    }
    for (v, &color) in c.colors.iter().enumerate() {
        if color >= c.num_colors {
            return Err(WitnessError::VertexColorOutOfRange {
                vertex: v as Vertex,
                color,
                bound: c.num_colors,
            });
        }
    }
    for &(u, v) in g.edges() {
        if c.colors[u as usize] == c.colors[v as usize] {
            return Ok(ColoringVerdict::MonochromaticEdge { u, v, color: c.colors[u as usize] });
        }
    }
    let mut used = vec![false; c.num_colors];
    for &color in &c.colors {
        used[color] = true;
    }
    Ok(ColoringVerdict::Proper { colors_used: used.iter().filter(|&&u| u).count() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(colors: &[usize], num_colors: usize) -> Coloring {
        Coloring { colors: colors.to_vec(), num_colors }
    }

    #[test]
    fn bipartite_two_colouring() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            verify_proper_coloring(&c4, &col(&[0, 1, 0, 1], 2)),
            Ok(ColoringVerdict::Proper { colors_used: 2 })
        );
    }

    #[test]
    fn clash_reported_with_the_edge() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            verify_proper_coloring(&c4, &col(&[0, 1, 1, 1], 2)),
            Ok(ColoringVerdict::MonochromaticEdge { u: 1, v: 2, color: 1 })
        );
    }

    #[test]
    fn shape_errors() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            verify_proper_coloring(&c4, &col(&[0, 1, 0], 2)).unwrap_err(),
            WitnessError::WrongVertexCount { expected: 4, got: 3 }
        );
        assert_eq!(
            verify_proper_coloring(&c4, &col(&[0, 1, 0, 5], 2)).unwrap_err(),
            WitnessError::VertexColorOutOfRange { vertex: 3, color: 5, bound: 2 }
        );
    }

    #[test]
    fn odd_cycle_needs_three() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            verify_proper_coloring(&c5, &col(&[0, 1, 0, 1, 2], 3)),
            Ok(ColoringVerdict::Proper { colors_used: 3 })
        );
        // wrap-around clash with only two colours
        assert!(matches!(
            verify_proper_coloring(&c5, &col(&[0, 1, 0, 1, 0], 2)),
            Ok(ColoringVerdict::MonochromaticEdge { .. })
        ));
    }
}
