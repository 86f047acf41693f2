//! Triangle-free circulant-style graphs on modular grids, for diameters 2
//! and 3.
//!
//! Adjacency depends only on the coordinatewise cyclic distances between
//! two vertices, read as a sorted tuple. The difference sets are closed
//! under negation, so the graphs are regular; the distance rules are tuned
//! so that any two vertices share a short path while no closed triple of
//! allowed difference vectors sums to zero.

use num_bigint::BigInt;

use crate::constructions::{fit_budget, param_map, Coloring, ConstructionResult, FamilyError};
use crate::graph::{Graph, Vertex};

fn cyclic_distance(d: u64, p: u64) -> u64 {
    d.min(p - d)
}

/// Builds the graph on Z_p^dim whose adjacency holds exactly on the
/// difference vectors `allowed` accepts (by sorted cyclic distance tuple).
fn modular_graph(p: u64, dim: u32, allowed: impl Fn(&[u64]) -> bool) -> Graph {
    let p_us = p as usize;
    let n = p_us.pow(dim);
    let mut shifts: Vec<Vec<usize>> = Vec::new();
    let mut dists = vec![0u64; dim as usize];
    for diff in 0..n {
        let mut rest = diff;
        for slot in (0..dim as usize).rev() {
            dists[slot] = cyclic_distance((rest % p_us) as u64, p);
            rest /= p_us;
        }
        dists.sort_unstable();
        if allowed(&dists) {
            let mut coords = Vec::with_capacity(dim as usize);
            let mut rest = diff;
            for _ in 0..dim {
                coords.push(rest % p_us);
                rest /= p_us;
            }
            coords.reverse();
            shifts.push(coords);
        }
    }
    let mut edges = Vec::new();
    for v in 0..n {
        let mut coords = Vec::with_capacity(dim as usize);
        let mut rest = v;
        for _ in 0..dim {
            coords.push(rest % p_us);
            rest /= p_us;
        }
        coords.reverse();
        for shift in &shifts {
            let mut w = 0usize;
            for (c, s) in coords.iter().zip(shift) {
                w = w * p_us + (c + s) % p_us;
            }
            if v < w {
                edges.push((v as Vertex, w as Vertex));
            }
        }
    }
    Graph::from_edges(n, edges).expect("difference-set edges are simple")
}

fn parity_coloring(p: u64, dim: u32, n: usize) -> Coloring {
    let p_us = p as usize;
    let colors = (0..n)
        .map(|v| {
            let mut rest = v;
            let mut color = 0usize;
            for _ in 0..dim {
                color = color * 2 + (rest % p_us) % 2;
                rest /= p_us;
            }
            color
        })
        .collect();
    Coloring { colors, num_colors: 1 << dim }
}

pub fn zp2_family(delta: u64, budget: u64) -> Result<ConstructionResult, FamilyError> {
    if delta < 20 {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= 20"
        )));
    }
    let p = 2 * ((delta + 4) / 8) + 2;
    let n = fit_budget(BigInt::from(p) * BigInt::from(p), budget)?;
    // adjacent when the smaller cyclic distance is exactly 1 and the
    // larger one is anything but 2
    let graph = modular_graph(p, 2, |d| d[0] == 1 && d[1] != 2);
    debug_assert_eq!(graph.vertex_count(), n);
    let coloring = parity_coloring(p, 2, n);

    let params = param_map([("delta", delta.to_string()), ("p", p.to_string())]);
    let mut result =
        ConstructionResult::new("zp2", params, graph, 4 * (p - 4), 2);
    result.diameter_is_exact = true;
    result.claimed_triangle_free = true;
    result.coloring = Some(coloring);
    result.guaranteed_vertices = Some(BigInt::from(p) * BigInt::from(p));
    Ok(result)
}

pub fn zp3_family(delta: u64, budget: u64) -> Result<ConstructionResult, FamilyError> {
    if delta < 42 {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= 42"
        )));
    }
    let p = 2 * ((delta + 6) / 12) + 4;
    let n = fit_budget(BigInt::from(p).pow(3), budget)?;
    let graph = modular_graph(p, 3, |d| d[0] == 0 && d[1] == 1 && d[2] >= 3);
    debug_assert_eq!(graph.vertex_count(), n);
    let coloring = parity_coloring(p, 3, n);

    let params = param_map([("delta", delta.to_string()), ("p", p.to_string())]);
    let mut result =
        ConstructionResult::new("zp3", params, graph, 12 * (p - 5), 3);
    result.diameter_is_exact = true;
    result.claimed_triangle_free = true;
    result.coloring = Some(coloring);
    result.guaranteed_vertices = Some(BigInt::from(p).pow(3));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::coloring::{verify_proper_coloring, ColoringVerdict};
    use crate::constructions::DEFAULT_BUDGET;
    use crate::graph::Diameter;

    #[test]
    fn plane_family_at_the_threshold() {
        let res = zp2_family(20, DEFAULT_BUDGET).unwrap();
        let g = &res.graph;
        assert_eq!(g.vertex_count(), 64);
        assert_eq!(res.params["p"], "8");
        // regular of degree 4(p-4)
        assert!((0..64).all(|v| g.degree(v) == 16));
        assert_eq!(res.claimed_max_degree, 16);
        assert_eq!(g.diameter(), Diameter::Finite(2));
        assert!(g.is_triangle_free());
        let verdict = verify_proper_coloring(g, res.coloring.as_ref().unwrap()).unwrap();
        assert!(matches!(verdict, ColoringVerdict::Proper { .. }));
    }

    #[test]
    fn plane_family_widens() {
        let res = zp2_family(28, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph.vertex_count(), 100);
        assert!((0..100).all(|v| res.graph.degree(v) == 24));
        assert_eq!(res.graph.diameter(), Diameter::Finite(2));
        assert!(res.graph.is_triangle_free());
    }

    #[test]
    fn cube_family_at_the_threshold() {
        let res = zp3_family(42, DEFAULT_BUDGET).unwrap();
        let g = &res.graph;
        assert_eq!(g.vertex_count(), 1728);
        assert_eq!(res.params["p"], "12");
        // regular of degree 12(p-5)
        assert!((0..1728).all(|v| g.degree(v) == 84));
        assert_eq!(res.claimed_max_degree, 84);
        assert_eq!(g.diameter(), Diameter::Finite(3));
        assert!(g.is_triangle_free());
        let verdict = verify_proper_coloring(g, res.coloring.as_ref().unwrap()).unwrap();
        assert!(matches!(verdict, ColoringVerdict::Proper { .. }));
    }

    #[test]
    fn cube_family_widens() {
        let res = zp3_family(54, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph.vertex_count(), 2744);
        assert!((0..2744).all(|v| res.graph.degree(v) == 108));
        assert!(res.graph.is_triangle_free());
    }

    #[test]
    fn thresholds_enforced() {
        assert!(matches!(zp2_family(19, DEFAULT_BUDGET), Err(FamilyError::Precondition(_))));
        assert!(matches!(zp3_family(41, DEFAULT_BUDGET), Err(FamilyError::Precondition(_))));
        assert!(matches!(zp2_family(20, 10), Err(FamilyError::BudgetExceeded { .. })));
    }
}
