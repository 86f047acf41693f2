//! Chromatically constrained families built as direct products of a looped
//! word graph with a small fixed factor.
//!
//! The direct product inherits the word graph's reachability as long as the
//! small factor can realise walks of every length at least some threshold
//! between any two of its vertices; a triangle and a pentagon both do from
//! length 2 and 4 respectively. The factor's own colouring and odd girth
//! then transfer to the product: the second coordinate is a proper
//! colouring, and a triangle in the product would project to a closed
//! 3-walk in the pentagon, which has none.

use num_bigint::BigInt;

use crate::constructions::{
    de_bruijn_digraph, fit_budget, param_map, Coloring, ConstructionResult, FamilyError,
};
use crate::graph::{Graph, Pseudograph};
use crate::products::direct_product;

fn product_with(
    factor: &Pseudograph,
    delta: u64,
    k: u32,
    budget: u64,
) -> Result<(Graph, u64), FamilyError> {
    let r = delta / 4;
    let side = factor.graph.vertex_count() as u64;
    let total = BigInt::from(r).pow(k) * side;
    fit_budget(total, budget)?;
    let word = de_bruijn_digraph(r, k, budget)?.underlying_pseudograph();
    let product = direct_product(&word, factor);
    debug_assert_eq!(product.loop_count(), 0);
    Ok((product.graph, r))
}

pub fn three_colourable_debruijn(
    delta: u64,
    k: u32,
    budget: u64,
) -> Result<ConstructionResult, FamilyError> {
    if delta < 4 {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= 4"
        )));
    }
    if k < 2 {
        return Err(FamilyError::Precondition(format!("diameter k = {k} violates k >= 2")));
    }
    let triangle = Pseudograph::simple(Graph::complete(3).unwrap());
    let (graph, r) = product_with(&triangle, delta, k, budget)?;
    let n = graph.vertex_count();
    let colors = (0..n).map(|v| v % 3).collect();

    let params = param_map([
        ("delta", delta.to_string()),
        ("k", k.to_string()),
        ("r", r.to_string()),
    ]);
    let mut result = ConstructionResult::new("three-col", params, graph, delta, k);
    result.coloring = Some(Coloring { colors, num_colors: 3 });
    result.guaranteed_vertices = Some(BigInt::from(3) * BigInt::from(r).pow(k));
    Ok(result)
}

pub fn triangle_free_debruijn(
    delta: u64,
    k: u32,
    budget: u64,
) -> Result<ConstructionResult, FamilyError> {
    if delta < 4 {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= 4"
        )));
    }
    if k < 4 {
        return Err(FamilyError::Precondition(format!("diameter k = {k} violates k >= 4")));
    }
    let pentagon = Pseudograph::simple(Graph::cycle(5).unwrap());
    let (graph, r) = product_with(&pentagon, delta, k, budget)?;
    let n = graph.vertex_count();
    // a fixed proper colouring of the pentagon, read off the coordinate
    const PENTAGON_COLORS: [usize; 5] = [0, 1, 0, 1, 2];
    let colors = (0..n).map(|v| PENTAGON_COLORS[v % 5]).collect();

    let params = param_map([
        ("delta", delta.to_string()),
        ("k", k.to_string()),
        ("r", r.to_string()),
    ]);
    let mut result = ConstructionResult::new("triangle-free", params, graph, delta, k);
    result.claimed_triangle_free = true;
    result.coloring = Some(Coloring { colors, num_colors: 3 });
    result.guaranteed_vertices = Some(BigInt::from(5) * BigInt::from(r).pow(k));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::coloring::{verify_proper_coloring, ColoringVerdict};
    use crate::constructions::DEFAULT_BUDGET;
    use crate::graph::Diameter;

    fn assert_properly_colored(res: &ConstructionResult) {
        let verdict =
            verify_proper_coloring(&res.graph, res.coloring.as_ref().unwrap()).unwrap();
        assert!(matches!(verdict, ColoringVerdict::Proper { .. }), "{verdict:?}");
    }

    #[test]
    fn narrowest_three_col_is_a_triangle() {
        let res = three_colourable_debruijn(4, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph, Graph::complete(3).unwrap());
        assert_eq!(res.graph.diameter(), Diameter::Finite(1));
        assert_properly_colored(&res);
    }

    #[test]
    fn three_col_instances() {
        let res = three_colourable_debruijn(8, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph.vertex_count(), 12);
        assert!(res.graph.max_degree() <= 8);
        assert!(res.graph.diameter_at_most(2));
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(12)));
        assert_properly_colored(&res);

        let res = three_colourable_debruijn(8, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph.vertex_count(), 24);
        assert!(res.graph.diameter_at_most(3));
        assert_properly_colored(&res);

        let res = three_colourable_debruijn(12, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph.vertex_count(), 3 * 81);
        assert!(res.graph.max_degree() <= 12);
        assert!(res.graph.diameter_at_most(4));
        assert_properly_colored(&res);
    }

    #[test]
    fn narrowest_triangle_free_is_a_pentagon() {
        let res = triangle_free_debruijn(4, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph, Graph::cycle(5).unwrap());
        assert_eq!(res.graph.diameter(), Diameter::Finite(2));
        assert!(res.graph.is_triangle_free());
        assert_properly_colored(&res);
    }

    #[test]
    fn triangle_free_instances() {
        let res = triangle_free_debruijn(8, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph.vertex_count(), 80);
        assert!(res.graph.max_degree() <= 8);
        assert!(res.graph.diameter_at_most(4));
        assert!(res.graph.is_triangle_free());
        assert_properly_colored(&res);

        let res = triangle_free_debruijn(12, 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph.vertex_count(), 5 * 243);
        assert!(res.graph.diameter_at_most(5));
        assert!(res.graph.is_triangle_free());
        assert_properly_colored(&res);
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            three_colourable_debruijn(3, 2, DEFAULT_BUDGET),
            Err(FamilyError::Precondition(_))
        ));
        assert!(matches!(
            three_colourable_debruijn(8, 1, DEFAULT_BUDGET),
            Err(FamilyError::Precondition(_))
        ));
        assert!(matches!(
            triangle_free_debruijn(8, 3, DEFAULT_BUDGET),
            Err(FamilyError::Precondition(_))
        ));
        assert!(matches!(
            triangle_free_debruijn(8, 20, 1000),
            Err(FamilyError::BudgetExceeded { .. })
        ));
    }
}
