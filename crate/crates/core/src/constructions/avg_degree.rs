//! Dense-on-average family: a clique-cover product core with cheap pendant
//! clouds hung on every clique copy.
//!
//! The core is the cartesian product of a clique cover gadget with a word
//! graph, so it has small diameter; the clouds blow the vertex count up
//! without raising the average degree past d, because each cloud vertex
//! only sees one clique copy.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bounds::ceil_rational;
use crate::constructions::{
    de_bruijn_graph, fit_budget, line_of_complete, param_map, ConstructionResult, FamilyError,
};
use crate::graph::{Graph, Vertex};
use crate::products::{cartesian_product, pair_index};

pub fn avg_degree_family(
    d: u64,
    k: u32,
    delta: u64,
    budget: u64,
) -> Result<ConstructionResult, FamilyError> {
    if k < 3 {
        return Err(FamilyError::Precondition(format!("diameter k = {k} violates k >= 3")));
    }
    let q = d / 4;
    if q < 2 {
        return Err(FamilyError::Precondition(format!(
            "average degree d = {d} gives q = floor(d/4) = {q}, violating q >= 2"
        )));
    }
    if delta < 2 * d {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= 2d = {}",
            2 * d
        )));
    }
    let r = delta / 4;
    // positive: floor(delta/2) - floor(delta/4) >= delta/4 >= d/2 >= 2q
    let p = delta / 2 - r - q + 1;
    let clique_count = q + 1;
    let layer_count = BigInt::from(r).pow(k - 2);
    let core = &layer_count * (clique_count * q / 2);
    let total = core + &layer_count * (clique_count * p);
    let n = fit_budget(total, budget)?;

    let (cover_graph, cliques) = line_of_complete(q);
    let word_graph = de_bruijn_graph(r, k - 2, budget)?.0;
    let h = cartesian_product(&cover_graph, &word_graph);
    let layers = word_graph.vertex_count();

    let mut edges: Vec<(Vertex, Vertex)> = h.edges().to_vec();
    let mut next = h.vertex_count();
    for clique in &cliques {
        for v in 0..layers as Vertex {
            for s in 0..p as usize {
                let cloud = (next + s) as Vertex;
                for &x in clique {
                    edges.push((pair_index(x, v, layers), cloud));
                }
            }
            next += p as usize;
        }
    }
    debug_assert_eq!(next, n);
    let graph = Graph::from_edges(n, edges).expect("cloud edges are simple");

    let params = param_map([
        ("d", d.to_string()),
        ("k", k.to_string()),
        ("delta", delta.to_string()),
        ("q", q.to_string()),
        ("r", r.to_string()),
        ("p", p.to_string()),
    ]);
    let mut result = ConstructionResult::new("avg-degree", params, graph, delta, k);
    result.claimed_average_degree_max = Some(BigRational::from_integer(BigInt::from(d)));
    let promised = BigRational::new(BigInt::from(d) * BigInt::from(r).pow(k - 1), BigInt::from(8));
    result.guaranteed_vertices = Some(ceil_rational(&promised));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::DEFAULT_BUDGET;

    fn build(d: u64, k: u32, delta: u64) -> ConstructionResult {
        avg_degree_family(d, k, delta, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn smallest_instance() {
        let res = build(8, 3, 16);
        let g = &res.graph;
        assert_eq!(g.vertex_count(), 48);
        assert!(g.max_degree() <= 16);
        assert!(g.diameter_at_most(3));
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(16)));
        // 30 core edges + 72 cloud edges
        assert_eq!(g.edge_count(), 102);
        assert_eq!(
            g.average_degree(),
            BigRational::new(BigInt::from(17), BigInt::from(4))
        );
        assert!(g.average_degree() <= *res.claimed_average_degree_max.as_ref().unwrap());
        // cloud vertices end the id range and have degree q
        for v in 12..48 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn wider_instances() {
        let res = build(12, 3, 24);
        assert_eq!(res.graph.vertex_count(), 132);
        assert!(res.graph.max_degree() <= 24);
        assert!(res.graph.diameter_at_most(3));
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(54)));
        assert!(res.graph.average_degree() <= BigRational::from_integer(BigInt::from(12)));

        let res = build(8, 4, 16);
        assert_eq!(res.graph.vertex_count(), 192);
        assert!(res.graph.diameter_at_most(4));
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(64)));
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        for (d, k, delta) in [(4, 3, 16), (8, 2, 16), (8, 3, 15)] {
            assert!(
                matches!(
                    avg_degree_family(d, k, delta, DEFAULT_BUDGET),
                    Err(FamilyError::Precondition(_))
                ),
                "({d},{k},{delta}) should be rejected"
            );
        }
        let msg = avg_degree_family(4, 3, 16, DEFAULT_BUDGET).unwrap_err().to_string();
        assert!(msg.contains("q = floor(d/4)"), "{msg}");
    }

    #[test]
    fn budget_cuts_in_before_building() {
        assert!(matches!(
            avg_degree_family(8, 12, 40, 1000),
            Err(FamilyError::BudgetExceeded { .. })
        ));
    }
}
