//! Bounded-treewidth families: forests of full trees tied together by a
//! small clique core, with a perfect elimination order shipped along as the
//! width certificate.
//!
//! Odd diameters use a clique directly on the tree roots. Even diameters
//! interpose the pair gadget so that two root-to-core hops replace the one
//! clique hop, and the certificate completes the core into one clique whose
//! size stays within the width target.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::bounds::{ceil_mul_sqrt, ceil_rational};
use crate::certify::chordal::ChordalWitness;
use crate::constructions::{
    fit_budget, line_of_complete, param_map, ConstructionResult, FamilyError,
};
use crate::graph::{Graph, Vertex};

/// 1 + rc·(1 + ic + ... + ic^{depth-1}) vertices in one tree.
fn tree_size(root_children: u64, internal_children: u64, depth: u32) -> BigInt {
    let mut size = BigInt::one();
    let mut layer = BigInt::from(root_children);
    for level in 1..=depth {
        if level > 1 {
            layer *= internal_children;
        }
        size += &layer;
    }
    size
}

/// Appends one tree; vertices take consecutive ids starting at the current
/// length of `depths`. Returns the root id.
fn grow_tree(
    edges: &mut Vec<(Vertex, Vertex)>,
    depths: &mut Vec<u32>,
    root_children: usize,
    internal_children: usize,
    depth: u32,
) -> Vertex {
    let root = depths.len() as Vertex;
    depths.push(0);
    let mut frontier = vec![root];
    for level in 1..=depth {
        let fanout = if level == 1 { root_children } else { internal_children };
        let mut next = Vec::with_capacity(frontier.len() * fanout);
        for &v in &frontier {
            for _ in 0..fanout {
                let child = depths.len() as Vertex;
                depths.push(level);
                edges.push((v, child));
                next.push(child);
            }
        }
        frontier = next;
    }
    root
}

/// Deepest vertices first, id order inside a level; the level-0 vertices
/// (roots, and core vertices in the even family) come last.
fn elimination_order(depths: &[u32]) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = (0..depths.len() as Vertex).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(depths[v as usize]), v));
    order
}

pub fn treewidth_odd_family(
    t: u64,
    k: u32,
    delta: u64,
    budget: u64,
) -> Result<ConstructionResult, FamilyError> {
    if t < 2 {
        return Err(FamilyError::Precondition(format!(
            "treewidth target t = {t} violates t >= 2"
        )));
    }
    if k % 2 != 1 {
        return Err(FamilyError::Precondition(format!("diameter k = {k} must be odd")));
    }
    if delta < 2 * t - 2 {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= 2t - 2 = {}",
            2 * t - 2
        )));
    }
    let depth = (k - 1) / 2;
    let copies = t + 1;
    let total = tree_size(delta - t, delta - 1, depth) * copies;
    let n = fit_budget(total, budget)?;

    let mut edges = Vec::new();
    let mut depths = Vec::with_capacity(n);
    let mut roots = Vec::with_capacity(copies as usize);
    for _ in 0..copies {
        roots.push(grow_tree(
            &mut edges,
            &mut depths,
            (delta - t) as usize,
            (delta - 1) as usize,
            depth,
        ));
    }
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            edges.push((roots[i], roots[j]));
        }
    }
    debug_assert_eq!(depths.len(), n);
    let graph = Graph::from_edges(n, edges).expect("tree and clique edges are simple");
    let witness = ChordalWitness { fill_edges: Vec::new(), order: elimination_order(&depths) };

    let params = param_map([
        ("t", t.to_string()),
        ("k", k.to_string()),
        ("delta", delta.to_string()),
    ]);
    let mut result = ConstructionResult::new("treewidth-odd", params, graph, delta, k);
    result.claimed_treewidth = Some(t);
    result.chordal = Some(witness);
    let promised = BigRational::new(
        BigInt::from(t + 1) * BigInt::from(delta - 1).pow(depth),
        BigInt::from(2),
    );
    result.guaranteed_vertices = Some(ceil_rational(&promised));
    Ok(result)
}

pub fn treewidth_even_family(
    t: u64,
    k: u32,
    delta: u64,
    budget: u64,
) -> Result<ConstructionResult, FamilyError> {
    if t < 2 {
        return Err(FamilyError::Precondition(format!(
            "treewidth target t = {t} violates t >= 2"
        )));
    }
    if k % 2 != 0 || k < 2 {
        return Err(FamilyError::Precondition(format!(
            "diameter k = {k} must be even and at least 2"
        )));
    }
    // largest q whose pair count fits the width target
    let mut q = 2u64;
    while (q + 2) * (q + 1) / 2 <= t + 1 {
        q += 1;
    }
    if delta < 2 * q {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= 2q = {} (q = {q} from t = {t})",
            2 * q
        )));
    }
    let depth = k / 2 - 1;
    let core = (q + 1) * q / 2;
    let trees_per_clique = delta - 2 * (q - 1);
    let total = BigInt::from(core)
        + tree_size(delta - q, delta - 1, depth) * ((q + 1) * trees_per_clique);
    let n = fit_budget(total, budget)?;

    let (core_graph, cliques) = line_of_complete(q);
    let mut edges: Vec<(Vertex, Vertex)> = core_graph.edges().to_vec();
    // core vertices eliminate last, together with the roots' level
    let mut depths = vec![0u32; core as usize];
    for clique in &cliques {
        for _ in 0..trees_per_clique {
            let root = grow_tree(
                &mut edges,
                &mut depths,
                (delta - q) as usize,
                (delta - 1) as usize,
                depth,
            );
            for &x in clique {
                edges.push((x, root));
            }
        }
    }
    debug_assert_eq!(depths.len(), n);
    let graph = Graph::from_edges(n, edges).expect("gadget edges are simple");

    // completing the core into one clique keeps every later neighbourhood
    // inside it once the trees are gone
    let mut fill = Vec::new();
    for a in 0..core as Vertex {
        for b in (a + 1)..core as Vertex {
            if !core_graph.has_edge(a, b) {
                fill.push((a, b));
            }
        }
    }
    // deepest first as usual, but among level 0 the core goes after the
    // roots so each root still sees its clique when eliminated
    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(depths[v as usize]), (v as u64) < core, v));
    let witness = ChordalWitness { fill_edges: fill, order };

    let params = param_map([
        ("t", t.to_string()),
        ("k", k.to_string()),
        ("delta", delta.to_string()),
        ("q", q.to_string()),
        ("c", trees_per_clique.to_string()),
    ]);
    // core vertices see two clique's worth of roots, past delta itself
    let claimed_degree = 2 * delta - 2 * q + 2;
    let mut result = ConstructionResult::new("treewidth-even", params, graph, claimed_degree, k);
    result.claimed_treewidth = Some(t);
    result.chordal = Some(witness);
    if delta * delta >= 32 * t {
        let half = BigRational::new(BigInt::from(delta - 1).pow(k / 2), BigInt::from(2));
        result.guaranteed_vertices = Some(ceil_mul_sqrt(&half, t + 1));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::chordal::{verify_chordal_witness, ChordalVerdict};
    use crate::certify::treewidth_oracle::treewidth_oracle;
    use crate::constructions::DEFAULT_BUDGET;
    use crate::graph::Diameter;

    fn width_of(res: &ConstructionResult) -> usize {
        match verify_chordal_witness(&res.graph, res.chordal.as_ref().unwrap()).unwrap() {
            ChordalVerdict::EliminationOrder { width } => width,
            bad => panic!("witness rejected: {bad:?}"),
        }
    }

    #[test]
    fn odd_three_stars() {
        let res = treewidth_odd_family(2, 3, 6, DEFAULT_BUDGET).unwrap();
        let g = &res.graph;
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.diameter(), Diameter::Finite(3));
        assert_eq!(g.max_degree(), 6);
        assert_eq!(width_of(&res), 2);
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(8)));
    }

    #[test]
    fn odd_collapses_to_clique_at_diameter_one() {
        let res = treewidth_odd_family(2, 1, 6, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph, Graph::complete(3).unwrap());
        assert_eq!(res.graph.diameter(), Diameter::Finite(1));
        assert_eq!(width_of(&res), 2);
        assert_eq!(treewidth_oracle(&res.graph), 2);
    }

    #[test]
    fn odd_deeper_instance() {
        let res = treewidth_odd_family(3, 5, 8, DEFAULT_BUDGET).unwrap();
        let g = &res.graph;
        // four copies of 1 + 5 + 35
        assert_eq!(g.vertex_count(), 164);
        assert!(g.diameter_at_most(5));
        assert_eq!(g.max_degree(), 8);
        assert_eq!(width_of(&res), 3);
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(98)));
    }

    #[test]
    fn odd_minimum_degree_edge() {
        // delta = 2t - 2 still satisfies the guarantee
        let res = treewidth_odd_family(3, 3, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph.vertex_count(), 8);
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(6)));
        assert_eq!(width_of(&res), 3);

        let res = treewidth_odd_family(2, 3, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.graph, Graph::complete(3).unwrap());
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(2)));
    }

    #[test]
    fn odd_rejections() {
        for (t, k, delta) in [(1, 3, 6), (2, 4, 6), (3, 3, 3)] {
            assert!(matches!(
                treewidth_odd_family(t, k, delta, DEFAULT_BUDGET),
                Err(FamilyError::Precondition(_))
            ));
        }
        assert!(matches!(
            treewidth_odd_family(2, 31, 10, 1000),
            Err(FamilyError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn even_figure_instance() {
        let res = treewidth_even_family(2, 8, 4, DEFAULT_BUDGET).unwrap();
        let g = &res.graph;
        assert_eq!(g.vertex_count(), 165);
        assert!(g.diameter_at_most(8));
        assert_eq!(width_of(&res), 2);
        // 4 * 4 < 32 * 2: the count promise needs a fatter degree
        assert_eq!(res.guaranteed_vertices, None);
        assert_eq!(res.params["q"], "2");
        assert_eq!(g.max_degree() as u64, res.claimed_max_degree);
        // the core vertices see two cliques' worth of roots
        assert_eq!(res.claimed_max_degree, 6);
    }

    #[test]
    fn even_depth_zero_trees() {
        let res = treewidth_even_family(2, 2, 8, DEFAULT_BUDGET).unwrap();
        let g = &res.graph;
        assert_eq!(g.vertex_count(), 3 + 3 * 6);
        assert_eq!(g.diameter(), Diameter::Finite(2));
        assert_eq!(width_of(&res), 2);
        assert_eq!(g.max_degree(), 14);
        assert_eq!(res.claimed_max_degree, 14);
        // 64 >= 64: threshold exactly met, promise ceil(sqrt(3)/2 * 7)
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(7)));
    }

    #[test]
    fn even_wider_core() {
        let res = treewidth_even_family(5, 4, 16, DEFAULT_BUDGET).unwrap();
        let g = &res.graph;
        assert_eq!(res.params["q"], "3");
        assert_eq!(g.vertex_count(), 678);
        assert!(g.diameter_at_most(4));
        assert_eq!(width_of(&res), 5);
        assert_eq!(res.claimed_max_degree, 28);
        assert_eq!(g.max_degree(), 28);
        // ceil(sqrt(6) * 225 / 2)
        assert_eq!(res.guaranteed_vertices, Some(BigInt::from(276)));
    }

    #[test]
    fn even_oracle_agreement_on_a_small_instance() {
        let res = treewidth_even_family(2, 2, 4, DEFAULT_BUDGET).unwrap();
        let g = &res.graph;
        assert!(g.vertex_count() <= 12);
        let width = width_of(&res);
        assert!(width <= 2);
        assert!(treewidth_oracle(g) <= width);
    }

    #[test]
    fn even_rejections() {
        for (t, k, delta) in [(1, 2, 8), (2, 3, 8), (2, 2, 3), (5, 4, 5)] {
            assert!(matches!(
                treewidth_even_family(t, k, delta, DEFAULT_BUDGET),
                Err(FamilyError::Precondition(_))
            ));
        }
    }
}
