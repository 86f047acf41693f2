//! Families of low arboricity: everything is a forest union certificate
//! away from its claimed sparsity.
//!
//! The general-diameter family never keeps an edge of the word graph it is
//! built over. It keeps only the word graph's vertex set and its two-sets-
//! per-vertex cover, and replaces each cover set by a bipartite hub gadget.
//! Hubs have degree at most b, word vertices exactly 2q = Δ, and every
//! former word edge turns into a two-step hub path, which doubles the
//! diameter of the word graph and adds two for the hub hops.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::bounds::ceil_rational;
use crate::certify::forest::ForestDecomposition;
use crate::constructions::debruijn::cover_sets;
use crate::constructions::{
    fit_budget, line_of_complete, param_map, ConstructionResult, FamilyError,
};
use crate::graph::{Graph, Vertex};

pub fn arboricity_family(
    b: u64,
    k: u32,
    delta: u64,
    budget: u64,
) -> Result<ConstructionResult, FamilyError> {
    if b < 2 || b % 2 != 0 {
        return Err(FamilyError::Precondition(format!(
            "arboricity target b = {b} violates b even and b >= 2"
        )));
    }
    if k < 4 || k % 2 != 0 {
        return Err(FamilyError::Precondition(format!(
            "diameter k = {k} violates k even and k >= 4"
        )));
    }
    if delta % 2 != 0 {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} must be even"
        )));
    }
    if delta < b {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= b = {b}"
        )));
    }
    if delta % 4 != 2 && b % 4 != 0 {
        return Err(FamilyError::Precondition(format!(
            "need delta = 2 (mod 4) or b = 0 (mod 4), got delta = {delta}, b = {b}"
        )));
    }
    let q = delta / 2;
    let p = b / 2;
    let ell = k / 2 - 1;
    // integer by the parity precondition
    let r = (q + 1) * p / 2;

    // every gadget has the same set size, so the final order is a formula
    let word_vertices = BigInt::from(r).pow(ell);
    let (gadget_count, set_len) = if ell == 1 {
        (BigInt::from(2), r)
    } else if r == 1 {
        (BigInt::from(2), 1)
    } else {
        (BigInt::from(r).pow(ell - 1), 2 * r)
    };
    let total = &word_vertices + gadget_count * kept_hubs(set_len, p, q);
    let n = fit_budget(total, budget)?;

    let n_b = word_vertices.to_usize().expect("word count under the checked total");
    let sets = if ell == 1 {
        vec![(0..n_b as Vertex).collect::<Vec<_>>(); 2]
    } else {
        cover_sets(r as usize, ell, n_b).sets
    };

    let groups = (q + 1) as usize;
    let p_us = p as usize;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut next = n_b;
    for set in &sets {
        let m = set.len();
        let live = |g: usize| m.min((g + 1) * p_us).saturating_sub(g * p_us);
        for g in 0..groups {
            for h in (g + 1)..groups {
                if live(g) == 0 && live(h) == 0 {
                    continue; // hub would be isolated
                }
                let hub = next as Vertex;
                next += 1;
                for side in [g, h] {
                    for s in 0..live(side) {
                        edges.push((hub, set[side * p_us + s]));
                    }
                }
            }
        }
    }
    debug_assert_eq!(next, n);
    let graph = Graph::from_edges(n, edges).expect("hub edges are simple");

    // star forests: give each edge the lowest colour unused at its hub,
    // which exists because hub degrees stay at most 2p = b
    let mut used: Vec<Vec<bool>> = vec![vec![false; b as usize]; n - n_b];
    let mut colors = Vec::with_capacity(graph.edge_count());
    for &(u, v) in graph.edges() {
        let hub = if (u as usize) >= n_b { u } else { v };
        let palette = &mut used[hub as usize - n_b];
        let c = palette.iter().position(|&x| !x).expect("hub degree exceeds b");
        palette[c] = true;
        colors.push(c);
    }

    let params = param_map([
        ("b", b.to_string()),
        ("k", k.to_string()),
        ("delta", delta.to_string()),
        ("q", q.to_string()),
        ("p", p.to_string()),
        ("l", ell.to_string()),
        ("r", r.to_string()),
    ]);
    let mut result = ConstructionResult::new("arboricity", params, graph, delta, k);
    result.claimed_arboricity = Some(b);
    result.forest = Some(ForestDecomposition { colors, classes: b as usize });
    let half = k / 2;
    let promised = BigRational::new(
        BigInt::from(8) * BigInt::from(b * delta).pow(half),
        BigInt::from(b * b) * BigInt::from(8).pow(half),
    );
    result.guaranteed_vertices = Some(ceil_rational(&promised));
    Ok(result)
}

/// Hubs kept per gadget: all pairs of groups except the pairs whose both
/// groups hold no live slot.
fn kept_hubs(set_len: u64, p: u64, q: u64) -> BigInt {
    let groups = q + 1;
    let live_groups = set_len.div_ceil(p).min(groups);
    let dead = groups - live_groups;
    BigInt::from(groups * (groups - 1) / 2 - dead * dead.saturating_sub(1) / 2)
}

/// Diameter-2 variant: a clique cover gadget with an independent cloud
/// joined to each clique. Cliques meet pairwise, which pins the diameter
/// at 2 while the clouds multiply the vertex count.
pub fn arboricity_diam2_family(
    b: u64,
    delta: u64,
    budget: u64,
) -> Result<ConstructionResult, FamilyError> {
    if b < 1 {
        return Err(FamilyError::Precondition(format!(
            "arboricity target b = {b} violates b >= 1"
        )));
    }
    if delta % 2 != 0 {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} must be even"
        )));
    }
    if delta < 4 * b {
        return Err(FamilyError::Precondition(format!(
            "maximum degree {delta} violates delta >= 4b = {}",
            4 * b
        )));
    }
    let p = delta / 2 - b + 1;
    let core = (b + 1) * b / 2;
    let total = BigInt::from(core) + BigInt::from((b + 1) * p);
    let n = fit_budget(total, budget)?;

    let (core_graph, cliques) = line_of_complete(b);
    let mut edges: Vec<(Vertex, Vertex)> = core_graph.edges().to_vec();
    let mut next = core_graph.vertex_count();
    for clique in &cliques {
        for s in 0..p as usize {
            let cloud = (next + s) as Vertex;
            for &x in clique {
                edges.push((x, cloud));
            }
        }
        next += p as usize;
    }
    debug_assert_eq!(next, n);
    let graph = Graph::from_edges(n, edges).expect("cloud edges are simple");

    let params = param_map([
        ("b", b.to_string()),
        ("delta", delta.to_string()),
        ("p", p.to_string()),
    ]);
    let mut result = ConstructionResult::new("arboricity-diam2", params, graph, delta, 2);
    result.claimed_arboricity = Some(b);
    result.guaranteed_vertices =
        Some(ceil_rational(&BigRational::new(BigInt::from(b * delta), BigInt::from(4))));
    Ok(result)
}
