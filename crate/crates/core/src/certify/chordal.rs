//! Treewidth upper bounds through elimination orders.
//!
//! A witness is a set of fill edges plus a vertex order. If, in the filled
//! graph, every vertex's later neighbours minus the earliest of them all lie
//! in that earliest neighbour's neighbourhood, the order is a perfect
//! elimination order of the filled graph. The bags {v} + later neighbours
//! then form a valid tree decomposition, so the largest later neighbourhood
//! bounds the treewidth of the filled graph and hence of the original.

use crate::certify::WitnessError;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalWitness {
    /// Extra edges, none of which may already be present.
    pub fill_edges: Vec<(Vertex, Vertex)>,
    /// Elimination order; `order[0]` is eliminated first.
    pub order: Vec<Vertex>,
}

#[derive(Debug, PartialEq, Eq)]
pub enum ChordalVerdict {
    /// The order is a perfect elimination order of the filled graph and
    /// every later neighbourhood has at most `width` vertices, so the
    /// treewidth is at most `width`.
    EliminationOrder { width: usize },
    /// `vertex` has two later neighbours, the earliest of which
    /// (`earliest`) is not adjacent to `unmatched`.
    NotEliminationOrder { vertex: Vertex, earliest: Vertex, unmatched: Vertex },
}

/// Builds graph + fill, rejecting fill edges that are loops, repeats, or
/// already present.
pub fn filled_graph(g: &Graph, witness: &ChordalWitness) -> Result<Graph, WitnessError> {
    let n = g.vertex_count();
    let mut fill = Vec::with_capacity(witness.fill_edges.len());
    for &(a, b) in &witness.fill_edges {
        for x in [a, b] {
            if x as usize >= n {
                return Err(WitnessError::VertexOutOfRange { vertex: x, n });
            }
        }
        if a == b {
            return Err(WitnessError::FillLoop(a));
        }
        let e = if a < b { (a, b) } else { (b, a) };
        if g.has_edge(e.0, e.1) {
            return Err(WitnessError::FillEdgePresent(e.0, e.1));
        }
        fill.push(e);
    }
    fill.sort_unstable();
    for w in fill.windows(2) {
        if w[0] == w[1] {
            return Err(WitnessError::DuplicateFill(w[0].0, w[0].1));
        }
    }
    let all = g.edges().iter().copied().chain(fill);
    Ok(Graph::from_edges(n, all).expect("both edge sets were validated"))
}

pub fn verify_chordal_witness(
    g: &Graph,
    witness: &ChordalWitness,
) -> Result<ChordalVerdict, WitnessError> {
    let filled = filled_graph(g, witness)?;
    let pos = order_positions(g.vertex_count(), &witness.order)?;
    let mut width = 0;
    for &v in &witness.order {
        let pv = pos[v as usize];
        let later: Vec<Vertex> = filled
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u as usize] > pv)
            .collect();
        width = width.max(later.len());
        if later.len() >= 2 {
            let earliest = *later.iter().min_by_key(|&&u| pos[u as usize]).unwrap();
            for &x in &later {
                if x != earliest && !filled.has_edge(earliest, x) {
                    return Ok(ChordalVerdict::NotEliminationOrder { vertex: v, earliest, unmatched: x });
                }
            }
        }
    }
    Ok(ChordalVerdict::EliminationOrder { width })
}

pub(crate) fn order_positions(n: usize, order: &[Vertex]) -> Result<Vec<usize>, WitnessError> {
    if order.len() != n {
        return Err(WitnessError::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v as usize >= n || pos[v as usize] != usize::MAX {
            return Err(WitnessError::NotAPermutation);
        }
        pos[v as usize] = i;
    }
    Ok(pos)
}

/// Minimum degree elimination: repeatedly eliminate a vertex of smallest
/// current degree and add the fill needed to turn its remaining neighbours
/// into a clique. The witness always verifies; its width can overshoot the
/// true treewidth.
pub fn greedy_fill_in(g: &Graph) -> ChordalWitness {
    let n = g.vertex_count();
    let mut working = working_adjacency(g);
    let mut gone = vec![false; n];
    let mut fill = Vec::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n as Vertex)
            .filter(|&v| !gone[v as usize])
            .min_by_key(|&v| working[v as usize].len())
            .unwrap();
        gone[v as usize] = true;
        order.push(v);
        eliminate(g, &mut working, &mut fill, v);
    }
    ChordalWitness { fill_edges: fill, order }
}

/// Fill produced by eliminating along a fixed order. The result paired with
/// `order` always verifies.
pub fn fill_along_order(g: &Graph, order: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut working = working_adjacency(g);
    let mut fill = Vec::new();
    for &v in order {
        eliminate(g, &mut working, &mut fill, v);
    }
    fill
}

type WorkingAdjacency = Vec<std::collections::BTreeSet<Vertex>>;

fn working_adjacency(g: &Graph) -> WorkingAdjacency {
    (0..g.vertex_count() as Vertex)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect()
}

fn eliminate(g: &Graph, working: &mut WorkingAdjacency, fill: &mut Vec<(Vertex, Vertex)>, v: Vertex) {
    let nbrs: Vec<Vertex> = working[v as usize].iter().copied().collect();
    for &u in &nbrs {
        working[u as usize].remove(&v);
    }
    working[v as usize].clear();
    for i in 0..nbrs.len() {
        for j in (i + 1)..nbrs.len() {
            let (a, b) = (nbrs[i], nbrs[j]);
            if working[a as usize].insert(b) {
                working[b as usize].insert(a);
                if !g.has_edge(a, b) {
                    fill.push((a, b));
                }
            }
        }
    }
}
