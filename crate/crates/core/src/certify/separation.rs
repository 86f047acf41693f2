//! Balanced separators: verification, and extraction from an elimination
//! witness.
//!
//! A separation splits the vertices into three parts (left, separator,
//! right) with no edge between left and right and neither side holding more
//! than two thirds of all vertices. Any graph with a verified elimination
//! witness of width w has one with separator size at most w + 1: some bag of
//! the induced tree decomposition works, and `separator_from_witness` finds
//! one by trying every bag.

use crate::certify::chordal::{filled_graph, order_positions, ChordalWitness};
use crate::certify::WitnessError;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub left: Vec<Vertex>,
    pub separator: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

#[derive(Debug, PartialEq, Eq)]
pub enum SeparationVerdict {
    Balanced { separator_size: usize },
    /// An edge with one end in `left` and the other in `right`.
    CrossingEdge(Vertex, Vertex),
    /// A side with more than two thirds of the vertices; `size` is its
    /// vertex count, against total `n`.
    SideTooLarge { side: &'static str, size: usize, n: usize },
}

pub fn verify_separation(g: &Graph, s: &Separation) -> Result<SeparationVerdict, WitnessError> {
    let n = g.vertex_count();
    // 0 left, 1 separator, 2 right
    let mut part = vec![u8::MAX; n];
    for (tag, list) in [(0u8, &s.left), (1, &s.separator), (2, &s.right)] {
        for &v in list {
            if v as usize >= n {
                return Err(WitnessError::VertexOutOfRange { vertex: v, n });
            }
            if part[v as usize] != u8::MAX {
                return Err(WitnessError::PartOverlap(v));
            }
            part[v as usize] = tag;
        }
    }
    if let Some(v) = part.iter().position(|&p| p == u8::MAX) {
        return Err(WitnessError::PartMissing(v as Vertex));
    }
    for &(u, v) in g.edges() {
        let (pu, pv) = (part[u as usize], part[v as usize]);
        if pu.min(pv) == 0 && pu.max(pv) == 2 {
            return Ok(SeparationVerdict::CrossingEdge(u, v));
        }
    }
    for (side, list) in [("left", &s.left), ("right", &s.right)] {
        if 3 * list.len() > 2 * n {
            return Ok(SeparationVerdict::SideTooLarge { side, size: list.len(), n });
        }
    }
    Ok(SeparationVerdict::Balanced { separator_size: s.separator.len() })
}

/// Tries each bag {v} + later neighbours of the filled graph, late
/// eliminations first, and returns the first whose removal lets the rest be
/// packed into two balanced sides. A witness that verifies always yields
/// one; a malformed witness yields None.
pub fn separator_from_witness(g: &Graph, witness: &ChordalWitness) -> Option<Separation> {
    let filled = filled_graph(g, witness).ok()?;
    let pos = order_positions(g.vertex_count(), &witness.order).ok()?;
    for &v in witness.order.iter().rev() {
        let mut bag: Vec<Vertex> = filled
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u as usize] > pos[v as usize])
            .collect();
        bag.push(v);
        bag.sort_unstable();
        if let Some(sep) = split_around(g, &bag) {
            return Some(sep);
        }
    }
    None
}

/// Removes `bag`, then packs the remaining components into two sides of at
/// most two thirds of all vertices each, if possible. Subset sum over
/// component sizes; `origin[s]` remembers which component first reached sum
/// s, so a valid side can be reconstructed.
fn split_around(g: &Graph, bag: &[Vertex]) -> Option<Separation> {
    let n = g.vertex_count();
    let mut in_bag = vec![false; n];
    for &v in bag {
        in_bag[v as usize] = true;
    }
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<Vertex>> = Vec::new();
    for s in 0..n as Vertex {
        if in_bag[s as usize] || comp[s as usize] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![s];
        comp[s as usize] = id;
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !in_bag[w as usize] && comp[w as usize] == usize::MAX {
                    comp[w as usize] = id;
                    members.push(w);
                }
            }
        }
        comps.push(members);
    }
    let total: usize = comps.iter().map(|c| c.len()).sum();
    let limit = 2 * n / 3; // a side of size s is balanced iff 3 s <= 2 n
    if total > 2 * limit {
        return None;
    }
    const SENTINEL: usize = usize::MAX - 1;
    let mut origin = vec![usize::MAX; total + 1];
    origin[0] = SENTINEL;
    for (i, c) in comps.iter().enumerate() {
        let size = c.len();
        // descending, so origin[s - size] still reflects components before i
        for s in (size..=total).rev() {
            if origin[s] == usize::MAX && origin[s - size] != usize::MAX {
                origin[s] = i;
            }
        }
    }
    let lo = total.saturating_sub(limit);
    let target = (lo..=limit.min(total)).find(|&s| origin[s] != usize::MAX)?;
    let mut chosen = vec![false; comps.len()];
    let mut s = target;
    while s > 0 {
        let i = origin[s];
        chosen[i] = true;
        s -= comps[i].len();
    }
    let mut left = Vec::with_capacity(target);
    let mut right = Vec::with_capacity(total - target);
    for (i, c) in comps.iter().enumerate() {
        if chosen[i] {
            left.extend_from_slice(c);
        } else {
            right.extend_from_slice(c);
        }
    }
    left.sort_unstable();
    right.sort_unstable();
    Some(Separation { left, separator: bag.to_vec(), right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::chordal::verify_chordal_witness;
    use crate::certify::chordal::ChordalVerdict;
    use proptest::prelude::*;

    #[test]
    fn path_splits_at_the_middle() {
        let p5 = Graph::path(5).unwrap();
        let w = ChordalWitness { fill_edges: vec![], order: vec![0, 4, 1, 3, 2] };
        let sep = separator_from_witness(&p5, &w).unwrap();
        assert_eq!(sep.separator, vec![2]);
        assert_eq!(sep.left.len(), 2);
        assert_eq!(sep.right.len(), 2);
        assert_eq!(
            verify_separation(&p5, &sep),
            Ok(SeparationVerdict::Balanced { separator_size: 1 })
        );
    }

    #[test]
    fn complete_graph_separation_is_lopsided_but_legal() {
        // an empty left side is allowed, so a K5 separation needs only
        // enough separator to leave at most two thirds on the right
        let k5 = Graph::complete(5).unwrap();
        let w = ChordalWitness { fill_edges: vec![], order: vec![0, 1, 2, 3, 4] };
        let sep = separator_from_witness(&k5, &w).unwrap();
        let size = sep.separator.len();
        assert_eq!(
            verify_separation(&k5, &sep),
            Ok(SeparationVerdict::Balanced { separator_size: size })
        );
        assert!(size >= 2, "removing fewer than 2 vertices leaves more than two thirds");
    }

    #[test]
    fn crossing_edge_detected() {
        let p3 = Graph::path(3).unwrap();
        let bad = Separation { left: vec![0, 1], separator: vec![], right: vec![2] };
        assert_eq!(verify_separation(&p3, &bad), Ok(SeparationVerdict::CrossingEdge(1, 2)));
    }

    #[test]
    fn oversized_side_detected() {
        // star: centre 0, leaves 1..=4; all leaves on one side
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        let skewed = Separation { left: vec![1, 2, 3, 4], separator: vec![0], right: vec![] };
        assert_eq!(
            verify_separation(&star, &skewed),
            Ok(SeparationVerdict::SideTooLarge { side: "left", size: 4, n: 5 })
        );
    }

    #[test]
    fn partition_shape_errors() {
        let p3 = Graph::path(3).unwrap();
        let overlap = Separation { left: vec![0, 1], separator: vec![1], right: vec![2] };
        assert_eq!(verify_separation(&p3, &overlap), Err(WitnessError::PartOverlap(1)));
        let missing = Separation { left: vec![0], separator: vec![1], right: vec![] };
        assert_eq!(verify_separation(&p3, &missing), Err(WitnessError::PartMissing(2)));
        let out = Separation { left: vec![0, 7], separator: vec![1], right: vec![2] };
        assert_eq!(
            verify_separation(&p3, &out),
            Err(WitnessError::VertexOutOfRange { vertex: 7, n: 3 })
        );
    }

    #[test]
    fn many_small_components_get_packed() {
        // spider: centre joined to 9 legs of length 2, n = 19
        let mut es = Vec::new();
        for leg in 0..9u32 {
            es.push((0, 1 + 2 * leg));
            es.push((1 + 2 * leg, 2 + 2 * leg));
        }
        let g = Graph::from_edges(19, es).unwrap();
        let sep = split_around(&g, &[0]).unwrap();
        assert_eq!(
            verify_separation(&g, &sep),
            Ok(SeparationVerdict::Balanced { separator_size: 1 })
        );
        // 18 vertices in legs, balance forces at least a 6/12 split
        assert!(sep.left.len() >= 6 && sep.right.len() >= 6);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..=10).prop_flat_map(|n| {
            let all: Vec<(Vertex, Vertex)> = (0..n as Vertex)
                .flat_map(|u| ((u + 1)..n as Vertex).map(move |v| (u, v)))
                .collect();
            let count = all.len();
            proptest::collection::vec(0..count, 0..=count).prop_map(move |picks| {
                let mut chosen: Vec<_> = picks.iter().map(|&i| all[i]).collect();
                chosen.sort_unstable();
                chosen.dedup();
                Graph::from_edges(n, chosen).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn any_verified_witness_yields_a_balanced_separation(g in arb_graph()) {
            let w = crate::certify::chordal::greedy_fill_in(&g);
            let verdict = verify_chordal_witness(&g, &w).unwrap();
            let width = match verdict {
                ChordalVerdict::EliminationOrder { width } => width,
                other => return Err(TestCaseError::fail(format!("greedy must verify: {other:?}"))),
            };
            let sep = separator_from_witness(&g, &w)
                .expect("a verified witness always yields a separator bag");
            prop_assert!(sep.separator.len() <= width + 1);
            prop_assert_eq!(
                verify_separation(&g, &sep).unwrap(),
                SeparationVerdict::Balanced { separator_size: sep.separator.len() }
            );
        }
    }
}
