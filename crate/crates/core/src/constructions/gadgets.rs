//! Clique gadgets shared by the degree-bounded families: the line graph of
//! a complete graph, whose vertices are unordered index pairs, and the
//! bipartite attachment gadget built over it.
//!
//! The pair structure is what everything downstream leans on: vertex {i, j}
//! lies in exactly the two cliques L_i and L_j, and any two cliques meet,
//! so an element attached to a whole clique is two steps from anything
//! attached to any other clique.

use crate::constructions::FamilyError;
use crate::graph::{Graph, Vertex};

/// Index of the pair {i, j} (i < j) among all pairs from 0..=q, ordered
/// lexicographically.
fn pair_slot(i: u64, j: u64, q: u64) -> u64 {
    debug_assert!(i < j && j <= q);
    i * q - (i * i - i) / 2 + (j - i - 1)
}

/// The line graph of the complete graph on q+1 indices, together with its
/// clique cover L_0..L_q where L_i holds the q pairs containing i. Each
/// vertex lies in exactly two cliques and every two cliques intersect.
pub fn line_of_complete(q: u64) -> (Graph, Vec<Vec<Vertex>>) {
    assert!(q >= 1, "need at least two indices to form a pair");
    let n = ((q + 1) * q / 2) as usize;
    let mut cliques: Vec<Vec<Vertex>> = vec![Vec::new(); q as usize + 1];
    for i in 0..q {
        for j in (i + 1)..=q {
            let v = pair_slot(i, j, q) as Vertex;
            cliques[i as usize].push(v);
            cliques[j as usize].push(v);
        }
    }
    let mut edges = Vec::new();
    for clique in &cliques {
        // two pairs share at most one index, so no edge repeats across cliques
        for a in 0..clique.len() {
            for b in (a + 1)..clique.len() {
                edges.push((clique[a], clique[b]));
            }
        }
    }
    let graph = Graph::from_edges(n, edges).expect("clique cover edges are simple");
    (graph, cliques)
}

/// Bipartite gadget: m attachment vertices in q+1 groups of up to p slots,
/// and one hub per index pair, each hub adjacent to the live slots of its
/// two groups. Attachment vertices get degree exactly q, hubs at most 2p,
/// and any two attachment vertices share a hub. Vertices 0..m are the
/// slots (group g holds slots g·p..(g+1)·p, truncated past m); hubs follow.
pub fn common_neighbour_bipartite(p: u64, q: u64, m: u64) -> Result<Graph, FamilyError> {
    if p < 1 {
        return Err(FamilyError::Precondition(format!("group size p = {p} violates p >= 1")));
    }
    if q < 1 {
        return Err(FamilyError::Precondition(format!("pair range q = {q} violates q >= 1")));
    }
    if m > (q + 1) * p {
        return Err(FamilyError::Precondition(format!(
            "slot count m = {m} violates m <= (q+1)p = {}",
            (q + 1) * p
        )));
    }
    let hubs = (q + 1) * q / 2;
    let n = (m + hubs) as usize;
    let mut edges = Vec::new();
    for i in 0..q {
        for j in (i + 1)..=q {
            let hub = (m + pair_slot(i, j, q)) as Vertex;
            for g in [i, j] {
                let live = m.min((g + 1) * p).saturating_sub(g * p);
                for s in 0..live {
                    edges.push((hub, (g * p + s) as Vertex));
                }
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("hub edges are simple"))
}
