//! Exact treewidth for tiny graphs, as a reference point for the witness
//! based upper bounds.
//!
//! Dynamic programming over vertex subsets: f(S) is the best possible
//! maximum back-degree when the vertices of S are eliminated first, where
//! eliminating v costs the number of vertices outside the eliminated set
//! that v can reach through it. f(V) is the treewidth.

use crate::graph::Graph;

pub fn treewidth_oracle(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16, "subset enumeration needs a tiny graph");
    if n == 1 {
        return 0;
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    let mut f = vec![0u8; 1usize << n];
    for s in 1u32..(1 << n) {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let cost = back_degree(&adj, without, v);
            best = best.min(f[without as usize].max(cost));
        }
        f[s as usize] = best;
    }
    f[(1usize << n) - 1] as usize
}

/// Number of vertices outside `through | {v}` reachable from v along paths
/// whose interior stays inside `through`.
fn back_degree(adj: &[u32], through: u32, v: usize) -> u8 {
    let mut seen = 1u32 << v;
    let mut frontier = seen;
    let mut boundary = 0u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            let fresh = adj[x] & !seen;
            seen |= fresh;
            boundary |= fresh & !through;
            next |= fresh & through;
        }
        frontier = next;
    }
    (boundary & !(1 << v)).count_ones() as u8
}
