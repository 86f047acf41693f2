//! Word graphs over a finite alphabet: the backbone family whose diameter
//! equals the word length while the degree stays at twice the alphabet size.
//!
//! Vertices are the length-k words over an alphabet of size r, encoded base
//! r with the last symbol least significant. An arc shifts the word left and
//! appends one symbol, so a length-k walk can reach any target word; no
//! shorter scheme can, which pins the directed diameter to exactly k.

use num_bigint::BigInt;

use crate::constructions::{
    fit_budget, param_map, ConstructionResult, CoverFamily, FamilyError,
};
use crate::graph::{Digraph, Graph, Vertex};

pub fn de_bruijn_digraph(r: u64, k: u32, budget: u64) -> Result<Digraph, FamilyError> {
    if r < 1 {
        return Err(FamilyError::Precondition(format!(
            "alphabet size r = {r} violates r >= 1"
        )));
    }
    if k < 1 {
        return Err(FamilyError::Precondition(format!(
            "word length k = {k} violates k >= 1"
        )));
    }
    let n = fit_budget(BigInt::from(r).pow(k), budget)?;
    let r = r as usize;
    let shorter = n / r; // r^{k-1}
    let mut arcs = Vec::with_capacity(n * r);
    for w in 0..n {
        // drop the leading symbol, shift, append each possible new symbol
        let base = (w % shorter) * r;
        for a in 0..r {
            arcs.push((w as Vertex, (base + a) as Vertex));
        }
    }
    Ok(Digraph::from_arcs(n, arcs).expect("shift arcs are in range and distinct"))
}

/// Undirected version plus, for k ≥ 2, a family of vertex sets in which
/// every vertex lies in exactly two sets and every edge is inside a set.
pub fn de_bruijn_graph(
    r: u64,
    k: u32,
    budget: u64,
) -> Result<(Graph, Option<CoverFamily>), FamilyError> {
    let digraph = de_bruijn_digraph(r, k, budget)?;
    let graph = digraph.underlying_graph();
    let cover = if k >= 2 { Some(cover_sets(r as usize, k, graph.vertex_count())) } else { None };
    Ok((graph, cover))
}

/// Sets indexed by the words of length k−1. A word of length k belongs to
/// the set of its first k−1 symbols and the set of its last k−1 symbols.
/// Those two indices coincide exactly for the r constant words; each
/// constant word gets its second membership in the set indexed by the next
/// symbol's constant word, which keeps every set at size 2r and every vertex
/// in exactly two sets. Edges are covered by the first two roles alone: the
/// edge from word w to its shift lies inside the set of their shared k−1
/// symbols.
pub(crate) fn cover_sets(r: usize, k: u32, n: usize) -> CoverFamily {
    if r == 1 {
        // single word; both roles collapse, so its set is listed twice
        return CoverFamily { sets: vec![vec![0], vec![0]] };
    }
    let m = n / r; // r^{k-1} sets
    let mut sets: Vec<Vec<Vertex>> = vec![Vec::new(); m];
    for w in 0..n {
        let prefix = w / r;
        let suffix = w % m;
        sets[prefix].push(w as Vertex);
        if suffix != prefix {
            sets[suffix].push(w as Vertex);
        }
    }
    for a in 0..r {
        let word = constant_word(a, k, r);
        let target = constant_word((a + 1) % r, k - 1, r);
        sets[target].push(word as Vertex);
    }
    for set in &mut sets {
        set.sort_unstable();
    }
    CoverFamily { sets }
}

/// The length-`len` word made of the symbol `a`, as a base-r number.
fn constant_word(a: usize, len: u32, r: usize) -> usize {
    let mut w = 0;
    for _ in 0..len {
        w = w * r + a;
    }
    w
}

pub fn de_bruijn_family(r: u64, k: u32, budget: u64) -> Result<ConstructionResult, FamilyError> {
    let (graph, cover) = de_bruijn_graph(r, k, budget)?;
    let params = param_map([("r", r.to_string()), ("k", k.to_string())]);
    // with one symbol the graph is a single word, so nothing is k apart
    let claimed_diameter = if r >= 2 { k } else { 0 };
    let mut result = ConstructionResult::new("debruijn", params, graph, 2 * r, claimed_diameter);
    result.diameter_is_exact = true;
    result.guaranteed_vertices = Some(BigInt::from(r).pow(k));
    result.cover = cover;
    Ok(result)
}
