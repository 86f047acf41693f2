//! Graph products and exact-length walk reachability.
//!
//! Vertex `(v, x)` of a product of G (n1 vertices) and H (n2 vertices) gets
//! index `v * n2 + x`.

use crate::graph::{Graph, Pseudograph, Vertex};
use rayon::prelude::*;

pub fn pair_index(v: Vertex, x: Vertex, n2: usize) -> Vertex {
    v * n2 as Vertex + x
}

/// Cartesian product: `(v, x)` adjacent to `(v, y)` for `xy` in H and to
/// `(w, x)` for `vw` in G.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (n1, n2) = (g.vertex_count(), h.vertex_count());
    let mut es = Vec::with_capacity(n1 * h.edge_count() + n2 * g.edge_count());
    for v in 0..n1 as Vertex {
        for &(x, y) in h.edges() {
            es.push((pair_index(v, x, n2), pair_index(v, y, n2)));
        }
    }
    for &(v, w) in g.edges() {
        for x in 0..n2 as Vertex {
            es.push((pair_index(v, x, n2), pair_index(w, x, n2)));
        }
    }
    Graph::from_edges(n1 * n2, es).expect("products of valid graphs are valid")
}

/// Direct product: `(a, c)` adjacent to `(b, d)` iff `ab` is an edge item of
/// G and `cd` is an edge item of H, where a loop makes a vertex its own
/// neighbour. The product has a loop at `(a, c)` exactly when both factors
/// have one at `a` and `c`.
///
/// Item degrees multiply: the product degree of `(a, c)` is
/// `item_degree(a) * item_degree(c)`, counting a product loop once.
pub fn direct_product(g: &Pseudograph, h: &Pseudograph) -> Pseudograph {
    let (n1, n2) = (g.graph.vertex_count(), h.graph.vertex_count());
    let mut es = Vec::new();
    for &(a, b) in g.graph.edges() {
        for &(c, d) in h.graph.edges() {
            // two ways to pair up the endpoints, distinct because c != d
            es.push((pair_index(a, c, n2), pair_index(b, d, n2)));
            es.push((pair_index(a, d, n2), pair_index(b, c, n2)));
        }
        for c in 0..n2 as Vertex {
            if h.loop_at(c) {
                es.push((pair_index(a, c, n2), pair_index(b, c, n2)));
            }
        }
    }
    for a in 0..n1 as Vertex {
        if g.loop_at(a) {
            for &(c, d) in h.graph.edges() {
                es.push((pair_index(a, c, n2), pair_index(a, d, n2)));
            }
        }
    }
    let mut loops = vec![false; n1 * n2];
    for a in 0..n1 as Vertex {
        for c in 0..n2 as Vertex {
            if g.loop_at(a) && h.loop_at(c) {
                loops[pair_index(a, c, n2) as usize] = true;
            }
        }
    }
    let graph = Graph::from_edges(n1 * n2, es).expect("products of valid graphs are valid");
    Pseudograph::new(graph, loops).unwrap()
}

/// Adds a loop at every vertex.
pub fn loopify(g: &Graph) -> Pseudograph {
    let loops = vec![true; g.vertex_count()];
    Pseudograph::new(g.clone(), loops).unwrap()
}

/// Largest vertex count for which `is_k_good` uses boolean matrix powers;
/// beyond it a slower per-source layered search takes over.
const KGOOD_MATRIX_LIMIT: usize = 4096;

/// True iff between every ordered vertex pair (including a vertex and
/// itself) there is a walk of length exactly `k`, loops allowed as steps.
///
/// If two pseudographs both have this property, their direct product has
/// diameter at most `k`: walk the factors in lockstep.
pub fn is_k_good(g: &Pseudograph, k: u32) -> bool {
    is_k_good_with_limit(g, k, KGOOD_MATRIX_LIMIT)
}

fn is_k_good_with_limit(g: &Pseudograph, k: u32, matrix_limit: usize) -> bool {
    let n = g.graph.vertex_count();
    if n <= matrix_limit {
        let mut a = BoolMat::zero(n);
        for &(u, v) in g.graph.edges() {
            a.set(u as usize, v as usize);
            a.set(v as usize, u as usize);
        }
        for v in 0..n {
            if g.loop_at(v as Vertex) {
                a.set(v, v);
            }
        }
        a.pow(k).all_ones()
    } else {
        (0..n).into_par_iter().all(|s| {
            let mut cur = vec![false; n];
            let mut next = vec![false; n];
            cur[s] = true;
            for _ in 0..k {
                next.iter_mut().for_each(|b| *b = false);
                for v in 0..n {
                    if cur[v] {
                        for &w in g.graph.neighbors(v as Vertex) {
                            next[w as usize] = true;
                        }
                        if g.loop_at(v as Vertex) {
                            next[v] = true;
                        }
                    }
                }
                std::mem::swap(&mut cur, &mut next);
            }
            cur.iter().all(|&b| b)
        })
    }
}

/// Square boolean matrix over the or/and semiring, rows packed into u64.
#[derive(Clone)]
struct BoolMat {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMat {
    fn zero(n: usize) -> Self {
        let words = n.div_ceil(64);
        BoolMat { n, words, bits: vec![0; n * words] }
    }

    fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        out.bits
            .par_chunks_mut(self.words)
            .enumerate()
            .for_each(|(i, out_row)| {
                for (w, &word) in self.row(i).iter().enumerate() {
                    let mut word = word;
                    while word != 0 {
                        let j = w * 64 + word.trailing_zeros() as usize;
                        word &= word - 1;
                        for (o, &b) in out_row.iter_mut().zip(other.row(j)) {
                            *o |= b;
                        }
                    }
                }
            });
        out
    }

    fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    fn all_ones(&self) -> bool {
        let full_words = self.n / 64;
        let tail = self.n % 64;
        for i in 0..self.n {
            let row = self.row(i);
            if row[..full_words].iter().any(|&w| w != u64::MAX) {
                return false;
            }
            if tail > 0 && row[full_words] != (1u64 << tail) - 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Diameter;
    use proptest::prelude::*;

    #[test]
    fn cartesian_of_paths_is_grid() {
        let p2 = Graph::path(2).unwrap();
        let c4 = cartesian_product(&p2, &p2);
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.diameter(), Diameter::Finite(2));
        let p3 = Graph::path(3).unwrap();
        let grid = cartesian_product(&p3, &p3);
        assert_eq!(grid.vertex_count(), 9);
        assert_eq!(grid.edge_count(), 12);
        assert_eq!(grid.max_degree(), 4);
        assert_eq!(grid.diameter(), Diameter::Finite(4));
    }

    #[test]
    fn direct_product_degrees_multiply() {
        let k3 = Pseudograph::simple(Graph::complete(3).unwrap());
        let c5l = loopify(&Graph::cycle(5).unwrap());
        let p = direct_product(&c5l, &k3);
        assert_eq!(p.graph.vertex_count(), 15);
        assert_eq!(p.loop_count(), 0);
        for v in 0..15 {
            // item degree 3 on the looped cycle, 2 on the triangle
            assert_eq!(p.item_degree(v), 6);
        }
    }

    #[test]
    fn direct_product_loops_require_both() {
        let a = loopify(&Graph::path(2).unwrap());
        let mut loops = vec![false; 2];
        loops[0] = true;
        let b = Pseudograph::new(Graph::path(2).unwrap(), loops).unwrap();
        let p = direct_product(&a, &b);
        // loops exactly at (v, 0)
        assert!(p.loop_at(0));
        assert!(!p.loop_at(1));
        assert!(p.loop_at(2));
        assert!(!p.loop_at(3));
    }

    #[test]
    fn triangle_walk_lengths() {
        let k3 = Pseudograph::simple(Graph::complete(3).unwrap());
        assert!(!is_k_good(&k3, 1));
        for k in 2..=10 {
            assert!(is_k_good(&k3, k), "walks of length {k} should cover all pairs");
        }
    }

    #[test]
    fn pentagon_walk_lengths() {
        let c5 = Pseudograph::simple(Graph::cycle(5).unwrap());
        for k in 0..=3 {
            assert!(!is_k_good(&c5, k));
        }
        for k in 4..=10 {
            assert!(is_k_good(&c5, k), "walks of length {k} should cover all pairs");
        }
        // a loop at every vertex lets walks idle, so length 2 already works
        let c5l = loopify(&Graph::cycle(5).unwrap());
        assert!(!is_k_good(&c5l, 1));
        assert!(is_k_good(&c5l, 2));
    }

    #[test]
    fn zero_good_only_for_single_vertex() {
        let one = Pseudograph::simple(Graph::empty(1).unwrap());
        assert!(is_k_good(&one, 0));
        let two = Pseudograph::simple(Graph::path(2).unwrap());
        assert!(!is_k_good(&two, 0));
    }

    fn arb_pseudograph() -> impl Strategy<Value = Pseudograph> {
        (1usize..12).prop_flat_map(|n| {
            let max_edges = n * (n - 1) / 2;
            (
                proptest::collection::vec(0..max_edges.max(1), 0..=max_edges),
                proptest::collection::vec(any::<bool>(), n),
            )
                .prop_map(move |(picks, loops)| {
                    let mut all = Vec::new();
                    for u in 0..n as Vertex {
                        for v in (u + 1)..n as Vertex {
                            all.push((u, v));
                        }
                    }
                    let mut chosen: Vec<(Vertex, Vertex)> =
                        picks.into_iter().map(|i| all[i % all.len().max(1)]).collect();
                    chosen.sort_unstable();
                    chosen.dedup();
                    Pseudograph::new(Graph::from_edges(n, chosen).unwrap(), loops).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn matrix_and_layered_routes_agree(g in arb_pseudograph(), k in 0u32..8) {
            prop_assert_eq!(
                is_k_good_with_limit(&g, k, usize::MAX),
                is_k_good_with_limit(&g, k, 0)
            );
        }

        #[test]
        fn good_walks_extend_by_two(g in arb_pseudograph(), k in 1u32..6) {
            // exact-length walks everywhere force min degree >= 1, so any
            // walk can be padded by stepping to a neighbour and back
            if is_k_good(&g, k) {
                prop_assert!(is_k_good(&g, k + 2));
            }
        }

        #[test]
        fn direct_product_item_degrees(a in arb_pseudograph(), b in arb_pseudograph()) {
            let p = direct_product(&a, &b);
            let n2 = b.graph.vertex_count();
            for v in 0..a.graph.vertex_count() as Vertex {
                for x in 0..n2 as Vertex {
                    prop_assert_eq!(
                        p.item_degree(pair_index(v, x, n2)),
                        a.item_degree(v) * b.item_degree(x)
                    );
                }
            }
        }
    }
}
