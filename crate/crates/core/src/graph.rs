//! Simple undirected graphs with compact adjacency storage, plus the degree,
//! distance, and triangle queries everything else is built on.
//!
//! Vertices are dense indices `0..n`. Construction validates its input once,
//! so every later query can assume a well formed graph: no loops, no
//! duplicate edges, endpoints in range, at least one vertex. `Pseudograph`
//! and `Digraph` carry the little extra structure the word-graph
//! constructions need (loops, arcs) and can always be flattened back down.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use std::fmt;
use thiserror::Error;

pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self loop at vertex {0} not allowed in a simple graph")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(Vertex, Vertex),
    #[error("loop flag vector has length {got} but the graph has {n} vertices")]
    LoopLenMismatch { got: usize, n: usize },
}

/// Immutable simple undirected graph.
///
/// Edges are stored once, as `(u, v)` with `u < v`, sorted; adjacency is a
/// flat CSR layout with each neighbour run sorted ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj_off: Vec<usize>,
    adj: Vec<Vertex>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.edges.len())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, Vec::new())
    }

    /// Builds a graph from an edge list. Edges may come in either
    /// orientation; they are normalised to `u < v`. Rejects loops, repeated
    /// edges (in any orientation), endpoints outside `0..n`, and `n == 0`.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        assert!(n <= u32::MAX as usize, "vertex indices are u32");
        let mut es: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in edges {
            if a as usize >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b as usize >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            es.push(if a < b { (a, b) } else { (b, a) });
        }
        es.sort_unstable();
        for w in es.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut deg = vec![0usize; n];
        for &(u, v) in &es {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut adj_off = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        adj_off.push(0);
        for &d in &deg {
            acc += d;
            adj_off.push(acc);
        }
        let mut cursor: Vec<usize> = adj_off[..n].to_vec();
        let mut adj = vec![0 as Vertex; 2 * es.len()];
        for &(u, v) in &es {
            adj[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            adj[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            adj[adj_off[v]..adj_off[v + 1]].sort_unstable();
        }
        Ok(Graph { n, edges: es, adj_off, adj })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut es = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                es.push((u as Vertex, v as Vertex));
            }
        }
        Self::from_edges(n, es)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Empty);
        }
        let es = (0..n).map(|i| (i as Vertex, ((i + 1) % n) as Vertex));
        Self::from_edges(n, es)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let es = (1..n).map(|i| ((i - 1) as Vertex, i as Vertex));
        Self::from_edges(n, es)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Neighbours of `v`, sorted ascending.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[self.adj_off[v as usize]..self.adj_off[v as usize + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj_off[v as usize + 1] - self.adj_off[v as usize]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v as Vertex)).max().unwrap()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v as Vertex)).min().unwrap()
    }

    /// Exact average degree `2m / n`.
    pub fn average_degree(&self) -> BigRational {
        BigRational::new(
            BigInt::from(2 * self.edges.len()),
            BigInt::from(self.n),
        )
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// One BFS from `s`, visiting only vertices within distance `cap`.
    /// Returns (number reached, eccentricity among reached). `dist` must be
    /// all `u32::MAX` on entry and is restored to that state on exit, so
    /// buffers can be reused across calls without clearing.
    fn bfs_ecc(&self, s: Vertex, cap: u32, dist: &mut [u32], order: &mut Vec<Vertex>) -> (usize, u32) {
        order.clear();
        dist[s as usize] = 0;
        order.push(s);
        let mut head = 0;
        let mut ecc = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let dv = dist[v as usize];
            ecc = dv; // pops come in nondecreasing distance order
            if dv < cap {
                for &w in self.neighbors(v) {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dv + 1;
                        order.push(w);
                    }
                }
            }
        }
        let reached = order.len();
        for &v in order.iter() {
            dist[v as usize] = u32::MAX;
        }
        (reached, ecc)
    }

    pub fn is_connected(&self) -> bool {
        let mut dist = vec![u32::MAX; self.n];
        let mut order = Vec::with_capacity(self.n);
        self.bfs_ecc(0, u32::MAX, &mut dist, &mut order).0 == self.n
    }

    /// Exact diameter by one BFS per vertex, in parallel.
    pub fn diameter(&self) -> Diameter {
        if self.n == 1 {
            return Diameter::Finite(0);
        }
        if !self.is_connected() {
            return Diameter::Infinite;
        }
        let max_ecc = (0..self.n as u32)
            .into_par_iter()
            .map_init(
                || (vec![u32::MAX; self.n], Vec::with_capacity(self.n)),
                |(dist, order), s| self.bfs_ecc(s, u32::MAX, dist, order).1,
            )
            .max()
            .unwrap();
        Diameter::Finite(max_ecc)
    }

    /// True iff every pair of vertices is within distance `k`. Cheaper than
    /// `diameter() <= k` because each BFS stops expanding at depth `k`.
    pub fn diameter_at_most(&self, k: u32) -> bool {
        (0..self.n as u32)
            .into_par_iter()
            .map_init(
                || (vec![u32::MAX; self.n], Vec::with_capacity(self.n)),
                |(dist, order), s| self.bfs_ecc(s, k, dist, order).0 == self.n,
            )
            .all(|ok| ok)
    }

    /// First triangle in edge order, vertices sorted, or None.
    pub fn has_triangle(&self) -> Option<[Vertex; 3]> {
        for &(u, v) in &self.edges {
            let a = self.neighbors(u);
            let b = self.neighbors(v);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let mut t = [u, v, a[i]];
                        t.sort_unstable();
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.has_triangle().is_none()
    }
}

/// Diameter of a graph; `Infinite` means disconnected. The variant order
/// makes the derived `Ord` treat every finite value as smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

/// A simple graph plus at most one loop per vertex. Only the graph product
/// machinery cares about loops; everything else works on `Graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pseudograph {
    pub graph: Graph,
    pub loops: Vec<bool>,
}

impl Pseudograph {
    pub fn new(graph: Graph, loops: Vec<bool>) -> Result<Self, GraphError> {
        if loops.len() != graph.vertex_count() {
            return Err(GraphError::LoopLenMismatch { got: loops.len(), n: graph.vertex_count() });
        }
        Ok(Pseudograph { graph, loops })
    }

    pub fn simple(graph: Graph) -> Self {
        let loops = vec![false; graph.vertex_count()];
        Pseudograph { graph, loops }
    }

    pub fn loop_at(&self, v: Vertex) -> bool {
        self.loops[v as usize]
    }

    pub fn loop_count(&self) -> usize {
        self.loops.iter().filter(|&&l| l).count()
    }

    /// Degree counting an incident loop once, which is the count of distinct
    /// edge items at `v` and the quantity that multiplies under the direct
    /// product.
    pub fn item_degree(&self, v: Vertex) -> usize {
        self.graph.degree(v) + self.loop_at(v) as usize
    }
}

/// Immutable directed graph; self arcs are allowed, parallel arcs are not.
/// Arcs are stored sorted by (tail, head), which doubles as a CSR layout:
/// the arcs with tail `v` are the contiguous run `out_range(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    out_off: Vec<usize>,
}

impl Digraph {
    pub fn from_arcs(
        n: usize,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut ar: Vec<(Vertex, Vertex)> = Vec::new();
        for (t, h) in arcs {
            if t as usize >= n {
                return Err(GraphError::VertexOutOfRange { vertex: t, n });
            }
            if h as usize >= n {
                return Err(GraphError::VertexOutOfRange { vertex: h, n });
            }
            ar.push((t, h));
        }
        ar.sort_unstable();
        for w in ar.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateArc(w[0].0, w[0].1));
            }
        }
        let mut out_off = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        let mut next = 0usize;
        out_off.push(0);
        for v in 0..n as u32 {
            while next < ar.len() && ar[next].0 == v {
                next += 1;
                acc += 1;
            }
            out_off.push(acc);
        }
        Ok(Digraph { n, arcs: ar, out_off })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    /// Index range in `arcs()` of the arcs with tail `v`.
    pub fn out_range(&self, v: Vertex) -> std::ops::Range<usize> {
        self.out_off[v as usize]..self.out_off[v as usize + 1]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_range(v).len()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(_, h) in &self.arcs {
            deg[h as usize] += 1;
        }
        deg
    }

    /// Line digraph: one vertex per arc, with an arc from e to f whenever
    /// head(e) = tail(f). A self arc of the base digraph yields a self arc
    /// here (take e = f).
    pub fn line_digraph(&self) -> Result<Digraph, GraphError> {
        let mut arcs = Vec::new();
        for (i, &(_, h)) in self.arcs.iter().enumerate() {
            for j in self.out_range(h) {
                arcs.push((i as Vertex, j as Vertex));
            }
        }
        Digraph::from_arcs(self.arcs.len(), arcs)
    }

    /// Forget orientation: self arcs become loops, antiparallel arc pairs
    /// merge into one edge.
    pub fn underlying_pseudograph(&self) -> Pseudograph {
        let mut loops = vec![false; self.n];
        let mut es: Vec<(Vertex, Vertex)> = Vec::new();
        for &(t, h) in &self.arcs {
            if t == h {
                loops[t as usize] = true;
            } else {
                es.push(if t < h { (t, h) } else { (h, t) });
            }
        }
        es.sort_unstable();
        es.dedup();
        let graph = Graph::from_edges(self.n, es).expect("validated arcs produce a valid graph");
        Pseudograph { graph, loops }
    }

    /// Forget orientation and drop loops.
    pub fn underlying_graph(&self) -> Graph {
        self.underlying_pseudograph().graph
    }
}
