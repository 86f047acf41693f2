//! Exact arboricity through density testing with maximum flows.
//!
//! The arboricity of a graph with at least one edge equals the maximum of
//! ceil(e(S) / (|S| - 1)) over vertex sets S inducing at least one edge,
//! where e(S) counts induced edges. `arboricity_at_most` decides whether any
//! S beats a target b, returning such a set when one exists; the set is a
//! lower bound certificate anyone can re-check by counting edges.
//!
//! The decision runs one small max-flow per candidate anchor vertex w. The
//! flow network is built so that the excess 2 e(S) - 2b |S minus w| over all
//! vertex sets S equals twice the edge count minus the min cut; an excess of
//! 2 or more pins down a dense set (either the anchor lies in the optimal S
//! and e(S) > b(|S| - 1), or it does not and e(S) > b|S|, denser still), and
//! excess 0 proves no dense set contains w. Vertices of peeled degree at
//! most b can never lie in a minimal dense set, since dropping such a vertex
//! keeps the set dense, so a core peel first shrinks the anchor pool.

use crate::graph::{Graph, Vertex};
use rayon::prelude::*;

/// A vertex set witnessing arboricity > b, i.e. with more than b(|S| - 1)
/// induced edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityViolator {
    pub vertices: Vec<Vertex>,
    pub induced_edges: usize,
}

impl DensityViolator {
    /// Recounts the induced edges and re-evaluates the density inequality,
    /// trusting nothing stored.
    pub fn holds_against(&self, g: &Graph, b: usize) -> bool {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        for &v in &self.vertices {
            if v as usize >= n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        if self.vertices.len() < 2 {
            return false;
        }
        let e = g
            .edges()
            .iter()
            .filter(|&&(u, v)| seen[u as usize] && seen[v as usize])
            .count();
        e == self.induced_edges && e > b * (self.vertices.len() - 1)
    }
}

/// Decides arboricity(g) <= b. Returns None when it is, otherwise a set
/// denser than b forests can absorb.
pub fn arboricity_at_most(g: &Graph, b: usize) -> Option<DensityViolator> {
    if g.edge_count() == 0 {
        return None;
    }
    if b == 0 {
        let (u, v) = g.edges()[0];
        return Some(DensityViolator { vertices: vec![u, v], induced_edges: 1 });
    }
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v as Vertex)).collect();
    let mut stack: Vec<Vertex> = (0..n as Vertex).filter(|&v| deg[v as usize] <= b).collect();
    while let Some(v) = stack.pop() {
        let vi = v as usize;
        if !alive[vi] || deg[vi] > b {
            continue;
        }
        alive[vi] = false;
        for &w in g.neighbors(v) {
            let wi = w as usize;
            if alive[wi] {
                deg[wi] -= 1;
                if deg[wi] <= b {
                    stack.push(w);
                }
            }
        }
    }
    let anchors: Vec<Vertex> = (0..n as Vertex).filter(|&v| alive[v as usize]).collect();
    // a dense set survives the peel intact, so some surviving vertex anchors it
    anchors
        .par_iter()
        .find_map_first(|&w| anchored_dense_set(g, b, &alive, &deg, w))
}

/// Exact arboricity: step the decision upward, jumping by each violator's
/// own density.
pub fn arboricity_exact(g: &Graph) -> usize {
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    let n = g.vertex_count();
    let mut b = m.div_ceil(n - 1).max(1);
    loop {
        match arboricity_at_most(g, b) {
            None => return b,
            Some(viol) => {
                let s = viol.vertices.len();
                debug_assert!(viol.holds_against(g, b));
                b = (b + 1).max(viol.induced_edges.div_ceil(s - 1));
            }
        }
    }
}

/// Exhaustive reference implementation over all vertex subsets. Only for
/// cross-checking on tiny graphs.
pub fn arboricity_oracle(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16, "subset enumeration needs a tiny graph");
    if g.edge_count() == 0 {
        return 0;
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    let mut induced = vec![0u16; 1usize << n];
    let mut best = 1;
    for s in 1u32..(1 << n) {
        let v = 31 - s.leading_zeros();
        let rest = s & !(1 << v);
        let e = induced[rest as usize] + (adj[v as usize] & rest).count_ones() as u16;
        induced[s as usize] = e;
        let size = s.count_ones() as usize;
        if size >= 2 && e > 0 {
            best = best.max((e as usize).div_ceil(size - 1));
        }
    }
    best
}

/// One anchored flow. Node layout: source 0, sink 1, vertex v at v + 2.
/// Source feeds each live vertex its live degree, live edges carry one unit
/// each way, every live vertex except the anchor drains 2b to the sink.
fn anchored_dense_set(
    g: &Graph,
    b: usize,
    alive: &[bool],
    deg: &[usize],
    anchor: Vertex,
) -> Option<DensityViolator> {
    let n = g.vertex_count();
    let mut net = Dinic::new(n + 2);
    let mut twice_m = 0u64;
    for v in 0..n {
        if alive[v] {
            net.add(0, v + 2, deg[v] as u64, 0);
            twice_m += deg[v] as u64;
            let drain = if v == anchor as usize { 0 } else { 2 * b as u64 };
            net.add(v + 2, 1, drain, 0);
        }
    }
    for &(u, v) in g.edges() {
        if alive[u as usize] && alive[v as usize] {
            net.add(u as usize + 2, v as usize + 2, 1, 1);
        }
    }
    let flow = net.maxflow(0, 1);
    if twice_m - flow < 2 {
        return None;
    }
    let reach = net.reachable_from(0);
    let vertices: Vec<Vertex> = (0..n as Vertex).filter(|&v| reach[v as usize + 2]).collect();
    let mut in_set = vec![false; n];
    for &v in &vertices {
        in_set[v as usize] = true;
    }
    let induced_edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| in_set[u as usize] && in_set[v as usize])
        .count();
    let viol = DensityViolator { vertices, induced_edges };
    assert!(viol.holds_against(g, b), "min cut must expose a dense set");
    Some(viol)
}

struct Dinic {
    to: Vec<u32>,
    cap: Vec<u64>,
    adj: Vec<Vec<u32>>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    /// Adds the arc u -> v with capacity `cap` and its reverse with `rcap`;
    /// the pair lives at indices 2k and 2k + 1.
    fn add(&mut self, u: usize, v: usize, cap: u64, rcap: u64) {
        let k = self.to.len() as u32;
        self.adj[u].push(k);
        self.to.push(v as u32);
        self.cap.push(cap);
        self.adj[v].push(k + 1);
        self.to.push(u as u32);
        self.cap.push(rcap);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s as u32]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u as usize] {
                let v = self.to[e as usize];
                if self.cap[e as usize] > 0 && self.level[v as usize] == u32::MAX {
                    self.level[v as usize] = self.level[u as usize] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u64) -> u64 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.adj[u].len() {
            let e = self.adj[u][self.iter[u]] as usize;
            let v = self.to[e] as usize;
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.dfs(v, t, pushed.min(self.cap[e]));
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn maxflow(&mut self, s: usize, t: usize) -> u64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let got = self.dfs(s, t, u64::MAX);
                if got == 0 {
                    break;
                }
                flow += got;
            }
        }
        flow
    }

    /// Vertices reachable from s through arcs with residual capacity, i.e.
    /// the source side of a min cut once maxflow has run.
    fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}
