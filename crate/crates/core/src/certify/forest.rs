//! Checks that an edge colouring splits the graph into forests.
//!
//! A partition of the edges into b acyclic classes shows the arboricity is
//! at most b. The check runs one union-find per class; on failure it digs an
//! explicit cycle back out so the refutation can be inspected.

use crate::certify::WitnessError;
use crate::graph::{Graph, Vertex};

/// An edge colouring proposed as a split into `classes` forests.
/// `colors[i]` is the class of `g.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestDecomposition {
    pub colors: Vec<usize>,
    pub classes: usize,
}

#[derive(Debug, PartialEq, Eq)]
pub enum ForestVerdict {
    AllForests,
    /// `cycle` lists the vertices of a closed walk through edges of one
    /// class, consecutive entries (and last to first) joined by class edges.
    CycleFound { color: usize, cycle: Vec<Vertex> },
}

pub fn verify_forest_decomposition(
    g: &Graph,
    f: &ForestDecomposition,
) -> Result<ForestVerdict, WitnessError> {
    let m = g.edge_count();
    if f.colors.len() != m {
        return Err(WitnessError::WrongEdgeCount { expected: m, got: f.colors.len() });
    }
    for (index, &color) in f.colors.iter().enumerate() {
        if color >= f.classes {
            return Err(WitnessError::EdgeColorOutOfRange { index, color, bound: f.classes });
        }
    }
    let n = g.vertex_count();
    for color in 0..f.classes {
        let mut parent: Vec<u32> = (0..n as u32).collect();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if f.colors[i] != color {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Ok(ForestVerdict::CycleFound {
                    color,
                    cycle: recover_cycle(g, &f.colors, color, i),
                });
            }
            parent[ru as usize] = rv;
        }
    }
    Ok(ForestVerdict::AllForests)
}

fn find(parent: &mut [u32], v: Vertex) -> u32 {
    let mut v = v;
    while parent[v as usize] != v {
        parent[v as usize] = parent[parent[v as usize] as usize];
        v = parent[v as usize];
    }
    v
}

/// The endpoints of edge `closing` are already connected inside the class,
/// so a BFS avoiding that one edge finds a path between them; the edge
/// closes it into a cycle.
fn recover_cycle(g: &Graph, colors: &[usize], color: usize, closing: usize) -> Vec<Vertex> {
    let (u, v) = g.edges()[closing];
    let n = g.vertex_count();
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if colors[i] == color && i != closing {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
    }
    let mut prev = vec![u32::MAX; n];
    prev[u as usize] = u;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &y in &adj[x as usize] {
            if prev[y as usize] == u32::MAX {
                prev[y as usize] = x;
                queue.push_back(y);
            }
        }
    }
    assert_ne!(prev[v as usize], u32::MAX, "union-find said the endpoints are connected");
    let mut path = vec![v];
    let mut x = v;
    while x != u {
        x = prev[x as usize];
        path.push(x);
    }
    path.reverse(); // u .. v, closed by the edge (u, v)
    path
}
