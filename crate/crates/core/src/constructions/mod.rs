//! Deterministic generators for large graphs of given maximum degree and
//! diameter inside restricted classes.
//!
//! Each family function returns a [`ConstructionResult`]: the graph, the
//! parameters it was built from, the properties it claims (degree, diameter,
//! vertex count guarantee), and the witnesses backing those claims. Nothing
//! here is trusted; the certify module re-checks every claim from scratch.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::certify::chordal::ChordalWitness;
use crate::certify::forest::ForestDecomposition;
use crate::graph::{Graph, Vertex};

pub const DEFAULT_BUDGET: u64 = 5_000_000;

pub mod arboricity;
pub mod avg_degree;
pub mod debruijn;
pub mod gadgets;
pub mod modular;
pub mod products3c;
pub mod treewidth;

pub use arboricity::{arboricity_diam2_family, arboricity_family};
pub use avg_degree::avg_degree_family;
pub use debruijn::{de_bruijn_digraph, de_bruijn_family, de_bruijn_graph};
pub use gadgets::{common_neighbour_bipartite, line_of_complete};
pub use modular::{zp2_family, zp3_family};
pub use products3c::{three_colourable_debruijn, triangle_free_debruijn};
pub use treewidth::{treewidth_even_family, treewidth_odd_family};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    /// A parameter inequality the family needs does not hold. The message
    /// names the failing inequality with the offending values filled in.
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("construction needs {requested} vertices, over the budget of {budget}")]
    BudgetExceeded { requested: BigInt, budget: u64 },
}

/// Checks a vertex count against the budget before any allocation happens.
/// Vertex ids are u32, so counts past that range never fit whatever the
/// budget says.
pub(crate) fn fit_budget(requested: BigInt, budget: u64) -> Result<usize, FamilyError> {
    if requested > BigInt::from(budget.min(crate::graph::Vertex::MAX as u64)) {
        return Err(FamilyError::BudgetExceeded { requested, budget });
    }
    let (_, digits) = requested.to_u64_digits();
    let n = digits.first().copied().unwrap_or(0);
    Ok(n as usize)
}

/// A vertex colouring with colours `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

/// A system of vertex subsets of a host graph in which every vertex lies in
/// exactly two sets and every edge has both endpoints together in some set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    pub sets: Vec<Vec<Vertex>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverViolation {
    #[error("set {set} lists vertex {vertex}, out of range for {n} vertices")]
    VertexOutOfRange { set: usize, vertex: Vertex, n: usize },
    #[error("set {set} lists vertex {vertex} twice")]
    DuplicateInSet { set: usize, vertex: Vertex },
    #[error("vertex {vertex} lies in {count} sets instead of two")]
    WrongIncidence { vertex: Vertex, count: usize },
    #[error("edge ({u}, {v}) has no set containing both endpoints")]
    EdgeUncovered { u: Vertex, v: Vertex },
}

impl CoverFamily {
    /// Checks both invariants against the host graph. Edge coverage is
    /// decided by intersecting the (at most two) set indices of the
    /// endpoints, which is what makes the two-sets-per-vertex invariant
    /// strong enough to use.
    pub fn verify(&self, host: &Graph) -> Result<(), CoverViolation> {
        let n = host.vertex_count();
        let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, set) in self.sets.iter().enumerate() {
            for &v in set {
                if (v as usize) >= n {
                    return Err(CoverViolation::VertexOutOfRange { set: i, vertex: v, n });
                }
                if incidence[v as usize].last() == Some(&i) {
                    return Err(CoverViolation::DuplicateInSet { set: i, vertex: v });
                }
                incidence[v as usize].push(i);
            }
        }
        for (v, sets) in incidence.iter().enumerate() {
            if sets.len() != 2 {
                return Err(CoverViolation::WrongIncidence {
                    vertex: v as Vertex,
                    count: sets.len(),
                });
            }
        }
        for &(u, v) in host.edges() {
            let su = &incidence[u as usize];
            let covered = incidence[v as usize].iter().any(|i| su.contains(i));
            if !covered {
                return Err(CoverViolation::EdgeUncovered { u, v });
            }
        }
        Ok(())
    }
}

/// A constructed graph bundled with everything it claims about itself.
#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub family: &'static str,
    /// Parameters the family was invoked with, plus derived internal ones.
    pub params: BTreeMap<String, String>,
    pub graph: Graph,
    pub claimed_max_degree: u64,
    pub claimed_diameter: u32,
    /// True when the diameter is claimed exactly, not just as an upper bound.
    pub diameter_is_exact: bool,
    pub claimed_triangle_free: bool,
    /// Claimed upper bound on the average degree, when the family has one.
    pub claimed_average_degree_max: Option<num_rational::BigRational>,
    pub claimed_treewidth: Option<u64>,
    pub claimed_arboricity: Option<u64>,
    /// Lower bound on the vertex count (formula value, rounded up). Absent
    /// when the parameters are outside the range where the formula applies.
    pub guaranteed_vertices: Option<BigInt>,
    pub coloring: Option<Coloring>,
    pub forest: Option<ForestDecomposition>,
    pub chordal: Option<ChordalWitness>,
    pub cover: Option<CoverFamily>,
}

impl ConstructionResult {
    pub(crate) fn new(
        family: &'static str,
        params: BTreeMap<String, String>,
        graph: Graph,
        claimed_max_degree: u64,
        claimed_diameter: u32,
    ) -> Self {
        ConstructionResult {
            family,
            params,
            graph,
            claimed_max_degree,
            claimed_diameter,
            diameter_is_exact: false,
            claimed_triangle_free: false,
            claimed_average_degree_max: None,
            claimed_treewidth: None,
            claimed_arboricity: None,
            guaranteed_vertices: None,
            coloring: None,
            forest: None,
            chordal: None,
            cover: None,
        }
    }
}

/// Renders parameter lists for the `params` record and error messages.
pub(crate) fn param_map<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
