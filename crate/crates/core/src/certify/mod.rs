//! Independent re-checking of claimed graph properties.
//!
//! Each submodule certifies one kind of claim from first principles: forests
//! by union-find, arboricity by density testing with flows, treewidth upper
//! bounds by elimination orders, balanced separators by direct inspection,
//! colourings by scanning edges. None of them trust the construction that
//! produced the graph.
//!
//! Every check distinguishes a malformed witness (`WitnessError`: the
//! witness does not even fit the graph, wrong length, out of range, not a
//! permutation) from an honest failure (a well formed witness whose claim is
//! false, reported through the check's verdict type with a counterexample).

pub mod arboricity;
pub mod chordal;
pub mod coloring;
pub mod forest;
pub mod report;
pub mod separation;
pub mod treewidth_oracle;

use crate::graph::Vertex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("witness assigns {got} edges but the graph has {expected}")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error("edge {index} has class {color}, outside the {bound} allowed classes")]
    EdgeColorOutOfRange { index: usize, color: usize, bound: usize },
    #[error("witness colours {got} vertices but the graph has {expected}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("vertex {vertex} has colour {color}, outside the {bound} allowed colours")]
    VertexColorOutOfRange { vertex: Vertex, color: usize, bound: usize },
    #[error("elimination order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("fill edge ({0}, {1}) is already an edge of the graph")]
    FillEdgePresent(Vertex, Vertex),
    #[error("fill edge ({0}, {1}) appears twice")]
    DuplicateFill(Vertex, Vertex),
    #[error("fill edge at vertex {0} is a loop")]
    FillLoop(Vertex),
    #[error("vertex {0} appears in more than one part")]
    PartOverlap(Vertex),
    #[error("vertex {0} appears in no part")]
    PartMissing(Vertex),
}
