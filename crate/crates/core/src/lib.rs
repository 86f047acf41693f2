//! Large graphs of bounded maximum degree and small diameter.
//!
//! The crate has three layers. `constructions` builds explicit graph families
//! (de Bruijn style word graphs, clique and gadget compositions, graph
//! products, modular difference graphs) that are large for their degree and
//! diameter while staying inside a restricted class such as bounded
//! arboricity, bounded treewidth, 3-colourability, or triangle-freeness.
//! `certify` re-checks every claimed property of a built graph from scratch:
//! distances by search, arboricity by flows, treewidth by elimination
//! witnesses, colourings by direct inspection. `bounds` evaluates the
//! matching upper bound formulas in exact arithmetic so constructions and
//! formulas can be compared without rounding doubt.

pub mod bounds;
pub mod certify;
pub mod constructions;
pub mod fileio;
pub mod graph;
pub mod products;
