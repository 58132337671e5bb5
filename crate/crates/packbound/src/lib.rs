//! Exact computation of graph packing and domination invariants
//! (packing number ρ, open packing number ρₒ, k-limited packing number L_k,
//! k-tuple domination number γ_×k), closed-form upper bounds with exact
//! tightness detection, and recognizers/generators for the extremal graph
//! families attaining them.
//!
//! Everything here is desk-scale by design: graphs are capped at 62 vertices
//! (the graph6 short form), solvers at a few dozen vertices, exhaustive
//! enumeration at n = 7.

pub mod bounds;
pub mod cli;
pub mod enumerate;
pub mod exact;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod set;
pub mod solve;
pub mod verifier;

pub use graph::{Graph, GraphError, StructuralProfile, MAX_VERTICES};
pub use set::VertexSet;
