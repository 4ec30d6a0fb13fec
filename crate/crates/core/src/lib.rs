//! Claw-heavy graph toolkit: heaviness predicates, the o-heavy closure,
//! P6 heavy-pattern classification, counterexample families and an exact
//! Hamiltonicity decider with verifiable certificates.

pub mod campaign;
pub mod closure;
pub mod conditions;
pub mod families;
pub mod gamma;
pub mod graph;
pub mod hamilton;
pub mod induced;
pub mod io;

pub use graph::{Graph, GraphBuilder, GraphError, VertexSet};
