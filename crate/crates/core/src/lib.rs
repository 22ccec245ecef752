//! P3-connectivity of simple graphs.
//!
//! Two edges are P3-related when they are the two edges of an induced path
//! on three vertices; a graph is P3-connected when it is connected and every
//! pair of edges is joined by a chain of such steps. This crate decides the
//! property two independent ways:
//!
//! * [`is_p3_connected`] builds the partition of the edge set into classes
//!   and checks there is at most one;
//! * [`is_p3_connected_fast`] checks connectivity and searches for a
//!   homogeneous set that contains an edge.
//!
//! Both produce certificates ([`P3Chain`], [`ModuleWitness`]), and the
//! [`harness`] module cross-checks them over exhaustive and random inputs.
//! With the default `parallel` feature the batch checks run on rayon.

pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod modules;
pub mod p3;
pub mod par;
mod union_find;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex, VertexSet};
pub use modules::{
    find_nonstable_homogeneous_set, is_homogeneous_set, is_p3_connected_fast, is_stable,
    min_module_containing, ModuleWitness,
};
pub use p3::{
    edge_set_p3_connected_in, induced_p3_related, is_p3_connected, p3_chain, p3_partition,
    P3Chain, P3Partition,
};
pub use par::Execution;
