//! Exhaustive verification of the combinatorial and group-theoretic facts
//! behind the classification of topological symmetry groups of the Heawood
//! graph.
//!
//! The library is organized in layers:
//!
//! - [`graph`]: small undirected graphs, the Heawood graph, distances,
//!   connectivity, and fixed-length cycle enumeration;
//! - [`perm`] and [`group`]: permutations, cycle notation, group closure,
//!   conjugacy, and dihedral model groups;
//! - [`subgroups`] and [`iso`]: exhaustive subgroup enumeration and
//!   isomorphism-type recognition for groups of order at most 400;
//! - [`symmetry`]: graph automorphism groups and their actions on vertices,
//!   edges, and cycles, including exact Burnside orbit counts;
//! - [`certificates`]: the named checks K1..K16, the topological axiom
//!   records A1..A6, and the elimination replay that derives the final
//!   group list.

pub mod certificates;
pub mod graph;
pub mod group;
pub mod iso;
pub mod perm;
pub mod rational;
pub mod subgroups;
pub mod symmetry;

pub use graph::{Cycle, LabelingMap, SimpleGraph};
pub use group::PermGroup;
pub use iso::IsoType;
pub use perm::Perm;
pub use rational::Rational;
pub use subgroups::SubgroupRecord;

use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid vertex {vertex}: graph has {count} vertices")]
    InvalidVertex { vertex: usize, count: usize },

    #[error("cycle length {length} outside 3..={max}")]
    CycleLength { length: usize, max: usize },

    #[error("graph has {vertices} vertices, limit is {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },

    #[error("bad edge list: {0}")]
    EdgeList(String),

    #[error("bad labeling: {0}")]
    Labeling(String),

    #[error("permutation parse error: {0}")]
    PermParse(String),

    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("group order {order} exceeds enumeration bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("cycle not invariant under the permutation: {0}")]
    NotInvariant(String),

    #[error("fixed-point override missing a count for element {0}")]
    IncompleteOverride(String),

    #[error("unknown check id {0}")]
    UnknownCheck(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
