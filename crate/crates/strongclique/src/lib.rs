//! Strong-clique analysis for vertex-transitive graphs.
//!
//! The crate provides:
//!
//! - an immutable simple-graph value type with structural operations,
//!   graph6 and DIMACS codecs ([`graph`], [`io`]);
//! - automorphism-group search, orbits, vertex-transitivity and
//!   isomorphism testing ([`perm`]);
//! - generators for the named graph families: Cayley graphs over small
//!   finite groups, the quadruple-chain family `H_n`, generalized Johnson
//!   graphs, products and the five-vertex local graphs ([`group`],
//!   [`families`]);
//! - maximal clique / independent set enumeration, clique and chromatic
//!   invariants, and the clique graph ([`clique`]);
//! - the strong-clique predicates: strong cliques and independent sets,
//!   well-covered, CIS and localizable, each with an independent second
//!   method used for cross-validation ([`strong`]);
//! - a corpus builder over small vertex-transitive graphs and suites that
//!   re-derive the classification claims at desk scale ([`corpus`],
//!   [`report`], [`verify`]).

pub mod bitset;
pub mod clique;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod io;
pub mod perm;
pub mod report;
pub mod strong;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use perm::{GeneratorSet, Permutation};
