//! Two-fold isomorphisms of mixed graphs.
//!
//! A pair of vertex bijections `(alpha, beta)` is a two-fold (TF)
//! isomorphism from `G` to `H` when `(u, v)` is an arc of `G` exactly when
//! `(alpha(u), beta(v))` is an arc of `H`. This crate builds the double covers
//! that encode such maps, decides and constructs them, decomposes graphs by
//! alternating trails, enumerates canonical-double-cover preimages, tests
//! stability and generates two-fold orbitals.

pub mod atrails;
pub mod cli;
pub mod covers;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod iso;
pub mod orbitals;
pub mod perm;
pub mod recon;
pub mod tfiso;

pub use error::{Error, Result};
pub use graph::{Arc, GraphKind, MixedGraph, Vertex};
pub use perm::Permutation;
pub use tfiso::TfMap;

