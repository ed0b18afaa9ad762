//! Generalized Robinson-Schensted combinatorics for partial permutations.
//!
//! The crate is `no_std` and only needs an allocator. It contains:
//!
//! - [`partition`], [`tableau`], [`signed`]: Young diagrams, tableaux, skew
//!   tableaux and signed Young diagrams together with their dominance orders.
//! - [`insertion`]: row and column insertion, the Robinson-Schensted
//!   correspondence, jeu de taquin and the `*` product.
//! - [`perm`]: partial permutations, Bruhat-type canonical forms of matrices
//!   under upper-triangular row and column operations.
//! - [`maps`]: the generalized Steinberg map, the triple bijection, the
//!   triangle operation and the combinatorial exotic moment map.
//! - [`orbit`]: representatives of orbits on the double flag variety and the
//!   analysis of the image of the exotic moment map.
//! - [`field`] and [`oracle`]: exact linear algebra over a prime field and the
//!   sampling oracle that recomputes every combinatorial map from matrices.

#![no_std]

extern crate alloc;

pub mod error;
pub mod field;
pub mod insertion;
pub mod maps;
pub mod oracle;
pub mod orbit;
pub mod partition;
pub mod perm;
pub mod signed;
pub mod tableau;

pub use error::{Error, Result};
pub use field::{FiberBasis, PrimeFieldMatrix, DEFAULT_PRIME};
pub use insertion::Bijection;
pub use maps::Triple;
pub use oracle::OracleConfig;
pub use orbit::OrbitRep;
pub use partition::Partition;
pub use perm::{Decomposition, PartialPermutation};
pub use signed::{Sign, SignedRow, SignedYoungDiagram};
pub use tableau::{SkewTableau, Tableau};
