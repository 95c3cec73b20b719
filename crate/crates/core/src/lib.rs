//! Greedy Canny-Emiris sparse resultant matrices for systems whose Newton
//! polytopes are axis-aligned boxes (more generally, `n`-zonotopes after a
//! change of lattice basis) and for multihomogeneous systems.
//!
//! The greedy construction keeps only the rows reachable from the mixed cells
//! of a fixed regular subdivision of the Minkowski sum. The resultant is the
//! quotient `det(H_G) / det(E_G)` of that matrix and its principal submatrix
//! on non-mixed rows.

pub mod audit;
pub mod error;
pub mod greedy;
pub mod matrix;
pub mod model;
pub mod multihomo;
pub mod oracles;
pub mod subdivision;
pub mod system;

pub use error::{Error, Result};
pub use greedy::{greedy_closure, Closure};
pub use matrix::{build_matrix, principal_submatrix, ExportFormat, SymbolicMatrix};
pub use model::{
    validate_zonotope, CoeffRef, GeneratorMatrix, LatticePoint, MultiHomoSystem, RowContent,
    TypeFunction, TypeVector, ZonotopeSystem,
};
pub use subdivision::Subdivision;
pub use system::System;
