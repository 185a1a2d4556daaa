//! Exact computations with bialgebra structures on path coalgebras of
//! quivers: the quantum-shuffle product, axiom verification, and tensor
//! products of quiver representations with their interval decompositions.

pub mod bialgebra;
pub mod coalgebra;
pub mod error;
pub mod io;
pub mod quiver;
pub mod rep;
pub mod scalars;

pub use error::{Error, Result};
