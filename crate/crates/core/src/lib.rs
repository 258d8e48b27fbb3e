//! Coarse tree decompositions and coarse Menger-style packing/covering
//! duality on graphs, built around layered families: downward closed
//! vertex sets indexed by centers, with bounded thickness. Separators are
//! measured by how few family sets cover them, and every pipeline emits a
//! certificate that can be re-checked independently.

pub mod decomposition;
pub mod error;
pub mod family;
pub mod graph;
pub mod lp;
pub mod menger;
pub mod partition;
pub mod rounding;
pub mod sampling;

pub use error::{Error, Result};
