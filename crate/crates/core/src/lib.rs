//! Spectral bipartiteness of graphs: the ratio (λ₁+λ_n)/n against the odd
//! girth, with closed-form and optimized bounds and checkable
//! weight-interlacing certificates.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod interlacing;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, OddGirth};
pub use spectral::{PerronVector, Spectrum};
