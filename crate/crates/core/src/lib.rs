//! Exact algebra for Euclidean distance polynomials of real varieties.

pub mod class;
pub mod closed;
pub mod ed;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod text;

pub use ed::{DataPoint, EdPoly, VarietySpec};
pub use error::{Error, Result};
pub use ideal::{Ideal, QuotientDim};
pub use poly::*;
