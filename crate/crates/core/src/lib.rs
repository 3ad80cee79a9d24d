//! Exact structure theory for finite-dimensional Lie algebras over GF(p) and Q.

pub mod algebra;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod format;
pub mod harness;
pub mod hunt;
pub mod matrix;
pub mod poly;
pub mod props;
pub mod report;
pub mod subspace;
pub mod triang;

pub use algebra::{LieAlgebra, QuotientMap, Subalgebra};
pub use enumerate::{Caps, ScanConfig, ScanMode};
pub use error::{Error, ParseErrorKind, Result};
pub use field::{Field, Scalar};
pub use matrix::{Matrix, Vector};
pub use props::Property;
pub use subspace::{SpanBuilder, Subspace};
