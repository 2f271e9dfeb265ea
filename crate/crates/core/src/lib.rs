//! Formal WKB solutions of nth-order linear ODEs with a large parameter,
//! their Borel resummation, and independent oracles for the Airy-type family.
//!
//! The pipeline runs `potential` → `wkb` → `summation`, with `oracle`
//! providing ground truth for the Airy-type equation `y⁽ⁿ⁾ = x·y`.

pub mod combinatorics;
pub mod error;
pub mod frak_a;
pub mod geometry;
pub mod laurent;
pub mod oracle;
pub mod potential;
pub mod quadrature;
pub mod summation;
pub mod wkb;

mod phase;

pub use error::{Error, Result};
pub use geometry::SheetPoint;
pub use laurent::LaurentSeries;
pub use num_complex::Complex64;
pub use potential::PotentialSpec;
pub use wkb::CoefficientTable;
