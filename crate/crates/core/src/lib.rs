//! Exact construction and validation of the ten-face pole-anchored wing
//! set on a regular icosahedron.
//!
//! All geometry is carried out in Q(√5) ([`golden_field`]); floats appear
//! only as display values in reports.

#![no_std]

extern crate alloc;

pub mod exact_geometry;
pub mod golden_field;
pub mod icosa_model;
pub mod validators;
pub mod wing_set;

pub use exact_geometry::ExactVec3;
pub use golden_field::{GoldenRational, Rational, Sign};
pub use icosa_model::{build_icosahedron, Edge, Label, LabeledIcosahedron, ModelError, RingIndex};
pub use validators::{run_all, ValidationReport};
pub use wing_set::{generate_wing_set, representative_points, Pole, WingFace, WingSet};
