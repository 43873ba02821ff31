//! Metric graphs with exact lengths and piecewise-affine morphisms between
//! them.

mod graph;
mod morphism;
mod refine;
mod sample;
mod scalar;

pub use graph::{Edge, MetricGraph, Point};
pub use morphism::{EdgeImage, MetricMorphism};
pub use refine::{refine_to_combinatorial, Refinement};
pub use sample::{random_point, sample_fibre, FibreSample};
pub use scalar::{parse_scalar, Scalar};
