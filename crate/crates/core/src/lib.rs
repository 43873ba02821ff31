pub mod config;
pub mod covers;
pub mod dot;
pub mod error;
pub mod extend;
pub mod fixtures;
pub mod generate;
pub mod io;
pub mod metric;
pub mod morphism;
pub mod poset;
pub mod subdivision;

pub use config::Limits;
pub use covers::IndexMap;
pub use error::{Error, Result};
pub use morphism::PosetMorphism;
pub use poset::{ElementSet, Poset, UpSet};

pub type Rational = num_rational::BigRational;
pub type MetricGraphQ = metric::MetricGraph<Rational>;
pub type MetricMorphismQ = metric::MetricMorphism<Rational>;
pub type PointQ = metric::Point<Rational>;
