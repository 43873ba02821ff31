//! Size bounds for the exhaustive oracles.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest poset the exhaustive up-set oracles will enumerate.
    pub oracle_elements: usize,
    /// Largest `|source| * bound` accepted by the balanced-map search.
    pub search_product: usize,
    /// Default value bound for the balanced-map search.
    pub search_bound: u64,
    /// Largest number of chains produced by a barycentric subdivision.
    pub chains: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_elements: 16,
            search_product: 128,
            search_bound: 8,
            chains: 10_000,
        }
    }
}

impl Limits {
    pub fn with_oracle_elements(self, oracle_elements: usize) -> Self {
        Limits { oracle_elements, ..self }
    }
}
