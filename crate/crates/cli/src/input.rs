//! Resolves command-line references to bundled fixtures or JSON files.

use std::path::Path;

use polycover::io;
use polycover::subdivision::SimplicialComplex;
use polycover::{fixtures, Error, IndexMap, MetricMorphismQ, Poset, PosetMorphism, Result};

pub const METRIC_FIXTURES: [&str; 2] = ["FIX-GRAPH", "FIX-TROP-GRAPH"];

pub fn morphism(reference: &str) -> Result<PosetMorphism> {
    match fixtures::morphism(reference) {
        Some(phi) => Ok(phi),
        None => io::load_morphism(Path::new(reference)),
    }
}

/// A fixture index map is carried over to `phi` by element name.
pub fn index(reference: &str, phi: &PosetMorphism) -> Result<IndexMap> {
    match fixtures::index_map(reference) {
        Some(m) => {
            let owner = reference
                .strip_suffix("-M")
                .and_then(fixtures::morphism)
                .expect("every index fixture has a morphism");
            m.transfer(owner.source(), phi.source())
        }
        None => io::load_index(Path::new(reference), phi.source()),
    }
}

/// A poset file, or `FIXTURE:source` / `FIXTURE:target`.
pub fn poset(reference: &str) -> Result<Poset> {
    if let Some((name, side)) = reference.rsplit_once(':') {
        if let Some(phi) = fixtures::morphism(name) {
            return match side {
                "source" => Ok(phi.source().clone()),
                "target" => Ok(phi.target().clone()),
                _ => Err(Error::Format(format!("expected `{name}:source` or `{name}:target`"))),
            };
        }
    }
    io::load_poset(Path::new(reference))
}

pub fn metric(reference: &str) -> Result<MetricMorphismQ> {
    match reference {
        "FIX-GRAPH" => Ok(fixtures::graph()),
        "FIX-TROP-GRAPH" => Ok(fixtures::trop_graph()),
        path => io::load_metric_morphism(Path::new(path)),
    }
}

pub fn complex(reference: &str) -> Result<SimplicialComplex> {
    io::load_complex(Path::new(reference))
}

pub fn names(list: &str) -> Vec<String> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}
