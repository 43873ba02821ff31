//! JSON documents for posets, morphisms, index maps, complexes and metric
//! graphs. Nested objects may be given inline or as a path to another
//! document, resolved relative to the referring file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::covers::IndexMap;
use crate::error::{Error, Result};
use crate::metric::{parse_scalar, Edge, EdgeImage, MetricGraph, MetricMorphism, Point, Scalar};
use crate::morphism::PosetMorphism;
use crate::poset::Poset;
use crate::subdivision::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    File(String),
    Inline(T),
}

impl<T: DeserializeOwned + Clone> Ref<T> {
    pub fn resolve(&self, base: &Path) -> Result<T> {
        match self {
            Ref::Inline(t) => Ok(t.clone()),
            Ref::File(path) => read_json(&base.join(path)),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    parse_json(&read_text(path)?)
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

fn parent(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<BTreeMap<String, usize>>,
}

impl PosetDoc {
    pub fn build(&self) -> Result<Poset> {
        let p = Poset::new(&self.elements, self.covers.iter().map(|(a, b)| (a, b)))?;
        if let Some(rank) = &self.rank {
            p.verify_ranks(rank.iter().map(|(k, &v)| (k.as_str(), v)))?;
        }
        Ok(p)
    }

    pub fn of(p: &Poset) -> PosetDoc {
        PosetDoc {
            elements: p.names().to_vec(),
            covers: p
                .cover_pairs()
                .map(|(a, b)| (p.name(a).to_string(), p.name(b).to_string()))
                .collect(),
            rank: None,
        }
    }
}

pub fn load_poset(path: &Path) -> Result<Poset> {
    read_json::<PosetDoc>(path)?.build()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub source: Ref<PosetDoc>,
    pub target: Ref<PosetDoc>,
    pub map: BTreeMap<String, String>,
}

impl MorphismDoc {
    pub fn build(&self, base: &Path) -> Result<PosetMorphism> {
        PosetMorphism::new(self.source.resolve(base)?.build()?, self.target.resolve(base)?.build()?, &self.map)
    }

    pub fn of(phi: &PosetMorphism) -> MorphismDoc {
        MorphismDoc {
            source: Ref::Inline(PosetDoc::of(phi.source())),
            target: Ref::Inline(PosetDoc::of(phi.target())),
            map: phi.named_map(),
        }
    }
}

pub fn load_morphism(path: &Path) -> Result<PosetMorphism> {
    read_json::<MorphismDoc>(path)?.build(&parent(path))
}

/// An index map; without `generators` the domain is the set of keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    pub values: BTreeMap<String, u64>,
}

impl IndexDoc {
    pub fn build(&self, poset: &Poset) -> Result<IndexMap> {
        match &self.generators {
            Some(g) => IndexMap::from_names(poset, g, self.values.iter().map(|(k, &v)| (k, v))),
            None => {
                let mut values = BTreeMap::new();
                for (k, &v) in &self.values {
                    values.insert(poset.id(k)?, v);
                }
                IndexMap::new(poset, values)
            }
        }
    }

    pub fn of(m: &IndexMap, poset: &Poset) -> IndexDoc {
        IndexDoc {
            generators: None,
            values: m.named(poset),
        }
    }
}

pub fn load_index(path: &Path, poset: &Poset) -> Result<IndexMap> {
    read_json::<IndexDoc>(path)?.build(poset)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub vertices: Vec<String>,
    pub maximal_faces: Vec<Vec<String>>,
}

impl ComplexDoc {
    pub fn build(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_maximal(self.vertices.iter().cloned(), self.maximal_faces.iter().cloned())
    }

    pub fn of(k: &SimplicialComplex) -> ComplexDoc {
        ComplexDoc {
            vertices: k.vertices().iter().cloned().collect(),
            maximal_faces: k.maximal_faces().into_iter().map(|f| f.into_iter().collect()).collect(),
        }
    }
}

pub fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    read_json::<ComplexDoc>(path)?.build()
}

fn scalar<S: Scalar>(text: &str) -> Result<S> {
    parse_scalar(text).ok_or_else(|| Error::Format(format!("`{text}` is not a rational number")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: String,
    pub a: String,
    pub b: String,
    pub length: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
}

impl GraphDoc {
    pub fn build<S: Scalar>(&self) -> Result<MetricGraph<S>> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    id: e.id.clone(),
                    a: e.a.clone(),
                    b: e.b.clone(),
                    length: scalar(&e.length)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MetricGraph::new(self.vertices.iter().cloned(), edges)
    }

    pub fn of<S: Scalar>(g: &MetricGraph<S>) -> GraphDoc {
        GraphDoc {
            vertices: g.vertices().iter().cloned().collect(),
            edges: g
                .edges()
                .map(|e| EdgeDoc {
                    id: e.id.clone(),
                    a: e.a.clone(),
                    b: e.b.clone(),
                    length: e.length.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointDoc {
    Vertex(String),
    Interior { edge: String, pos: String },
}

impl PointDoc {
    pub fn build<S: Scalar>(&self) -> Result<Point<S>> {
        Ok(match self {
            PointDoc::Vertex(v) => Point::Vertex(v.clone()),
            PointDoc::Interior { edge, pos } => Point::interior(edge.clone(), scalar(pos)?),
        })
    }

    pub fn of<S: Scalar>(p: &Point<S>) -> PointDoc {
        match p {
            Point::Vertex(v) => PointDoc::Vertex(v.clone()),
            Point::Interior { edge, position } => PointDoc::Interior {
                edge: edge.clone(),
                pos: position.to_string(),
            },
        }
    }

    /// Parses `v` or `edge:pos`.
    pub fn parse(text: &str) -> PointDoc {
        match text.split_once(':') {
            Some((edge, pos)) => PointDoc::Interior {
                edge: edge.trim().to_string(),
                pos: pos.trim().to_string(),
            },
            None => PointDoc::Vertex(text.trim().to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeImageDoc {
    pub edge: String,
    pub from: String,
    pub to: String,
    pub slope: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricMorphismDoc {
    pub source: Ref<GraphDoc>,
    pub target: Ref<GraphDoc>,
    pub vertex_images: BTreeMap<String, PointDoc>,
    pub edge_images: BTreeMap<String, EdgeImageDoc>,
}

impl MetricMorphismDoc {
    pub fn build<S: Scalar>(&self, base: &Path) -> Result<MetricMorphism<S>> {
        let vertex_images = self
            .vertex_images
            .iter()
            .map(|(v, p)| Ok((v.clone(), p.build()?)))
            .collect::<Result<_>>()?;
        let edge_images = self
            .edge_images
            .iter()
            .map(|(e, img)| {
                Ok((
                    e.clone(),
                    EdgeImage {
                        edge: img.edge.clone(),
                        from: scalar(&img.from)?,
                        to: scalar(&img.to)?,
                        slope: img.slope,
                    },
                ))
            })
            .collect::<Result<_>>()?;
        MetricMorphism::new(
            self.source.resolve(base)?.build()?,
            self.target.resolve(base)?.build()?,
            vertex_images,
            edge_images,
        )
    }

    pub fn of<S: Scalar>(phi: &MetricMorphism<S>) -> MetricMorphismDoc {
        MetricMorphismDoc {
            source: Ref::Inline(GraphDoc::of(phi.source())),
            target: Ref::Inline(GraphDoc::of(phi.target())),
            vertex_images: phi.vertex_images().iter().map(|(v, p)| (v.clone(), PointDoc::of(p))).collect(),
            edge_images: phi
                .edge_images()
                .iter()
                .map(|(e, img)| {
                    (
                        e.clone(),
                        EdgeImageDoc {
                            edge: img.edge.clone(),
                            from: img.from.to_string(),
                            to: img.to.to_string(),
                            slope: img.slope,
                        },
                    )
                })
                .collect(),
        }
    }
}

pub fn load_metric_morphism<S: Scalar>(path: &Path) -> Result<MetricMorphism<S>> {
    read_json::<MetricMorphismDoc>(path)?.build(&parent(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn morphism_round_trip() {
        let phi = fixtures::trop();
        let text = serde_json::to_string(&MorphismDoc::of(&phi)).unwrap();
        let back = parse_json::<MorphismDoc>(&text).unwrap().build(Path::new(".")).unwrap();
        assert_eq!(back, phi);
    }

    #[test]
    fn metric_round_trip() {
        let phi = fixtures::graph::<crate::Rational>();
        let text = serde_json::to_string(&MetricMorphismDoc::of(&phi)).unwrap();
        let back: MetricMorphism<crate::Rational> = parse_json::<MetricMorphismDoc>(&text).unwrap().build(Path::new(".")).unwrap();
        assert_eq!(back, phi);
    }

    #[test]
    fn poset_doc_rank_check() {
        let doc: PosetDoc = parse_json(r#"{"elements":["a","b"],"covers":[["a","b"]],"rank":{"b":2}}"#).unwrap();
        assert!(matches!(doc.build(), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn missing_file() {
        assert!(matches!(load_poset(Path::new("/nonexistent/p.json")), Err(Error::Io { .. })));
        assert!(matches!(parse_json::<PosetDoc>("{"), Err(Error::Format(_))));
    }

    #[test]
    fn point_syntax() {
        assert_eq!(PointDoc::parse("u"), PointDoc::Vertex("u".into()));
        assert_eq!(
            PointDoc::parse("t:5/2"),
            PointDoc::Interior {
                edge: "t".into(),
                pos: "5/2".into()
            }
        );
    }
}
