use std::collections::BTreeMap;

use super::{MetricGraph, Point, Scalar};
use crate::error::{Error, Result};
use crate::morphism::PosetMorphism;

/// Affine image of a source edge inside the closure of one target edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeImage<S> {
    pub edge: String,
    pub from: S,
    pub to: S,
    pub slope: u32,
}

impl<S: Scalar> EdgeImage<S> {
    /// Target position of the point at `x` along the source edge.
    pub fn at(&self, x: &S, length: &S) -> S {
        self.from.clone() + (self.to.clone() - self.from.clone()) * x.clone() / length.clone()
    }
}

/// A piecewise-affine map with positive integer slopes between metric
/// graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricMorphism<S> {
    source: MetricGraph<S>,
    target: MetricGraph<S>,
    vertex_images: BTreeMap<String, Point<S>>,
    edge_images: BTreeMap<String, EdgeImage<S>>,
}

impl<S: Scalar> MetricMorphism<S> {
    pub fn new(
        source: MetricGraph<S>,
        target: MetricGraph<S>,
        vertex_images: BTreeMap<String, Point<S>>,
        edge_images: BTreeMap<String, EdgeImage<S>>,
    ) -> Result<Self> {
        for name in vertex_images.keys() {
            if !source.vertices().contains(name) {
                return Err(Error::UnknownElement(name.clone()));
            }
        }
        for name in edge_images.keys() {
            if source.edge(name).is_none() {
                return Err(Error::UnknownElement(name.clone()));
            }
        }
        for v in source.vertices() {
            let p = vertex_images.get(v).ok_or_else(|| Error::IncompleteMap(v.clone()))?;
            target.validate_point(p)?;
        }
        for e in source.edges() {
            let img = edge_images.get(&e.id).ok_or_else(|| Error::IncompleteMap(e.id.clone()))?;
            let t = target.edge(&img.edge).ok_or_else(|| Error::UnknownElement(img.edge.clone()))?;
            for pos in [&img.from, &img.to] {
                if pos.is_negative() || *pos > t.length {
                    return Err(Error::InvalidPoint {
                        edge: t.id.clone(),
                        position: pos.to_string(),
                    });
                }
            }
            if img.from == img.to {
                return Err(Error::DegenerateImage(e.id.clone()));
            }
            let ratio = (img.to.clone() - img.from.clone()).abs() / e.length.clone();
            let natural = ratio.to_natural().ok_or_else(|| Error::SlopeNotIntegral {
                edge: e.id.clone(),
                ratio: ratio.to_string(),
            })?;
            if natural != u64::from(img.slope) {
                return Err(Error::SlopeMismatch {
                    edge: e.id.clone(),
                    declared: img.slope,
                    actual: ratio.to_string(),
                });
            }
            for (vertex, pos) in [(&e.a, &img.from), (&e.b, &img.to)] {
                if vertex_images[vertex] != target.point_on(t, pos) {
                    return Err(Error::EndpointMismatch {
                        edge: e.id.clone(),
                        vertex: vertex.clone(),
                    });
                }
            }
        }
        Ok(MetricMorphism {
            source,
            target,
            vertex_images,
            edge_images,
        })
    }

    pub fn source(&self) -> &MetricGraph<S> {
        &self.source
    }

    pub fn target(&self) -> &MetricGraph<S> {
        &self.target
    }

    pub fn vertex_images(&self) -> &BTreeMap<String, Point<S>> {
        &self.vertex_images
    }

    pub fn edge_images(&self) -> &BTreeMap<String, EdgeImage<S>> {
        &self.edge_images
    }

    pub fn vertex_image(&self, v: &str) -> Option<&Point<S>> {
        self.vertex_images.get(v)
    }

    pub fn edge_image(&self, e: &str) -> Option<&EdgeImage<S>> {
        self.edge_images.get(e)
    }

    /// Vertex to its carrier cell, edge to its carrier edge.
    pub fn face_poset_morphism(&self) -> PosetMorphism {
        let map = self
            .vertex_images
            .iter()
            .map(|(v, p)| (v.as_str(), p.cell()))
            .chain(self.edge_images.iter().map(|(e, img)| (e.as_str(), img.edge.as_str())));
        PosetMorphism::new(self.source.face_poset(), self.target.face_poset(), map)
            .expect("validated cell maps are order-preserving")
    }
}

#[cfg(test)]
mod tests {
    use num_rational::Ratio;

    use super::super::Edge;
    use super::*;

    type Q = Ratio<i64>;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    fn segment(id: &str, a: &str, b: &str, len: i64) -> MetricGraph<Q> {
        MetricGraph::new(
            [a, b],
            [Edge {
                id: id.into(),
                a: a.into(),
                b: b.into(),
                length: q(len),
            }],
        )
        .unwrap()
    }

    fn map_edge(from: i64, to: i64, slope: u32) -> BTreeMap<String, EdgeImage<Q>> {
        BTreeMap::from([(
            "e".to_string(),
            EdgeImage {
                edge: "t".into(),
                from: q(from),
                to: q(to),
                slope,
            },
        )])
    }

    fn ends(a: &str, b: &str) -> BTreeMap<String, Point<Q>> {
        BTreeMap::from([("x".to_string(), Point::vertex(a)), ("y".to_string(), Point::vertex(b))])
    }

    #[test]
    fn identity_on_edge() {
        let phi = MetricMorphism::new(segment("e", "x", "y", 2), segment("t", "u", "v", 2), ends("u", "v"), map_edge(0, 2, 1)).unwrap();
        assert!(phi.face_poset_morphism().is_combinatorial());
    }

    #[test]
    fn reversed_orientation() {
        let phi = MetricMorphism::new(segment("e", "x", "y", 1), segment("t", "u", "v", 2), ends("v", "u"), map_edge(2, 0, 2)).unwrap();
        assert_eq!(phi.edge_image("e").unwrap().at(&Q::new(1, 2), &q(1)), q(1));
    }

    #[test]
    fn arithmetic_failures() {
        let err = MetricMorphism::new(segment("e", "x", "y", 2), segment("t", "u", "v", 3), ends("u", "v"), map_edge(0, 3, 1)).unwrap_err();
        assert_eq!(
            err,
            Error::SlopeNotIntegral {
                edge: "e".into(),
                ratio: "3/2".into()
            }
        );
        let err = MetricMorphism::new(segment("e", "x", "y", 1), segment("t", "u", "v", 2), ends("u", "v"), map_edge(0, 2, 1)).unwrap_err();
        assert!(matches!(err, Error::SlopeMismatch { declared: 1, .. }));
        let err = MetricMorphism::new(segment("e", "x", "y", 2), segment("t", "u", "v", 2), ends("v", "u"), map_edge(0, 2, 1)).unwrap_err();
        assert!(matches!(err, Error::EndpointMismatch { .. }));
        let err = MetricMorphism::new(segment("e", "x", "y", 2), segment("t", "u", "v", 2), ends("u", "u"), map_edge(0, 0, 1)).unwrap_err();
        assert_eq!(err, Error::DegenerateImage("e".into()));
    }
}
