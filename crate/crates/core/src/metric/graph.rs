use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge<S> {
    pub id: String,
    pub a: String,
    pub b: String,
    pub length: S,
}

/// A point of a metric graph. Interior positions are measured from the
/// edge's first endpoint `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point<S> {
    Vertex(String),
    Interior { edge: String, position: S },
}

impl<S: Scalar> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Vertex(v) => f.write_str(v),
            Point::Interior { edge, position } => write!(f, "({edge}, {position})"),
        }
    }
}

impl<S> Point<S> {
    pub fn interior(edge: impl Into<String>, position: S) -> Self {
        Point::Interior {
            edge: edge.into(),
            position,
        }
    }

    pub fn vertex(v: impl Into<String>) -> Self {
        Point::Vertex(v.into())
    }

    /// The vertex or edge carrying the point.
    pub fn cell(&self) -> &str {
        match self {
            Point::Vertex(v) => v,
            Point::Interior { edge, .. } => edge,
        }
    }
}

/// A finite graph with positive exact edge lengths. Vertex and edge
/// identifiers share one namespace so that the face poset is well defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricGraph<S> {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, Edge<S>>,
}

impl<S: Scalar> MetricGraph<S> {
    pub fn new<V: Into<String>>(vertices: impl IntoIterator<Item = V>, edges: impl IntoIterator<Item = Edge<S>>) -> Result<Self> {
        let mut vs = BTreeSet::new();
        for v in vertices {
            let v = v.into();
            if !vs.insert(v.clone()) {
                return Err(Error::DuplicateElement(v));
            }
        }
        let mut es = BTreeMap::new();
        for e in edges {
            if vs.contains(&e.id) || es.contains_key(&e.id) {
                return Err(Error::DuplicateElement(e.id));
            }
            for end in [&e.a, &e.b] {
                if !vs.contains(end) {
                    return Err(Error::UnknownElement(end.clone()));
                }
            }
            if e.a == e.b {
                return Err(Error::LoopEdge(e.id));
            }
            if !e.length.is_positive() {
                return Err(Error::NonPositiveLength(e.id));
            }
            es.insert(e.id.clone(), e);
        }
        Ok(MetricGraph { vertices: vs, edges: es })
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge<S>> {
        self.edges.values()
    }

    pub fn edge(&self, id: &str) -> Option<&Edge<S>> {
        self.edges.get(id)
    }

    pub fn has_name(&self, name: &str) -> bool {
        self.vertices.contains(name) || self.edges.contains_key(name)
    }

    pub fn total_length(&self) -> S {
        self.edges.values().fold(S::zero(), |acc, e| acc + e.length.clone())
    }

    pub fn validate_point(&self, p: &Point<S>) -> Result<()> {
        match p {
            Point::Vertex(v) if self.vertices.contains(v) => Ok(()),
            Point::Vertex(v) => Err(Error::UnknownElement(v.clone())),
            Point::Interior { edge, position } => {
                let e = self.edge(edge).ok_or_else(|| Error::UnknownElement(edge.clone()))?;
                if position.is_positive() && *position < e.length {
                    Ok(())
                } else {
                    Err(Error::InvalidPoint {
                        edge: edge.clone(),
                        position: position.to_string(),
                    })
                }
            }
        }
    }

    /// The point at `position ∈ [0, length]` along `edge`.
    pub fn point_on(&self, edge: &Edge<S>, position: &S) -> Point<S> {
        if position.is_zero() {
            Point::Vertex(edge.a.clone())
        } else if *position == edge.length {
            Point::Vertex(edge.b.clone())
        } else {
            Point::interior(edge.id.clone(), position.clone())
        }
    }

    /// Vertices rank 0, edges rank 1, covers given by incidence.
    pub fn face_poset(&self) -> Poset {
        let elements = self.vertices.iter().chain(self.edges.keys());
        let covers = self
            .edges
            .values()
            .flat_map(|e| [(e.a.as_str(), e.id.as_str()), (e.b.as_str(), e.id.as_str())]);
        Poset::new(elements, covers).expect("incidence of a loopless graph is a cover relation")
    }
}

#[cfg(test)]
mod tests {
    use num_rational::Ratio;

    use super::*;

    type Q = Ratio<i64>;

    fn edge(id: &str, a: &str, b: &str, len: i64) -> Edge<Q> {
        Edge {
            id: id.into(),
            a: a.into(),
            b: b.into(),
            length: Q::from_integer(len),
        }
    }

    #[test]
    fn single_edge_face_poset() {
        let g = MetricGraph::new(["u", "v"], [edge("t", "u", "v", 3)]).unwrap();
        let p = g.face_poset();
        assert_eq!(p.len(), 3);
        assert_eq!(p.cover_count(), 2);
        assert_eq!(g.total_length(), Q::from_integer(3));
    }

    #[test]
    fn validation() {
        assert_eq!(
            MetricGraph::new(["u"], [edge("t", "u", "u", 1)]).unwrap_err(),
            Error::LoopEdge("t".into())
        );
        assert_eq!(
            MetricGraph::new(["u", "v"], [edge("t", "u", "v", 0)]).unwrap_err(),
            Error::NonPositiveLength("t".into())
        );
        assert_eq!(
            MetricGraph::new(["u", "v"], [edge("u", "u", "v", 1)]).unwrap_err(),
            Error::DuplicateElement("u".into())
        );
        let g = MetricGraph::new(["u", "v"], [edge("t", "u", "v", 3)]).unwrap();
        assert!(g.validate_point(&Point::interior("t", Q::from_integer(3))).is_err());
        assert!(g.validate_point(&Point::interior("t", Q::new(5, 2))).is_ok());
    }
}
