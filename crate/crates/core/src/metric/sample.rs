use rand::Rng;
use serde::Serialize;

use super::{MetricGraph, MetricMorphism, Point, Scalar};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibreSample {
    pub point: String,
    pub geometric: usize,
    pub poset: usize,
    pub matches: bool,
}

/// Counts the points over `y` directly and compares with the size of the
/// face-poset fibre over the cell of `y`.
pub fn sample_fibre<S: Scalar>(phi: &MetricMorphism<S>, y: &Point<S>) -> Result<FibreSample> {
    phi.target().validate_point(y)?;
    let mut geometric = phi.vertex_images().values().filter(|p| *p == y).count();
    if let Point::Interior { edge, position } = y {
        for img in phi.edge_images().values().filter(|img| img.edge == *edge) {
            let (lo, hi) = if img.from < img.to {
                (&img.from, &img.to)
            } else {
                (&img.to, &img.from)
            };
            if lo < position && position < hi {
                geometric += 1;
            }
        }
    }
    let face = phi.face_poset_morphism();
    let cell = face.target().id(y.cell())?;
    let poset = face.fibre(cell).len();
    Ok(FibreSample {
        point: y.to_string(),
        geometric,
        poset,
        matches: geometric == poset,
    })
}

/// A random vertex, or a random rational interior point with denominator
/// at most `max_denominator` relative to the edge length.
pub fn random_point<S: Scalar, R: Rng + ?Sized>(graph: &MetricGraph<S>, max_denominator: u32, rng: &mut R) -> Point<S> {
    let vertices: Vec<&String> = graph.vertices().iter().collect();
    let edges: Vec<_> = graph.edges().collect();
    let pick = rng.gen_range(0..vertices.len() + edges.len());
    if pick < vertices.len() {
        return Point::Vertex(vertices[pick].clone());
    }
    let edge = edges[pick - vertices.len()];
    let q = rng.gen_range(2..=max_denominator.max(2));
    let k = rng.gen_range(1..q);
    Point::interior(edge.id.clone(), edge.length.clone() * S::from_u32(k) / S::from_u32(q))
}
