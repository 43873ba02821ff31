//! One-round refinement of a metric morphism until every cell maps onto a
//! cell.

use std::collections::{BTreeMap, BTreeSet};

use super::{Edge, EdgeImage, MetricGraph, MetricMorphism, Point, Scalar};
use crate::error::{Error, Result};
use crate::morphism::PosetMorphism;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement<S> {
    pub morphism: MetricMorphism<S>,
    pub poset_morphism: PosetMorphism,
    pub new_target_vertices: Vec<String>,
    pub new_source_vertices: Vec<String>,
}

/// New vertices with their positions along the edge, and the pieces
/// between consecutive cuts.
struct Split<S> {
    cuts: Vec<(S, String)>,
    pieces: Vec<Edge<S>>,
}

fn fresh(base: String, taken: &mut BTreeSet<String>) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}

fn split_edge<S: Scalar>(edge: &Edge<S>, positions: &BTreeSet<S>, taken: &mut BTreeSet<String>) -> Split<S> {
    if positions.is_empty() {
        return Split {
            cuts: Vec::new(),
            pieces: vec![edge.clone()],
        };
    }
    let cuts: Vec<(S, String)> = positions
        .iter()
        .map(|p| (p.clone(), fresh(format!("{}@{}", edge.id, p), taken)))
        .collect();
    let mut marks = vec![(S::zero(), edge.a.clone())];
    marks.extend(cuts.iter().cloned());
    marks.push((edge.length.clone(), edge.b.clone()));
    let pieces = marks
        .windows(2)
        .enumerate()
        .map(|(i, w)| Edge {
            id: fresh(format!("{}.{}", edge.id, i + 1), taken),
            a: w[0].1.clone(),
            b: w[1].1.clone(),
            length: w[1].0.clone() - w[0].0.clone(),
        })
        .collect();
    Split { cuts, pieces }
}

/// Subdivides the target at interior vertex images, then the source at the
/// preimages of the new target vertices, and rebuilds the cell maps.
pub fn refine_to_combinatorial<S: Scalar>(phi: &MetricMorphism<S>) -> Result<Refinement<S>> {
    let (src, tgt) = (phi.source(), phi.target());
    let mut taken: BTreeSet<String> = src.vertices().iter().chain(tgt.vertices()).cloned().collect();
    taken.extend(src.edges().chain(tgt.edges()).map(|e| e.id.clone()));

    let mut cut_positions: BTreeMap<&str, BTreeSet<S>> = BTreeMap::new();
    for p in phi.vertex_images().values() {
        if let Point::Interior { edge, position } = p {
            cut_positions.entry(edge.as_str()).or_default().insert(position.clone());
        }
    }
    let mut target_splits = BTreeMap::new();
    let mut new_target_vertices = Vec::new();
    for t in tgt.edges() {
        let split = split_edge(t, cut_positions.get(t.id.as_str()).unwrap_or(&BTreeSet::new()), &mut taken);
        new_target_vertices.extend(split.cuts.iter().map(|c| c.1.clone()));
        target_splits.insert(t.id.clone(), split);
    }

    let to_target_point = |edge: &str, position: &S| -> Point<S> {
        let split = &target_splits[edge];
        match split.cuts.iter().find(|c| c.0 == *position) {
            Some(c) => Point::Vertex(c.1.clone()),
            None => tgt.point_on(tgt.edge(edge).expect("carrier edge"), position),
        }
    };

    let mut vertex_images: BTreeMap<String, Point<S>> = phi
        .vertex_images()
        .iter()
        .map(|(v, p)| {
            let image = match p {
                Point::Interior { edge, position } => to_target_point(edge, position),
                Point::Vertex(_) => p.clone(),
            };
            (v.clone(), image)
        })
        .collect();
    let mut edge_images = BTreeMap::new();
    let mut source_edges = Vec::new();
    let mut new_source_vertices = Vec::new();
    for e in src.edges() {
        let img = &phi.edge_images()[&e.id];
        let t_split = &target_splits[&img.edge];
        let (lo, hi) = if img.from < img.to {
            (&img.from, &img.to)
        } else {
            (&img.to, &img.from)
        };
        let positions: BTreeSet<S> = t_split
            .cuts
            .iter()
            .filter(|c| c.0 > *lo && c.0 < *hi)
            .map(|c| (c.0.clone() - img.from.clone()) * e.length.clone() / (img.to.clone() - img.from.clone()))
            .collect();
        let split = split_edge(e, &positions, &mut taken);
        for (x, name) in &split.cuts {
            new_source_vertices.push(name.clone());
            vertex_images.insert(name.clone(), to_target_point(&img.edge, &img.at(x, &e.length)));
        }
        let mut offset = S::zero();
        for piece in split.pieces {
            let start = img.at(&offset, &e.length);
            offset = offset + piece.length.clone();
            let end = img.at(&offset, &e.length);
            let mid = (start.clone() + end.clone()) / S::from_u32(2);
            let (carrier, base) = carrier_piece(t_split, &mid);
            edge_images.insert(
                piece.id.clone(),
                EdgeImage {
                    edge: carrier.id.clone(),
                    from: start - base.clone(),
                    to: end - base,
                    slope: img.slope,
                },
            );
            source_edges.push(piece);
        }
    }

    let source_vertices: Vec<String> = src.vertices().iter().cloned().chain(new_source_vertices.iter().cloned()).collect();
    let target_vertices: Vec<String> = tgt.vertices().iter().cloned().chain(new_target_vertices.iter().cloned()).collect();
    let source = MetricGraph::new(source_vertices, source_edges)?;
    let target = MetricGraph::new(target_vertices, target_splits.into_values().flat_map(|s| s.pieces))?;
    let morphism = MetricMorphism::new(source, target, vertex_images, edge_images)?;
    let poset_morphism = morphism.face_poset_morphism();
    if let Some(w) = poset_morphism.combinatorial_check().witnesses.first() {
        return Err(Error::RefinementNotCombinatorial(w.element.clone()));
    }
    Ok(Refinement {
        morphism,
        poset_morphism,
        new_target_vertices,
        new_source_vertices,
    })
}

/// The piece of a split target edge containing the original position `y`,
/// with the original position of its start.
fn carrier_piece<'a, S: Scalar>(split: &'a Split<S>, y: &S) -> (&'a Edge<S>, S) {
    let mut base = S::zero();
    for piece in &split.pieces {
        let end = base.clone() + piece.length.clone();
        if *y < end {
            return (piece, base);
        }
        base = end;
    }
    let last = split.pieces.last().expect("at least one piece");
    (last, base - last.length.clone())
}
