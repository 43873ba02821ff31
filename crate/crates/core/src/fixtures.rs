//! Bundled worked examples.
//!
//! Source elements are named after their images with a trailing index, so
//! the maps below simply drop trailing digits.

use std::collections::{BTreeMap, BTreeSet};

use crate::covers::IndexMap;
use crate::metric::{Edge, EdgeImage, MetricGraph, MetricMorphism, Point, Scalar};
use crate::morphism::PosetMorphism;
use crate::poset::Poset;

/// Names of the bundled morphisms, sorted.
pub const MORPHISMS: [&str; 7] = [
    "FIX-CE1",
    "FIX-CE2",
    "FIX-IDREAD",
    "FIX-LIFT",
    "FIX-OPEN",
    "FIX-SIMPLE-EXT",
    "FIX-TROP",
];

/// Names of the bundled index maps, sorted.
pub const INDEX_MAPS: [&str; 6] = [
    "FIX-CE1-M",
    "FIX-CE2-M",
    "FIX-IDREAD-M",
    "FIX-LIFT-M",
    "FIX-SIMPLE-EXT-M",
    "FIX-TROP-M",
];

fn poset(covers: &[(&str, &str)]) -> Poset {
    let elements: BTreeSet<&str> = covers.iter().flat_map(|&(a, b)| [a, b]).collect();
    Poset::new(elements, covers.iter().copied()).expect("fixture poset")
}

fn drop_index(name: &str) -> &str {
    name.trim_end_matches(|c: char| c.is_ascii_digit())
}

fn forgetful(source: &[(&str, &str)], target: &[(&str, &str)]) -> PosetMorphism {
    let (source, target) = (poset(source), poset(target));
    let map: Vec<(String, String)> = source
        .names()
        .iter()
        .map(|a| (a.clone(), drop_index(a).to_string()))
        .collect();
    PosetMorphism::new(source, target, map).expect("fixture morphism")
}

fn total(phi: &PosetMorphism, values: &[(&str, u64)]) -> IndexMap {
    IndexMap::total(phi.source(), values.iter().copied()).expect("fixture index map")
}

fn on(phi: &PosetMorphism, generators: &[&str], values: &[(&str, u64)]) -> IndexMap {
    IndexMap::from_names(phi.source(), generators, values.iter().copied()).expect("fixture index map")
}

const TROP_TARGET: [(&str, &str); 4] = [("A", "s"), ("B", "s"), ("B", "t"), ("C", "t")];

pub fn trop() -> PosetMorphism {
    forgetful(
        &[
            ("A1", "s1"),
            ("A1", "s2"),
            ("B1", "s1"),
            ("B1", "s2"),
            ("B1", "t1"),
            ("B1", "t2"),
            ("C1", "t1"),
            ("C2", "t2"),
        ],
        &TROP_TARGET,
    )
}

pub fn trop_m() -> IndexMap {
    total(
        &trop(),
        &[
            ("A1", 3),
            ("B1", 3),
            ("C1", 1),
            ("C2", 2),
            ("s1", 2),
            ("s2", 1),
            ("t1", 1),
            ("t2", 2),
        ],
    )
}

pub fn ce1() -> PosetMorphism {
    forgetful(&[("A1", "B1"), ("A2", "B1")], &[("A", "B")])
}

pub fn ce1_m() -> IndexMap {
    total(&ce1(), &[("A1", 1), ("A2", 1), ("B1", 1)])
}

pub fn ce2() -> PosetMorphism {
    forgetful(
        &[("A1", "B1"), ("A1", "B2"), ("A2", "B2"), ("A2", "B3")],
        &[("A", "B")],
    )
}

pub fn ce2_m() -> IndexMap {
    total(&ce2(), &[("A1", 2), ("A2", 2), ("B1", 1), ("B2", 2), ("B3", 1)])
}

pub fn idread() -> PosetMorphism {
    forgetful(
        &[
            ("O1", "A1"),
            ("O1", "B1"),
            ("O1", "B2"),
            ("Õ1", "B1"),
            ("Õ1", "C1"),
            ("Õ2", "B2"),
            ("Õ2", "C2"),
            ("A1", "β1"),
            ("A1", "β2"),
            ("A1", "γ1"),
            ("A1", "γ2"),
            ("B1", "β1"),
            ("B2", "β2"),
            ("C1", "γ1"),
            ("C2", "γ2"),
        ],
        &[
            ("O", "A"),
            ("O", "B"),
            ("Õ", "B"),
            ("Õ", "C"),
            ("A", "β"),
            ("A", "γ"),
            ("B", "β"),
            ("C", "γ"),
        ],
    )
}

pub fn idread_m() -> IndexMap {
    on(
        &idread(),
        &["A1", "B1", "B2", "C1", "C2"],
        &[
            ("A1", 3),
            ("B1", 2),
            ("B2", 1),
            ("C1", 1),
            ("C2", 2),
            ("β1", 2),
            ("β2", 1),
            ("γ1", 1),
            ("γ2", 2),
        ],
    )
}

pub fn simple_ext() -> PosetMorphism {
    PosetMorphism::identity(poset(&[("O", "A"), ("A", "α"), ("O", "B"), ("B", "β")]))
}

pub fn simple_ext_m() -> IndexMap {
    on(&simple_ext(), &["A", "B"], &[("α", 2), ("A", 2), ("β", 1), ("B", 1)])
}

const OPEN_TARGET: [(&str, &str); 7] = [
    ("O", "A"),
    ("O", "B"),
    ("O", "C"),
    ("A", "α"),
    ("B", "α"),
    ("B", "β"),
    ("C", "β"),
];

pub fn open() -> PosetMorphism {
    forgetful(
        &[
            ("O1", "A1"),
            ("O1", "B1"),
            ("O1", "B2"),
            ("O1", "C1"),
            ("A1", "α1"),
            ("B1", "α1"),
            ("B1", "β1"),
            ("C1", "β1"),
            ("B2", "β2"),
            ("C1", "β2"),
        ],
        &OPEN_TARGET,
    )
}

pub fn lift() -> PosetMorphism {
    forgetful(
        &[
            ("O1", "A1"),
            ("O1", "A2"),
            ("O1", "B1"),
            ("O1", "B2"),
            ("O1", "C1"),
            ("A1", "α1"),
            ("B1", "α1"),
            ("A2", "α2"),
            ("B2", "α2"),
            ("B1", "β1"),
            ("C1", "β1"),
            ("B2", "β2"),
            ("C1", "β2"),
        ],
        &OPEN_TARGET,
    )
}

pub fn lift_m() -> IndexMap {
    on(
        &lift(),
        &["B2", "C1"],
        &[("B2", 1), ("C1", 2), ("α2", 1), ("β1", 1), ("β2", 1)],
    )
}

fn n<S: Scalar>(k: u32) -> S {
    S::from_u32(k)
}

fn edge<S: Scalar>(id: &str, a: &str, b: &str, length: u32) -> Edge<S> {
    Edge {
        id: id.into(),
        a: a.into(),
        b: b.into(),
        length: n(length),
    }
}

fn onto<S: Scalar>(edge: &str, from: u32, to: u32, slope: u32) -> EdgeImage<S> {
    EdgeImage {
        edge: edge.into(),
        from: n(from),
        to: n(to),
        slope,
    }
}

fn metric<S: Scalar>(
    source: MetricGraph<S>,
    target: MetricGraph<S>,
    vertices: &[(&str, Point<S>)],
    edges: Vec<(&str, EdgeImage<S>)>,
) -> MetricMorphism<S> {
    let vertex_images: BTreeMap<String, Point<S>> = vertices.iter().map(|(v, p)| (v.to_string(), p.clone())).collect();
    let edge_images = edges.into_iter().map(|(e, img)| (e.to_string(), img)).collect();
    MetricMorphism::new(source, target, vertex_images, edge_images).expect("fixture metric morphism")
}

/// Two edges `e = A–B` and `f = A–C` over one edge `t = u–v` of length 3,
/// with `B` landing at the interior point 2 of `t`.
pub fn graph<S: Scalar>() -> MetricMorphism<S> {
    let source = MetricGraph::new(["A", "B", "C"], [edge("e", "A", "B", 2), edge("f", "A", "C", 3)]).expect("fixture graph");
    let target = MetricGraph::new(["u", "v"], [edge("t", "u", "v", 3)]).expect("fixture graph");
    metric(
        source,
        target,
        &[
            ("A", Point::vertex("u")),
            ("B", Point::interior("t", n(2))),
            ("C", Point::vertex("v")),
        ],
        vec![("e", onto("t", 0, 2, 1)), ("f", onto("t", 0, 3, 1))],
    )
}

/// A metric realization of [`trop`] whose edge slopes reproduce the edge
/// values of [`trop_m`].
pub fn trop_graph<S: Scalar>() -> MetricMorphism<S> {
    let source = MetricGraph::new(
        ["A1", "B1", "C1", "C2"],
        [
            edge("s1", "A1", "B1", 1),
            edge("s2", "A1", "B1", 2),
            edge("t1", "B1", "C1", 2),
            edge("t2", "B1", "C2", 1),
        ],
    )
    .expect("fixture graph");
    let target = MetricGraph::new(["A", "B", "C"], [edge("s", "A", "B", 2), edge("t", "B", "C", 2)]).expect("fixture graph");
    metric(
        source,
        target,
        &[
            ("A1", Point::vertex("A")),
            ("B1", Point::vertex("B")),
            ("C1", Point::vertex("C")),
            ("C2", Point::vertex("C")),
        ],
        vec![
            ("s1", onto("s", 0, 2, 2)),
            ("s2", onto("s", 0, 2, 1)),
            ("t1", onto("t", 0, 2, 1)),
            ("t2", onto("t", 0, 2, 2)),
        ],
    )
}

pub fn morphism(name: &str) -> Option<PosetMorphism> {
    Some(match name {
        "FIX-CE1" => ce1(),
        "FIX-CE2" => ce2(),
        "FIX-IDREAD" => idread(),
        "FIX-LIFT" => lift(),
        "FIX-OPEN" => open(),
        "FIX-SIMPLE-EXT" => simple_ext(),
        "FIX-TROP" => trop(),
        _ => return None,
    })
}

pub fn index_map(name: &str) -> Option<IndexMap> {
    Some(match name {
        "FIX-CE1-M" => ce1_m(),
        "FIX-CE2-M" => ce2_m(),
        "FIX-IDREAD-M" => idread_m(),
        "FIX-LIFT-M" => lift_m(),
        "FIX-SIMPLE-EXT-M" => simple_ext_m(),
        "FIX-TROP-M" => trop_m(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds() {
        for name in MORPHISMS {
            assert!(morphism(name).is_some(), "{name}");
        }
        for name in INDEX_MAPS {
            assert!(index_map(name).is_some(), "{name}");
        }
        assert_eq!(trop().source().len(), 8);
        assert_eq!(trop().source().cover_count(), 8);
    }

    #[test]
    fn metric_fixtures_build() {
        assert_eq!(graph::<crate::Rational>().face_poset_morphism().source().len(), 5);
        let realized = trop_graph::<num_rational::Ratio<i64>>().face_poset_morphism();
        assert_eq!(realized.named_map(), trop().named_map());
    }
}
