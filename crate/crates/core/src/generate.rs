//! Seeded random instances for property tests and benchmarks.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use crate::covers::IndexMap;
use crate::extend::extend_balanced;
use crate::metric::{Edge, EdgeImage, MetricGraph, MetricMorphism, Point, Scalar};
use crate::morphism::PosetMorphism;
use crate::poset::{Poset, UpSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A graded poset built level by level: every element above rank 0 covers a
/// non-empty set of elements of the previous rank.
pub fn graded_poset<R: Rng + ?Sized>(rng: &mut R, max_elements: usize, max_rank: usize) -> Poset {
    let mut levels: Vec<Vec<String>> = Vec::new();
    let mut covers = Vec::new();
    let mut total = 0;
    for r in 0..=max_rank {
        let room = max_elements.saturating_sub(total);
        if room == 0 {
            break;
        }
        let width = rng.gen_range(1..=room.min(3));
        let level: Vec<String> = (0..width).map(|i| format!("x{r}{}", char::from(b'a' + i as u8))).collect();
        if let Some(below) = levels.last() {
            for name in &level {
                let k = rng.gen_range(1..=below.len());
                for lower in below.choose_multiple(rng, k) {
                    covers.push((lower.clone(), name.clone()));
                }
            }
        }
        total += width;
        levels.push(level);
        if rng.gen_bool(0.2) {
            break;
        }
    }
    Poset::new(levels.concat(), covers).expect("levelled covers form a graded poset")
}

/// Random graded posets until one is strongly connected, up to `tries`.
pub fn strongly_connected_poset<R: Rng + ?Sized>(rng: &mut R, max_elements: usize, max_rank: usize, tries: usize) -> Option<Poset> {
    (0..tries)
        .map(|_| graded_poset(rng, max_elements, max_rank))
        .find(|p| p.strong_connectivity().is_ok_and(|r| r.strongly_connected))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.0[x] = root;
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A combinatorial morphism onto `target`: disjoint copies of `↓μ` for
/// maximal `μ`, glued pairwise along principal down-sets.
pub fn combinatorial_over<R: Rng + ?Sized>(rng: &mut R, target: &Poset, max_source: usize) -> Option<PosetMorphism> {
    let tops = target.maximal();
    let mut copies: Vec<usize> = Vec::new();
    let mut size = 0;
    for &mu in &tops {
        let down = target.principal_down(mu).len();
        let count = rng.gen_range(1..=2);
        for _ in 0..count {
            if size + down > max_source && copies.contains(&mu) {
                break;
            }
            copies.push(mu);
            size += down;
        }
    }
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (c, &mu) in copies.iter().enumerate() {
        for d in target.principal_down(mu) {
            index.insert((c, d), cells.len());
            cells.push((c, d));
        }
    }
    let mut uf = UnionFind((0..cells.len()).collect());
    let gluings = rng.gen_range(0..=copies.len() * 2);
    for _ in 0..gluings {
        let (i, j) = (rng.gen_range(0..copies.len()), rng.gen_range(0..copies.len()));
        if i == j {
            continue;
        }
        let shared: Vec<usize> = target
            .principal_down(copies[i])
            .intersection(&target.principal_down(copies[j]))
            .copied()
            .collect();
        let Some(&beta) = shared.choose(rng) else {
            continue;
        };
        for d in target.principal_down(beta) {
            uf.union(index[&(i, d)], index[&(j, d)]);
        }
    }
    let mut class_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut images = Vec::new();
    for x in 0..cells.len() {
        let root = uf.find(x);
        if let std::collections::btree_map::Entry::Vacant(slot) = class_of.entry(root) {
            slot.insert(images.len());
            images.push(cells[root].1);
        }
    }
    if images.len() > max_source {
        return None;
    }
    let class = |uf: &mut UnionFind, x: usize| class_of[&uf.find(x)];
    let mut less: BTreeSet<(usize, usize)> = BTreeSet::new();
    for x in 0..cells.len() {
        for y in 0..cells.len() {
            if cells[x].0 == cells[y].0 && target.lt(cells[x].1, cells[y].1) {
                less.insert((class(&mut uf, x), class(&mut uf, y)));
            }
        }
    }
    let n = images.len();
    let mut counter: BTreeMap<usize, usize> = BTreeMap::new();
    let names: Vec<String> = images
        .iter()
        .map(|&b| {
            let k = counter.entry(b).or_insert(0);
            *k += 1;
            format!("{}#{}", target.name(b), k)
        })
        .collect();
    let covers: Vec<(&str, &str)> = less
        .iter()
        .filter(|&&(a, b)| !(0..n).any(|z| less.contains(&(a, z)) && less.contains(&(z, b))))
        .map(|&(a, b)| (names[a].as_str(), names[b].as_str()))
        .collect();
    let source = Poset::new(&names, covers).expect("quotient order is acyclic");
    let map: Vec<(&str, &str)> = names.iter().zip(&images).map(|(a, &b)| (a.as_str(), target.name(b))).collect();
    PosetMorphism::new(source, target.clone(), map).ok()
}

/// A random order-preserving map, assigned in order of increasing height;
/// `None` if some element has no admissible image.
pub fn monotone_map<R: Rng + ?Sized>(rng: &mut R, source: &Poset, target: &Poset) -> Option<PosetMorphism> {
    let heights = source.heights();
    let mut order: Vec<usize> = source.elements().collect();
    order.sort_by_key(|&a| heights[a]);
    let mut map = vec![usize::MAX; source.len()];
    for a in order {
        let options: Vec<usize> = target
            .elements()
            .filter(|&b| source.lower_covers(a).iter().all(|&c| target.leq(map[c], b)))
            .collect();
        map[a] = *options.choose(rng)?;
    }
    PosetMorphism::from_indices(source.clone(), target.clone(), map).ok()
}

/// Random values on maximal source elements, extended downward when the
/// candidates agree. Returns the total map if every element got a value.
pub fn balanced_attempt<R: Rng + ?Sized>(rng: &mut R, phi: &PosetMorphism, max_value: u64) -> Option<IndexMap> {
    let src = phi.source();
    let tops: BTreeMap<usize, u64> = src.maximal().into_iter().map(|a| (a, rng.gen_range(1..=max_value))).collect();
    let m = IndexMap::new(src, tops).ok()?;
    let report = extend_balanced(phi, &m, &UpSet::full(src)).ok()?;
    report.is_complete().then_some(report.extended)
}

/// A total index map with independent uniform values.
pub fn random_index<R: Rng + ?Sized>(rng: &mut R, poset: &Poset, max_value: u64) -> IndexMap {
    let values = poset.elements().map(|a| (a, rng.gen_range(1..=max_value))).collect();
    IndexMap::new(poset, values).expect("total map on the full up-set")
}

/// A random metric morphism: each source edge maps onto a sub-interval of
/// one target edge with slope 1 to 3, endpoints on a grid of quarters.
pub fn metric_morphism<S: Scalar, R: Rng + ?Sized>(rng: &mut R, target_edges: usize, source_edges: usize) -> MetricMorphism<S> {
    let target_vertices: Vec<String> = (0..=target_edges).map(|i| format!("v{i}")).collect();
    let target_list: Vec<Edge<S>> = (0..target_edges)
        .map(|i| Edge {
            id: format!("t{i}"),
            a: target_vertices[i].clone(),
            b: target_vertices[i + 1].clone(),
            length: S::from_u32(rng.gen_range(1..=4)),
        })
        .collect();
    let target = MetricGraph::new(target_vertices.clone(), target_list.clone()).expect("path graph");
    let mut at_point: BTreeMap<Point<S>, Vec<String>> = BTreeMap::new();
    let mut vertex_images = BTreeMap::new();
    let mut edges = Vec::new();
    let mut edge_images = BTreeMap::new();
    for i in 0..source_edges {
        let t = &target_list[rng.gen_range(0..target_list.len())];
        let lo = rng.gen_range(0..4u32);
        let hi = rng.gen_range(lo + 1..=4u32);
        let quarter = |k: u32| t.length.clone() * S::from_u32(k) / S::from_u32(4);
        let (mut from, mut to) = (quarter(lo), quarter(hi));
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut from, &mut to);
        }
        let slope = rng.gen_range(1..=3u32);
        let length = (to.clone() - from.clone()).abs() / S::from_u32(slope);
        let mut ends = Vec::new();
        for (k, pos) in [(0, &from), (1, &to)] {
            let point = target.point_on(t, pos);
            let existing = at_point.entry(point.clone()).or_default();
            let name = match existing.choose(rng) {
                Some(v) if rng.gen_bool(0.6) => v.clone(),
                _ => {
                    let v = format!("w{i}{}", ["a", "b"][k]);
                    existing.push(v.clone());
                    vertex_images.insert(v.clone(), point);
                    v
                }
            };
            ends.push(name);
        }
        let id = format!("e{i}");
        edges.push(Edge {
            id: id.clone(),
            a: ends[0].clone(),
            b: ends[1].clone(),
            length,
        });
        edge_images.insert(
            id,
            EdgeImage {
                edge: t.id.clone(),
                from,
                to,
                slope,
            },
        );
    }
    let source = MetricGraph::new(vertex_images.keys().cloned(), edges).expect("generated graph");
    MetricMorphism::new(source, target, vertex_images, edge_images).expect("generated morphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_instances_are_valid() {
        let mut r = rng(7);
        for _ in 0..50 {
            let p = graded_poset(&mut r, 8, 3);
            assert!(p.len() <= 8 && p.is_graded());
            if let Some(phi) = combinatorial_over(&mut r, &p, 10) {
                assert!(phi.is_combinatorial(), "{:?}", phi.named_map());
                assert!(phi.source().len() <= 10);
            }
            let g = metric_morphism::<crate::Rational, _>(&mut r, 2, 3);
            assert!(g.source().edges().count() == 3);
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = graded_poset(&mut rng(3), 8, 3);
        let b = graded_poset(&mut rng(3), 8, 3);
        assert_eq!(a, b);
    }
}
