//! Brute-force reference implementations used to cross-check the library.
//! They rely only on `leq`, element names and the raw image table.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use polycover::generate::{self, ChaCha8Rng};
use polycover::subdivision::Face;
use polycover::{Poset, PosetMorphism};
use rand::Rng;

pub type Set = BTreeSet<usize>;

pub fn small_target(rng: &mut impl Rng) -> Poset {
    generate::graded_poset(rng, 5, 2)
}

/// A combinatorial morphism with at most 10 source elements onto a
/// connected target, with the generator state left after building it.
pub fn combinatorial_instance(seed: u64) -> (PosetMorphism, ChaCha8Rng) {
    let mut rng = generate::rng(seed);
    loop {
        let target = small_target(&mut rng);
        if !target.is_connected() {
            continue;
        }
        if let Some(phi) = generate::combinatorial_over(&mut rng, &target, 10) {
            return (phi, rng);
        }
    }
}

pub fn covers(p: &Poset, a: usize, c: usize) -> bool {
    p.lt(a, c) && !p.elements().any(|b| p.lt(a, b) && p.lt(b, c))
}

/// Every up-set, empty one included, by filtering all subsets.
pub fn up_sets(p: &Poset) -> Vec<Set> {
    let n = p.len();
    assert!(n <= 20, "subset enumeration over {n} elements");
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Set>())
        .filter(|s| s.iter().all(|&a| p.elements().all(|b| !p.leq(a, b) || s.contains(&b))))
        .collect()
}

/// Components of the comparability graph on `set`, sorted.
pub fn components(p: &Poset, set: &Set) -> Vec<Set> {
    let mut label: BTreeMap<usize, usize> = set.iter().map(|&a| (a, a)).collect();
    loop {
        let mut changed = false;
        for &a in set {
            for &b in set {
                if p.comparable(a, b) && label[&a] != label[&b] {
                    let low = label[&a].min(label[&b]);
                    label.insert(a, low);
                    label.insert(b, low);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut groups: BTreeMap<usize, Set> = BTreeMap::new();
    for (a, l) in label {
        groups.entry(l).or_default().insert(a);
    }
    let mut out: Vec<Set> = groups.into_values().collect();
    out.sort();
    out
}

pub fn connected(p: &Poset, set: &Set) -> bool {
    components(p, set).len() == 1
}

/// `m(a)` equals the sum over covers of `a` mapping to `b`, for every `b`
/// covering `φ(a)`.
pub fn balanced(phi: &PosetMorphism, values: &BTreeMap<usize, u64>) -> bool {
    let (src, tgt) = (phi.source(), phi.target());
    values.iter().all(|(&a, &v)| {
        tgt.elements().filter(|&b| covers(tgt, phi.image(a), b)).all(|b| {
            let sum: u64 = src
                .elements()
                .filter(|&g| covers(src, a, g) && phi.image(g) == b)
                .map(|g| values[&g])
                .sum();
            sum == v
        })
    })
}

fn degree(phi: &PosetMorphism, values: &BTreeMap<usize, u64>, part: &Set, y: usize) -> u64 {
    part.iter().filter(|&&x| phi.image(x) == y).map(|x| values[x]).sum()
}

/// Fibres over maximal elements are maximal, and on each component of the
/// preimage of each connected open set the weighted count is constant over
/// that open set.
pub fn ibc(phi: &PosetMorphism, values: &BTreeMap<usize, u64>) -> bool {
    let (src, tgt) = (phi.source(), phi.target());
    let is_max = |p: &Poset, a: usize| p.elements().all(|b| !p.lt(a, b));
    let unbranched = src
        .elements()
        .all(|a| !is_max(tgt, phi.image(a)) || is_max(src, a));
    unbranched
        && up_sets(tgt).into_iter().filter(|u| !u.is_empty() && connected(tgt, u)).all(|u| {
            let pre: Set = src.elements().filter(|&a| u.contains(&phi.image(a))).collect();
            components(src, &pre).iter().all(|part| {
                let degrees: BTreeSet<u64> = u.iter().map(|&y| degree(phi, values, part, y)).collect();
                degrees.len() == 1
            })
        })
}

/// Each down-set maps bijectively onto the down-set of the image, with
/// order reflected.
pub fn combinatorial(phi: &PosetMorphism) -> bool {
    let (src, tgt) = (phi.source(), phi.target());
    src.elements().all(|a| {
        let down: Vec<usize> = src.elements().filter(|&x| src.leq(x, a)).collect();
        let image: Set = down.iter().map(|&x| phi.image(x)).collect();
        let target_down: Set = tgt.elements().filter(|&y| tgt.leq(y, phi.image(a))).collect();
        image.len() == down.len()
            && image == target_down
            && down
                .iter()
                .all(|&x| down.iter().all(|&z| src.leq(x, z) == tgt.leq(phi.image(x), phi.image(z))))
    })
}

/// Number of non-empty totally ordered subsets.
pub fn chain_count(p: &Poset) -> usize {
    let n = p.len();
    (1u32..1 << n)
        .filter(|&mask| {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            members.iter().all(|&a| members.iter().all(|&b| p.comparable(a, b)))
        })
        .count()
}

/// Every face of the complex spanned by `maximal`.
pub fn closure(maximal: &[Face]) -> BTreeSet<Face> {
    let mut faces = BTreeSet::new();
    for f in maximal {
        let items: Vec<&String> = f.iter().collect();
        for mask in 1u32..1 << items.len() {
            faces.insert((0..items.len()).filter(|&i| mask >> i & 1 == 1).map(|i| items[i].clone()).collect());
        }
    }
    faces
}

/// Stellar subdivision on maximal faces: each facet `F ⊇ σ` is replaced by
/// the facets `F - s + v` for `s ∈ σ`.
pub fn stellar(maximal: &[Face], sigma: &Face, v: &str) -> BTreeSet<Face> {
    let mut out = Vec::new();
    for f in maximal {
        if sigma.is_subset(f) {
            for s in sigma {
                let mut g = f.clone();
                g.remove(s);
                g.insert(v.to_string());
                out.push(g);
            }
        } else {
            out.push(f.clone());
        }
    }
    closure(&out)
}

/// Whether the graph with the given edges on `vertices` has no cycle.
pub fn is_forest(vertices: &Set, edges: &[(usize, usize)]) -> bool {
    let pieces = components_by_edges(vertices, edges);
    edges.len() + pieces == vertices.len()
}

fn components_by_edges(vertices: &Set, edges: &[(usize, usize)]) -> usize {
    let mut label: BTreeMap<usize, usize> = vertices.iter().map(|&a| (a, a)).collect();
    loop {
        let mut changed = false;
        for &(a, b) in edges {
            let low = label[&a].min(label[&b]);
            for x in [a, b] {
                if label[&x] != low {
                    label.insert(x, low);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    label.values().collect::<BTreeSet<_>>().len()
}
