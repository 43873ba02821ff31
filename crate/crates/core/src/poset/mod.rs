//! Finite posets presented by their cover (Hasse) relation.
//!
//! Elements are opaque string identifiers. Internally each element is an
//! index into the lexicographically sorted list of identifiers, so iterating
//! indices in increasing order is iterating names in lexicographic order. All
//! outputs of this crate rely on that for determinism.

mod connectivity;
mod rank;
mod upsets;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use bitvec::prelude::*;

use crate::error::{Error, Result};

pub use connectivity::{CodimReport, StrongReport, StrongWitness};
pub use rank::RankFunction;

/// A set of elements of one poset, ordered by index (= lexicographically).
pub type ElementSet = BTreeSet<usize>;

#[derive(Clone)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    above: Vec<BitVec>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<_> = self
            .cover_pairs()
            .map(|(a, b)| format!("{}<{}", self.names[a], self.names[b]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.names)
            .field("covers", &covers)
            .finish()
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.upper == other.upper
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from identifiers and cover pairs `(a, b)` meaning `a ⋖ b`.
    ///
    /// The covers must already be a transitive reduction: a pair implied by a
    /// longer cover chain is rejected rather than dropped.
    pub fn new<I, S, C, T>(elements: I, covers: C) -> Result<Poset>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        C: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let names: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut position = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if position.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let lookup = |s: &str| {
            position
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut pairs = Vec::new();
        for (a, b) in covers {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_parts(names, pairs)
    }

    /// Same as [`Poset::new`] with covers given as indices into `names`.
    pub(crate) fn from_parts(names: Vec<String>, pairs: Vec<(usize, usize)>) -> Result<Poset> {
        let n = names.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        if let Some(w) = order.windows(2).find(|w| names[w[0]] == names[w[1]]) {
            return Err(Error::DuplicateElement(names[w[0]].clone()));
        }
        let mut new_index = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let sorted: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();

        let mut upper: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (a, b) in pairs {
            let (a, b) = (new_index[a], new_index[b]);
            if a == b {
                return Err(Error::CycleDetected(vec![
                    sorted[a].clone(),
                    sorted[a].clone(),
                ]));
            }
            upper[a].insert(b);
        }
        let upper: Vec<Vec<usize>> = upper.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut lower = vec![Vec::new(); n];
        for (a, ups) in upper.iter().enumerate() {
            for &b in ups {
                lower[b].push(a);
            }
        }

        let topo = topological_order(&upper, &lower)
            .ok_or_else(|| Error::CycleDetected(find_cycle(&upper, &sorted)))?;

        let mut above: Vec<BitVec> = vec![bitvec![0; n]; n];
        for &v in topo.iter().rev() {
            let mut row = bitvec![0; n];
            row.set(v, true);
            for &u in &upper[v] {
                row |= &above[u];
            }
            above[v] = row;
        }

        for (a, ups) in upper.iter().enumerate() {
            for &b in ups {
                if ups.iter().any(|&c| c != b && above[c][b]) {
                    return Err(Error::RedundantCover {
                        lower: sorted[a].clone(),
                        upper: sorted[b].clone(),
                    });
                }
            }
        }

        let index = sorted
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(Poset {
            names: sorted,
            index,
            upper,
            lower,
            above,
        })
    }

    /// The poset with no elements.
    pub fn empty() -> Poset {
        Poset::from_parts(Vec::new(), Vec::new()).expect("empty poset is valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Index of `name`, or `UnknownElement`.
    pub fn id(&self, name: &str) -> Result<usize> {
        self.get(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn ids<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<ElementSet> {
        names.into_iter().map(|s| self.id(s.as_ref())).collect()
    }

    pub fn names_of<'a>(&'a self, set: impl IntoIterator<Item = &'a usize>) -> Vec<String> {
        set.into_iter().map(|&i| self.names[i].clone()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.above[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.above[a][b] || self.above[b][a]
    }

    /// Whether `b` covers `a`.
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper[a].binary_search(&b).is_ok()
    }

    /// Elements covering `a`, in lexicographic order.
    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper[a]
    }

    /// Elements covered by `a`, in lexicographic order.
    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower[a]
    }

    /// All cover pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn cover_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.upper
            .iter()
            .enumerate()
            .flat_map(|(a, ups)| ups.iter().map(move |&b| (a, b)))
    }

    pub fn cover_count(&self) -> usize {
        self.upper.iter().map(Vec::len).sum()
    }

    /// ⊆-least up-set containing `seeds`.
    pub fn up_set<'a>(&self, seeds: impl IntoIterator<Item = &'a usize>) -> UpSet {
        UpSet(self.closure(seeds, &self.upper))
    }

    /// ⊆-least down-set containing `seeds`.
    pub fn down_set<'a>(&self, seeds: impl IntoIterator<Item = &'a usize>) -> ElementSet {
        self.closure(seeds, &self.lower)
    }

    pub fn principal_up(&self, a: usize) -> UpSet {
        self.up_set([a].iter())
    }

    pub fn principal_down(&self, a: usize) -> ElementSet {
        self.down_set([a].iter())
    }

    fn closure<'a>(&self, seeds: impl IntoIterator<Item = &'a usize>, adj: &[Vec<usize>]) -> ElementSet {
        let mut seen = ElementSet::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in seeds {
            if seen.insert(s) {
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub fn maximal(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.upper[a].is_empty()).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.lower[a].is_empty()).collect()
    }

    pub fn is_maximal(&self, a: usize) -> bool {
        self.upper[a].is_empty()
    }

    /// Length of the longest cover chain from a minimal element up to each
    /// element. Equals the rank on graded posets.
    pub fn heights(&self) -> Vec<usize> {
        let topo = topological_order(&self.upper, &self.lower).expect("poset is acyclic");
        let mut height = vec![0usize; self.len()];
        for &v in &topo {
            for &u in &self.upper[v] {
                height[u] = height[u].max(height[v] + 1);
            }
        }
        height
    }

    /// The subposet induced on `subset`, with its own cover relation.
    pub fn induced(&self, subset: &ElementSet) -> Poset {
        let members: Vec<usize> = subset.iter().copied().collect();
        let local: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut pairs = Vec::new();
        for &a in &members {
            let above: Vec<usize> = members.iter().copied().filter(|&b| self.lt(a, b)).collect();
            for &b in &above {
                if !above.iter().any(|&c| c != b && self.lt(c, b)) {
                    pairs.push((local[&a], local[&b]));
                }
            }
        }
        let names = members.iter().map(|&a| self.names[a].clone()).collect();
        Poset::from_parts(names, pairs).expect("induced subposet is valid")
    }

    /// Translates a set of this poset into `other` by element names.
    pub fn transfer(&self, set: &ElementSet, other: &Poset) -> Result<ElementSet> {
        set.iter().map(|&a| other.id(&self.names[a])).collect()
    }
}

fn topological_order(upper: &[Vec<usize>], lower: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = upper.len();
    let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in &upper[v] {
            indegree[u] -= 1;
            if indegree[u] == 0 {
                queue.push_back(u);
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn find_cycle(upper: &[Vec<usize>], names: &[String]) -> Vec<String> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = upper.len();
    let mut mark = vec![Mark::New; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        mark[root] = Mark::Open;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < upper[v].len() {
                let w = upper[v][*next];
                *next += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Open;
                        stack.push((w, 0));
                    }
                    Mark::Open => {
                        let start = stack.iter().position(|&(u, _)| u == w).unwrap();
                        let mut cycle: Vec<String> =
                            stack[start..].iter().map(|&(u, _)| names[u].clone()).collect();
                        cycle.push(names[w].clone());
                        return cycle;
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    Vec::new()
}

/// An upward-closed set of elements of some poset.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UpSet(ElementSet);

impl UpSet {
    /// Validates that `members` is closed upward in `poset`.
    pub fn new(poset: &Poset, members: ElementSet) -> Result<UpSet> {
        for &a in &members {
            if let Some(&b) = poset.upper_covers(a).iter().find(|b| !members.contains(b)) {
                return Err(Error::NotUpSet {
                    member: poset.name(a).to_string(),
                    missing: poset.name(b).to_string(),
                });
            }
        }
        Ok(UpSet(members))
    }

    /// The whole poset as an up-set.
    pub fn full(poset: &Poset) -> UpSet {
        UpSet(poset.elements().collect())
    }

    pub fn members(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_members(self) -> ElementSet {
        self.0
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0.contains(&a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, usize> {
        self.0.iter()
    }

    /// Minimal members; these generate the up-set.
    pub fn generators(&self, poset: &Poset) -> Vec<usize> {
        self.0
            .iter()
            .copied()
            .filter(|&a| !poset.lower_covers(a).iter().any(|b| self.0.contains(b)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(names: &[&str]) -> Poset {
        let covers: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0], w[1])).collect();
        Poset::new(names.iter().copied(), covers).unwrap()
    }

    #[test]
    fn two_chain() {
        let p = chain(&["A", "B"]);
        let (a, b) = (p.id("A").unwrap(), p.id("B").unwrap());
        assert!(p.leq(a, b));
        assert!(!p.leq(b, a));
        assert_eq!(p.upper_covers(a), &[b]);
        assert_eq!(p.lower_covers(b), &[a]);
    }

    #[test]
    fn redundant_cover_is_rejected() {
        let err = Poset::new(["A", "B", "C"], [("A", "B"), ("B", "C"), ("A", "C")]).unwrap_err();
        assert_eq!(
            err,
            Error::RedundantCover {
                lower: "A".into(),
                upper: "C".into()
            }
        );
    }

    #[test]
    fn duplicates_and_unknowns() {
        assert_eq!(
            Poset::new(["A", "A"], Vec::<(&str, &str)>::new()).unwrap_err(),
            Error::DuplicateElement("A".into())
        );
        assert_eq!(
            Poset::new(["A"], [("A", "Z")]).unwrap_err(),
            Error::UnknownElement("Z".into())
        );
    }

    #[test]
    fn cycle_witness_is_a_cycle() {
        let err = Poset::new(["A", "B", "C"], [("A", "B"), ("B", "C"), ("C", "A")]).unwrap_err();
        match err {
            Error::CycleDetected(cycle) => {
                assert_eq!(cycle.first(), cycle.last());
                assert_eq!(cycle.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Poset::new(["A"], [("A", "A")]),
            Err(Error::CycleDetected(_))
        ));
    }

    #[test]
    fn up_and_down_sets() {
        let p = Poset::new(["A", "B", "s", "t"], [("A", "s"), ("B", "s"), ("B", "t")]).unwrap();
        let b = p.id("B").unwrap();
        assert_eq!(p.names_of(p.principal_up(b).iter()), ["B", "s", "t"]);
        assert_eq!(p.names_of(&p.principal_down(p.id("s").unwrap())), ["A", "B", "s"]);
        assert!(p.up_set(ElementSet::new().iter()).is_empty());
        assert_eq!(p.names_of(&p.maximal()), ["s", "t"]);
        assert_eq!(p.names_of(&p.minimal()), ["A", "B"]);
    }

    #[test]
    fn induced_subposet_reduces_covers() {
        let p = chain(&["a", "b", "c"]);
        let sub: ElementSet = [0, 2].into_iter().collect();
        let q = p.induced(&sub);
        assert_eq!(q.names(), ["a", "c"]);
        assert!(q.is_cover(0, 1));
    }

    #[test]
    fn upset_validation() {
        let p = chain(&["a", "b"]);
        assert!(UpSet::new(&p, [1].into_iter().collect()).is_ok());
        assert_eq!(
            UpSet::new(&p, [0].into_iter().collect()).unwrap_err(),
            Error::NotUpSet {
                member: "a".into(),
                missing: "b".into()
            }
        );
    }
}
