use std::collections::VecDeque;

use serde::Serialize;

use super::{ElementSet, Poset};
use crate::error::{Error, Result};

/// Connectivity in codimension `k`: whether the up-set generated by the
/// elements of rank `dim - k` is connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub k: usize,
    pub threshold_rank: usize,
    pub connected: bool,
    pub components: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongWitness {
    /// Element whose punctured up-set is disconnected.
    pub element: String,
    pub components: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongReport {
    pub connected: bool,
    pub strongly_connected: bool,
    pub witness: Option<StrongWitness>,
}

impl Poset {
    /// Connected components of the comparability graph restricted to
    /// `subset`, each sorted, listed by least element.
    pub fn components_of(&self, subset: &ElementSet) -> Vec<ElementSet> {
        let mut seen = ElementSet::new();
        let mut out = Vec::new();
        for &root in subset {
            if !seen.insert(root) {
                continue;
            }
            let mut comp = ElementSet::new();
            comp.insert(root);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in subset {
                    if !seen.contains(&w) && self.comparable(v, w) {
                        seen.insert(w);
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<ElementSet> {
        self.components_of(&self.elements().collect())
    }

    /// Whether `subset` is connected in the subspace topology. The empty set
    /// counts as connected.
    pub fn is_connected_subset(&self, subset: &ElementSet) -> bool {
        self.components_of(subset).len() <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn named(&self, comps: &[ElementSet]) -> Vec<Vec<String>> {
        comps.iter().map(|c| self.names_of(c)).collect()
    }

    pub fn codim_connectivity(&self, k: usize) -> Result<CodimReport> {
        let rank = self.rank_function()?;
        if k > rank.dim() {
            return Err(Error::CodimensionOutOfRange { k, dim: rank.dim() });
        }
        let threshold_rank = rank.dim() - k;
        let comps = self.components_of(&rank.at_least(threshold_rank));
        Ok(CodimReport {
            k,
            threshold_rank,
            connected: comps.len() <= 1,
            components: self.named(&comps),
        })
    }

    /// Connected, and every punctured principal up-set `(↑a) ∖ {a}` with
    /// `rank(a) <= dim - 2` is connected.
    pub fn strong_connectivity(&self) -> Result<StrongReport> {
        let rank = self.rank_function()?;
        let connected = self.is_connected();
        let mut witness = None;
        if rank.dim() >= 2 {
            for a in self.elements().filter(|&a| rank.rank(a) + 2 <= rank.dim()) {
                let mut punctured = self.principal_up(a).into_members();
                punctured.remove(&a);
                let comps = self.components_of(&punctured);
                if comps.len() > 1 {
                    witness = Some(StrongWitness {
                        element: self.name(a).to_string(),
                        components: self.named(&comps),
                    });
                    break;
                }
            }
        }
        Ok(StrongReport {
            connected,
            strongly_connected: connected && witness.is_none(),
            witness,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_is_everything_connected() {
        let p = Poset::new(["x"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(p.is_connected());
        assert!(p.strong_connectivity().unwrap().strongly_connected);
        assert!(p.codim_connectivity(0).unwrap().connected);
    }

    #[test]
    fn antichain_components() {
        let p = Poset::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(p.components().len(), 2);
        assert!(!p.is_connected());
    }

    #[test]
    fn codim_out_of_range() {
        let p = Poset::new(["a", "b"], [("a", "b")]).unwrap();
        assert_eq!(
            p.codim_connectivity(2).unwrap_err(),
            Error::CodimensionOutOfRange { k: 2, dim: 1 }
        );
    }

    #[test]
    fn codim_requires_grading() {
        let p = Poset::new(["A", "B", "C", "D"], [("A", "B"), ("B", "D"), ("C", "D")]).unwrap();
        assert!(matches!(p.codim_connectivity(1), Err(Error::NotGraded { .. })));
        assert!(matches!(p.strong_connectivity(), Err(Error::NotGraded { .. })));
    }
}
