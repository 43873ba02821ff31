use super::{Poset, UpSet};
use crate::error::{Error, Result};

impl Poset {
    /// Every up-set of the poset, one per antichain of generators, in the
    /// order the antichains are generated (lexicographic by generator list).
    ///
    /// With `connected_only` the empty set and disconnected up-sets are
    /// dropped.
    pub fn up_sets(&self, connected_only: bool, limit: usize) -> Result<Vec<UpSet>> {
        if self.len() > limit {
            return Err(Error::OracleSizeExceeded {
                size: self.len(),
                limit,
            });
        }
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.antichains_from(0, &mut chosen, &mut |gens| {
            let up = self.up_set(gens.iter());
            if !connected_only || (!up.is_empty() && self.is_connected_subset(up.members())) {
                out.push(up);
            }
        });
        Ok(out)
    }

    fn antichains_from(&self, start: usize, chosen: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        visit(chosen);
        for a in start..self.len() {
            if chosen.iter().all(|&c| !self.comparable(a, c)) {
                chosen.push(a);
                self.antichains_from(a + 1, chosen, visit);
                chosen.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain_has_three_up_sets() {
        let p = Poset::new(["A", "B"], [("A", "B")]).unwrap();
        let ups = p.up_sets(false, 16).unwrap();
        let named: Vec<Vec<String>> = ups.iter().map(|u| p.names_of(u.iter())).collect();
        assert_eq!(named.len(), 3);
        assert!(named.contains(&vec![]));
        assert!(named.contains(&vec!["B".to_string()]));
        assert!(named.contains(&vec!["A".to_string(), "B".to_string()]));
    }

    #[test]
    fn antichain_of_two() {
        let p = Poset::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(p.up_sets(false, 16).unwrap().len(), 4);
        assert_eq!(p.up_sets(true, 16).unwrap().len(), 2);
    }

    #[test]
    fn size_bound() {
        let names: Vec<String> = (0..5).map(|i| format!("e{i}")).collect();
        let p = Poset::new(names, Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(
            p.up_sets(false, 4).unwrap_err(),
            Error::OracleSizeExceeded { size: 5, limit: 4 }
        );
    }
}
