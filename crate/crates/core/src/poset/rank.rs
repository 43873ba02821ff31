use super::{ElementSet, Poset};
use crate::error::{Error, Result};

/// Rank function of a graded poset: covers raise rank by one and minimal
/// elements have rank zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    ranks: Vec<usize>,
    dim: usize,
    pure: bool,
}

impl RankFunction {
    pub fn rank(&self, a: usize) -> usize {
        self.ranks[a]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Maximal rank; zero for the empty poset.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Whether the rank is constant on maximal elements.
    pub fn is_pure(&self) -> bool {
        self.pure
    }

    /// Elements of rank exactly `r`.
    pub fn level(&self, r: usize) -> ElementSet {
        (0..self.ranks.len()).filter(|&a| self.ranks[a] == r).collect()
    }

    /// Elements of rank at least `r`, which is the up-set generated by rank `r`.
    pub fn at_least(&self, r: usize) -> ElementSet {
        (0..self.ranks.len()).filter(|&a| self.ranks[a] >= r).collect()
    }
}

impl Poset {
    /// Computes the rank function, or reports a cover violating it.
    pub fn rank_function(&self) -> Result<RankFunction> {
        let ranks = self.heights();
        if let Some((a, b)) = self.cover_pairs().find(|&(a, b)| ranks[b] != ranks[a] + 1) {
            return Err(Error::NotGraded {
                lower: self.name(a).to_string(),
                upper: self.name(b).to_string(),
                lower_rank: ranks[a],
                upper_rank: ranks[b],
            });
        }
        let dim = ranks.iter().copied().max().unwrap_or(0);
        let pure = self.maximal().iter().all(|&a| ranks[a] == dim);
        Ok(RankFunction { ranks, dim, pure })
    }

    pub fn is_graded(&self) -> bool {
        self.rank_function().is_ok()
    }

    /// Checks a supplied rank assignment against the computed one.
    pub fn verify_ranks<'a>(&self, supplied: impl IntoIterator<Item = (&'a str, usize)>) -> Result<RankFunction> {
        let rank = self.rank_function()?;
        for (name, r) in supplied {
            let a = self.id(name)?;
            if rank.rank(a) != r {
                return Err(Error::RankMismatch {
                    element: name.to_string(),
                    supplied: r,
                    computed: rank.rank(a),
                });
            }
        }
        Ok(rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_ranks() {
        let p = Poset::new(["A", "B", "C"], [("A", "B"), ("B", "C")]).unwrap();
        let r = p.rank_function().unwrap();
        assert_eq!(r.ranks(), &[0, 1, 2]);
        assert_eq!(r.dim(), 2);
        assert!(r.is_pure());
    }

    #[test]
    fn not_graded_witness() {
        let p = Poset::new(["A", "B", "C", "D"], [("A", "B"), ("B", "D"), ("C", "D")]).unwrap();
        assert_eq!(
            p.rank_function().unwrap_err(),
            Error::NotGraded {
                lower: "C".into(),
                upper: "D".into(),
                lower_rank: 0,
                upper_rank: 2
            }
        );
    }

    #[test]
    fn impure_dimension() {
        let p = Poset::new(["A", "B", "C", "D"], [("A", "B"), ("B", "C")]).unwrap();
        let r = p.rank_function().unwrap();
        assert!(!r.is_pure());
        assert_eq!(r.dim(), 2);
    }

    #[test]
    fn supplied_rank_mismatch() {
        let p = Poset::new(["A", "B"], [("A", "B")]).unwrap();
        assert!(p.verify_ranks([("A", 0), ("B", 1)]).is_ok());
        assert!(matches!(
            p.verify_ranks([("B", 2)]),
            Err(Error::RankMismatch { .. })
        ));
    }
}
