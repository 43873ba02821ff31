//! Index maps, local degrees, the balancing condition and indexed branched
//! covers.
//!
//! A local degree `deg(φ, m, V)` is "constant" when it takes one value on
//! every point of the open set `U` whose preimage component `V` is, points of
//! `U` missing from `φ(V)` contributing degree zero.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::morphism::PosetMorphism;
use crate::poset::{ElementSet, Poset, UpSet};

/// Positive integer multiplicities on an up-set of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap {
    domain: UpSet,
    values: BTreeMap<usize, u64>,
}

impl IndexMap {
    /// Builds an index map whose domain is the set of keys of `values`.
    pub fn new(poset: &Poset, values: BTreeMap<usize, u64>) -> Result<IndexMap> {
        if let Some((&a, _)) = values.iter().find(|(_, &v)| v == 0) {
            return Err(Error::InvalidIndexValue(poset.name(a).to_string()));
        }
        let domain = UpSet::new(poset, values.keys().copied().collect())?;
        Ok(IndexMap { domain, values })
    }

    /// Builds an index map on the up-set generated by `generators`, which must
    /// receive a value at every member and nowhere else.
    pub fn from_names<G, K>(
        poset: &Poset,
        generators: impl IntoIterator<Item = G>,
        values: impl IntoIterator<Item = (K, u64)>,
    ) -> Result<IndexMap>
    where
        G: AsRef<str>,
        K: AsRef<str>,
    {
        let gens = poset.ids(generators)?;
        let domain = poset.up_set(gens.iter());
        let mut map = BTreeMap::new();
        for (k, v) in values {
            let a = poset.id(k.as_ref())?;
            if !domain.contains(a) {
                return Err(Error::ValueOutsideDomain(k.as_ref().to_string()));
            }
            map.insert(a, v);
        }
        if let Some(&a) = domain.iter().find(|a| !map.contains_key(a)) {
            return Err(Error::ValueMissing(poset.name(a).to_string()));
        }
        IndexMap::new(poset, map)
    }

    /// Index map on the whole poset from a name-keyed table.
    pub fn total<K: AsRef<str>>(poset: &Poset, values: impl IntoIterator<Item = (K, u64)>) -> Result<IndexMap> {
        Self::from_names(poset, poset.minimal().iter().map(|&a| poset.name(a).to_string()), values)
    }

    pub fn constant(domain: &UpSet, value: u64) -> IndexMap {
        assert!(value >= 1, "index values are positive");
        IndexMap {
            domain: domain.clone(),
            values: domain.iter().map(|&a| (a, value)).collect(),
        }
    }

    pub fn domain(&self) -> &UpSet {
        &self.domain
    }

    pub fn get(&self, a: usize) -> Option<u64> {
        self.values.get(&a).copied()
    }

    pub fn values(&self) -> &BTreeMap<usize, u64> {
        &self.values
    }

    pub fn is_total(&self, poset: &Poset) -> bool {
        self.values.len() == poset.len()
    }

    pub fn named(&self, poset: &Poset) -> BTreeMap<String, u64> {
        self.values
            .iter()
            .map(|(&a, &v)| (poset.name(a).to_string(), v))
            .collect()
    }

    /// Restriction to a smaller up-set.
    pub fn restrict(&self, poset: &Poset, up: &UpSet) -> Result<IndexMap> {
        let mut values = BTreeMap::new();
        for &a in up.iter() {
            let v = self.get(a).ok_or_else(|| Error::ValueMissing(poset.name(a).to_string()))?;
            values.insert(a, v);
        }
        IndexMap::new(poset, values)
    }

    /// Moves the map to another poset sharing element names.
    pub fn transfer(&self, from: &Poset, to: &Poset) -> Result<IndexMap> {
        let mut values = BTreeMap::new();
        for (&a, &v) in &self.values {
            values.insert(to.id(from.name(a))?, v);
        }
        IndexMap::new(to, values)
    }

    fn require_total(&self, poset: &Poset) -> Result<()> {
        match poset.elements().find(|a| !self.values.contains_key(a)) {
            Some(a) => Err(Error::PartialIndexMap(poset.name(a).to_string())),
            None => Ok(()),
        }
    }
}

/// `Σ m(x)` over `x ∈ φ⁻¹(y) ∩ V`.
pub fn local_degree(phi: &PosetMorphism, m: &IndexMap, set: &ElementSet, y: usize) -> Result<u64> {
    set.iter()
        .filter(|&&x| phi.image(x) == y)
        .map(|&x| {
            m.get(x)
                .ok_or_else(|| Error::ValueMissing(phi.source().name(x).to_string()))
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceViolation {
    pub element: String,
    pub target: String,
    /// `m(element)`.
    pub value: u64,
    /// Sum of `m` over the covers of `element` lying over `target`.
    pub sum: u64,
}

impl fmt::Display for BalanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m({}) = {} but the covers over {} sum to {}",
            self.element, self.value, self.target, self.sum
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    pub violations: Vec<BalanceViolation>,
}

/// Sum of `m(γ)` over `γ ⋗ a` with `φ(γ) = b`; `None` if some such `γ` has
/// no value.
pub(crate) fn cover_sum(phi: &PosetMorphism, values: &BTreeMap<usize, u64>, a: usize, b: usize) -> Option<u64> {
    phi.source()
        .upper_covers(a)
        .iter()
        .filter(|&&g| phi.image(g) == b)
        .map(|g| values.get(g).copied())
        .sum()
}

/// Checks `m(a) = Σ_{γ ⋗ a, φ(γ) = b} m(γ)` for every `a` in the domain and
/// every `b ⋗ φ(a)`.
pub fn balance_check(phi: &PosetMorphism, m: &IndexMap) -> BalanceReport {
    let (src, tgt) = (phi.source(), phi.target());
    let mut violations = Vec::new();
    for (&a, &value) in m.values() {
        for &b in tgt.upper_covers(phi.image(a)) {
            let sum = cover_sum(phi, m.values(), a, b).expect("domain is an up-set");
            if sum != value {
                violations.push(BalanceViolation {
                    element: src.name(a).to_string(),
                    target: tgt.name(b).to_string(),
                    value,
                    sum,
                });
            }
        }
    }
    BalanceReport {
        balanced: violations.is_empty(),
        violations,
    }
}

pub fn is_balanced(phi: &PosetMorphism, m: &IndexMap) -> bool {
    balance_check(phi, m).balanced
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchLocusReport {
    pub holds: bool,
    /// Always `Δ ∖ max Δ`.
    pub branch_locus: Vec<String>,
    /// `(target, source)` pairs where a maximal target element has a
    /// non-maximal preimage.
    pub offending: Vec<(String, String)>,
}

/// Fibres over maximal target elements must consist of maximal elements.
pub fn branch_locus_check(phi: &PosetMorphism) -> BranchLocusReport {
    let (src, tgt) = (phi.source(), phi.target());
    let mut offending = Vec::new();
    for b in tgt.maximal() {
        for a in phi.fibre(b) {
            if !src.is_maximal(a) {
                offending.push((tgt.name(b).to_string(), src.name(a).to_string()));
            }
        }
    }
    let branch_locus = tgt
        .elements()
        .filter(|&b| !tgt.is_maximal(b))
        .map(|b| tgt.name(b).to_string())
        .collect();
    BranchLocusReport {
        holds: offending.is_empty(),
        branch_locus,
        offending,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeViolation {
    /// Generators of the open set `U`; a single element for principal ones.
    pub base: Vec<String>,
    pub component: Vec<String>,
    pub first: String,
    pub second: String,
    pub first_degree: u64,
    pub second_degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IbcReport {
    pub ibc: bool,
    pub branch_locus: BranchLocusReport,
    pub violations: Vec<DegreeViolation>,
    /// Number of open sets examined.
    pub open_sets: usize,
}

fn constancy_violations(
    phi: &PosetMorphism,
    m: &IndexMap,
    base: &UpSet,
    out: &mut Vec<DegreeViolation>,
) -> Result<()> {
    let (src, tgt) = (phi.source(), phi.target());
    for comp in phi.preimage_components_of(base) {
        let mut degrees = base.iter().map(|&y| local_degree(phi, m, comp.members(), y).map(|d| (y, d)));
        let Some(first) = degrees.next().transpose()? else {
            continue;
        };
        for next in degrees {
            let (y, d) = next?;
            if d != first.1 {
                out.push(DegreeViolation {
                    base: tgt.names_of(&base.generators(tgt)),
                    component: src.names_of(comp.iter()),
                    first: tgt.name(first.0).to_string(),
                    second: tgt.name(y).to_string(),
                    first_degree: first.1,
                    second_degree: d,
                });
                break;
            }
        }
    }
    Ok(())
}

/// Decides the indexed-branched-cover property using principal up-sets
/// `↑b` only.
pub fn ibc_check(phi: &PosetMorphism, m: &IndexMap) -> Result<IbcReport> {
    m.require_total(phi.source())?;
    let branch_locus = branch_locus_check(phi);
    let mut violations = Vec::new();
    for b in phi.target().elements() {
        constancy_violations(phi, m, &phi.target().principal_up(b), &mut violations)?;
    }
    Ok(IbcReport {
        ibc: branch_locus.holds && violations.is_empty(),
        branch_locus,
        violations,
        open_sets: phi.target().len(),
    })
}

/// Exhaustive version of [`ibc_check`] over every connected up-set.
pub fn ibc_oracle(phi: &PosetMorphism, m: &IndexMap, limit: usize) -> Result<IbcReport> {
    m.require_total(phi.source())?;
    let opens = phi.target().up_sets(true, limit)?;
    let branch_locus = branch_locus_check(phi);
    let mut violations = Vec::new();
    for up in &opens {
        constancy_violations(phi, m, up, &mut violations)?;
    }
    Ok(IbcReport {
        ibc: branch_locus.holds && violations.is_empty(),
        branch_locus,
        violations,
        open_sets: opens.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub per_target_value: BTreeMap<String, u64>,
    pub constant: bool,
    pub degree: Option<u64>,
}

/// Fibre counts with multiplicity over every target element.
pub fn global_degree(phi: &PosetMorphism, m: &IndexMap) -> Result<DegreeReport> {
    m.require_total(phi.source())?;
    let all: ElementSet = phi.source().elements().collect();
    let mut per_target_value = BTreeMap::new();
    for y in phi.target().elements() {
        per_target_value.insert(phi.target().name(y).to_string(), local_degree(phi, m, &all, y)?);
    }
    let mut values = per_target_value.values().copied();
    let first = values.next();
    let constant = values.all(|v| Some(v) == first);
    Ok(DegreeReport {
        per_target_value,
        constant,
        degree: if constant { first } else { None },
    })
}

struct Constraint {
    element: usize,
    covers: Vec<usize>,
}

/// Exhaustive search for the lexicographically least total balanced map
/// with values in `1..=bound`.
pub fn search_balanced(phi: &PosetMorphism, bound: u64, limits: &Limits) -> Result<Option<IndexMap>> {
    let src = phi.source();
    let n = src.len();
    let size = n.saturating_mul(bound as usize);
    if n > limits.oracle_elements || size > limits.search_product {
        return Err(Error::OracleSizeExceeded {
            size,
            limit: limits.search_product,
        });
    }
    if bound == 0 {
        return Ok(None);
    }
    let mut constraints = Vec::new();
    for a in src.elements() {
        for &b in phi.target().upper_covers(phi.image(a)) {
            let covers: Vec<usize> = src
                .upper_covers(a)
                .iter()
                .copied()
                .filter(|&g| phi.image(g) == b)
                .collect();
            if covers.is_empty() {
                return Ok(None);
            }
            constraints.push(Constraint { element: a, covers });
        }
    }
    let mut involving: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in constraints.iter().enumerate() {
        involving[c.element].push(i);
        for &g in &c.covers {
            involving[g].push(i);
        }
    }
    let mut values = vec![0u64; n];
    if assign(0, bound, &constraints, &involving, &mut values) {
        let map = values.into_iter().enumerate().collect();
        Ok(Some(IndexMap::new(src, map)?))
    } else {
        Ok(None)
    }
}

fn feasible(c: &Constraint, values: &[u64], bound: u64) -> bool {
    let (mut sum, mut open) = (0u64, 0u64);
    for &g in &c.covers {
        match values[g] {
            0 => open += 1,
            v => sum += v,
        }
    }
    let lhs = values[c.element];
    if lhs == 0 {
        sum + open <= bound
    } else {
        sum + open <= lhs && lhs <= sum + open * bound
    }
}

fn assign(next: usize, bound: u64, constraints: &[Constraint], involving: &[Vec<usize>], values: &mut [u64]) -> bool {
    if next == values.len() {
        return true;
    }
    for v in 1..=bound {
        values[next] = v;
        if involving[next].iter().all(|&i| feasible(&constraints[i], values, bound))
            && assign(next + 1, bound, constraints, involving, values)
        {
            return true;
        }
    }
    values[next] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> Poset {
        Poset::new(["A", "B"], [("A", "B")]).unwrap()
    }

    #[test]
    fn empty_sum_is_zero() {
        let id = PosetMorphism::identity(two_chain());
        let m = IndexMap::constant(&UpSet::full(id.source()), 1);
        assert_eq!(local_degree(&id, &m, &ElementSet::new(), 0).unwrap(), 0);
    }

    #[test]
    fn value_missing_outside_domain() {
        let id = PosetMorphism::identity(two_chain());
        let m = IndexMap::from_names(id.source(), ["B"], [("B", 1)]).unwrap();
        let all: ElementSet = [0, 1].into_iter().collect();
        assert_eq!(
            local_degree(&id, &m, &all, 0).unwrap_err(),
            Error::ValueMissing("A".into())
        );
        assert_eq!(ibc_check(&id, &m).unwrap_err(), Error::PartialIndexMap("A".into()));
    }

    #[test]
    fn index_map_validation() {
        let p = two_chain();
        assert_eq!(
            IndexMap::from_names(&p, ["B"], [("A", 1), ("B", 1)]).unwrap_err(),
            Error::ValueOutsideDomain("A".into())
        );
        assert_eq!(
            IndexMap::from_names(&p, ["A"], [("A", 1)]).unwrap_err(),
            Error::ValueMissing("B".into())
        );
        assert_eq!(
            IndexMap::from_names(&p, ["B"], [("B", 0)]).unwrap_err(),
            Error::InvalidIndexValue("B".into())
        );
    }

    #[test]
    fn identity_on_chain() {
        let id = PosetMorphism::identity(two_chain());
        let one = IndexMap::constant(&UpSet::full(id.source()), 1);
        assert!(is_balanced(&id, &one));
        let report = branch_locus_check(&id);
        assert!(report.holds);
        assert_eq!(report.branch_locus, ["A"]);
        assert!(ibc_check(&id, &one).unwrap().ibc);
        let found = search_balanced(&id, 1, &Limits::default()).unwrap().unwrap();
        assert_eq!(found, one);
    }

    #[test]
    fn non_constant_values_are_not_balanced_on_identity() {
        let id = PosetMorphism::identity(two_chain());
        let m = IndexMap::total(id.source(), [("A", 2), ("B", 1)]).unwrap();
        let report = balance_check(&id, &m);
        assert_eq!(
            report.violations,
            vec![BalanceViolation {
                element: "A".into(),
                target: "B".into(),
                value: 2,
                sum: 1
            }]
        );
    }

    #[test]
    fn search_respects_size_limit() {
        let id = PosetMorphism::identity(two_chain());
        let tight = Limits {
            search_product: 3,
            ..Limits::default()
        };
        assert!(matches!(
            search_balanced(&id, 2, &tight),
            Err(Error::OracleSizeExceeded { .. })
        ));
    }
}
