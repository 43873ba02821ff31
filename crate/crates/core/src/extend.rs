//! Extending balanced maps, lifting paths and lifting connectivity.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::covers::{balance_check, cover_sum, IndexMap};
use crate::error::{Error, Result};
use crate::morphism::PosetMorphism;
use crate::poset::{ElementSet, Poset, UpSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionMode {
    Guaranteed,
    Opportunistic,
}

impl fmt::Display for ExtensionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtensionMode::Guaranteed => "guaranteed",
            ExtensionMode::Opportunistic => "opportunistic",
        })
    }
}

/// Two covers of `φ(element)` whose candidate values disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub element: String,
    pub first_target: String,
    pub second_target: String,
    pub first_sum: u64,
    pub second_sum: u64,
}

/// Why an element received no value despite having covers over its image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Blocked {
    /// A cover of the element was itself left without a value.
    MissingCover { element: String, cover: String },
    /// Every candidate is zero.
    ZeroCandidate { element: String, target: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionStep {
    pub element: String,
    pub guaranteed: bool,
    pub value: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub extended: IndexMap,
    pub mode: ExtensionMode,
    pub conflicts: Vec<Conflict>,
    pub unconstrained: Vec<String>,
    pub blocked: Vec<Blocked>,
    pub steps: Vec<ExtensionStep>,
}

impl ExtensionReport {
    pub fn is_complete(&self) -> bool {
        self.conflicts.is_empty() && self.unconstrained.is_empty() && self.blocked.is_empty()
    }
}

fn require_combinatorial(phi: &PosetMorphism) -> Result<()> {
    match phi.combinatorial_check().witnesses.into_iter().next() {
        Some(w) => Err(Error::NotCombinatorial(Box::new(w))),
        None => Ok(()),
    }
}

fn require_balanced(phi: &PosetMorphism, m: &IndexMap) -> Result<()> {
    match balance_check(phi, m).violations.into_iter().next() {
        Some(v) => Err(Error::NotBalancedInput(v)),
        None => Ok(()),
    }
}

/// Whether `φ(up)` is an up-set; balanced maps force this.
fn check_open_image(phi: &PosetMorphism, up: &UpSet) -> Result<()> {
    let image = phi.image_set(up.iter());
    let closure = phi.target().up_set(image.iter());
    match closure.iter().find(|b| !image.contains(b)) {
        Some(&b) => Err(Error::TheoremViolation(format!(
            "image of a balanced domain misses `{}`",
            phi.target().name(b)
        ))),
        None => Ok(()),
    }
}

/// `(↑b) ∖ {b}` in the target.
fn punctured_star(target: &Poset, b: usize) -> ElementSet {
    let mut set = target.principal_up(b).into_members();
    set.remove(&b);
    set
}

/// Extends a balanced map on `𝒱 = domain(m)` to the up-set `𝒲`, visiting
/// `𝒲 ∖ 𝒱` by decreasing height with ties broken by identifier.
pub fn extend_balanced(phi: &PosetMorphism, m: &IndexMap, w: &UpSet) -> Result<ExtensionReport> {
    let (src, tgt) = (phi.source(), phi.target());
    require_combinatorial(phi)?;
    require_balanced(phi, m)?;
    if let Some(&a) = src.maximal().iter().find(|&&a| m.get(a).is_none()) {
        return Err(Error::MaxElementsUncovered(src.name(a).to_string()));
    }
    let w = UpSet::new(src, w.members().clone())?;
    if let Some(&a) = m.domain().iter().find(|&&a| !w.contains(a)) {
        return Err(Error::ValueOutsideDomain(src.name(a).to_string()));
    }

    let heights = src.heights();
    let mut todo: Vec<usize> = w.iter().copied().filter(|&a| m.get(a).is_none()).collect();
    todo.sort_by_key(|&a| (std::cmp::Reverse(heights[a]), a));

    let mut values = m.values().clone();
    let mut report = ExtensionReport {
        extended: m.clone(),
        mode: ExtensionMode::Guaranteed,
        conflicts: Vec::new(),
        unconstrained: Vec::new(),
        blocked: Vec::new(),
        steps: Vec::new(),
    };
    for a in todo {
        let b = phi.image(a);
        let star = punctured_star(tgt, b);
        let guaranteed = tgt.is_connected_subset(&star) && phi.preimage(star.iter()).iter().all(|x| values.contains_key(x));
        if !guaranteed {
            report.mode = ExtensionMode::Opportunistic;
        }
        let value = candidate_value(phi, &values, a, &mut report);
        if let Some(v) = value {
            values.insert(a, v);
        }
        report.steps.push(ExtensionStep {
            element: src.name(a).to_string(),
            guaranteed,
            value,
        });
    }
    let domain: ElementSet = values.keys().copied().collect();
    report.extended = IndexMap::new(src, values)?;
    if report.conflicts.is_empty() && report.blocked.is_empty() && report.unconstrained.is_empty() {
        check_open_image(phi, &UpSet::new(src, domain)?)?;
    }
    Ok(report)
}

fn candidate_value(
    phi: &PosetMorphism,
    values: &BTreeMap<usize, u64>,
    a: usize,
    report: &mut ExtensionReport,
) -> Option<u64> {
    let (src, tgt) = (phi.source(), phi.target());
    let name = |x: usize| src.name(x).to_string();
    if let Some(&g) = src.upper_covers(a).iter().find(|g| !values.contains_key(g)) {
        report.blocked.push(Blocked::MissingCover {
            element: name(a),
            cover: name(g),
        });
        return None;
    }
    let betas = tgt.upper_covers(phi.image(a));
    let Some(&first) = betas.first() else {
        report.unconstrained.push(name(a));
        return None;
    };
    let first_sum = cover_sum(phi, values, a, first).expect("covers have values");
    for &b in &betas[1..] {
        let sum = cover_sum(phi, values, a, b).expect("covers have values");
        if sum != first_sum {
            report.conflicts.push(Conflict {
                element: name(a),
                first_target: tgt.name(first).to_string(),
                second_target: tgt.name(b).to_string(),
                first_sum,
                second_sum: sum,
            });
            return None;
        }
    }
    if first_sum == 0 {
        report.blocked.push(Blocked::ZeroCandidate {
            element: name(a),
            target: tgt.name(first).to_string(),
        });
        return None;
    }
    Some(first_sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Up,
    Down,
    Stay,
}

/// A sequence of pairwise consecutive-comparable elements of one poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    steps: Vec<usize>,
    directions: Vec<Direction>,
}

impl Path {
    pub fn new(poset: &Poset, steps: Vec<usize>) -> Result<Path> {
        if steps.is_empty() {
            return Err(Error::EmptyPath);
        }
        let directions = steps
            .windows(2)
            .map(|p| match (p[0], p[1]) {
                (a, b) if a == b => Ok(Direction::Stay),
                (a, b) if poset.lt(a, b) => Ok(Direction::Up),
                (a, b) if poset.lt(b, a) => Ok(Direction::Down),
                (a, b) => Err(Error::NotComparable(poset.name(a).to_string(), poset.name(b).to_string())),
            })
            .collect::<Result<_>>()?;
        Ok(Path { steps, directions })
    }

    /// Parses a comma-separated list of identifiers.
    pub fn parse(poset: &Poset, text: &str) -> Result<Path> {
        let steps = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| poset.id(s))
            .collect::<Result<_>>()?;
        Path::new(poset, steps)
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn names(&self, poset: &Poset) -> Vec<String> {
        poset.names_of(&self.steps)
    }

    pub fn is_increasing(&self) -> bool {
        self.directions.iter().all(|&d| d == Direction::Up)
    }
}

/// Lifts `from < to` starting at `start` through a saturated chain of
/// covers, picking at each cover the least preimage carrying a value.
fn lift_up_step(phi: &PosetMorphism, m: &IndexMap, start: usize, to: usize) -> Result<usize> {
    let (src, tgt) = (phi.source(), phi.target());
    let mut here = start;
    while phi.image(here) != to {
        let next_target = *tgt
            .upper_covers(phi.image(here))
            .iter()
            .find(|&&c| tgt.leq(c, to))
            .expect("a saturated chain exists in a finite poset");
        here = *src
            .upper_covers(here)
            .iter()
            .find(|&&g| phi.image(g) == next_target && m.get(g).is_some())
            .ok_or_else(|| Error::NoLiftExists {
                from: src.name(here).to_string(),
                target: tgt.name(next_target).to_string(),
            })?;
    }
    Ok(here)
}

fn check_start(phi: &PosetMorphism, m: &IndexMap, alpha: usize, first: usize) -> Result<()> {
    if m.get(alpha).is_none() {
        return Err(Error::NotInDomain(phi.source().name(alpha).to_string()));
    }
    if first != phi.image(alpha) {
        return Err(Error::PathNotFromImage {
            expected: phi.target().name(phi.image(alpha)).to_string(),
            found: phi.target().name(first).to_string(),
        });
    }
    Ok(())
}

/// Lifts a strictly increasing path in the target starting at `φ(α)` to a
/// path in `domain(m)` starting at `α`, one lifted point per path point.
pub fn lift_upward_path(phi: &PosetMorphism, m: &IndexMap, alpha: usize, path: &[usize]) -> Result<Path> {
    let tgt = phi.target();
    let (&first, _) = path.split_first().ok_or(Error::EmptyPath)?;
    check_start(phi, m, alpha, first)?;
    if let Some(p) = path.windows(2).find(|p| !tgt.lt(p[0], p[1])) {
        return Err(Error::PathNotIncreasing(tgt.name(p[0]).to_string(), tgt.name(p[1]).to_string()));
    }
    require_balanced(phi, m)?;
    let mut lifted = vec![alpha];
    for &b in &path[1..] {
        let next = lift_up_step(phi, m, *lifted.last().unwrap(), b)?;
        lifted.push(next);
    }
    Path::new(phi.source(), lifted)
}

/// Lifts an arbitrary path inside `φ(𝒱)`, `𝒱 = domain(m)`, provided the
/// restriction of `φ` to `𝒱` corestricted to `φ(𝒱)` is combinatorial.
pub fn lift_path(phi: &PosetMorphism, m: &IndexMap, alpha: usize, path: &Path) -> Result<Path> {
    let (src, tgt) = (phi.source(), phi.target());
    let psi = phi.restrict_corestrict(m.domain())?;
    if let Some(w) = psi.combinatorial_check().witnesses.into_iter().next() {
        return Err(Error::CorestrictionNotCombinatorial(Box::new(w)));
    }
    require_balanced(phi, m)?;
    check_start(phi, m, alpha, path.steps()[0])?;
    let image = phi.image_set(m.domain().iter());
    if let Some(&b) = path.steps().iter().find(|b| !image.contains(b)) {
        return Err(Error::PathLeavesImage(tgt.name(b).to_string()));
    }
    let mut lifted = vec![alpha];
    for (&b, dir) in path.steps()[1..].iter().zip(path.directions()) {
        let here = *lifted.last().unwrap();
        let next = match dir {
            Direction::Stay => here,
            Direction::Up => lift_up_step(phi, m, here, b)?,
            Direction::Down => src
                .principal_down(here)
                .into_iter()
                .find(|&g| phi.image(g) == b && m.get(g).is_some())
                .ok_or_else(|| Error::NoLiftExists {
                    from: src.name(here).to_string(),
                    target: tgt.name(b).to_string(),
                })?,
        };
        lifted.push(next);
    }
    Path::new(src, lifted)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftingMode {
    /// Connectivity of `domain(m)` from a connected image and one connected
    /// fibre.
    OneFibre,
    /// Codimension-`k` connectivity of the source from that of the target
    /// and one fibre inside the rank `≥ dim - k` part.
    Codim(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftingReport {
    pub mode: String,
    /// The set whose connectivity is concluded.
    pub domain: Vec<String>,
    pub base_connected: bool,
    /// First target element with a non-empty fibre connected in the domain.
    pub connected_fibre: Option<(String, Vec<String>)>,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub components: Vec<Vec<String>>,
}

/// Checks the hypotheses of a connectivity-lifting statement, computes the
/// conclusion directly, and fails with [`Error::TheoremViolation`] when the
/// former hold but the latter does not.
pub fn connectivity_lifting(phi: &PosetMorphism, m: &IndexMap, mode: LiftingMode) -> Result<LiftingReport> {
    let (src, tgt) = (phi.source(), phi.target());
    let (domain, base, base_connected, m) = match mode {
        LiftingMode::OneFibre => {
            let psi = phi.restrict_corestrict(m.domain())?;
            if let Some(w) = psi.combinatorial_check().witnesses.into_iter().next() {
                return Err(Error::CorestrictionNotCombinatorial(Box::new(w)));
            }
            let image = phi.image_set(m.domain().iter());
            let connected = tgt.is_connected_subset(&image);
            (m.domain().clone(), image, connected, m.clone())
        }
        LiftingMode::Codim(k) => {
            src.rank_function()?;
            let report = tgt.codim_connectivity(k)?;
            require_combinatorial(phi)?;
            let rank = tgt.rank_function()?;
            let base = rank.at_least(report.threshold_rank);
            let domain = UpSet::new(src, phi.preimage(base.iter()))?;
            (domain.clone(), base, report.connected, m.restrict(src, &domain)?)
        }
    };
    require_balanced(phi, &m)?;
    let connected_fibre = base.iter().find_map(|&b| {
        let fibre: ElementSet = phi.fibre(b).intersection(domain.members()).copied().collect();
        (!fibre.is_empty() && src.is_connected_subset(&fibre)).then(|| (tgt.name(b).to_string(), src.names_of(&fibre)))
    });
    let components = src.components_of(domain.members());
    let report = LiftingReport {
        mode: match mode {
            LiftingMode::OneFibre => "one-fibre".to_string(),
            LiftingMode::Codim(k) => format!("codim-{k}"),
        },
        domain: src.names_of(domain.iter()),
        base_connected,
        hypotheses_hold: base_connected && connected_fibre.is_some(),
        connected_fibre,
        conclusion_holds: components.len() <= 1,
        components: components.iter().map(|c| src.names_of(c)).collect(),
    };
    if report.hypotheses_hold && !report.conclusion_holds {
        return Err(Error::TheoremViolation(format!(
            "{} lifting: hypotheses hold but the domain has {} components",
            report.mode,
            report.components.len()
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> PosetMorphism {
        PosetMorphism::identity(Poset::new(["A", "B", "C"], [("A", "B"), ("B", "C")]).unwrap())
    }

    #[test]
    fn identity_extends_constant() {
        let id = chain();
        let m = IndexMap::from_names(id.source(), ["C"], [("C", 2)]).unwrap();
        let report = extend_balanced(&id, &m, &UpSet::full(id.source())).unwrap();
        assert!(report.is_complete());
        assert_eq!(report.mode, ExtensionMode::Guaranteed);
        assert_eq!(report.extended, IndexMap::constant(&UpSet::full(id.source()), 2));
    }

    #[test]
    fn extension_to_same_domain_is_identity() {
        let id = chain();
        let m = IndexMap::from_names(id.source(), ["B"], [("B", 1), ("C", 1)]).unwrap();
        let report = extend_balanced(&id, &m, m.domain()).unwrap();
        assert_eq!(report.extended, m);
        assert!(report.steps.is_empty());
    }

    #[test]
    fn extension_requires_maximal_elements() {
        let p = Poset::new(["A", "B", "C"], [("A", "B")]).unwrap();
        let id = PosetMorphism::identity(p);
        let m = IndexMap::from_names(id.source(), ["B"], [("B", 1)]).unwrap();
        assert_eq!(
            extend_balanced(&id, &m, &UpSet::full(id.source())).unwrap_err(),
            Error::MaxElementsUncovered("C".into())
        );
    }

    #[test]
    fn path_directions() {
        let p = chain().source().clone();
        let path = Path::parse(&p, "A,C,C,B").unwrap();
        assert_eq!(path.directions(), [Direction::Up, Direction::Stay, Direction::Down]);
        let q = Poset::new(["x", "y"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(
            Path::parse(&q, "x,y").unwrap_err(),
            Error::NotComparable("x".into(), "y".into())
        );
        assert_eq!(Path::parse(&q, "").unwrap_err(), Error::EmptyPath);
    }

    #[test]
    fn trivial_lifts() {
        let id = chain();
        let m = IndexMap::constant(&UpSet::full(id.source()), 1);
        let lifted = lift_upward_path(&id, &m, 1, &[1]).unwrap();
        assert_eq!(lifted.steps(), [1]);
        let path = Path::new(id.target(), vec![0]).unwrap();
        assert_eq!(lift_path(&id, &m, 0, &path).unwrap().steps(), [0]);
    }

    #[test]
    fn upward_lift_through_saturated_chain() {
        let id = chain();
        let m = IndexMap::constant(&UpSet::full(id.source()), 1);
        assert_eq!(lift_upward_path(&id, &m, 0, &[0, 2]).unwrap().steps(), [0, 2]);
        assert_eq!(
            lift_upward_path(&id, &m, 0, &[0, 2, 1]).unwrap_err(),
            Error::PathNotIncreasing("C".into(), "B".into())
        );
        assert_eq!(
            lift_upward_path(&id, &m, 0, &[1]).unwrap_err(),
            Error::PathNotFromImage {
                expected: "A".into(),
                found: "B".into()
            }
        );
    }

    #[test]
    fn singleton_lifting_is_trivial() {
        let id = PosetMorphism::identity(Poset::new(["x"], Vec::<(&str, &str)>::new()).unwrap());
        let m = IndexMap::constant(&UpSet::full(id.source()), 1);
        for mode in [LiftingMode::OneFibre, LiftingMode::Codim(0)] {
            let r = connectivity_lifting(&id, &m, mode).unwrap();
            assert!(r.hypotheses_hold && r.conclusion_holds);
        }
    }
}
