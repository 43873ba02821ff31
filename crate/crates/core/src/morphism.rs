//! Order-preserving maps between posets.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{ElementSet, Poset, UpSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetMorphism {
    source: Poset,
    target: Poset,
    map: Vec<usize>,
}

/// How the restriction of a morphism to a principal down-set fails to be an
/// isomorphism onto the down-set of the image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Defect {
    NotInjective { first: String, second: String, image: String },
    NotSurjective { missing: String },
    InverseNotMonotone { lower: String, upper: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombinatorialWitness {
    pub element: String,
    pub image: String,
    pub source_down_size: usize,
    pub target_down_size: usize,
    pub defect: Defect,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombinatorialReport {
    pub combinatorial: bool,
    /// One entry per failing element, in lexicographic order.
    pub witnesses: Vec<CombinatorialWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpenWitness {
    pub element: String,
    pub image: Vec<String>,
    /// Least element above the image of `↑element` that is not in it.
    pub missing: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpennessReport {
    pub open: bool,
    pub witnesses: Vec<OpenWitness>,
}

impl PosetMorphism {
    /// Builds a morphism from a name-to-name assignment.
    pub fn new<K, V>(source: Poset, target: Poset, map: impl IntoIterator<Item = (K, V)>) -> Result<Self>
    where
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let mut images: Vec<Option<usize>> = vec![None; source.len()];
        for (k, v) in map {
            let a = source.id(k.as_ref())?;
            images[a] = Some(target.id(v.as_ref())?);
        }
        let map = images
            .iter()
            .enumerate()
            .map(|(a, img)| img.ok_or_else(|| Error::IncompleteMap(source.name(a).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(source, target, map)
    }

    pub fn from_indices(source: Poset, target: Poset, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            let missing = source.name(map.len().min(source.len().saturating_sub(1)));
            return Err(Error::IncompleteMap(missing.to_string()));
        }
        if let Some((a, b)) = source.cover_pairs().find(|&(a, b)| !target.leq(map[a], map[b])) {
            return Err(Error::NotMonotone {
                lower: source.name(a).to_string(),
                upper: source.name(b).to_string(),
            });
        }
        Ok(PosetMorphism { source, target, map })
    }

    pub fn identity(poset: Poset) -> Self {
        let map = poset.elements().collect();
        PosetMorphism {
            source: poset.clone(),
            target: poset,
            map,
        }
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn image(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// The assignment as names, sorted by source element.
    pub fn named_map(&self) -> BTreeMap<String, String> {
        self.source
            .elements()
            .map(|a| (self.source.name(a).to_string(), self.target.name(self.map[a]).to_string()))
            .collect()
    }

    pub fn image_set<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> ElementSet {
        set.into_iter().map(|&a| self.map[a]).collect()
    }

    pub fn preimage<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> ElementSet {
        let set: ElementSet = set.into_iter().copied().collect();
        self.source.elements().filter(|&a| set.contains(&self.map[a])).collect()
    }

    /// `{a : φ(a) = b}`.
    pub fn fibre(&self, b: usize) -> ElementSet {
        self.source.elements().filter(|&a| self.map[a] == b).collect()
    }

    /// Tests whether each principal down-set maps isomorphically onto the
    /// down-set of its image.
    pub fn combinatorial_check(&self) -> CombinatorialReport {
        let witnesses: Vec<_> = self
            .source
            .elements()
            .filter_map(|a| self.down_set_defect(a))
            .collect();
        CombinatorialReport {
            combinatorial: witnesses.is_empty(),
            witnesses,
        }
    }

    pub fn is_combinatorial(&self) -> bool {
        self.source.elements().all(|a| self.down_set_defect(a).is_none())
    }

    fn down_set_defect(&self, a: usize) -> Option<CombinatorialWitness> {
        let (src, tgt) = (&self.source, &self.target);
        let down = src.principal_down(a);
        let target_down = tgt.principal_down(self.map[a]);
        let witness = |defect| CombinatorialWitness {
            element: src.name(a).to_string(),
            image: tgt.name(self.map[a]).to_string(),
            source_down_size: down.len(),
            target_down_size: target_down.len(),
            defect,
        };
        let mut preimage: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in &down {
            if let Some(&y) = preimage.get(&self.map[x]) {
                return Some(witness(Defect::NotInjective {
                    first: src.name(y).to_string(),
                    second: src.name(x).to_string(),
                    image: tgt.name(self.map[x]).to_string(),
                }));
            }
            preimage.insert(self.map[x], x);
        }
        if let Some(&missing) = target_down.iter().find(|b| !preimage.contains_key(b)) {
            return Some(witness(Defect::NotSurjective {
                missing: tgt.name(missing).to_string(),
            }));
        }
        for &x in &down {
            for &y in &down {
                if x != y && tgt.leq(self.map[x], self.map[y]) && !src.leq(x, y) {
                    return Some(witness(Defect::InverseNotMonotone {
                        lower: src.name(x).to_string(),
                        upper: src.name(y).to_string(),
                    }));
                }
            }
        }
        None
    }

    /// Connected components of `φ⁻¹(U)` for an up-set `U` of the target.
    pub fn preimage_components_of(&self, up: &UpSet) -> Vec<UpSet> {
        let pre = self.preimage(up.iter());
        self.source
            .components_of(&pre)
            .into_iter()
            .map(|c| UpSet::new(&self.source, c).expect("components of an up-set are up-sets"))
            .collect()
    }

    /// Connected components of `φ⁻¹(↑b)`.
    pub fn preimage_components(&self, b: usize) -> Vec<UpSet> {
        self.preimage_components_of(&self.target.principal_up(b))
    }

    /// A map is open iff the image of every principal up-set is an up-set.
    pub fn openness_check(&self) -> OpennessReport {
        let mut witnesses = Vec::new();
        for a in self.source.elements() {
            let image = self.image_set(self.source.principal_up(a).iter());
            let closure = self.target.up_set(image.iter());
            if let Some(&missing) = closure.iter().find(|b| !image.contains(b)) {
                witnesses.push(OpenWitness {
                    element: self.source.name(a).to_string(),
                    image: self.target.names_of(&image),
                    missing: self.target.name(missing).to_string(),
                });
            };
        }
        OpennessReport {
            open: witnesses.is_empty(),
            witnesses,
        }
    }

    pub fn is_open(&self) -> bool {
        self.openness_check().open
    }

    /// The restriction to an up-set `V` of the source, corestricted to its
    /// image `φ(V)`, both carrying the induced order.
    pub fn restrict_corestrict(&self, domain: &UpSet) -> Result<PosetMorphism> {
        let domain = UpSet::new(&self.source, domain.members().clone())?;
        let image = self.image_set(domain.iter());
        let source = self.source.induced(domain.members());
        let target = self.target.induced(&image);
        let map = domain
            .iter()
            .map(|&a| target.id(self.target.name(self.map[a])).expect("image element present"))
            .collect();
        PosetMorphism::from_indices(source, target, map)
    }
}
