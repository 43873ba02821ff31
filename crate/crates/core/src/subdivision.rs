//! Chain posets, induced maps on them, and stellar subdivision of abstract
//! simplicial complexes.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::morphism::PosetMorphism;
use crate::poset::Poset;

pub type Face = BTreeSet<String>;

/// Display name of a face, e.g. `{1,2}`.
pub fn face_name(face: &Face) -> String {
    format!("{{{}}}", face.iter().join(","))
}

fn face_vec(face: &Face) -> Vec<String> {
    face.iter().cloned().collect()
}

/// A finite abstract simplicial complex, stored as its full set of faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<String>,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// Takes every face explicitly and checks closure under non-empty subsets.
    pub fn from_faces(faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        for face in &faces {
            if face.is_empty() {
                return Err(Error::EmptyFace);
            }
            for v in face {
                let mut facet = face.clone();
                facet.remove(v);
                if !facet.is_empty() && !faces.contains(&facet) {
                    return Err(Error::NotClosed(face_vec(&facet)));
                }
            }
        }
        let vertices = faces.iter().flatten().cloned().collect();
        Ok(SimplicialComplex { vertices, faces })
    }

    /// Closure of a list of faces; `vertices` may add isolated points.
    pub fn from_maximal<V, F, S>(vertices: V, maximal: impl IntoIterator<Item = F>) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        F: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        let mut faces = BTreeSet::new();
        for v in &vertices {
            faces.insert(Face::from([v.clone()]));
        }
        for top in maximal {
            let top: Vec<String> = top.into_iter().map(Into::into).collect();
            if top.is_empty() {
                return Err(Error::EmptyFace);
            }
            if let Some(v) = top.iter().find(|v| !vertices.contains(*v)) {
                return Err(Error::UnknownElement(v.clone()));
            }
            let n = top.len();
            if n > 20 {
                return Err(Error::OracleSizeExceeded { size: n, limit: 20 });
            }
            for mask in 1u32..(1 << n) {
                faces.insert((0..n).filter(|i| mask >> i & 1 == 1).map(|i| top[i].clone()).collect());
            }
        }
        Ok(SimplicialComplex { vertices, faces })
    }

    /// The full simplex on the given vertices.
    pub fn simplex<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        Self::from_maximal(vertices.clone(), [vertices])
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces.contains(face)
    }

    pub fn dim(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.len() - 1).max()
    }

    /// Number of faces in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dim().map_or(0, |d| d + 1)];
        for f in &self.faces {
            counts[f.len() - 1] += 1;
        }
        counts
    }

    pub fn maximal_faces(&self) -> Vec<Face> {
        self.faces
            .iter()
            .filter(|f| !self.faces.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
            .cloned()
            .collect()
    }

    /// Faces ordered by inclusion, named by [`face_name`].
    pub fn face_poset(&self) -> Poset {
        let names: Vec<String> = self.faces.iter().map(face_name).collect();
        let mut ids = std::collections::HashMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            ids.insert(f, i);
        }
        let mut pairs = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            if f.len() < 2 {
                continue;
            }
            for v in f {
                let mut facet = f.clone();
                facet.remove(v);
                pairs.push((ids[&facet], i));
            }
        }
        Poset::from_parts(names, pairs).expect("face inclusion is a valid cover relation")
    }

    /// Replaces the star of `sigma` by the cone from `new_vertex` over the
    /// faces of the star that miss `sigma`.
    pub fn stellar_subdivide(&self, sigma: &Face, new_vertex: &str) -> Result<StellarSubdivision> {
        if sigma.is_empty() {
            return Err(Error::EmptyFace);
        }
        if !self.faces.contains(sigma) {
            return Err(Error::FaceNotInComplex(face_vec(sigma)));
        }
        if self.vertices.contains(new_vertex) {
            return Err(Error::VertexClash(new_vertex.to_string()));
        }
        let removed: Vec<Face> = self.faces.iter().filter(|f| sigma.is_subset(f)).cloned().collect();
        let mut added: BTreeSet<Face> = BTreeSet::new();
        added.insert(Face::from([new_vertex.to_string()]));
        for f in self.faces.iter().filter(|f| !sigma.is_subset(f)) {
            if removed.iter().any(|r| f.is_subset(r)) {
                let mut cone = f.clone();
                cone.insert(new_vertex.to_string());
                added.insert(cone);
            }
        }
        let mut faces: BTreeSet<Face> = self.faces.iter().filter(|f| !sigma.is_subset(f)).cloned().collect();
        faces.extend(added.iter().cloned());
        let vertices = faces.iter().flatten().cloned().collect();
        Ok(StellarSubdivision {
            complex: SimplicialComplex { vertices, faces },
            removed,
            added: added.into_iter().collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StellarSubdivision {
    pub complex: SimplicialComplex,
    pub removed: Vec<Face>,
    pub added: Vec<Face>,
}

impl StellarSubdivision {
    /// Added faces per dimension.
    pub fn added_by_dim(&self) -> Vec<usize> {
        let top = self.added.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut counts = vec![0; top];
        for f in &self.added {
            counts[f.len() - 1] += 1;
        }
        counts
    }
}

/// Poset of non-empty strict chains of a base poset under inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPoset {
    poset: Poset,
    chains: Vec<Vec<usize>>,
}

impl ChainPoset {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// The chain behind an element, listed bottom to top in base indices.
    pub fn chain(&self, c: usize) -> &[usize] {
        &self.chains[c]
    }

    /// Largest element of a chain.
    pub fn top(&self, c: usize) -> usize {
        *self.chains[c].last().expect("chains are non-empty")
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }
}

/// Name of a chain, e.g. `[A<B]`.
pub fn chain_name(base: &Poset, chain: &[usize]) -> String {
    format!("[{}]", chain.iter().map(|&a| base.name(a)).join("<"))
}

/// Every non-empty strict chain of `base`, with covers given by adding one
/// element.
pub fn chain_poset(base: &Poset, limit: usize) -> Result<ChainPoset> {
    let mut chains = Vec::new();
    let mut current = Vec::new();
    for a in base.elements() {
        current.push(a);
        extend_chains(base, &mut current, &mut chains, limit)?;
        current.pop();
    }
    let names: Vec<String> = chains.iter().map(|c| chain_name(base, c)).collect();
    let index: std::collections::HashMap<&[usize], usize> =
        chains.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut pairs = Vec::new();
    for (i, c) in chains.iter().enumerate() {
        if c.len() < 2 {
            continue;
        }
        for skip in 0..c.len() {
            let sub: Vec<usize> = c.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x).collect();
            pairs.push((index[sub.as_slice()], i));
        }
    }
    let poset = Poset::from_parts(names.clone(), pairs).expect("subchain inclusion is a valid cover relation");
    let mut ordered = vec![Vec::new(); chains.len()];
    for (name, chain) in names.iter().zip(chains) {
        ordered[poset.id(name).expect("chain name present")] = chain;
    }
    Ok(ChainPoset { poset, chains: ordered })
}

fn extend_chains(base: &Poset, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) -> Result<()> {
    if out.len() >= limit {
        return Err(Error::OracleSizeExceeded {
            size: out.len() + 1,
            limit,
        });
    }
    out.push(current.clone());
    let top = *current.last().expect("non-empty chain");
    for b in base.elements().filter(|&b| base.lt(top, b)) {
        current.push(b);
        extend_chains(base, current, out, limit)?;
        current.pop();
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcsMorphism {
    pub source: ChainPoset,
    pub target: ChainPoset,
    pub morphism: PosetMorphism,
}

/// The map induced on chain posets by a combinatorial morphism.
pub fn bcs_morphism(phi: &PosetMorphism, limit: usize) -> Result<BcsMorphism> {
    if let Some(w) = phi.combinatorial_check().witnesses.into_iter().next() {
        return Err(Error::NotCombinatorial(Box::new(w)));
    }
    let source = chain_poset(phi.source(), limit)?;
    let target = chain_poset(phi.target(), limit)?;
    let map = (0..source.len())
        .map(|c| {
            let image: Vec<usize> = source.chain(c).iter().map(|&a| phi.image(a)).collect();
            target.poset().id(&chain_name(phi.target(), &image))
        })
        .collect::<Result<Vec<_>>>()?;
    let morphism = PosetMorphism::from_indices(source.poset().clone(), target.poset().clone(), map)?;
    Ok(BcsMorphism {
        source,
        target,
        morphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(vs: &[&str]) -> Face {
        vs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn two_chain_chains() {
        let p = Poset::new(["A", "B"], [("A", "B")]).unwrap();
        let c = chain_poset(&p, 100).unwrap();
        assert_eq!(c.poset().names(), ["[A<B]", "[A]", "[B]"]);
        let ab = c.poset().id("[A<B]").unwrap();
        assert_eq!(c.poset().lower_covers(ab).len(), 2);
        assert_eq!(c.top(ab), 1);
    }

    #[test]
    fn antichain_chains() {
        let p = Poset::new(["a", "b", "c"], Vec::<(&str, &str)>::new()).unwrap();
        let c = chain_poset(&p, 100).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.poset().cover_count(), 0);
    }

    #[test]
    fn chain_limit() {
        let p = Poset::new(["A", "B"], [("A", "B")]).unwrap();
        assert!(matches!(chain_poset(&p, 2), Err(Error::OracleSizeExceeded { .. })));
    }

    #[test]
    fn closure_validation() {
        assert_eq!(
            SimplicialComplex::from_faces([face(&["1", "2"]), face(&["1"])]).unwrap_err(),
            Error::NotClosed(vec!["2".into()])
        );
        assert_eq!(SimplicialComplex::from_faces([Face::new()]).unwrap_err(), Error::EmptyFace);
    }

    #[test]
    fn edge_bisection() {
        let k = SimplicialComplex::simplex(["1", "2"]).unwrap();
        let sd = k.stellar_subdivide(&face(&["1", "2"]), "p").unwrap();
        let mut expected = sd.complex.faces().iter().map(face_name).collect::<Vec<_>>();
        expected.sort();
        assert_eq!(expected, ["{1,p}", "{1}", "{2,p}", "{2}", "{p}"]);
    }

    #[test]
    fn vertex_subdivision_relabels() {
        let k = SimplicialComplex::simplex(["1", "2", "3"]).unwrap();
        let sd = k.stellar_subdivide(&face(&["1"]), "v").unwrap();
        assert_eq!(sd.complex.f_vector(), k.f_vector());
        assert!(sd.complex.vertices().contains("v") && !sd.complex.vertices().contains("1"));
    }

    #[test]
    fn subdivision_errors() {
        let k = SimplicialComplex::simplex(["1", "2"]).unwrap();
        assert_eq!(
            k.stellar_subdivide(&face(&["3"]), "p").unwrap_err(),
            Error::FaceNotInComplex(vec!["3".into()])
        );
        assert_eq!(
            k.stellar_subdivide(&face(&["1"]), "2").unwrap_err(),
            Error::VertexClash("2".into())
        );
    }

    #[test]
    fn face_poset_of_edge() {
        let k = SimplicialComplex::simplex(["1", "2"]).unwrap();
        let p = k.face_poset();
        assert_eq!(p.len(), 3);
        assert_eq!(p.cover_count(), 2);
    }
}
