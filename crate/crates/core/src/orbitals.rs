//! Two-fold orbitals, the projection of TF-automorphisms of a strongly
//! bipartite digraph onto its automorphisms, and orbital recognition.

use std::collections::{BTreeSet, VecDeque};

use crate::covers::is_strongly_bipartite;
use crate::error::{Error, Result};
use crate::graph::{Arc, MixedGraph};
use crate::iso;
use crate::perm::Permutation;
use crate::tfiso::{is_tf_map, tf_automorphisms, TfMap};

/// Generators of a subgroup of `S_n × S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TfGroupGens {
    degree: usize,
    generators: Vec<TfMap>,
}

impl TfGroupGens {
    pub fn new(degree: usize, generators: Vec<TfMap>) -> Result<Self> {
        if let Some(m) = generators.iter().find(|m| m.degree() != degree) {
            return Err(Error::SizeMismatch {
                expected: degree,
                found: m.degree(),
            });
        }
        Ok(TfGroupGens { degree, generators })
    }

    /// Diagonal generators `(p, p)`.
    pub fn diagonal(degree: usize, perms: Vec<Permutation>) -> Result<Self> {
        Self::new(degree, perms.into_iter().map(TfMap::diagonal).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[TfMap] {
        &self.generators
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitalDigraph {
    pub graph: MixedGraph,
    pub seed: Arc,
}

/// The orbit `{(alpha(u), beta(v))}` of `seed` under the generated group, as
/// a mixed graph on all `n` vertices.
pub fn tf_orbital(gens: &TfGroupGens, seed: Arc) -> Result<OrbitalDigraph> {
    let n = gens.degree;
    for v in [seed.tail, seed.head] {
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
    }
    let orbit = arc_orbit(seed, gens.generators.iter().map(|m| (&m.alpha, &m.beta)));
    Ok(OrbitalDigraph {
        graph: MixedGraph::new(n, orbit)?,
        seed,
    })
}

fn arc_orbit<'a, I>(seed: Arc, gens: I) -> BTreeSet<Arc>
where
    I: Iterator<Item = (&'a Permutation, &'a Permutation)> + Clone,
{
    let mut seen = BTreeSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(a) = queue.pop_front() {
        for (alpha, beta) in gens.clone() {
            let b = Arc::new(alpha.apply(a.tail), beta.apply(a.head));
            if seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    seen
}

/// `f = alpha` on sources, `beta` on sinks and the identity on isolated
/// vertices; an automorphism of `d`.
pub fn psi_project(d: &MixedGraph, m: &TfMap) -> Result<Permutation> {
    if !is_strongly_bipartite(d) {
        return Err(Error::NotStronglyBipartite);
    }
    if !is_tf_map(d, d, &m.alpha, &m.beta)? {
        return Err(Error::NotTfMap);
    }
    let images = (0..d.vertex_count())
        .map(|v| {
            if d.out_degree(v) > 0 {
                m.alpha.apply(v)
            } else if d.in_degree(v) > 0 {
                m.beta.apply(v)
            } else {
                v
            }
        })
        .collect();
    Permutation::from_images(images)
}

fn first_arc(d: &MixedGraph) -> Result<Arc> {
    d.arcs()
        .first()
        .copied()
        .ok_or_else(|| Error::InvalidParameter("digraph has no arcs".into()))
}

/// Whether `Aut(d)` acts transitively on the arcs of `d`.
pub fn is_orbital(d: &MixedGraph) -> Result<bool> {
    let seed = first_arc(d)?;
    let gens = iso::automorphisms(d, None)?.generators;
    Ok(arc_orbit(seed, gens.iter().map(|p| (p, p))).len() == d.arc_count())
}

/// Whether `Aut^TF(d)` acts transitively on the arcs of `d`.
pub fn is_tf_orbital(d: &MixedGraph) -> Result<bool> {
    let seed = first_arc(d)?;
    let (gens, _) = tf_automorphisms(d)?;
    Ok(arc_orbit(seed, gens.iter().map(|m| (&m.alpha, &m.beta))).len() == d.arc_count())
}
