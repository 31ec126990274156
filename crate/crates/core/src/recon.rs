//! Canonical-double-cover preimages, neighbourhood reconstruction counts and
//! matrix symmetrization.

use crate::covers::{cdc, idc, quotient_by_involution, quotient_with_classes};
use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::iso::{self, automorphism_group_capped, class_swapping_involutions, conjugacy_classes, PermGroup};
use crate::perm::Permutation;
use crate::tfiso::find_tf_isomorphism;

/// One preimage per conjugacy class of class-swapping involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preimage {
    pub graph: MixedGraph,
    /// Least involution of its conjugacy class.
    pub witness: Permutation,
    pub class_size: usize,
    pub loopless: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageSet {
    pub entries: Vec<Preimage>,
}

impl PreimageSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn loopless(&self) -> impl Iterator<Item = &Preimage> {
        self.entries.iter().filter(|e| e.loopless)
    }

    pub fn loopless_count(&self) -> usize {
        self.loopless().count()
    }
}

/// Mixed graphs `g`, up to isomorphism, whose canonical double cover is `h`.
pub fn enumerate_cdc_preimages(h: &MixedGraph) -> Result<PreimageSet> {
    enumerate_cdc_preimages_capped(h, iso::ENUMERATION_CAP)
}

pub fn enumerate_cdc_preimages_capped(h: &MixedGraph, cap: usize) -> Result<PreimageSet> {
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    let classes = h.bipartition().ok_or(Error::NotBipartite)?;
    let group = automorphism_group_capped(h, None, cap)?;
    let swaps = class_swapping_involutions(&group, &classes)?;
    let conj = conjugacy_classes(&group, &swaps)?;
    let mut entries = Vec::with_capacity(conj.len());
    for class in conj.classes {
        let witness = class[0].clone();
        let graph = quotient_by_involution(h, &witness)?;
        entries.push(Preimage {
            loopless: !graph.has_loops(),
            graph,
            witness,
            class_size: class.len(),
        });
    }
    Ok(PreimageSet { entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reconstructions {
    /// Loopless graphs with the same neighbourhood family, `g` included.
    pub total: usize,
    pub including_self: bool,
}

/// Number of graphs, up to isomorphism, sharing the neighbourhood family of
/// a connected non-bipartite graph `g`.
pub fn count_reconstructions(g: &MixedGraph) -> Result<Reconstructions> {
    if !g.is_graph() {
        return Err(Error::NotAGraph);
    }
    if g.is_bipartite() {
        return Err(Error::Bipartite);
    }
    let set = enumerate_cdc_preimages(&cdc(g))?;
    let graphs: Vec<&MixedGraph> = set.loopless().map(|e| &e.graph).filter(|x| x.is_graph()).collect();
    Ok(Reconstructions {
        total: graphs.len(),
        including_self: graphs.iter().any(|x| iso::are_isomorphic(x, g)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symmetrization {
    Found(MixedGraph),
    None,
    /// The cover's automorphism group exceeded the enumeration cap.
    Unknown,
}

/// A loopless graph TF-isomorphic to `d`, found as the quotient of `idc(d)`
/// by a side-swapping involution that moves no vertex to a neighbour.
pub fn symmetrize(d: &MixedGraph) -> Result<Symmetrization> {
    symmetrize_capped(d, iso::ENUMERATION_CAP)
}

pub fn symmetrize_capped(d: &MixedGraph, cap: usize) -> Result<Symmetrization> {
    let n = d.vertex_count();
    if d.arc_count() % 2 == 1 {
        return Ok(Symmetrization::None);
    }
    let cover = idc(d);
    let sides = cover.sides();
    // Isolated cover vertices can be paired across sides freely, so the
    // search runs on the rest of the cover.
    let (isolated, active): (Vec<usize>, Vec<usize>) =
        (0..2 * n).partition(|&x| cover.graph().out_degree(x) == 0);
    let isolated_side0: Vec<usize> = isolated.iter().copied().filter(|&x| sides[x] == 0).collect();
    let isolated_side1: Vec<usize> = isolated.iter().copied().filter(|&x| sides[x] == 1).collect();
    if isolated_side0.len() != isolated_side1.len() {
        return Ok(Symmetrization::None);
    }
    let core = cover.graph().induced(&active);
    let core_sides: Vec<usize> = active.iter().map(|&x| usize::from(sides[x])).collect();
    let group = match automorphism_group_capped(&core, None, cap) {
        Ok(group) => group,
        Err(Error::CapExceeded { .. }) => return Ok(Symmetrization::Unknown),
        Err(e) => return Err(e),
    };
    let Some(local) = first_symmetric_involution(&group, &core, &core_sides) else {
        return Ok(Symmetrization::None);
    };
    let mut sigma = vec![0; 2 * n];
    for (i, &x) in active.iter().enumerate() {
        sigma[x] = active[local.apply(i)];
    }
    for (&x, &y) in isolated_side0.iter().zip(&isolated_side1) {
        sigma[x] = y;
        sigma[y] = x;
    }
    let sigma = Permutation::from_images(sigma)?;
    let g = quotient_with_classes(cover.graph(), &sides, &sigma)?;
    if !g.is_graph() || find_tf_isomorphism(d, &g)?.is_none() {
        return Err(Error::InvalidInvolution("symmetrization witness failed validation".into()));
    }
    Ok(Symmetrization::Found(g))
}

fn first_symmetric_involution(group: &PermGroup, core: &MixedGraph, sides: &[usize]) -> Option<Permutation> {
    group
        .elements()
        .iter()
        .find(|p| {
            (p.is_involution() || p.degree() == 0)
                && (0..p.degree()).all(|x| sides[p.apply(x)] != sides[x] && !core.has_arc(x, p.apply(x)))
        })
        .cloned()
}
