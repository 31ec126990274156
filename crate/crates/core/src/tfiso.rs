//! Two-fold isomorphisms, the two-fold automorphism group, neighbourhood
//! families and stability.
//!
//! Every search goes through the incidence double cover: a side-preserving
//! isomorphism `phi` of covers splits into `alpha` (its action on side 0) and
//! `beta` (its action on side 1).

use std::collections::BTreeSet;
use std::fmt;

use crate::covers::{cdc, idc};
use crate::error::{Error, Result};
use crate::graph::{MixedGraph, Vertex};
use crate::iso::{self, AutomorphismSearch, PermGroup, ENUMERATION_CAP};
use crate::perm::Permutation;

/// A pair of vertex bijections `(alpha, beta)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TfMap {
    pub alpha: Permutation,
    pub beta: Permutation,
}

impl TfMap {
    pub fn new(alpha: Permutation, beta: Permutation) -> Result<Self> {
        if alpha.degree() != beta.degree() {
            return Err(Error::SizeMismatch {
                expected: alpha.degree(),
                found: beta.degree(),
            });
        }
        Ok(TfMap { alpha, beta })
    }

    pub fn identity(n: usize) -> Self {
        TfMap {
            alpha: Permutation::identity(n),
            beta: Permutation::identity(n),
        }
    }

    /// The diagonal pair `(p, p)`.
    pub fn diagonal(p: Permutation) -> Self {
        TfMap {
            alpha: p.clone(),
            beta: p,
        }
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn is_non_trivial(&self) -> bool {
        self.alpha != self.beta
    }

    /// Componentwise composition `(αγ, βδ)`; `other` acts first.
    pub fn compose(&self, other: &TfMap) -> TfMap {
        TfMap {
            alpha: self.alpha.compose(&other.alpha),
            beta: self.beta.compose(&other.beta),
        }
    }

    pub fn inverse(&self) -> TfMap {
        TfMap {
            alpha: self.alpha.inverse(),
            beta: self.beta.inverse(),
        }
    }

    /// Splits a side-preserving permutation of the `2n` cover vertices.
    pub fn from_cover_permutation(phi: &Permutation) -> TfMap {
        let n = phi.degree() / 2;
        let alpha = (0..n).map(|u| phi.apply(u)).collect();
        let beta = (0..n).map(|v| phi.apply(n + v) - n).collect();
        TfMap {
            alpha: Permutation::from_images_unchecked(alpha),
            beta: Permutation::from_images_unchecked(beta),
        }
    }

    /// Image of an arc `(u, v)`, namely `(alpha(u), beta(v))`.
    pub fn apply_arc(&self, tail: Vertex, head: Vertex) -> (Vertex, Vertex) {
        (self.alpha.apply(tail), self.beta.apply(head))
    }
}

impl fmt::Display for TfMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha = {}, beta = {}", self.alpha, self.beta)
    }
}

/// Checks `(u, v) ∈ A(g) ⇔ (alpha(u), beta(v)) ∈ A(h)` for every pair.
pub fn is_tf_map(g: &MixedGraph, h: &MixedGraph, alpha: &Permutation, beta: &Permutation) -> Result<bool> {
    let n = g.vertex_count();
    for found in [h.vertex_count(), alpha.degree(), beta.degree()] {
        if found != n {
            return Err(Error::SizeMismatch { expected: n, found });
        }
    }
    if g.arc_count() != h.arc_count() {
        return Ok(false);
    }
    Ok(g.arcs()
        .iter()
        .all(|a| h.has_arc(alpha.apply(a.tail), beta.apply(a.head))))
}

fn side_colours(n: usize) -> Vec<usize> {
    (0..2 * n).map(|i| usize::from(i >= n)).collect()
}

/// Some TF-isomorphism from `g` to `h`, or `None` when the incidence double
/// covers admit no side-preserving isomorphism.
pub fn find_tf_isomorphism(g: &MixedGraph, h: &MixedGraph) -> Result<Option<TfMap>> {
    if g.vertex_count() != h.vertex_count() {
        return Ok(None);
    }
    let sides = side_colours(g.vertex_count());
    let phi = iso::find_isomorphism(idc(g).graph(), idc(h).graph(), Some((&sides, &sides)))?;
    Ok(phi.map(|p| TfMap::from_cover_permutation(&p)))
}

/// Whether `g` is TF-isomorphic to the inverse of `h`; equivalently whether
/// the covers are isomorphic by a map that swaps sides.
pub fn tf_isomorphic_to_inverse(g: &MixedGraph, h: &MixedGraph) -> Result<bool> {
    Ok(find_tf_isomorphism(g, &h.inverse())?.is_some())
}

/// The two-fold automorphism group, fully enumerated and sorted by
/// `(alpha images, beta images)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TfGroup {
    degree: usize,
    elements: Vec<TfMap>,
}

impl TfGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[TfMap] {
        &self.elements
    }

    pub fn non_trivial_count(&self) -> usize {
        self.elements.iter().filter(|m| m.is_non_trivial()).count()
    }

    pub fn contains(&self, m: &TfMap) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

/// Generators and order of `Aut^TF(g)`, without enumeration.
pub fn tf_automorphisms(g: &MixedGraph) -> Result<(Vec<TfMap>, u128)> {
    let AutomorphismSearch { generators, order, .. } = tf_cover_search(g)?;
    let gens = generators.iter().map(TfMap::from_cover_permutation).collect();
    Ok((gens, order))
}

fn tf_cover_search(g: &MixedGraph) -> Result<AutomorphismSearch> {
    let sides = side_colours(g.vertex_count());
    iso::automorphisms(idc(g).graph(), Some(&sides))
}

pub fn tf_automorphism_group(g: &MixedGraph) -> Result<TfGroup> {
    tf_automorphism_group_capped(g, ENUMERATION_CAP)
}

pub fn tf_automorphism_group_capped(g: &MixedGraph, cap: usize) -> Result<TfGroup> {
    let search = tf_cover_search(g)?;
    if search.order > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let group = PermGroup::generate(search.degree, search.generators, cap)?;
    let mut elements: Vec<TfMap> = group
        .elements()
        .iter()
        .map(TfMap::from_cover_permutation)
        .collect();
    elements.sort_unstable();
    Ok(TfGroup {
        degree: g.vertex_count(),
        elements,
    })
}

/// The multiset `{N(v)}` of a graph, sorted.
pub fn neighbourhood_family(g: &MixedGraph) -> Result<Vec<BTreeSet<Vertex>>> {
    if !g.is_graph() {
        return Err(Error::NotAGraph);
    }
    let mut family: Vec<BTreeSet<Vertex>> = (0..g.vertex_count())
        .map(|v| g.out_neighbours(v).iter().copied().collect())
        .collect();
    family.sort_unstable();
    Ok(family)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: bool,
    pub aut_order: u128,
    pub tf_aut_order: u128,
    pub cdc_aut_order: u128,
    /// `cdc_aut_order / aut_order`: the index of `Aut(G)` in the automorphism
    /// group of its canonical double cover.
    pub index: u128,
}

/// A graph is stable when it has no non-trivial TF-automorphism, i.e. when
/// `|Aut^TF(g)| == |Aut(g)|`.
pub fn is_stable(g: &MixedGraph) -> Result<StabilityReport> {
    if !g.is_graph() {
        return Err(Error::NotAGraph);
    }
    let aut_order = iso::automorphisms(g, None)?.order;
    let tf_aut_order = tf_cover_search(g)?.order;
    let cdc_aut_order = iso::automorphisms(&cdc(g), None)?.order;
    Ok(StabilityReport {
        stable: tf_aut_order == aut_order,
        aut_order,
        tf_aut_order,
        cdc_aut_order,
        index: cdc_aut_order / aut_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn beta_from_printed() -> Permutation {
        Permutation::parse_cycles(10, "(1 9)(2 4)(5 7)", true).unwrap()
    }

    #[test]
    fn printed_petersen_to_cousin_map_validates() {
        let (p, l) = (fixtures::petersen(), fixtures::lambda_cousin());
        assert!(is_tf_map(&p, &l, &Permutation::identity(10), &beta_from_printed()).unwrap());
        assert!(!is_tf_map(&p, &l, &Permutation::identity(10), &Permutation::identity(10)).unwrap());
    }

    #[test]
    fn diagonal_isomorphism_is_a_tf_map() {
        let g = fixtures::cycle(5).unwrap();
        let p = Permutation::parse_cycles(5, "(0 1 2 3 4)", false).unwrap();
        let h = g.relabel(&p).unwrap();
        assert!(is_tf_map(&g, &h, &p, &p).unwrap());
    }

    #[test]
    fn k2_transposition_with_identity_fails() {
        let k2 = fixtures::complete(2).unwrap();
        let t = Permutation::parse_cycles(2, "(0 1)", false).unwrap();
        assert!(!is_tf_map(&k2, &k2, &t, &Permutation::identity(2)).unwrap());
        assert!(matches!(
            is_tf_map(&k2, &k2, &t, &Permutation::identity(3)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn finds_maps_between_printed_graphs() {
        let (p, l) = (fixtures::petersen(), fixtures::lambda_cousin());
        let m = find_tf_isomorphism(&p, &l).unwrap().unwrap();
        assert!(is_tf_map(&p, &l, &m.alpha, &m.beta).unwrap());
        assert!(m.is_non_trivial());
    }

    #[test]
    fn alternating_hexagon_and_triangle_plus_isolated() {
        let g = fixtures::alternating_cycle(6).unwrap();
        let h = MixedGraph::from_edges(6, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = find_tf_isomorphism(&g, &h).unwrap().unwrap();
        assert!(is_tf_map(&g, &h, &m.alpha, &m.beta).unwrap());
        assert!(m.is_non_trivial());
    }

    #[test]
    fn connected_bipartite_and_non_bipartite_never_match() {
        let p6 = MixedGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let c6 = fixtures::cycle(6).unwrap();
        let k3_pendant = MixedGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(find_tf_isomorphism(&c6, &fixtures::complete(6).unwrap()).unwrap().is_none());
        assert!(find_tf_isomorphism(&p6, &k3_pendant).unwrap().is_none());
    }

    #[test]
    fn disconnected_bipartite_graph_can_match_non_bipartite_one() {
        // Both covers are two hexagons.
        let c6 = fixtures::cycle(6).unwrap();
        let two_k3 = MixedGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let m = find_tf_isomorphism(&c6, &two_k3).unwrap().unwrap();
        assert!(is_tf_map(&c6, &two_k3, &m.alpha, &m.beta).unwrap());
    }

    #[test]
    fn bipartite_path_has_a_non_diagonal_tf_automorphism() {
        let p3 = MixedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let swap = Permutation::parse_cycles(3, "(0 2)", false).unwrap();
        assert!(is_tf_map(&p3, &p3, &swap, &Permutation::identity(3)).unwrap());
        let group = tf_automorphism_group(&p3).unwrap();
        assert_eq!((group.order(), group.non_trivial_count()), (4, 2));
    }

    #[test]
    fn triangle_group_is_diagonal_by_brute_force() {
        let k3 = fixtures::complete(3).unwrap();
        let group = tf_automorphism_group(&k3).unwrap();
        assert_eq!(group.order(), 6);
        assert_eq!(group.non_trivial_count(), 0);
        let perms: Vec<Permutation> = [
            vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2],
            vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0],
        ]
        .into_iter()
        .map(|v| Permutation::from_images(v).unwrap())
        .collect();
        let mut brute = 0;
        for a in &perms {
            for b in &perms {
                if is_tf_map(&k3, &k3, a, b).unwrap() {
                    brute += 1;
                    assert_eq!(a, b);
                }
            }
        }
        assert_eq!(brute, 6);
    }

    #[test]
    fn petersen_and_cousin_groups() {
        let p = tf_automorphism_group(&fixtures::petersen()).unwrap();
        assert_eq!(p.order(), 120);
        assert_eq!(p.non_trivial_count(), 0);
        let l = tf_automorphism_group(&fixtures::lambda_cousin()).unwrap();
        assert_eq!(l.order(), 120);
        assert!(l.non_trivial_count() > 0);
        assert!(l.contains(&TfMap::identity(10)));
        for x in l.elements().iter().take(20) {
            for y in l.elements().iter().step_by(7) {
                assert!(l.contains(&x.compose(y)));
            }
            assert!(l.contains(&x.inverse()));
        }
    }

    #[test]
    fn neighbourhood_families() {
        let (p, l) = (fixtures::petersen(), fixtures::lambda_cousin());
        let fp = neighbourhood_family(&p).unwrap();
        assert_eq!(fp, neighbourhood_family(&l).unwrap());
        assert!(fp.contains(&BTreeSet::from([1, 4, 5])));
        assert_eq!(
            neighbourhood_family(&fixtures::complete(2).unwrap()).unwrap(),
            vec![BTreeSet::from([0]), BTreeSet::from([1])]
        );
        assert_eq!(
            neighbourhood_family(&fixtures::directed_path(2).unwrap()),
            Err(Error::NotAGraph)
        );
    }

    #[test]
    fn stability_reports() {
        let p = is_stable(&fixtures::petersen()).unwrap();
        assert!(p.stable);
        assert_eq!((p.aut_order, p.cdc_aut_order), (120, 240));
        let l = is_stable(&fixtures::lambda_cousin()).unwrap();
        assert!(!l.stable);
        assert_eq!((l.aut_order, l.tf_aut_order, l.index), (12, 120, 20));
        let k2 = is_stable(&fixtures::complete(2).unwrap()).unwrap();
        assert!(k2.stable);
        assert_eq!(k2.tf_aut_order, 2);
    }

    #[test]
    fn inverse_diagnostic() {
        let g = fixtures::directed_path(3).unwrap();
        let h = MixedGraph::new(3, [(1, 0), (2, 1)]).unwrap();
        assert!(tf_isomorphic_to_inverse(&g, &h).unwrap());
        let star_out = MixedGraph::new(3, [(0, 1), (0, 2)]).unwrap();
        let star_in = MixedGraph::new(3, [(1, 0), (2, 0)]).unwrap();
        assert!(find_tf_isomorphism(&star_out, &star_in).unwrap().is_none());
        assert!(tf_isomorphic_to_inverse(&star_out, &star_in).unwrap());
    }
}
