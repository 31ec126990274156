//! Backtracking isomorphism and automorphism search with colour constraints.
//!
//! Both graphs are coloured jointly and refined by in/out-neighbour colour
//! multisets until stable; colour ids are ranks of sorted signatures, so the
//! same id means the same thing on both sides. Branching individualises the
//! least vertex of the first non-singleton cell of the source graph against
//! every target vertex of that cell in ascending order, which makes the first
//! witness found deterministic.
//!
//! Automorphism groups are found as a strong generating set along the
//! leftmost branch (one coset representative per orbit point, with orbit
//! pruning) and only materialised on request, up to a cap.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::perm::Permutation;

/// Largest group that will be enumerated element by element.
pub const ENUMERATION_CAP: usize = 1_000_000;

type Colours = Vec<u32>;

struct Matcher<'a> {
    g: &'a MixedGraph,
    h: &'a MixedGraph,
}

impl<'a> Matcher<'a> {
    fn initial(g: &MixedGraph, colouring: Option<&[usize]>) -> Colours {
        (0..g.vertex_count())
            .map(|v| {
                let c = colouring.map_or(0, |c| c[v]) as u32;
                c * 2 + u32::from(g.has_arc(v, v))
            })
            .collect()
    }

    fn signatures(graph: &MixedGraph, colours: &Colours, out: &mut Vec<Vec<u32>>) {
        out.clear();
        for v in 0..graph.vertex_count() {
            let outs = graph.out_neighbours(v);
            let ins = graph.in_neighbours(v);
            let mut sig = Vec::with_capacity(2 + outs.len() + ins.len());
            sig.push(colours[v]);
            sig.push(outs.len() as u32);
            let start = sig.len();
            sig.extend(outs.iter().map(|&w| colours[w]));
            sig[start..].sort_unstable();
            let start = sig.len();
            sig.extend(ins.iter().map(|&w| colours[w]));
            sig[start..].sort_unstable();
            out.push(sig);
        }
    }

    /// Refines both colourings to a common equitable partition. Returns
    /// `false` as soon as the colour histograms disagree.
    fn refine(&self, a: &mut Colours, b: &mut Colours) -> bool {
        let mut sa = Vec::new();
        let mut sb = Vec::new();
        let mut cells = usize::MAX;
        loop {
            Self::signatures(self.g, a, &mut sa);
            Self::signatures(self.h, b, &mut sb);
            let mut all: Vec<&Vec<u32>> = sa.iter().chain(sb.iter()).collect();
            all.sort_unstable();
            all.dedup();
            let rank = |s: &Vec<u32>| all.binary_search(&s).expect("signature present") as u32;
            for (c, s) in a.iter_mut().zip(&sa) {
                *c = rank(s);
            }
            for (c, s) in b.iter_mut().zip(&sb) {
                *c = rank(s);
            }
            let mut ha = a.clone();
            let mut hb = b.clone();
            ha.sort_unstable();
            hb.sort_unstable();
            if ha != hb {
                return false;
            }
            ha.dedup();
            if ha.len() == cells {
                return true;
            }
            cells = ha.len();
        }
    }

    /// The lowest colour id held by more than one vertex of the source graph.
    fn target_cell(a: &Colours) -> Option<u32> {
        let mut counts = vec![0usize; a.len() + 1];
        for &c in a {
            counts[c as usize] += 1;
        }
        counts.iter().position(|&k| k > 1).map(|c| c as u32)
    }

    fn fresh_colour(a: &Colours) -> u32 {
        a.iter().copied().max().map_or(0, |m| m + 1)
    }

    fn leaf(&self, a: &Colours, b: &Colours) -> Option<Vec<usize>> {
        let n = a.len();
        let mut pos = vec![usize::MAX; n + 1];
        for (w, &c) in b.iter().enumerate() {
            pos[c as usize] = w;
        }
        let map: Vec<usize> = a.iter().map(|&c| pos[c as usize]).collect();
        let ok = self.g.arc_count() == self.h.arc_count()
            && self.g.arcs().iter().all(|x| self.h.has_arc(map[x.tail], map[x.head]));
        ok.then_some(map)
    }

    fn first(&self, mut a: Colours, mut b: Colours) -> Option<Vec<usize>> {
        if !self.refine(&mut a, &mut b) {
            return None;
        }
        let Some(cell) = Self::target_cell(&a) else {
            return self.leaf(&a, &b);
        };
        let v = a.iter().position(|&c| c == cell).expect("cell is non-empty");
        let fresh = Self::fresh_colour(&a);
        for w in (0..b.len()).filter(|&w| b[w] == cell) {
            let mut a2 = a.clone();
            let mut b2 = b.clone();
            a2[v] = fresh;
            b2[w] = fresh;
            if let Some(m) = self.first(a2, b2) {
                return Some(m);
            }
        }
        None
    }

    /// Walks the leftmost branch; at each level records one automorphism per
    /// orbit point not already reached, and multiplies `order` by the orbit
    /// length of the branching vertex.
    fn chain(&self, mut a: Colours, gens: &mut Vec<Permutation>, order: &mut u128) -> Result<()> {
        let mut b = a.clone();
        let ok = self.refine(&mut a, &mut b);
        debug_assert!(ok);
        let Some(cell) = Self::target_cell(&a) else {
            return Ok(());
        };
        let v = a.iter().position(|&c| c == cell).expect("cell is non-empty");
        let fresh = Self::fresh_colour(&a);
        let start = gens.len();
        let mut left = a.clone();
        left[v] = fresh;
        self.chain(left, gens, order)?;
        for w in (0..a.len()).filter(|&w| a[w] == cell && w != v) {
            if orbit(v, &gens[start..]).contains(&w) {
                continue;
            }
            let mut a2 = a.clone();
            let mut b2 = a.clone();
            a2[v] = fresh;
            b2[w] = fresh;
            if let Some(m) = self.first(a2, b2) {
                gens.push(Permutation::from_images_unchecked(m));
            }
        }
        let len = orbit(v, &gens[start..]).len() as u128;
        *order = order
            .checked_mul(len)
            .ok_or(Error::CapExceeded { cap: usize::MAX })?;
        Ok(())
    }
}

/// Orbit of `point` under the group generated by `gens`, in discovery order.
pub fn orbit(point: usize, gens: &[Permutation]) -> Vec<usize> {
    let mut seen = HashSet::from([point]);
    let mut out = vec![point];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if seen.insert(y) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

fn check_colouring(g: &MixedGraph, c: Option<&[usize]>) -> Result<()> {
    match c {
        Some(c) if c.len() != g.vertex_count() => Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            found: c.len(),
        }),
        _ => Ok(()),
    }
}

/// A bijection `p` with `(u, v) ∈ A(g) ⇔ (p(u), p(v)) ∈ A(h)`, respecting the
/// colouring pair when given (`colour_h[p(u)] == colour_g[u]`).
pub fn find_isomorphism(
    g: &MixedGraph,
    h: &MixedGraph,
    respect: Option<(&[usize], &[usize])>,
) -> Result<Option<Permutation>> {
    check_colouring(g, respect.map(|r| r.0))?;
    check_colouring(h, respect.map(|r| r.1))?;
    if g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count() {
        return Ok(None);
    }
    let m = Matcher { g, h };
    let a = Matcher::initial(g, respect.map(|r| r.0));
    let b = Matcher::initial(h, respect.map(|r| r.1));
    Ok(m.first(a, b).map(Permutation::from_images_unchecked))
}

pub fn are_isomorphic(g: &MixedGraph, h: &MixedGraph) -> bool {
    matches!(find_isomorphism(g, h, None), Ok(Some(_)))
}

/// Generating set and order of a colour-preserving automorphism group.
#[derive(Clone, Debug)]
pub struct AutomorphismSearch {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub order: u128,
}

/// Finds a strong generating set and the exact group order without
/// enumerating the group.
pub fn automorphisms(g: &MixedGraph, respect: Option<&[usize]>) -> Result<AutomorphismSearch> {
    check_colouring(g, respect)?;
    let m = Matcher { g, h: g };
    let mut generators = Vec::new();
    let mut order = 1u128;
    m.chain(Matcher::initial(g, respect), &mut generators, &mut order)?;
    Ok(AutomorphismSearch {
        degree: g.vertex_count(),
        generators,
        order,
    })
}

/// A fully enumerated permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Closes `generators` under composition. Elements come back sorted by
    /// their image arrays.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::SizeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in &generators {
                let y = s.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn involutions(&self) -> Vec<Permutation> {
        self.elements.iter().filter(|p| p.is_involution()).cloned().collect()
    }
}

pub fn automorphism_group(g: &MixedGraph, respect: Option<&[usize]>) -> Result<PermGroup> {
    automorphism_group_capped(g, respect, ENUMERATION_CAP)
}

pub fn automorphism_group_capped(
    g: &MixedGraph,
    respect: Option<&[usize]>,
    cap: usize,
) -> Result<PermGroup> {
    let search = automorphisms(g, respect)?;
    if search.order > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let group = PermGroup::generate(search.degree, search.generators, cap)?;
    debug_assert_eq!(group.order() as u128, search.order);
    Ok(group)
}

/// Involutions of `group` mapping every vertex to the opposite class of the
/// two-colouring `classes`.
pub fn class_swapping_involutions(group: &PermGroup, classes: &[u8]) -> Result<Vec<Permutation>> {
    if classes.len() != group.degree() {
        return Err(Error::SizeMismatch {
            expected: group.degree(),
            found: classes.len(),
        });
    }
    if classes.iter().any(|&c| c > 1) {
        return Err(Error::MalformedBipartition("colours must be 0 or 1".into()));
    }
    let mut out = Vec::new();
    for p in group.elements() {
        let preserves = (0..classes.len()).all(|v| classes[p.apply(v)] == classes[v]);
        let swaps = (0..classes.len()).all(|v| classes[p.apply(v)] != classes[v]);
        if !preserves && !swaps {
            return Err(Error::MalformedBipartition(format!(
                "{} neither preserves nor swaps the classes",
                p.cycle_notation(false)
            )));
        }
        if swaps && p.is_involution() {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// A partition of a conjugation-closed subset into conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClassSet {
    pub classes: Vec<Vec<Permutation>>,
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Splits `subset` into conjugacy classes of `group`. Each class is sorted
/// and classes are ordered by their least element.
pub fn conjugacy_classes(group: &PermGroup, subset: &[Permutation]) -> Result<ConjugacyClassSet> {
    let members: HashSet<&Permutation> = subset.iter().collect();
    let inverses: Vec<Permutation> = group.elements().iter().map(Permutation::inverse).collect();
    let mut assigned: HashSet<Permutation> = HashSet::new();
    let mut sorted: Vec<&Permutation> = members.iter().copied().collect();
    sorted.sort_unstable();
    let mut classes = Vec::new();
    for s in sorted {
        if assigned.contains(s) {
            continue;
        }
        let mut class: HashSet<Permutation> = HashSet::new();
        for (g, gi) in group.elements().iter().zip(&inverses) {
            let c = g.compose(s).compose(gi);
            if !members.contains(&c) {
                return Err(Error::NotConjugationClosed);
            }
            class.insert(c);
        }
        let mut class: Vec<Permutation> = class.into_iter().collect();
        class.sort_unstable();
        assigned.extend(class.iter().cloned());
        classes.push(class);
    }
    Ok(ConjugacyClassSet { classes })
}
