//! Alternating trails, A-connectivity, the arc relation R and frontier
//! vertices.
//!
//! An A-trail is a sequence of distinct arcs in which consecutive arcs share a
//! head or share a tail, the shared end switching at every step. Read as a
//! walk `x0, x1, ..., xk`, the arcs are traversed forwards and backwards in
//! turn.

use std::collections::VecDeque;
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::{Arc, MixedGraph, Vertex};
use crate::tfiso::{is_tf_map, TfMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrailClass {
    NotATrail,
    Open,
    Closed,
    SemiClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrailKind {
    Open,
    Closed,
    SemiClosed,
}

impl fmt::Display for TrailKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrailKind::Open => "open",
            TrailKind::Closed => "closed",
            TrailKind::SemiClosed => "semi-closed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ATrail {
    arcs: Vec<Arc>,
    kind: TrailKind,
    first: Vertex,
    last: Vertex,
}

impl ATrail {
    /// Validates `arcs` as an A-trail of `g`.
    pub fn new(g: &MixedGraph, arcs: Vec<Arc>) -> Result<Self> {
        if arcs.iter().any(|&a| a.tail >= g.vertex_count() || a.head >= g.vertex_count() || !g.contains(a)) {
            return Err(Error::NotATrail);
        }
        let (first, last) = endpoints(&arcs).ok_or(Error::NotATrail)?;
        let kind = if first != last {
            TrailKind::Open
        } else if arcs.len().is_multiple_of(2) {
            TrailKind::Closed
        } else {
            TrailKind::SemiClosed
        };
        Ok(ATrail { arcs, kind, first, last })
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn kind(&self) -> TrailKind {
        self.kind
    }

    pub fn first(&self) -> Vertex {
        self.first
    }

    pub fn last(&self) -> Vertex {
        self.last
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// First and last vertex of an alternating arc sequence, or `None` when the
/// sequence is empty, repeats an arc or breaks the alternation.
fn endpoints(arcs: &[Arc]) -> Option<(Vertex, Vertex)> {
    let (&a1, &ak) = (arcs.first()?, arcs.last()?);
    if arcs.len() == 1 {
        return Some((a1.tail, a1.head));
    }
    let mut seen = arcs.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    // true: the pair meets at a shared head.
    let mut joints = Vec::with_capacity(arcs.len() - 1);
    for w in arcs.windows(2) {
        let head = w[0].head == w[1].head;
        let tail = w[0].tail == w[1].tail;
        if head == tail {
            return None;
        }
        joints.push(head);
    }
    if joints.windows(2).any(|j| j[0] == j[1]) {
        return None;
    }
    let first = if joints[0] { a1.tail } else { a1.head };
    let last = if joints[joints.len() - 1] { ak.tail } else { ak.head };
    Some((first, last))
}

pub fn classify_trail(g: &MixedGraph, arcs: &[Arc]) -> TrailClass {
    match ATrail::new(g, arcs.to_vec()) {
        Err(_) => TrailClass::NotATrail,
        Ok(t) => match t.kind {
            TrailKind::Open => TrailClass::Open,
            TrailKind::Closed => TrailClass::Closed,
            TrailKind::SemiClosed => TrailClass::SemiClosed,
        },
    }
}

/// Image of `t` under a TF-isomorphism `m` from `g` to `h`.
pub fn apply_tf_to_trail(g: &MixedGraph, h: &MixedGraph, m: &TfMap, t: &ATrail) -> Result<ATrail> {
    if !is_tf_map(g, h, &m.alpha, &m.beta)? {
        return Err(Error::NotTfMap);
    }
    let arcs = t
        .arcs
        .iter()
        .map(|a| Arc::new(m.alpha.apply(a.tail), m.beta.apply(a.head)))
        .collect();
    ATrail::new(h, arcs)
}

/// Every A-trail of `g` with at most `max_arcs` arcs, as arc sequences.
/// Exponential; meant for small graphs.
pub fn enumerate_a_trails(g: &MixedGraph, max_arcs: usize) -> Vec<ATrail> {
    let mut out = Vec::new();
    let mut used = vec![false; g.arc_count()];
    let mut path = Vec::new();
    for (i, &a) in g.arcs().iter().enumerate() {
        used[i] = true;
        path.push(a);
        out.push(ATrail::new(g, path.clone()).expect("single arc"));
        // Second arc shares the head (true) or the tail (false).
        for at_head in [true, false] {
            extend(g, max_arcs, at_head, &mut used, &mut path, &mut out);
        }
        path.pop();
        used[i] = false;
    }
    out
}

fn extend(
    g: &MixedGraph,
    max_arcs: usize,
    at_head: bool,
    used: &mut [bool],
    path: &mut Vec<Arc>,
    out: &mut Vec<ATrail>,
) {
    if path.len() >= max_arcs {
        return;
    }
    let last = *path.last().expect("non-empty");
    let candidates: Vec<Arc> = if at_head {
        g.in_neighbours(last.head).iter().map(|&t| Arc::new(t, last.head)).collect()
    } else {
        g.out_neighbours(last.tail).iter().map(|&h| Arc::new(last.tail, h)).collect()
    };
    for a in candidates {
        let i = g.arcs().binary_search(&a).expect("arc of g");
        if used[i] {
            continue;
        }
        used[i] = true;
        path.push(a);
        out.push(ATrail::new(g, path.clone()).expect("built by alternation"));
        extend(g, max_arcs, !at_head, used, path, out);
        path.pop();
        used[i] = false;
    }
}

/// Whether every pair of distinct vertices is joined by an A-trail.
pub fn is_a_connected(g: &MixedGraph) -> bool {
    (0..g.vertex_count()).all(|u| {
        let reach = alternating_reach(g, u);
        (u + 1..g.vertex_count()).all(|v| reach[v])
    })
}

/// Vertices reachable from `u` by a non-empty alternating walk. A shortest
/// such walk never repeats a (vertex, direction) state, hence never repeats
/// an arc, so it is an A-trail.
fn alternating_reach(g: &MixedGraph, u: Vertex) -> Vec<bool> {
    let n = g.vertex_count();
    // state 2v: next arc leaves v; 2v + 1: next arc enters v.
    let mut seen = vec![false; 2 * n];
    let mut reach = vec![false; n];
    let mut queue = VecDeque::from([2 * u, 2 * u + 1]);
    seen[2 * u] = true;
    seen[2 * u + 1] = true;
    while let Some(s) = queue.pop_front() {
        let (v, forward) = (s / 2, s % 2 == 0);
        let (next, flip) = if forward {
            (g.out_neighbours(v), 1)
        } else {
            (g.in_neighbours(v), 0)
        };
        for &w in next {
            reach[w] = true;
            let t = 2 * w + flip;
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    reach
}

/// Equivalence classes of R together with the frontier vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcPartition {
    classes: Vec<Vec<Arc>>,
    frontier: Vec<Vertex>,
}

impl ArcPartition {
    /// Classes ordered by their least arc; arcs within a class sorted.
    pub fn classes(&self) -> &[Vec<Arc>] {
        &self.classes
    }

    pub fn frontier(&self) -> &[Vertex] {
        &self.frontier
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn frontier_count(&self) -> usize {
        self.frontier.len()
    }

    /// Index of the class holding `a`, if `a` is an arc of the graph.
    pub fn class_of(&self, a: Arc) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&a).is_ok())
    }
}

/// Arcs are related when they share a tail or share a head; classes are the
/// connected components of that relation.
pub fn arc_classes(g: &MixedGraph) -> ArcPartition {
    let arcs = g.arcs();
    let index = |a: Arc| arcs.binary_search(&a).expect("arc of g");
    let mut uf = UnionFind::<usize>::new(arcs.len());
    for v in 0..g.vertex_count() {
        let out: Vec<usize> = g.out_neighbours(v).iter().map(|&h| index(Arc::new(v, h))).collect();
        let inn: Vec<usize> = g.in_neighbours(v).iter().map(|&t| index(Arc::new(t, v))).collect();
        for group in [out, inn] {
            for w in group.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut class_id = vec![usize::MAX; arcs.len()];
    let mut classes: Vec<Vec<Arc>> = Vec::new();
    for (i, &a) in arcs.iter().enumerate() {
        let root = labels[i];
        if class_id[root] == usize::MAX {
            class_id[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[class_id[root]].push(a);
    }
    let class_index = |a: Arc| class_id[labels[index(a)]];
    let frontier = (0..g.vertex_count())
        .filter(|&v| {
            let out = g.out_neighbours(v).first().map(|&h| class_index(Arc::new(v, h)));
            let inn = g.in_neighbours(v).first().map(|&t| class_index(Arc::new(t, v)));
            matches!((out, inn), (Some(x), Some(y)) if x != y)
        })
        .collect();
    ArcPartition { classes, frontier }
}

pub fn frontier_vertices(g: &MixedGraph) -> Vec<Vertex> {
    arc_classes(g).frontier
}

/// A mixed graph whose relation R has `m` classes and `k` frontier vertices.
///
/// `k = m - 1` gives a directed path with `m` arcs and `k = m` a directed
/// cycle. For `k > m` the graph is a star `K_{1, k-m+1}` whose centre has an
/// extra arc into a chain of `m - 2` triangle gadgets. A single class never
/// has a frontier vertex, so `m = 1` admits only `k = 0`.
pub fn construct_with_classes(m: usize, k: usize) -> Result<MixedGraph> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    if k + 1 < m {
        return Err(Error::InvalidParameter(format!(
            "no mixed graph has {m} classes and only {k} frontier vertices (needs m - 1 <= k)"
        )));
    }
    if m == 1 && k > 0 {
        return Err(Error::InvalidParameter(format!(
            "a single class has no frontier vertices, so (1, {k}) is not realisable"
        )));
    }
    let g = if k + 1 == m {
        crate::fixtures::directed_path(m + 1)?
    } else if k == m {
        crate::fixtures::directed_cycle(m)?
    } else {
        gadget_chain(m, k)?
    };
    let p = arc_classes(&g);
    debug_assert_eq!((p.class_count(), p.frontier_count()), (m, k));
    Ok(g)
}

fn gadget_chain(m: usize, k: usize) -> Result<MixedGraph> {
    let star = k - m + 2;
    let a = |i: usize| star + i - 1;
    let bcd = |i: usize, j: usize| star + (m - 1) + 3 * (i - 1) + j;
    let n = star + (m - 1) + 3 * (m - 2);
    let mut arcs = Vec::new();
    for leaf in 1..star {
        arcs.extend([(0, leaf), (leaf, 0)]);
    }
    arcs.push((0, a(1)));
    for i in 1..=m - 2 {
        let (b, c, d) = (bcd(i, 0), bcd(i, 1), bcd(i, 2));
        arcs.extend([(b, c), (c, b), (c, d), (d, c), (b, d), (d, b)]);
        arcs.extend([(a(i), b), (d, a(i + 1))]);
    }
    MixedGraph::new(n, arcs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Parities {
    pub odd: bool,
    pub even: bool,
}

impl fmt::Display for Parities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.odd, self.even) {
            (true, true) => f.write_str("{odd, even}"),
            (true, false) => f.write_str("{odd}"),
            (false, true) => f.write_str("{even}"),
            (false, false) => f.write_str("{}"),
        }
    }
}

/// Parities of the lengths of the trails (edge-distinct walks) whose first
/// edge is `e1` and last edge is `e2`; lengths count both end edges.
/// Exhaustive search, exponential in the worst case.
pub fn trail_parities(g: &MixedGraph, e1: (Vertex, Vertex), e2: (Vertex, Vertex)) -> Result<Parities> {
    if !g.is_graph() {
        return Err(Error::NotAGraph);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let norm = |(x, y): (Vertex, Vertex)| (x.min(y), x.max(y));
    let (e1, e2) = (norm(e1), norm(e2));
    for e in [e1, e2] {
        if e.1 >= g.vertex_count() || !g.has_arc(e.0, e.1) {
            return Err(Error::InvalidParameter(format!("{{{}, {}}} is not an edge", e.0, e.1)));
        }
    }
    if e1 == e2 {
        return Err(Error::InvalidParameter("the two edges must differ".into()));
    }
    let edges: Vec<(Vertex, Vertex)> = g
        .arcs()
        .iter()
        .filter(|a| a.tail < a.head)
        .map(|a| (a.tail, a.head))
        .collect();
    let id = |e: (Vertex, Vertex)| edges.binary_search(&norm(e)).expect("edge");
    let mut search = TrailSearch {
        g,
        id: &id,
        target: id(e2),
        used: vec![false; edges.len()],
        found: Parities::default(),
    };
    search.used[id(e1)] = true;
    search.walk(e1.1, 1);
    search.walk(e1.0, 1);
    Ok(search.found)
}

struct TrailSearch<'a, F: Fn((Vertex, Vertex)) -> usize> {
    g: &'a MixedGraph,
    id: &'a F,
    target: usize,
    used: Vec<bool>,
    found: Parities,
}

impl<F: Fn((Vertex, Vertex)) -> usize> TrailSearch<'_, F> {
    fn walk(&mut self, v: Vertex, len: usize) {
        if self.found.odd && self.found.even {
            return;
        }
        for &w in self.g.out_neighbours(v) {
            let e = (self.id)((v, w));
            if self.used[e] {
                continue;
            }
            if e == self.target {
                if (len + 1).is_multiple_of(2) {
                    self.found.even = true;
                } else {
                    self.found.odd = true;
                }
                continue;
            }
            self.used[e] = true;
            self.walk(w, len + 1);
            self.used[e] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn arcs(list: &[(usize, usize)]) -> Vec<Arc> {
        list.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn classification_examples() {
        let g = fixtures::alternating_cycle(6).unwrap();
        assert_eq!(classify_trail(&g, &arcs(&[(0, 1)])), TrailClass::Open);
        let six = arcs(&[(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)]);
        assert_eq!(classify_trail(&g, &six), TrailClass::Closed);
        let p = fixtures::directed_path(3).unwrap();
        assert_eq!(classify_trail(&p, &arcs(&[(0, 1), (1, 2)])), TrailClass::NotATrail);
        assert_eq!(classify_trail(&g, &arcs(&[(0, 1), (0, 1)])), TrailClass::NotATrail);
        assert_eq!(classify_trail(&g, &arcs(&[(1, 0)])), TrailClass::NotATrail);
        assert_eq!(classify_trail(&g, &[]), TrailClass::NotATrail);
    }

    #[test]
    fn alternation_must_switch_sides() {
        // Three arcs out of one vertex share tails twice in a row.
        let star = MixedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(classify_trail(&star, &arcs(&[(0, 1), (0, 2)])), TrailClass::Open);
        assert_eq!(classify_trail(&star, &arcs(&[(0, 1), (0, 2), (0, 3)])), TrailClass::NotATrail);
    }

    #[test]
    fn semi_closed_triangle() {
        let k3 = fixtures::complete(3).unwrap();
        let t = ATrail::new(&k3, arcs(&[(0, 1), (2, 1), (2, 0)])).unwrap();
        assert_eq!((t.kind(), t.first(), t.last()), (TrailKind::SemiClosed, 0, 0));
    }

    #[test]
    fn identity_map_fixes_trails() {
        let g = fixtures::alternating_cycle(6).unwrap();
        let t = ATrail::new(&g, arcs(&[(0, 1), (2, 1), (2, 3)])).unwrap();
        let image = apply_tf_to_trail(&g, &g, &TfMap::identity(6), &t).unwrap();
        assert_eq!(image, t);
        let bad = TfMap::new(
            crate::Permutation::parse_cycles(6, "(0 1)", false).unwrap(),
            crate::Permutation::identity(6),
        )
        .unwrap();
        assert_eq!(apply_tf_to_trail(&g, &g, &bad, &t), Err(Error::NotTfMap));
    }

    #[test]
    fn a_connectivity() {
        assert!(is_a_connected(&fixtures::cycle(5).unwrap()));
        assert!(is_a_connected(&fixtures::alternating_cycle(6).unwrap()));
        assert!(!is_a_connected(&fixtures::directed_path(3).unwrap()));
        assert!(is_a_connected(&fixtures::directed_path(2).unwrap()));
        let k3_plus = MixedGraph::from_edges(6, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_a_connected(&k3_plus));
    }

    fn brute_a_connected(g: &MixedGraph) -> bool {
        let trails = enumerate_a_trails(g, g.arc_count());
        let n = g.vertex_count();
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                trails
                    .iter()
                    .any(|t| (t.first(), t.last()) == (u, v) || (t.first(), t.last()) == (v, u))
            })
        })
    }

    #[test]
    fn a_connectivity_matches_trail_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..6);
            let arcs: Vec<(usize, usize)> = (0..rng.gen_range(1..9))
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let g = MixedGraph::new(n, arcs).unwrap();
            assert_eq!(is_a_connected(&g), brute_a_connected(&g), "{g:?}");
        }
    }

    #[test]
    fn class_examples() {
        let k3 = arc_classes(&fixtures::complete(3).unwrap());
        assert_eq!((k3.class_count(), k3.frontier_count()), (1, 0));
        let c4 = arc_classes(&fixtures::cycle(4).unwrap());
        assert_eq!(c4.class_count(), 2);
        assert_eq!(c4.frontier(), &[0, 1, 2, 3]);
        let p = arc_classes(&fixtures::directed_path(4).unwrap());
        assert_eq!(p.class_count(), 3);
        assert!(p.classes().iter().all(|c| c.len() == 1));
        assert_eq!(p.class_of(Arc::new(1, 2)), Some(1));
        assert!(frontier_vertices(&fixtures::complete(3).unwrap()).is_empty());
    }

    #[test]
    fn classes_match_adc_components() {
        for g in [fixtures::petersen(), fixtures::desargues(), fixtures::directed_cycle(5).unwrap()] {
            assert_eq!(arc_classes(&g).class_count(), crate::covers::adc(&g).component_count());
        }
    }

    #[test]
    fn constructions() {
        let g = construct_with_classes(4, 6).unwrap();
        let p = arc_classes(&g);
        assert_eq!((p.class_count(), p.frontier_count()), (4, 6));
        let path = construct_with_classes(3, 2).unwrap();
        assert_eq!(path, fixtures::directed_path(4).unwrap());
        let g = construct_with_classes(3, 5).unwrap();
        assert_eq!(arc_classes(&g).class_count(), 3);
        assert_eq!(frontier_vertices(&g).len(), 5);
        assert!(construct_with_classes(4, 1).is_err());
        assert!(construct_with_classes(1, 1).is_err());
        assert_eq!(construct_with_classes(1, 0).unwrap().arc_count(), 1);
    }

    #[test]
    fn parity_examples() {
        let k3 = fixtures::complete(3).unwrap();
        assert_eq!(trail_parities(&k3, (0, 1), (1, 2)).unwrap(), Parities { odd: true, even: true });
        let p3 = MixedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(trail_parities(&p3, (0, 1), (2, 1)).unwrap(), Parities { odd: false, even: true });
        let c4 = fixtures::cycle(4).unwrap();
        assert_eq!(trail_parities(&c4, (0, 1), (2, 3)).unwrap(), Parities { odd: true, even: false });
        assert!(trail_parities(&k3, (0, 1), (1, 0)).is_err());
        assert!(trail_parities(&p3, (0, 2), (0, 1)).is_err());
    }

    #[test]
    fn pendant_path_on_a_triangle_sees_one_parity() {
        // Triangle 0 1 2 with the path 2 - 3 - 4 hanging off vertex 2.
        let g = MixedGraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!g.is_bipartite());
        assert_eq!(trail_parities(&g, (2, 3), (3, 4)).unwrap(), Parities { odd: false, even: true });
        assert_eq!(trail_parities(&g, (0, 1), (3, 4)).unwrap(), Parities { odd: false, even: true });
        assert_eq!(trail_parities(&g, (0, 1), (1, 2)).unwrap(), Parities { odd: true, even: true });
    }
}
