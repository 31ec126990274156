//! Double covers of mixed graphs and their inversion by involution quotients.
//!
//! Cover vertex `(u, s)` lives at index `s * n + u`, so side 0 occupies
//! `0..n` and side 1 occupies `n..2n`.

use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::{Arc, MixedGraph, Vertex};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverVertex {
    pub base: Vertex,
    pub side: u8,
}

impl CoverVertex {
    pub fn index(&self, n: usize) -> usize {
        self.side as usize * n + self.base
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        CoverVertex {
            base: index % n,
            side: (index / n) as u8,
        }
    }
}

impl fmt::Display for CoverVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.base, self.side)
    }
}

/// Side labels of the `2n` vertices of a double cover.
pub fn side_colouring(n: usize) -> Vec<u8> {
    (0..2 * n).map(|i| (i / n.max(1)) as u8).collect()
}

/// Incidence double cover: a bipartite graph on all `2n` cover vertices,
/// isolated ones included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteCover {
    base_n: usize,
    graph: MixedGraph,
}

impl BipartiteCover {
    pub fn base_vertex_count(&self) -> usize {
        self.base_n
    }

    /// The cover as a graph on `2n` vertices.
    pub fn graph(&self) -> &MixedGraph {
        &self.graph
    }

    pub fn sides(&self) -> Vec<u8> {
        side_colouring(self.base_n)
    }

    pub fn vertex(&self, index: usize) -> CoverVertex {
        CoverVertex::from_index(index, self.base_n)
    }

    /// Edges as `(side-0 vertex, side-1 vertex)` pairs.
    pub fn edges(&self) -> Vec<(CoverVertex, CoverVertex)> {
        let n = self.base_n;
        self.graph
            .arcs()
            .iter()
            .filter(|a| a.tail < n)
            .map(|a| (self.vertex(a.tail), self.vertex(a.head)))
            .collect()
    }

    pub fn isolated(&self) -> Vec<CoverVertex> {
        (0..2 * self.base_n)
            .filter(|&i| self.graph.is_isolated(i))
            .map(|i| self.vertex(i))
            .collect()
    }
}

pub fn idc(g: &MixedGraph) -> BipartiteCover {
    let n = g.vertex_count();
    let edges = g.arcs().iter().map(|a| (a.tail, n + a.head));
    BipartiteCover {
        base_n: n,
        graph: MixedGraph::from_edges(2 * n, edges).expect("cover indices in range"),
    }
}

/// Alternating double cover: arcs `(u_0, v_1)` with isolated cover vertices
/// dropped. Present vertices are listed side 0 first, each side by base
/// vertex, and the digraph is indexed in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongBipartiteDigraph {
    vertices: Vec<CoverVertex>,
    digraph: MixedGraph,
    components: Vec<Vec<usize>>,
}

impl StrongBipartiteDigraph {
    pub fn vertices(&self) -> &[CoverVertex] {
        &self.vertices
    }

    pub fn as_mixed(&self) -> &MixedGraph {
        &self.digraph
    }

    pub fn sides(&self) -> Vec<u8> {
        self.vertices.iter().map(|v| v.side).collect()
    }

    /// Weak components `D_1..D_k` as lists of vertex indices, ordered by
    /// least member.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Cover-vertex names such as `3_0`, for DOT labels.
    pub fn labels(&self) -> Vec<String> {
        self.vertices.iter().map(ToString::to_string).collect()
    }
}

pub fn adc(g: &MixedGraph) -> StrongBipartiteDigraph {
    let n = g.vertex_count();
    let mut vertices: Vec<CoverVertex> = (0..n)
        .filter(|&u| g.out_degree(u) > 0)
        .map(|base| CoverVertex { base, side: 0 })
        .collect();
    vertices.extend(
        (0..n)
            .filter(|&v| g.in_degree(v) > 0)
            .map(|base| CoverVertex { base, side: 1 }),
    );
    let mut index = vec![usize::MAX; 2 * n];
    for (i, v) in vertices.iter().enumerate() {
        index[v.index(n)] = i;
    }
    let arcs: Vec<Arc> = g
        .arcs()
        .iter()
        .map(|a| Arc::new(index[a.tail], index[n + a.head]))
        .collect();
    let mut uf = UnionFind::<usize>::new(vertices.len());
    for a in &arcs {
        uf.union(a.tail, a.head);
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for v in 0..vertices.len() {
        by_root[uf.find(v)].push(v);
    }
    let mut components: Vec<Vec<usize>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
    components.sort_unstable_by_key(|c| c[0]);
    StrongBipartiteDigraph {
        digraph: MixedGraph::new(vertices.len(), arcs).expect("indices in range"),
        vertices,
        components,
    }
}

/// Canonical double cover `G × K_2`: an arc from `(u, i)` to `(v, j)` iff
/// `i != j` and `(u, v)` is an arc.
pub fn cdc(g: &MixedGraph) -> MixedGraph {
    let n = g.vertex_count();
    let arcs = g
        .arcs()
        .iter()
        .flat_map(|a| [(a.tail, n + a.head), (n + a.tail, a.head)]);
    MixedGraph::new(2 * n, arcs).expect("cover indices in range")
}

/// A digraph whose non-isolated vertices are all pure sources or pure sinks.
pub fn is_strongly_bipartite(d: &MixedGraph) -> bool {
    d.arcs()
        .iter()
        .all(|a| d.is_source(a.tail) && d.is_sink(a.head))
}

/// Quotient of a connected bipartite `h` by a class-swapping involutory
/// automorphism `sigma`.
///
/// Orbits `{u, sigma(u)}` become vertices, numbered by their least member.
/// Each orbit is represented by its member in the colour class of vertex 0,
/// and `([x], [y])` is an arc iff `(rep(x), sigma(rep(y)))` is an arc of `h`.
/// The canonical double cover of the result is isomorphic to `h`.
pub fn quotient_by_involution(h: &MixedGraph, sigma: &Permutation) -> Result<MixedGraph> {
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    let classes = h.bipartition().ok_or(Error::NotBipartite)?;
    quotient_with_classes(h, &classes, sigma)
}

/// As [`quotient_by_involution`], with the two-colouring supplied; `h` may
/// then be disconnected. Representatives come from the class of vertex 0.
pub fn quotient_with_classes(h: &MixedGraph, classes: &[u8], sigma: &Permutation) -> Result<MixedGraph> {
    let n = h.vertex_count();
    if sigma.degree() != n || classes.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: sigma.degree().min(classes.len()),
        });
    }
    if !sigma.is_involution() {
        return Err(Error::InvalidInvolution("not an involution".into()));
    }
    if (0..n).any(|v| classes[sigma.apply(v)] == classes[v]) {
        return Err(Error::InvalidInvolution(
            "does not interchange the colour classes".into(),
        ));
    }
    if h.relabel(sigma)? != *h {
        return Err(Error::InvalidInvolution("not an automorphism".into()));
    }
    let reference = classes.first().copied().unwrap_or(0);
    let mut orbit_id = vec![usize::MAX; n];
    let mut reps = Vec::with_capacity(n / 2);
    for v in 0..n {
        if orbit_id[v] != usize::MAX {
            continue;
        }
        let w = sigma.apply(v);
        orbit_id[v] = reps.len();
        orbit_id[w] = reps.len();
        reps.push(if classes[v] == reference { v } else { w });
    }
    let mut arcs = Vec::new();
    for (x, &rx) in reps.iter().enumerate() {
        for &t in h.out_neighbours(rx) {
            let y = orbit_id[t];
            debug_assert_eq!(sigma.apply(reps[y]), t);
            arcs.push((x, y));
        }
    }
    MixedGraph::new(reps.len(), arcs)
}
