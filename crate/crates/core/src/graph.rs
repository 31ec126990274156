//! Mixed graphs: a vertex count plus a set of ordered arcs.
//!
//! Graphs (self-paired, loopless arc sets) and digraphs (no self-paired pair,
//! loopless) are both carried by [`MixedGraph`]; [`GraphKind`] tells them
//! apart. Loops and isolated vertices are representable.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Dense vertex label in `0..n`.
pub type Vertex = usize;

/// An ordered pair `(tail, head)`. `tail == head` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub const fn new(tail: Vertex, head: Vertex) -> Self {
        Arc { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn reversed(&self) -> Arc {
        Arc::new(self.head, self.tail)
    }
}

impl From<(Vertex, Vertex)> for Arc {
    fn from((tail, head): (Vertex, Vertex)) -> Self {
        Arc::new(tail, head)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// Loopless with a self-paired arc set.
    Graph,
    /// Loopless with no self-paired pair of arcs.
    Digraph,
    /// Anything else: loops, or edges mixed with lone arcs.
    ProperlyMixed,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Graph => "graph",
            GraphKind::Digraph => "digraph",
            GraphKind::ProperlyMixed => "properly-mixed",
        })
    }
}

/// A mixed graph on vertices `0..n`.
///
/// The arc set is stored sorted and deduplicated; adjacency lists and an
/// adjacency matrix are derived from it at construction and never mutated
/// afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    matrix: Vec<bool>,
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MixedGraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs)
            .finish()
    }
}

impl MixedGraph {
    /// Builds a mixed graph from arcs. Duplicate arcs collapse into one.
    pub fn new<I, A>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: Into<Arc>,
    {
        let mut set = BTreeSet::new();
        for a in arcs {
            let a = a.into();
            for v in [a.tail, a.head] {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            set.insert(a);
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    /// Builds a graph: every edge `{u, v}` contributes both arcs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut arcs = Vec::new();
        for (u, v) in edges {
            arcs.push(Arc::new(u, v));
            arcs.push(Arc::new(v, u));
        }
        Self::new(n, arcs)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: usize, arcs: Vec<Arc>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut matrix = vec![false; n * n];
        for a in &arcs {
            out[a.tail].push(a.head);
            inn[a.head].push(a.tail);
            matrix[a.tail * n + a.head] = true;
        }
        for list in inn.iter_mut() {
            list.sort_unstable();
        }
        MixedGraph {
            n,
            arcs,
            out,
            inn,
            matrix,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    #[inline]
    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        tail < self.n && head < self.n && self.matrix[tail * self.n + head]
    }

    pub fn contains(&self, a: Arc) -> bool {
        self.has_arc(a.tail, a.head)
    }

    /// Out-neighbours in ascending order.
    pub fn out_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    /// In-neighbours in ascending order.
    pub fn in_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// `(in_degree, out_degree)` of `v`. A loop counts once in each.
    pub fn degrees(&self, v: Vertex) -> Result<(usize, usize)> {
        self.check_vertex(v)?;
        Ok((self.inn[v].len(), self.out[v].len()))
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inn[v].len()
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.inn[v].is_empty()
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.out[v].is_empty()
    }

    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.is_source(v) && self.is_sink(v)
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(Arc::is_loop)
    }

    pub fn kind(&self) -> GraphKind {
        if self.has_loops() {
            return GraphKind::ProperlyMixed;
        }
        let paired = self
            .arcs
            .iter()
            .filter(|a| self.has_arc(a.head, a.tail))
            .count();
        if paired == self.arcs.len() {
            GraphKind::Graph
        } else if paired == 0 {
            GraphKind::Digraph
        } else {
            GraphKind::ProperlyMixed
        }
    }

    pub fn is_graph(&self) -> bool {
        self.kind() == GraphKind::Graph
    }

    /// Loopless graph with an edge `{x, y}` wherever `(x, y)` or `(y, x)` is an arc.
    pub fn underlying_graph(&self) -> MixedGraph {
        let edges = self
            .arcs
            .iter()
            .filter(|a| !a.is_loop())
            .map(|a| (a.tail, a.head));
        MixedGraph::from_edges(self.n, edges).expect("endpoints already validated")
    }

    /// Reverses every arc.
    pub fn inverse(&self) -> MixedGraph {
        MixedGraph::new(self.n, self.arcs.iter().map(Arc::reversed))
            .expect("endpoints already validated")
    }

    /// Image of the graph under a vertex relabelling: arc `(u, v)` becomes
    /// `(p(u), p(v))`.
    pub fn relabel(&self, p: &Permutation) -> Result<MixedGraph> {
        if p.degree() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: p.degree(),
            });
        }
        MixedGraph::new(
            self.n,
            self.arcs.iter().map(|a| Arc::new(p.apply(a.tail), p.apply(a.head))),
        )
    }

    /// Image under a pair of maps: arc `(u, v)` becomes `(alpha(u), beta(v))`.
    pub fn two_fold_image(&self, alpha: &Permutation, beta: &Permutation) -> Result<MixedGraph> {
        for p in [alpha, beta] {
            if p.degree() != self.n {
                return Err(Error::SizeMismatch {
                    expected: self.n,
                    found: p.degree(),
                });
            }
        }
        MixedGraph::new(
            self.n,
            self.arcs
                .iter()
                .map(|a| Arc::new(alpha.apply(a.tail), beta.apply(a.head))),
        )
    }

    /// Subgraph induced on `vertices`, relabelled densely in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> MixedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| index[a.tail] != usize::MAX && index[a.head] != usize::MAX)
            .map(|a| Arc::new(index[a.tail], index[a.head]));
        MixedGraph::new(vertices.len(), arcs).expect("indices are dense")
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// their least vertex. Isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.out[v].iter().chain(self.inn[v].iter()) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Connected in the sense of the underlying graph. The empty graph on
    /// zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A two-colouring of the underlying graph (loops forbid one), with the
    /// least vertex of every component coloured 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        if self.has_loops() {
            return None;
        }
        let mut colour = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.out[v].iter().chain(self.inn[v].iter()) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

pub fn classify(g: &MixedGraph) -> GraphKind {
    g.kind()
}

pub fn underlying_graph(g: &MixedGraph) -> MixedGraph {
    g.underlying_graph()
}

pub fn inverse(g: &MixedGraph) -> MixedGraph {
    g.inverse()
}

pub fn degrees(g: &MixedGraph, v: Vertex) -> Result<(usize, usize)> {
    g.degrees(v)
}
