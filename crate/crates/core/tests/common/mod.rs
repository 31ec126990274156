#![allow(dead_code)]

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use twofold::iso::are_isomorphic;
use twofold::{Arc, MixedGraph, Permutation};

pub fn permutations(n: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                extend(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labelled loopless graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<MixedGraph> {
    let slots = pairs(n);
    (0u32..1 << slots.len())
        .map(|mask| {
            let edges = slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            MixedGraph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// One graph per isomorphism class among `graphs`.
pub fn up_to_isomorphism(graphs: impl IntoIterator<Item = MixedGraph>) -> Vec<MixedGraph> {
    let mut buckets: HashMap<Vec<(usize, usize)>, Vec<MixedGraph>> = HashMap::new();
    let mut reps = Vec::new();
    for g in graphs {
        let mut key: Vec<(usize, usize)> = (0..g.vertex_count()).map(|v| (g.out_degree(v), g.in_degree(v))).collect();
        key.sort_unstable();
        let bucket = buckets.entry(key).or_default();
        if !bucket.iter().any(|h| are_isomorphic(h, &g)) {
            bucket.push(g.clone());
            reps.push(g);
        }
    }
    reps
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> MixedGraph {
    MixedGraph::from_edges(n, pairs(n).into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

/// Random spanning tree plus independent extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> MixedGraph {
    let order = random_perm(rng, n);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|i| (order.apply(rng.gen_range(0..i)), order.apply(i)))
        .collect();
    edges.extend(pairs(n).into_iter().filter(|_| rng.gen_bool(p)));
    MixedGraph::from_edges(n, edges).unwrap()
}

/// Each ordered pair is an arc with probability `p`; loops only if `loops`.
pub fn random_mixed<R: Rng>(rng: &mut R, n: usize, p: f64, loops: bool) -> MixedGraph {
    let arcs: Vec<Arc> = (0..n)
        .flat_map(|u| (0..n).map(move |v| Arc::new(u, v)))
        .filter(|a| loops || !a.is_loop())
        .filter(|_| rng.gen_bool(p))
        .collect();
    MixedGraph::new(n, arcs).unwrap()
}

/// Sources first, then sinks; every vertex gets at least one arc.
pub fn random_strongly_bipartite<R: Rng>(rng: &mut R, max_n: usize, p: f64) -> MixedGraph {
    let n = rng.gen_range(2..=max_n);
    let s = rng.gen_range(1..n);
    let mut arcs: Vec<(usize, usize)> = (0..s)
        .flat_map(|u| (s..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    for u in 0..s {
        arcs.push((u, rng.gen_range(s..n)));
    }
    for v in s..n {
        arcs.push((rng.gen_range(0..s), v));
    }
    let g = MixedGraph::new(n, arcs).unwrap();
    g.relabel(&random_perm(rng, n)).unwrap()
}

fn maps_arcs(g: &MixedGraph, h: &MixedGraph, alpha: &Permutation, beta: &Permutation) -> bool {
    g.arcs().iter().all(|a| h.has_arc(alpha.apply(a.tail), beta.apply(a.head)))
}

/// Exhaustive isomorphism search.
pub fn brute_isomorphism(g: &MixedGraph, h: &MixedGraph) -> Option<Permutation> {
    if g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count() {
        return None;
    }
    permutations(g.vertex_count()).into_iter().find(|p| maps_arcs(g, h, p, p))
}

/// Every pair `(alpha, beta)` with `(u,v)` an arc of `g` iff
/// `(alpha(u), beta(v))` is an arc of `h`.
pub fn brute_tf_isomorphisms(g: &MixedGraph, h: &MixedGraph) -> Vec<(Permutation, Permutation)> {
    if g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count() {
        return Vec::new();
    }
    let perms = permutations(g.vertex_count());
    let mut out = Vec::new();
    for a in &perms {
        for b in &perms {
            if maps_arcs(g, h, a, b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

pub fn brute_tf_isomorphic(g: &MixedGraph, h: &MixedGraph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count() {
        return false;
    }
    let perms = permutations(g.vertex_count());
    perms.iter().any(|a| perms.iter().any(|b| maps_arcs(g, h, a, b)))
}
