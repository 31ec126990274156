//! Named graphs used throughout the tests and the CLI.

use crate::error::{Error, Result};
use crate::graph::MixedGraph;

/// Neighbourhoods of the Petersen graph, one-based, vertex `i + 1` first.
const PETERSEN_NEIGHBOURHOODS: [[usize; 3]; 10] = [
    [2, 5, 6],
    [1, 3, 7],
    [2, 4, 8],
    [3, 5, 9],
    [1, 4, 10],
    [1, 8, 9],
    [2, 9, 10],
    [3, 6, 10],
    [4, 6, 7],
    [5, 7, 8],
];

/// Neighbourhoods of the graph sharing Petersen's neighbourhood family.
const LAMBDA_NEIGHBOURHOODS: [[usize; 3]; 10] = [
    [4, 6, 7],
    [3, 5, 9],
    [2, 4, 8],
    [1, 3, 7],
    [2, 9, 10],
    [1, 8, 9],
    [1, 4, 10],
    [3, 6, 10],
    [2, 5, 6],
    [5, 7, 8],
];

fn from_neighbourhoods(lists: &[[usize; 3]]) -> MixedGraph {
    let arcs = lists
        .iter()
        .enumerate()
        .flat_map(|(v, nbrs)| nbrs.iter().map(move |&u| (u - 1, v)));
    MixedGraph::new(lists.len(), arcs).expect("fixture lists are in range")
}

pub fn petersen() -> MixedGraph {
    from_neighbourhoods(&PETERSEN_NEIGHBOURHOODS)
}

pub fn lambda_cousin() -> MixedGraph {
    from_neighbourhoods(&LAMBDA_NEIGHBOURHOODS)
}

/// The generalised Petersen graph GP(10, 3): outer 10-cycle, spokes, and
/// inner vertices joined at distance three.
pub fn desargues() -> MixedGraph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..10 {
        edges.push((i, (i + 1) % 10));
        edges.push((i, 10 + i));
        edges.push((10 + i, 10 + (i + 3) % 10));
    }
    MixedGraph::from_edges(20, edges).expect("in range")
}

/// Arcs `(i, i+1)` on `n` vertices.
pub fn directed_path(n: usize) -> Result<MixedGraph> {
    positive(n)?;
    MixedGraph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Arcs `(i, i+1 mod n)`; `n = 1` is a single loop.
pub fn directed_cycle(n: usize) -> Result<MixedGraph> {
    positive(n)?;
    MixedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<MixedGraph> {
    positive(n)?;
    MixedGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Undirected cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<MixedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    MixedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Cycle on an even number of vertices whose arcs alternate in direction:
/// even vertices are sources, odd vertices are sinks.
pub fn alternating_cycle(n: usize) -> Result<MixedGraph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "alternating cycle needs an even n >= 2, got {n}"
        )));
    }
    let arcs = (0..n).map(|i| {
        let j = (i + 1) % n;
        if i % 2 == 0 {
            (i, j)
        } else {
            (j, i)
        }
    });
    MixedGraph::new(n, arcs)
}

fn positive(n: usize) -> Result<()> {
    if n < 1 {
        Err(Error::InvalidParameter("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Looks a fixture up by name. Parameterised fixtures take their size as
/// `name(n)` or `name:n`.
pub fn fixture(name: &str) -> Result<MixedGraph> {
    let name = name.trim();
    let (base, arg) = match name.find(['(', ':']) {
        Some(i) => {
            let arg = name[i + 1..].trim_end_matches(')').trim();
            let n: usize = arg
                .parse()
                .map_err(|_| Error::UnknownFixture(name.to_string()))?;
            (&name[..i], Some(n))
        }
        None => (name, None),
    };
    match (base, arg) {
        ("petersen", None) => Ok(petersen()),
        ("lambda_cousin" | "lambda", None) => Ok(lambda_cousin()),
        ("desargues", None) => Ok(desargues()),
        ("directed_path", Some(n)) => directed_path(n),
        ("directed_cycle", Some(n)) => directed_cycle(n),
        ("complete", Some(n)) => complete(n),
        ("cycle", Some(n)) => cycle(n),
        ("alternating_cycle", Some(n)) => alternating_cycle(n),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}
