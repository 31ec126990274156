//! The `mg v1` text format and DOT export.
//!
//! ```text
//! # comment
//! n 3
//! e 0 1        # both arcs (0,1) and (1,0)
//! a 1 2        # a single arc
//! side 0 0     # optional cover side annotation
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Arc, MixedGraph};

/// A parsed `mg v1` document: the graph plus any `side` annotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MgDocument {
    pub graph: MixedGraph,
    pub sides: Option<Vec<u8>>,
}

pub fn parse_mg(text: &str) -> Result<MixedGraph> {
    parse_mg_document(text).map(|d| d.graph)
}

pub fn parse_mg_document(text: &str) -> Result<MgDocument> {
    let mut n: Option<usize> = None;
    let mut arcs = Vec::new();
    let mut sides: Vec<(usize, usize, u8)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let tag = toks.next().unwrap_or_default();
        let nums: Vec<usize> = toks
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("expected a non-negative integer, found `{t}`")))
            })
            .collect::<Result<_>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(err(format!("`{tag}` takes {k} arguments, found {}", nums.len())))
            }
        };
        match tag {
            "n" => {
                if n.is_some() {
                    return Err(err("duplicate `n` line".into()));
                }
                want(1)?;
                n = Some(nums[0]);
            }
            _ if n.is_none() => {
                return Err(err("the first line must be `n <vertex_count>`".into()));
            }
            "a" => {
                want(2)?;
                arcs.push((line_no, Arc::new(nums[0], nums[1])));
            }
            "e" => {
                want(2)?;
                arcs.push((line_no, Arc::new(nums[0], nums[1])));
                arcs.push((line_no, Arc::new(nums[1], nums[0])));
            }
            "side" => {
                want(2)?;
                if nums[1] > 1 {
                    return Err(err(format!("side must be 0 or 1, found {}", nums[1])));
                }
                sides.push((line_no, nums[0], nums[1] as u8));
            }
            other => return Err(err(format!("unknown line tag `{other}`"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing `n <vertex_count>` line".into(),
    })?;
    for (line, a) in &arcs {
        for v in [a.tail, a.head] {
            if v >= n {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("vertex {v} out of range for n = {n}"),
                });
            }
        }
    }
    let graph = MixedGraph::new(n, arcs.into_iter().map(|(_, a)| a))?;
    let sides = if sides.is_empty() {
        None
    } else {
        let mut out = vec![u8::MAX; n];
        for (line, v, s) in sides {
            if v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {v} out of range for n = {n}"),
                });
            }
            out[v] = s;
        }
        if out.contains(&u8::MAX) {
            return Err(Error::Parse {
                line: 0,
                message: "side annotations must cover every vertex".into(),
            });
        }
        Some(out)
    };
    Ok(MgDocument { graph, sides })
}

/// Canonical `mg v1` text: `n` line, then `e u v` (u < v) for every
/// self-paired pair, then `a t h` for every remaining arc, each block sorted.
pub fn write_mg(g: &MixedGraph) -> String {
    write_mg_with_sides(g, None)
}

pub fn write_mg_with_sides(g: &MixedGraph, sides: Option<&[u8]>) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    let mut lone = Vec::new();
    for a in g.arcs() {
        if a.tail != a.head && g.has_arc(a.head, a.tail) {
            if a.tail < a.head {
                writeln!(out, "e {} {}", a.tail, a.head).unwrap();
            }
        } else {
            lone.push(*a);
        }
    }
    for a in lone {
        writeln!(out, "a {} {}", a.tail, a.head).unwrap();
    }
    if let Some(sides) = sides {
        for (v, s) in sides.iter().enumerate() {
            writeln!(out, "side {v} {s}").unwrap();
        }
    }
    out
}

/// DOT rendering: lone arcs as directed edges, self-paired pairs collapsed
/// into one undirected edge. Vertex labels are optional.
pub fn write_dot(g: &MixedGraph, labels: Option<&[String]>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", l[v]).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for a in g.arcs() {
        if a.tail != a.head && g.has_arc(a.head, a.tail) {
            if a.tail < a.head {
                writeln!(out, "  {} -> {} [dir=none];", a.tail, a.head).unwrap();
            }
        } else {
            writeln!(out, "  {} -> {};", a.tail, a.head).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
