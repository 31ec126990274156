//! Command-line front end. [`run`] parses arguments, dispatches to the library
//! and returns the exit code with the captured output, so the binary is a thin
//! wrapper and the whole surface is testable in-process.
//!
//! Graph files use the 0-based `mg v1` format; `-` reads standard input.
//! Reports print vertices and permutations 1-based.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::atrails::{arc_classes, construct_with_classes};
use crate::covers::{adc, cdc, idc};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::format::{parse_mg, write_dot, write_mg, write_mg_with_sides};
use crate::graph::{Arc, MixedGraph};
use crate::iso::{self, are_isomorphic};
use crate::orbitals::{is_orbital, is_tf_orbital, tf_orbital, TfGroupGens};
use crate::perm::Permutation;
use crate::recon::{enumerate_cdc_preimages, symmetrize, Symmetrization};
use crate::tfiso::{self, TfMap};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "twofold", version, about = "Two-fold isomorphisms of mixed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Incidence double cover, with side annotations
    Idc { graph: String, #[arg(long)] dot: Option<PathBuf> },
    /// Alternating double cover (isolated cover vertices dropped)
    Adc { graph: String, #[arg(long)] dot: Option<PathBuf> },
    /// Canonical double cover
    Cdc { graph: String, #[arg(long)] dot: Option<PathBuf> },
    /// Decide isomorphism
    Iso { g: String, h: String },
    /// Automorphism group order and generators
    Aut { graph: String },
    /// Find a two-fold isomorphism
    Tfiso { g: String, h: String },
    /// Two-fold automorphism group order
    Tfaut { graph: String },
    /// Stability report for a graph
    Stable { graph: String },
    /// Sorted neighbourhood family of a graph
    Nbhd { graph: String },
    /// Equivalence classes of the arc relation
    Classes { graph: String },
    /// Frontier vertices
    Frontier { graph: String },
    /// Mixed graph with m classes and k frontier vertices
    Construct { m: usize, k: usize, #[arg(long)] dot: Option<PathBuf> },
    /// Canonical-double-cover preimages of a connected bipartite graph
    Recon { graph: String },
    /// A graph two-fold isomorphic to the input, if any
    Symmetrize { graph: String, #[arg(long)] dot: Option<PathBuf> },
    /// Two-fold orbital of a seed arc
    Orbital {
        #[arg(long)]
        gens: String,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        seed: Vec<usize>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Whether Aut(g) is transitive on arcs
    IsOrbital { graph: String },
    /// Whether the two-fold automorphism group is transitive on arcs
    IsTfOrbital { graph: String },
    /// Print a named graph
    Fixture { name: String, #[arg(long)] dot: Option<PathBuf> },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Lib(Error),
    Io(String),
    Validation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs one command. `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut ctx = Context { stdin, stdin_used: false };
    match dispatch(cli.command, &mut ctx) {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(f) => {
            let (code, msg) = match f {
                Failure::Lib(e @ Error::CapExceeded { .. }) => (EXIT_CAP, e.to_string()),
                Failure::Lib(e) => (EXIT_INPUT, e.to_string()),
                Failure::Io(m) => (EXIT_INPUT, m),
                Failure::Validation(m) => (EXIT_VALIDATION, format!("internal validation failed: {m}")),
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Context<'_> {
    fn text(&mut self, path: &str) -> CliResult<String> {
        if path == "-" {
            if self.stdin_used {
                return Err(Failure::Io("standard input can be read only once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("reading standard input: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
        }
    }

    fn graph(&mut self, path: &str) -> CliResult<MixedGraph> {
        let text = self.text(path)?;
        parse_mg(&text).map_err(|e| Failure::Io(format!("{path}: {e}")))
    }
}

fn export_dot(path: &Option<PathBuf>, g: &MixedGraph, labels: Option<&[String]>) -> CliResult<()> {
    if let Some(p) = path {
        std::fs::write(p, write_dot(g, labels)).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn one_based(vs: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = vs.into_iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn arc_label(a: &Arc) -> String {
    format!("({},{})", a.tail + 1, a.head + 1)
}

fn check(ok: bool, what: &str) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Validation(what.into()))
    }
}

fn dispatch(cmd: Command, ctx: &mut Context<'_>) -> CliResult<String> {
    let mut out = String::new();
    match cmd {
        Command::Idc { graph, dot } => {
            let cover = idc(&ctx.graph(&graph)?);
            let labels: Vec<String> = (0..cover.graph().vertex_count()).map(|i| cover.vertex(i).to_string()).collect();
            export_dot(&dot, cover.graph(), Some(&labels))?;
            out.push_str(&write_mg_with_sides(cover.graph(), Some(&cover.sides())));
        }
        Command::Adc { graph, dot } => {
            let d = adc(&ctx.graph(&graph)?);
            export_dot(&dot, d.as_mixed(), Some(&d.labels()))?;
            writeln!(out, "# vertices {}", d.labels().join(" ")).unwrap();
            writeln!(out, "# components {}", d.component_count()).unwrap();
            out.push_str(&write_mg_with_sides(d.as_mixed(), Some(&d.sides())));
        }
        Command::Cdc { graph, dot } => {
            let c = cdc(&ctx.graph(&graph)?);
            export_dot(&dot, &c, None)?;
            out.push_str(&write_mg(&c));
        }
        Command::Iso { g, h } => {
            let (g, h) = (ctx.graph(&g)?, ctx.graph(&h)?);
            match iso::find_isomorphism(&g, &h, None)? {
                Some(p) => {
                    check(g.relabel(&p)? == h, "isomorphism witness")?;
                    writeln!(out, "isomorphic: {p}").unwrap();
                }
                None => out.push_str("none\n"),
            }
        }
        Command::Aut { graph } => {
            let g = ctx.graph(&graph)?;
            let search = iso::automorphisms(&g, None)?;
            writeln!(out, "order = {}", search.order).unwrap();
            for p in &search.generators {
                check(g.relabel(p)? == g, "automorphism generator")?;
                writeln!(out, "generator {p}").unwrap();
            }
        }
        Command::Tfiso { g, h } => {
            let (g, h) = (ctx.graph(&g)?, ctx.graph(&h)?);
            match tfiso::find_tf_isomorphism(&g, &h)? {
                Some(m) => {
                    check(tfiso::is_tf_map(&g, &h, &m.alpha, &m.beta)?, "two-fold isomorphism witness")?;
                    writeln!(out, "alpha = {}", m.alpha).unwrap();
                    writeln!(out, "beta = {}", m.beta).unwrap();
                    writeln!(out, "non-trivial = {}", m.is_non_trivial()).unwrap();
                }
                None => {
                    out.push_str("none\n");
                    if tfiso::tf_isomorphic_to_inverse(&g, &h)? {
                        out.push_str("note: g is two-fold isomorphic to the inverse of h\n");
                    }
                }
            }
        }
        Command::Tfaut { graph } => {
            let g = ctx.graph(&graph)?;
            let group = tfiso::tf_automorphism_group(&g)?;
            writeln!(out, "order = {}", group.order()).unwrap();
            writeln!(out, "non-trivial = {}", group.non_trivial_count()).unwrap();
        }
        Command::Stable { graph } => {
            let r = tfiso::is_stable(&ctx.graph(&graph)?)?;
            writeln!(out, "{}", if r.stable { "stable" } else { "unstable" }).unwrap();
            writeln!(out, "aut order = {}", r.aut_order).unwrap();
            writeln!(out, "tf-aut order = {}", r.tf_aut_order).unwrap();
            writeln!(out, "cdc aut order = {}", r.cdc_aut_order).unwrap();
            writeln!(out, "index = {}", r.index).unwrap();
        }
        Command::Nbhd { graph } => {
            for set in tfiso::neighbourhood_family(&ctx.graph(&graph)?)? {
                writeln!(out, "{}", one_based(set)).unwrap();
            }
        }
        Command::Classes { graph } => {
            let p = arc_classes(&ctx.graph(&graph)?);
            writeln!(out, "classes = {}, frontier = {}", p.class_count(), p.frontier_count()).unwrap();
            for (i, class) in p.classes().iter().enumerate() {
                let arcs: Vec<String> = class.iter().map(arc_label).collect();
                writeln!(out, "class {}: {}", i + 1, arcs.join(" ")).unwrap();
            }
            writeln!(out, "frontier: {}", one_based(p.frontier().iter().copied())).unwrap();
        }
        Command::Frontier { graph } => {
            let p = arc_classes(&ctx.graph(&graph)?);
            writeln!(out, "{}", one_based(p.frontier().iter().copied())).unwrap();
        }
        Command::Construct { m, k, dot } => {
            let g = construct_with_classes(m, k)?;
            let p = arc_classes(&g);
            check((p.class_count(), p.frontier_count()) == (m, k), "construction contract")?;
            export_dot(&dot, &g, None)?;
            out.push_str(&write_mg(&g));
        }
        Command::Recon { graph } => {
            let h = ctx.graph(&graph)?;
            let set = enumerate_cdc_preimages(&h)?;
            writeln!(out, "preimages = {}, loopless = {}", set.len(), set.loopless_count()).unwrap();
            for (i, e) in set.entries.iter().enumerate() {
                check(are_isomorphic(&cdc(&e.graph), &h), "preimage cover")?;
                writeln!(
                    out,
                    "# preimage {}: loopless = {}, class size = {}, involution = {}",
                    i + 1,
                    e.loopless,
                    e.class_size,
                    e.witness
                )
                .unwrap();
                out.push_str(&write_mg(&e.graph));
            }
        }
        Command::Symmetrize { graph, dot } => {
            let d = ctx.graph(&graph)?;
            match symmetrize(&d)? {
                Symmetrization::Found(g) => {
                    check(g.is_graph() && tfiso::find_tf_isomorphism(&d, &g)?.is_some(), "symmetrization")?;
                    export_dot(&dot, &g, None)?;
                    out.push_str(&write_mg(&g));
                }
                Symmetrization::None => out.push_str("none\n"),
                Symmetrization::Unknown => {
                    return Err(Failure::Lib(Error::CapExceeded { cap: iso::ENUMERATION_CAP }));
                }
            }
        }
        Command::Orbital { gens, seed, degree, dot } => {
            let text = ctx.text(&gens)?;
            let gens = parse_generators(&text, degree).map_err(|e| Failure::Io(format!("{gens}: {e}")))?;
            let o = tf_orbital(&gens, Arc::new(seed[0], seed[1]))?;
            for m in gens.generators() {
                check(tfiso::is_tf_map(&o.graph, &o.graph, &m.alpha, &m.beta)?, "orbital closure")?;
            }
            export_dot(&dot, &o.graph, None)?;
            out.push_str(&write_mg(&o.graph));
        }
        Command::IsOrbital { graph } => {
            writeln!(out, "{}", is_orbital(&ctx.graph(&graph)?)?).unwrap();
        }
        Command::IsTfOrbital { graph } => {
            writeln!(out, "{}", is_tf_orbital(&ctx.graph(&graph)?)?).unwrap();
        }
        Command::Fixture { name, dot } => {
            let g = fixtures::fixture(&name)?;
            export_dot(&dot, &g, None)?;
            out.push_str(&write_mg(&g));
        }
    }
    Ok(out)
}

/// Generator file: one pair per line, two 0-based cycle-notation
/// permutations separated by `;`, `|` or `,`. An optional `n <degree>` line
/// fixes the degree; otherwise it is the largest point plus one.
pub fn parse_generators(text: &str, degree: Option<usize>) -> Result<TfGroupGens> {
    let mut header = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n ") {
            let n = rest.trim().parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("bad degree `{rest}`"),
            })?;
            header = Some(n);
            continue;
        }
        let parts: Vec<&str> = line.split([';', '|', ',']).map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                message: "expected two permutations separated by `;`".into(),
            });
        }
        pairs.push((i + 1, parts[0].to_string(), parts[1].to_string()));
    }
    let inferred = pairs
        .iter()
        .flat_map(|(_, a, b)| [a, b])
        .flat_map(|s| s.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()))
        .max()
        .map_or(0, |m| m + 1);
    let n = degree.or(header).unwrap_or(inferred);
    let mut gens = Vec::with_capacity(pairs.len());
    for (line, a, b) in pairs {
        let parse = |s: &str| {
            Permutation::parse_cycles(n, s, false).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })
        };
        gens.push(TfMap::new(parse(&a)?, parse(&b)?)?);
    }
    TfGroupGens::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> Outcome {
        let mut input = stdin.as_bytes();
        run(std::iter::once("twofold").chain(args.iter().copied()), &mut input)
    }

    #[test]
    fn construct_then_classes_round_trip() {
        let g = call(&["construct", "3", "5"], "");
        assert_eq!(g.code, 0);
        let c = call(&["classes", "-"], &g.stdout);
        assert_eq!(c.code, 0);
        assert!(c.stdout.starts_with("classes = 3, frontier = 5\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["bogus"], "").code, EXIT_INPUT);
        assert_eq!(call(&["nbhd", "-"], "n 2\na 0 1\n").code, EXIT_INPUT);
        assert_eq!(call(&["nbhd", "-"], "garbage").code, EXIT_INPUT);
        assert_eq!(call(&["construct", "4", "1"], "").code, EXIT_INPUT);
        assert_eq!(call(&["tfiso", "-", "-"], "n 1\n").code, EXIT_INPUT);
        assert_eq!(call(&["--help"], "").code, EXIT_OK);
        let tfaut = call(&["tfaut", "-"], "n 11\n");
        assert_eq!(tfaut.code, EXIT_CAP, "{tfaut:?}");
    }

    #[test]
    fn negative_answers_exit_zero() {
        let o = call(&["symmetrize", "-"], "n 3\na 0 1\na 1 2\na 2 0\n");
        assert_eq!((o.code, o.stdout.as_str()), (0, "none\n"));
        let o = call(&["stable", "-"], &write_mg(&fixtures::lambda_cousin()));
        assert_eq!(o.code, 0);
        assert!(o.stdout.starts_with("unstable\n"));
    }

    #[test]
    fn fixtures_and_neighbourhoods() {
        let p = call(&["fixture", "petersen"], "");
        assert_eq!(p.code, 0);
        let n = call(&["nbhd", "-"], &p.stdout);
        assert_eq!(n.stdout.lines().count(), 10);
        assert!(n.stdout.contains("{2, 5, 6}\n"));
    }

    #[test]
    fn generator_files() {
        let gens = parse_generators("# rotation\n(0 1 2) ; (0 1 2)\n", None).unwrap();
        assert_eq!(gens.degree(), 3);
        let gens = parse_generators("n 4\n() | (0 1)\n", None).unwrap();
        assert_eq!(gens.degree(), 4);
        assert!(parse_generators("(0 1)\n", None).is_err());
    }

    #[test]
    fn output_is_deterministic() {
        let text = write_mg(&fixtures::desargues());
        let a = call(&["recon", "-"], &text);
        let b = call(&["recon", "-"], &text);
        assert_eq!(a, b);
        assert!(a.stdout.starts_with("preimages = 3, loopless = 2\n"));
    }
}
