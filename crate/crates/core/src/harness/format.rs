//! Graph files (JSON and DIMACS edge format) and witness files.
//!
//! JSON:
//! ```text
//! {"format":"treex-graph-v1","n":3,"edges":[[0,1],[1,2]],"tags":{"0":"hub"},"meta":{...}}
//! ```
//! DIMACS: `p edge <n> <m>` then `e <u> <v>` lines, 1-indexed. Ordinary `c`
//! comments are ignored; tags and metadata written by this crate travel in
//! `c treex-tags <json>` and `c treex-meta <json>` lines so that generator
//! output round-trips through either format.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions::GraphMeta;
use crate::error::{Error, Result};
use crate::graph::{Role, SimpleGraph, TreeGraph};

pub const FORMAT_TAG: &str = "treex-graph-v1";
const TAGS_PREFIX: &str = "treex-tags";
const META_PREFIX: &str = "treex-meta";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    #[default]
    Json,
    Dimacs,
}

impl GraphFormat {
    /// `.json` means JSON; anything else is sniffed from the first
    /// non-blank character.
    fn detect(path: &Path, text: &str) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => GraphFormat::Json,
            Some("dimacs" | "col" | "dim") => GraphFormat::Dimacs,
            _ if text.trim_start().starts_with('{') => GraphFormat::Json,
            _ => GraphFormat::Dimacs,
        }
    }
}

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: SimpleGraph,
    pub meta: Option<GraphMeta>,
    /// Non-fatal findings such as duplicate edges.
    pub warnings: Vec<String>,
}

impl GraphFile {
    pub fn into_tree(self) -> Result<TreeGraph> {
        let root = self.meta.as_ref().and_then(|m| m.root);
        TreeGraph::new(self.graph, root)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    format: String,
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    tags: BTreeMap<usize, Role>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<GraphMeta>,
}

pub fn write_graph(g: &SimpleGraph, meta: Option<&GraphMeta>, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Json => {
            let doc = JsonGraph {
                format: FORMAT_TAG.into(),
                n: g.n(),
                edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
                tags: g.tags().clone(),
                meta: meta.cloned(),
            };
            let mut s = serde_json::to_string(&doc)?;
            s.push('\n');
            Ok(s)
        }
        GraphFormat::Dimacs => {
            let mut s = String::new();
            if let Some(m) = meta {
                writeln!(s, "c {META_PREFIX} {}", serde_json::to_string(m)?).unwrap();
            }
            if !g.tags().is_empty() {
                writeln!(s, "c {TAGS_PREFIX} {}", serde_json::to_string(g.tags())?).unwrap();
            }
            writeln!(s, "p edge {} {}", g.n(), g.edge_count()).unwrap();
            for (u, v) in g.edges() {
                writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
            }
            Ok(s)
        }
    }
}

pub fn write_graph_file(path: &Path, g: &SimpleGraph, meta: Option<&GraphMeta>, format: GraphFormat) -> Result<()> {
    std::fs::write(path, write_graph(g, meta, format)?)?;
    Ok(())
}

pub fn read_graph_file(path: &Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path)?;
    let parsed = parse_graph(&text, GraphFormat::detect(path, &text))?;
    for w in &parsed.warnings {
        log::warn!("{}: {w}", path.display());
    }
    Ok(parsed)
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<GraphFile> {
    match format {
        GraphFormat::Json => parse_json(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

/// Sorts, drops duplicates (with a warning each) and rejects self-loops.
fn normalize_edges(
    n: usize,
    raw: impl IntoIterator<Item = (usize, usize, usize)>,
    warnings: &mut Vec<String>,
) -> Result<Vec<(usize, usize)>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::new();
    for (line, u, v) in raw {
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("edge ({u}, {v}) outside 0..{n}"),
            });
        }
        let e = (u.min(v), u.max(v));
        if seen.insert(e) {
            edges.push(e);
        } else {
            warnings.push(format!("duplicate edge {}-{} dropped", e.0, e.1));
        }
    }
    Ok(edges)
}

fn parse_json(text: &str) -> Result<GraphFile> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    if doc.format != FORMAT_TAG {
        return Err(Error::Parse {
            line: 1,
            msg: format!("format is {:?}, expected {FORMAT_TAG:?}", doc.format),
        });
    }
    let mut warnings = Vec::new();
    // JSON carries no per-edge line numbers; report the edge index instead.
    let edges = normalize_edges(
        doc.n,
        doc.edges.iter().enumerate().map(|(i, e)| (i, e[0], e[1])),
        &mut warnings,
    )?;
    let graph = SimpleGraph::new(doc.n, &edges)?.with_tags(doc.tags)?;
    Ok(GraphFile {
        graph,
        meta: doc.meta,
        warnings,
    })
}

fn parse_dimacs(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw = Vec::new();
    let mut tags = BTreeMap::new();
    let mut meta = None;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let bad = |msg: String| Error::Parse { line: lineno, msg };
        let mut fields = line.split_whitespace();
        match fields.next() {
            None => {}
            Some("c") => {
                let rest = line.trim_start()[1..].trim_start();
                if let Some(json) = rest.strip_prefix(META_PREFIX) {
                    meta = Some(serde_json::from_str(json.trim()).map_err(|e| bad(e.to_string()))?);
                } else if let Some(json) = rest.strip_prefix(TAGS_PREFIX) {
                    tags = serde_json::from_str(json.trim()).map_err(|e| bad(e.to_string()))?;
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(bad("second problem line".into()));
                }
                let f: Vec<&str> = fields.collect();
                if f.len() != 3 || f[0] != "edge" {
                    return Err(bad(format!("expected `p edge <n> <m>`, got {line:?}")));
                }
                let n = f[1].parse().map_err(|_| bad(format!("bad vertex count {:?}", f[1])))?;
                let m = f[2].parse().map_err(|_| bad(format!("bad edge count {:?}", f[2])))?;
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(bad("edge before `p edge` line".into()));
                }
                let f: Vec<&str> = fields.collect();
                if f.len() != 2 {
                    return Err(bad(format!("expected `e <u> <v>`, got {line:?}")));
                }
                let mut ends = [0usize; 2];
                for (slot, s) in ends.iter_mut().zip(&f) {
                    let x: usize = s.parse().map_err(|_| bad(format!("bad vertex {s:?}")))?;
                    if x == 0 {
                        return Err(bad("DIMACS vertices are 1-indexed".into()));
                    }
                    *slot = x - 1;
                }
                raw.push((lineno, ends[0], ends[1]));
            }
            Some(other) => return Err(bad(format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: text.lines().count(),
        msg: "missing `p edge` line".into(),
    })?;
    let mut warnings = Vec::new();
    if raw.len() != m {
        warnings.push(format!("header declares {m} edges, found {}", raw.len()));
    }
    let edges = normalize_edges(n, raw, &mut warnings)?;
    let graph = SimpleGraph::new(n, &edges)?.with_tags(tags)?;
    Ok(GraphFile { graph, meta, warnings })
}

/// One `<tree_vertex> <host_vertex>` line per tree vertex, in tree order.
pub fn write_witness(map: &[usize]) -> String {
    map.iter().enumerate().map(|(t, h)| format!("{t} {h}\n")).collect()
}

/// Inverse of [`write_witness`]; every tree vertex `0..len` must appear once.
pub fn parse_witness(text: &str) -> Result<Vec<usize>> {
    let mut pairs = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let bad = |msg: String| Error::Parse { line: i + 1, msg };
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.is_empty() {
            continue;
        }
        let [t, h] = f[..] else {
            return Err(bad(format!("expected `<tree> <host>`, got {line:?}")));
        };
        let t: usize = t.parse().map_err(|_| bad(format!("bad tree vertex {t:?}")))?;
        let h: usize = h.parse().map_err(|_| bad(format!("bad host vertex {h:?}")))?;
        if pairs.insert(t, h).is_some() {
            return Err(bad(format!("tree vertex {t} listed twice")));
        }
    }
    let n = pairs.len();
    if let Some((&t, _)) = pairs.iter().next_back().filter(|(&t, _)| t >= n) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("tree vertices must be 0..{n}, found {t}"),
        });
    }
    Ok(pairs.into_values().collect())
}
