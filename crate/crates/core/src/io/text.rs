use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// One `u v` pair per line; a lone label declares a vertex. Labels are
    /// arbitrary tokens numbered in order of first appearance.
    Edges,
    /// `p edge n m` followed by 1-based `e u v` lines.
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(GraphFormat::Edges),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(Error::Input(format!("unknown graph format `{other}`"))),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Edges => "edges",
            GraphFormat::Dimacs => "dimacs",
        })
    }
}

/// A graph with the original label of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl ParsedGraph {
    /// Labels `0..n`.
    pub fn unlabeled(graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|v| v.to_string()).collect();
        ParsedGraph { graph, labels }
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<ParsedGraph> {
    match format {
        GraphFormat::Edges => parse_edges(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn parse_edges(text: &str) -> Result<ParsedGraph> {
    let mut index: HashMap<String, Vertex> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |tok: &str| -> Vertex {
        *index.entry(tok.to_string()).or_insert_with(|| {
            labels.push(tok.to_string());
            labels.len() - 1
        })
    };
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            [a] => {
                intern(a);
            }
            [a, b] => {
                if a == b {
                    return Err(Error::Parse {
                        line,
                        message: format!("self-loop on `{a}`"),
                    });
                }
                let (u, v) = (intern(a), intern(b));
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, got `{l}`"),
                })
            }
        }
    }
    let graph = Graph::new(labels.len(), &edges)?;
    Ok(ParsedGraph { graph, labels })
}

fn parse_dimacs(text: &str) -> Result<ParsedGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let num = |tok: &str, line: usize| -> Result<usize> {
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{tok}` is not a non-negative integer"),
        })
    };
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            ["c", ..] => {}
            ["p", _, count, _] => {
                if n.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "second problem line".into(),
                    });
                }
                n = Some(num(count, line)?);
            }
            ["e", a, b] => {
                let Some(n) = n else {
                    return Err(Error::Parse {
                        line,
                        message: "edge before the problem line".into(),
                    });
                };
                let (a, b) = (num(a, line)?, num(b, line)?);
                for x in [a, b] {
                    if x == 0 || x > n {
                        return Err(Error::Parse {
                            line,
                            message: format!("vertex {x} outside 1..={n}"),
                        });
                    }
                }
                if a == b {
                    return Err(Error::Parse {
                        line,
                        message: format!("self-loop on {a}"),
                    });
                }
                edges.push((a - 1, b - 1));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("unrecognised line `{l}`"),
                })
            }
        }
    }
    let n = n.ok_or_else(|| Error::Input("missing `p edge n m` line".into()))?;
    let graph = Graph::new(n, &edges)?;
    let labels = (1..=n).map(|v| v.to_string()).collect();
    Ok(ParsedGraph { graph, labels })
}

/// Writes `pg` so that parsing the output gives back the same vertex
/// numbering. In the edges format, vertex lines are emitted up front only
/// when the edge list alone would number vertices differently.
pub fn serialize_graph(pg: &ParsedGraph, format: GraphFormat) -> String {
    let g = &pg.graph;
    let mut out = String::new();
    match format {
        GraphFormat::Dimacs => {
            out.push_str(&format!("p edge {} {}\n", g.n(), g.edge_count()));
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
        }
        GraphFormat::Edges => {
            let mut order = Vec::with_capacity(g.n());
            let mut seen = vec![false; g.n()];
            for (u, v) in g.edges() {
                for x in [u, v] {
                    if !seen[x] {
                        seen[x] = true;
                        order.push(x);
                    }
                }
            }
            order.extend((0..g.n()).filter(|&x| !seen[x]));
            let renumbered = order.iter().enumerate().any(|(k, &x)| k != x);
            if renumbered {
                for label in &pg.labels {
                    out.push_str(label);
                    out.push('\n');
                }
            }
            for (u, v) in g.edges() {
                out.push_str(&format!("{} {}\n", pg.labels[u], pg.labels[v]));
            }
            if !renumbered {
                for x in (0..g.n()).filter(|&x| g.degree(x) == 0) {
                    out.push_str(&pg.labels[x]);
                    out.push('\n');
                }
            }
        }
    }
    out
}

/// One label per non-empty line; every label must name a vertex of `pg`.
pub fn parse_label_set(text: &str, pg: &ParsedGraph) -> Result<VertexSet> {
    let index: HashMap<&str, Vertex> = pg
        .labels
        .iter()
        .enumerate()
        .map(|(v, l)| (l.as_str(), v))
        .collect();
    let mut out = VertexSet::new();
    for (line, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            let v = index.get(tok).ok_or_else(|| Error::Parse {
                line,
                message: format!("unknown vertex `{tok}`"),
            })?;
            out.insert(*v);
        }
    }
    Ok(out)
}

/// Space-separated labels of `d` in ascending order, numeric when every
/// label is an integer.
pub fn format_solution(d: &VertexSet, labels: &[String]) -> String {
    let mut names: Vec<&str> = d.iter().map(|v| labels[v].as_str()).collect();
    let numeric: Option<Vec<i64>> = names.iter().map(|l| l.parse().ok()).collect();
    match numeric {
        Some(mut nums) => {
            nums.sort_unstable();
            nums.iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        }
        None => {
            names.sort_unstable();
            names.join(" ")
        }
    }
}
