//! Edge-list and DIMACS graph files.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based
//! vertices. DIMACS: optional `c` comment lines, a `p edge n m` header and
//! `e u v` lines with 1-based vertices. Blank lines are ignored in both.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use isolation_core::Graph;

use crate::error::{LabError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl GraphFormat {
    /// `.dimacs`, `.col` and `.clq` are DIMACS; everything else is an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dimacs" | "col" | "clq") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

struct Lines<'a> {
    source: &'a str,
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(source: &'a str, text: &'a str) -> Self {
        Lines {
            source,
            inner: text.lines().enumerate(),
        }
    }

    fn parse_err(&self, line: usize, reason: impl Into<String>) -> LabError {
        LabError::Parse {
            source_name: self.source.to_string(),
            line,
            reason: reason.into(),
        }
    }

    fn number<T: FromStr>(&self, line: usize, token: Option<&str>, what: &str) -> Result<T> {
        let token = token.ok_or_else(|| self.parse_err(line, format!("missing {what}")))?;
        token
            .parse()
            .map_err(|_| self.parse_err(line, format!("bad {what} `{token}`")))
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, Vec<&'a str>);

    /// Next non-blank line as (1-based line number, tokens).
    fn next(&mut self) -> Option<Self::Item> {
        for (i, line) in self.inner.by_ref() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }
}

fn build(
    lines: &Lines<'_>,
    order: usize,
    expected: usize,
    edges: Vec<(usize, usize, usize)>,
    last_line: usize,
) -> Result<Graph> {
    if edges.len() != expected {
        return Err(lines.parse_err(
            last_line,
            format!("header announces {expected} edges, found {}", edges.len()),
        ));
    }
    for &(line, u, v) in &edges {
        for w in [u, v] {
            if w >= order {
                return Err(LabError::Range {
                    source_name: lines.source.to_string(),
                    line,
                    vertex: w,
                    order,
                });
            }
        }
        if u == v {
            return Err(lines.parse_err(line, format!("self-loop at vertex {u}")));
        }
    }
    Ok(Graph::new(order, edges.into_iter().map(|(_, u, v)| (u, v)))?)
}

pub fn parse_edge_list(source: &str, text: &str) -> Result<Graph> {
    let mut lines = Lines::new(source, text);
    let (header_line, header) = lines.next().ok_or_else(|| lines.parse_err(1, "missing `n m` header"))?;
    if header.len() != 2 {
        return Err(lines.parse_err(header_line, "header must be `n m`"));
    }
    let order: usize = lines.number(header_line, Some(header[0]), "vertex count")?;
    let size: usize = lines.number(header_line, Some(header[1]), "edge count")?;
    let mut edges = Vec::with_capacity(size);
    let mut last = header_line;
    while let Some((line, tokens)) = lines.next() {
        if tokens.len() != 2 {
            return Err(lines.parse_err(line, "edge lines must be `u v`"));
        }
        let u = lines.number(line, Some(tokens[0]), "vertex")?;
        let v = lines.number(line, Some(tokens[1]), "vertex")?;
        edges.push((line, u, v));
        last = line;
    }
    build(&lines, order, size, edges, last)
}

pub fn parse_dimacs(source: &str, text: &str) -> Result<Graph> {
    let mut lines = Lines::new(source, text);
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 1;
    while let Some((line, tokens)) = lines.next() {
        last = line;
        match tokens[0] {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(lines.parse_err(line, "duplicate `p` line"));
                }
                if tokens.len() != 4 || !matches!(tokens[1], "edge" | "col") {
                    return Err(lines.parse_err(line, "header must be `p edge n m`"));
                }
                header = Some((
                    lines.number(line, Some(tokens[2]), "vertex count")?,
                    lines.number(line, Some(tokens[3]), "edge count")?,
                ));
            }
            "e" => {
                let Some((order, _)) = header else {
                    return Err(lines.parse_err(line, "edge before `p` line"));
                };
                if tokens.len() != 3 {
                    return Err(lines.parse_err(line, "edge lines must be `e u v`"));
                }
                let mut ends = [0usize; 2];
                for (slot, token) in ends.iter_mut().zip(&tokens[1..]) {
                    let w: usize = lines.number(line, Some(token), "vertex")?;
                    if w == 0 || w > order {
                        return Err(LabError::Range {
                            source_name: source.to_string(),
                            line,
                            vertex: w,
                            order,
                        });
                    }
                    *slot = w - 1;
                }
                edges.push((line, ends[0], ends[1]));
            }
            other => return Err(lines.parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (order, size) = header.ok_or_else(|| lines.parse_err(last, "missing `p edge n m` header"))?;
    build(&lines, order, size, edges, last)
}

pub fn parse_graph(source: &str, text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(source, text),
        GraphFormat::Dimacs => parse_dimacs(source, text),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Dimacs => write_dimacs(g),
    }
}

/// Reads a graph, taking the format from the extension unless given.
pub fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
    let format = format.unwrap_or_else(|| GraphFormat::from_path(path));
    parse_graph(&path.display().to_string(), &text, format)
}

pub fn write_graph(path: &Path, g: &Graph, format: Option<GraphFormat>) -> Result<()> {
    let format = format.unwrap_or_else(|| GraphFormat::from_path(path));
    fs::write(path, format_graph(g, format)).map_err(|e| LabError::io(path, e))
}
