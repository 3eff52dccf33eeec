//! Graph file formats.
//!
//! JSON: `{"n":4,"edges":[[0,1],[1,2]],"name":"P3"}` (name optional).
//! Edge list: a header line `n m` followed by `m` lines `i j`.
//!
//! Writers always emit edges as `[u,v]` with `u < v` in lexicographic order,
//! so reading and re-writing a file produced by this module reproduces it
//! byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    EdgeList,
}

impl GraphFormat {
    /// JSON if the first non-blank character is `{`.
    pub fn detect(text: &str) -> GraphFormat {
        if text.trim_start().starts_with('{') {
            GraphFormat::Json
        } else {
            GraphFormat::EdgeList
        }
    }
}

/// Serialized form of a [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            name: g.name().map(str::to_owned),
        }
    }
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = file.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edge_list(file.n, &edges)?;
        Ok(match file.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
        Graph::try_from(file)
    }

    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.order(), edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list file".into()))?;
        let [n, m] = parse_pair(header, 1)?;
        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let [u, v] = parse_pair(line, lineno + 1)?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges but {} were listed",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Parses either format, detected from content.
    pub fn parse(text: &str) -> Result<Graph> {
        match GraphFormat::detect(text) {
            GraphFormat::Json => Graph::from_json(text),
            GraphFormat::EdgeList => Graph::from_edge_list_text(text),
        }
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Graph> {
        let text = std::fs::read_to_string(path)?;
        Graph::parse(&text)
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!(
            "line {lineno}: expected two integers, got {line:?}"
        )));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}
