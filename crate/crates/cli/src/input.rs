use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use drdom::graph::family::FamilySpec;
use drdom::graph::{graph6, text};
use drdom::Graph;
use serde::Serialize;

use crate::Failure;

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Read the graph from a graph6 file (first non-empty line)
    #[arg(long, value_name = "FILE")]
    pub g6: Option<PathBuf>,
    /// Read the graph from an edge-list file ("n m" then one "u v" per line)
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// Generate a family member, e.g. path:9, cycle:7, multipartite:2,2,3, join(empty:2,cycle:5)
    #[arg(long, value_name = "KIND:PARAMS")]
    pub family: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDescriptor {
    pub kind: &'static str,
    pub source: String,
    pub order: usize,
    pub size: usize,
    pub graph6: String,
}

pub struct LoadedGraph {
    pub graph: Graph,
    pub family: Option<FamilySpec>,
    pub descriptor: InputDescriptor,
}

pub fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

impl GraphInput {
    pub fn load(&self) -> Result<LoadedGraph, Failure> {
        let (kind, source, graph, family) = if let Some(path) = &self.g6 {
            let body = read_file(path)?;
            let line = body.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            ("graph6", path.display().to_string(), graph6::parse_graph6(line)?, None)
        } else if let Some(path) = &self.edges {
            let body = read_file(path)?;
            ("edges", path.display().to_string(), text::parse_edge_list(&body)?, None)
        } else {
            let spec: FamilySpec = self.family.as_deref().unwrap_or_default().parse()?;
            let g = spec.generate()?;
            ("family", spec.to_string(), g, Some(spec))
        };
        let descriptor = InputDescriptor {
            kind,
            source,
            order: graph.order(),
            size: graph.size(),
            graph6: graph.to_graph6().unwrap_or_default(),
        };
        Ok(LoadedGraph { graph, family, descriptor })
    }
}
