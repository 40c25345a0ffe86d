//! The star construction `K_n*(r, k, λ)` of a block design.
//!
//! Every incidence `(block i, point p)` gets a fresh copy vertex. The copies
//! of one block form a clique, and every copy of `p` is joined to a hub
//! vertex for `p`. Hubs get ids `0..n` in point order; copies follow in
//! `(block, position)` order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::design::{verify_design, Design, DesignError, DesignParams, Violation};
use crate::graph::{Graph, GraphJson};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error("not a block design: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Unverified(Vec<Violation>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexLabel {
    Hub { point: usize },
    Copy { block: usize, point: usize },
}

impl VertexLabel {
    pub fn is_hub(&self) -> bool {
        matches!(self, Self::Hub { .. })
    }
}

#[derive(Debug, Clone)]
pub struct StarGraph {
    graph: Graph,
    labels: Vec<VertexLabel>,
    names: Vec<String>,
    params: DesignParams,
}

impl StarGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// Human-readable vertex names: `x3` for a hub, `B2.x3` for a copy.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn params(&self) -> DesignParams {
        self.params
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n_vertices: self.graph.n_vertices(),
            edges: self.graph.edges().map(|(u, v)| [u, v]).collect(),
            labels: self.names.clone(),
        }
    }
}

pub fn star_construct(design: &Design) -> Result<StarGraph, ConstructError> {
    let report = verify_design(design)?;
    let params = report
        .params
        .ok_or_else(|| ConstructError::Unverified(report.violations.clone()))?;

    let n = design.n_points();
    let mut labels: Vec<VertexLabel> = (0..n).map(|point| VertexLabel::Hub { point }).collect();
    let mut names: Vec<String> = (0..n).map(|p| design.point_label(p)).collect();
    let mut edges = Vec::with_capacity(n * params.r * (params.k + 1) / 2);

    for (i, block) in design.blocks().iter().enumerate() {
        let first = labels.len();
        for &p in block {
            let v = labels.len();
            labels.push(VertexLabel::Copy { block: i, point: p });
            names.push(format!("B{}.{}", i + 1, design.point_label(p)));
            edges.push((p, v));
        }
        for u in first..labels.len() {
            for v in u + 1..labels.len() {
                edges.push((u, v));
            }
        }
    }

    let graph = Graph::from_edges(labels.len(), &edges).expect("star construction is simple");
    Ok(StarGraph {
        graph,
        labels,
        names,
        params,
    })
}

/// Graphviz rendering. Hubs are boxes, copies are circles.
pub fn export_dot(star: &StarGraph) -> String {
    let p = star.params;
    let mut out = String::new();
    writeln!(out, "graph star {{").unwrap();
    writeln!(
        out,
        "  // K_{}*({}, {}, {}) from a {} design",
        p.n, p.r, p.k, p.lambda, p
    )
    .unwrap();
    for (v, (label, name)) in star.labels.iter().zip(&star.names).enumerate() {
        let shape = if label.is_hub() { "box" } else { "circle" };
        writeln!(out, "  {v} [label=\"{name}\", shape={shape}];").unwrap();
    }
    for (u, v) in star.graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
