//! Distances, geodesic counts, connectivity and class membership.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("graph is disconnected: no path from vertex {0} to vertex {1}")]
    Disconnected(usize, usize),
    #[error("geodesic count from {0} to {1} exceeds 2^63")]
    CountOverflow(usize, usize),
    #[error("need at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
}

type Result<T> = std::result::Result<T, AnalysisError>;

const COUNT_LIMIT: u64 = i64::MAX as u64;

/// BFS distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(graph: &Graph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; graph.n_vertices()];
    let mut queue = VecDeque::from([source]);
    dist[source] = Some(0);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].unwrap() + 1;
        for &v in graph.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(next);
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn is_connected(graph: &Graph) -> bool {
    graph.n_vertices() == 0 || bfs_distances(graph, 0).iter().all(Option::is_some)
}

/// All-pairs distances and shortest-path counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicMatrix {
    n: usize,
    dist: Vec<u32>,
    count: Vec<u64>,
}

impl GeodesicMatrix {
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Number of distinct shortest `u`-`v` paths; 1 for `u == v`.
    pub fn count(&self, u: usize, v: usize) -> u64 {
        self.count[u * self.n + v]
    }

    pub fn get(&self, u: usize, v: usize) -> (u32, u64) {
        (self.distance(u, v), self.count(u, v))
    }
}

/// Shortest-path counts from one source, accumulated over the BFS layering:
/// `count(s) = 1` and `count(v) = Σ count(u)` over neighbours `u` one layer
/// closer to `s`.
fn single_source(graph: &Graph, source: usize) -> Result<(Vec<u32>, Vec<u64>)> {
    let n = graph.n_vertices();
    let mut dist = vec![u32::MAX; n];
    let mut count = vec![0u64; n];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    count[source] = 1;
    while let Some(u) = queue.pop_front() {
        for &v in graph.neighbors(u) {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            if dist[v] == dist[u] + 1 {
                count[v] = count[v]
                    .checked_add(count[u])
                    .filter(|&c| c <= COUNT_LIMIT)
                    .ok_or(AnalysisError::CountOverflow(source, v))?;
            }
        }
    }
    if let Some(v) = dist.iter().position(|&d| d == u32::MAX) {
        return Err(AnalysisError::Disconnected(source, v));
    }
    Ok((dist, count))
}

pub fn geodesic_counts(graph: &Graph) -> Result<GeodesicMatrix> {
    let n = graph.n_vertices();
    let mut dist = Vec::with_capacity(n * n);
    let mut count = Vec::with_capacity(n * n);
    for s in 0..n {
        let (d, c) = single_source(graph, s)?;
        dist.extend(d);
        count.extend(c);
    }
    Ok(GeodesicMatrix { n, dist, count })
}

/// Largest geodesic count over nonadjacent pairs; 1 when every pair is
/// adjacent.
pub fn geodetic_index(graph: &Graph) -> Result<u64> {
    Ok(index_from(&geodesic_counts(graph)?))
}

fn index_from(m: &GeodesicMatrix) -> u64 {
    (0..m.n)
        .flat_map(|u| (u + 1..m.n).map(move |v| (u, v)))
        .filter(|&(u, v)| m.distance(u, v) >= 2)
        .map(|(u, v)| m.count(u, v))
        .max()
        .unwrap_or(1)
}

pub fn diameter(graph: &Graph) -> Result<u32> {
    let n = graph.n_vertices();
    let mut best = 0;
    for s in 0..n {
        let dist = bfs_distances(graph, s);
        for (v, d) in dist.into_iter().enumerate() {
            best = best.max(d.ok_or(AnalysisError::Disconnected(s, v))?);
        }
    }
    Ok(best)
}

/// Unit-capacity flow network on the vertex-split graph: vertex `v` becomes
/// `2v -> 2v+1` with capacity 1, and each edge `{u, v}` becomes the arcs
/// `2u+1 -> 2v` and `2v+1 -> 2u`.
struct SplitNetwork {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl SplitNetwork {
    const NONE: usize = usize::MAX;

    fn new(graph: &Graph) -> Self {
        let n = graph.n_vertices();
        let mut net = Self {
            head: vec![Self::NONE; 2 * n],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
        };
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in graph.edges() {
            net.add_arc(2 * u + 1, 2 * v, 1);
            net.add_arc(2 * v + 1, 2 * u, 1);
        }
        net
    }

    /// Adds `from -> to` and its zero-capacity reverse at index `id ^ 1`.
    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        for (a, b, c) in [(from, to, cap), (to, from, 0)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    /// Maximum number of internally vertex-disjoint `s`-`t` paths.
    fn disjoint_paths(&mut self, s: usize, t: usize) -> usize {
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut parent_arc = vec![Self::NONE; self.head.len()];
        loop {
            parent_arc.iter_mut().for_each(|p| *p = Self::NONE);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                let mut e = self.head[u];
                while e != Self::NONE {
                    let v = self.to[e];
                    if self.cap[e] > 0 && v != source && parent_arc[v] == Self::NONE {
                        parent_arc[v] = e;
                        if v == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(v);
                    }
                    e = self.next[e];
                }
                if reached {
                    break;
                }
            }
            if !reached {
                return flow;
            }
            let mut v = sink;
            while v != source {
                let e = parent_arc[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
    }
}

/// Maximum number of internally vertex-disjoint paths between nonadjacent
/// `s` and `t`, which by Menger equals the smallest `s`-`t` separator.
pub fn local_connectivity(graph: &Graph, s: usize, t: usize) -> usize {
    assert!(
        s != t && !graph.has_edge(s, t),
        "needs distinct nonadjacent vertices"
    );
    SplitNetwork::new(graph).disjoint_paths(s, t)
}

/// Exact vertex connectivity. `K_m` has connectivity `m - 1`.
///
/// With `v` of minimum degree, some minimum separator either misses `v`
/// (and separates it from a non-neighbour) or contains `v` (and then
/// separates two nonadjacent neighbours of `v`). Only those pairs are tried.
pub fn vertex_connectivity(graph: &Graph) -> Result<usize> {
    let n = graph.n_vertices();
    if n < 2 {
        return Err(AnalysisError::TooFewVertices { needed: 2, got: n });
    }
    if !is_connected(graph) {
        return Ok(0);
    }
    if graph.n_edges() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    let v = (0..n).min_by_key(|&u| graph.degree(u)).unwrap();
    let mut best = usize::MAX;
    for w in (0..n).filter(|&w| w != v && !graph.has_edge(v, w)) {
        best = best.min(local_connectivity(graph, v, w));
    }
    let nbrs = graph.neighbors(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !graph.has_edge(x, y) {
                best = best.min(local_connectivity(graph, x, y));
            }
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    /// degree -> number of vertices with that degree
    pub degree_multiset: BTreeMap<usize, usize>,
    pub is_connected: bool,
    pub diameter: u32,
    pub vertex_connectivity: usize,
    pub geodetic_index: u64,
    pub is_block: bool,
    /// `(κ, ρ, d)` when the graph is a ρ-regular, κ-connected bigeodetic
    /// block of diameter `d`, i.e. a member of `B(κ, ρ, d)`.
    pub class_membership: Option<(usize, usize, u32)>,
}

impl GraphReport {
    pub fn is_regular(&self) -> bool {
        self.degree_multiset.len() == 1
    }

    pub fn min_degree(&self) -> usize {
        self.degree_multiset.keys().next().copied().unwrap_or(0)
    }
}

pub fn degree_multiset(graph: &Graph) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for v in 0..graph.n_vertices() {
        *m.entry(graph.degree(v)).or_insert(0) += 1;
    }
    m
}

pub fn classify(graph: &Graph) -> Result<GraphReport> {
    let geodesics = geodesic_counts(graph)?;
    let n = graph.n_vertices();
    let diameter = (0..n * n).map(|i| geodesics.dist[i]).max().unwrap_or(0);
    let geodetic_index = index_from(&geodesics);
    let vertex_connectivity = vertex_connectivity(graph)?;
    let degree_multiset = degree_multiset(graph);
    let is_block = vertex_connectivity >= 2;

    let class_membership = match degree_multiset.keys().collect::<Vec<_>>()[..] {
        [&rho] if is_block && diameter >= 2 && geodetic_index <= 2 => {
            Some((vertex_connectivity, rho, diameter))
        }
        _ => None,
    };

    Ok(GraphReport {
        n_vertices: n,
        n_edges: graph.n_edges(),
        degree_multiset,
        is_connected: true,
        diameter,
        vertex_connectivity,
        geodetic_index,
        is_block,
        class_membership,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_geodesics() {
        let c4 = Graph::cycle(4);
        let m = geodesic_counts(&c4).unwrap();
        assert_eq!(m.get(0, 2), (2, 2));
        assert_eq!(m.get(0, 1), (1, 1));
        assert_eq!(m.get(3, 3), (0, 1));
        assert_eq!(geodetic_index(&c4).unwrap(), 2);
        assert_eq!(vertex_connectivity(&c4).unwrap(), 2);
    }

    #[test]
    fn path_geodesics() {
        let p3 = Graph::path(3);
        assert_eq!(geodesic_counts(&p3).unwrap().get(0, 2), (2, 1));
        assert_eq!(vertex_connectivity(&p3).unwrap(), 1);
        assert_eq!(diameter(&Graph::path(6)).unwrap(), 5);
    }

    #[test]
    fn complete_graph_conventions() {
        let k5 = Graph::complete(5);
        assert_eq!(geodetic_index(&k5).unwrap(), 1);
        assert_eq!(diameter(&k5).unwrap(), 1);
        assert_eq!(vertex_connectivity(&k5).unwrap(), 4);
        assert_eq!(vertex_connectivity(&Graph::complete(2)).unwrap(), 1);
    }

    #[test]
    fn complete_bipartite_index() {
        let k23 = Graph::complete_bipartite(2, 3);
        let m = geodesic_counts(&k23).unwrap();
        assert_eq!(m.get(0, 1), (2, 3));
        assert_eq!(geodetic_index(&k23).unwrap(), 3);
        assert_eq!(vertex_connectivity(&k23).unwrap(), 2);
    }

    #[test]
    fn disconnected_inputs() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(geodesic_counts(&g), Err(AnalysisError::Disconnected(0, 2)));
        assert_eq!(diameter(&g), Err(AnalysisError::Disconnected(0, 2)));
        assert_eq!(vertex_connectivity(&g), Ok(0));
        assert_eq!(
            vertex_connectivity(&Graph::complete(1)),
            Err(AnalysisError::TooFewVertices { needed: 2, got: 1 })
        );
    }

    #[test]
    fn count_overflow_is_reported() {
        // A chain of 64 diamonds doubles the count at every stage: 2^64 paths.
        let mut edges = Vec::new();
        for i in 0..64 {
            let base = 3 * i;
            edges.extend([
                (base, base + 1),
                (base, base + 2),
                (base + 1, base + 3),
                (base + 2, base + 3),
            ]);
        }
        let g = Graph::from_edges(3 * 64 + 1, &edges).unwrap();
        assert!(matches!(
            geodesic_counts(&g),
            Err(AnalysisError::CountOverflow(0, _))
        ));
    }

    #[test]
    fn petersen_classification() {
        // Petersen graph: 3-regular, 3-connected, diameter 2, geodetic.
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let g = Graph::from_edges(10, &edges).unwrap();
        let r = classify(&g).unwrap();
        assert_eq!(r.geodetic_index, 1);
        assert_eq!(r.class_membership, Some((3, 3, 2)));
    }
}
