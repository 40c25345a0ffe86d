//! Independent oracles and graph fixtures shared by the integration tests.
//!
//! Nothing here calls the library's distance, counting or connectivity code.

#![allow(dead_code)]

use bigeodetic::catalog;
use bigeodetic::construct::star_construct;
use bigeodetic::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `(distance, number of shortest paths)` for every ordered pair, found by
/// enumerating simple paths of length 0, 1, 2, … until one reaches the
/// target. Exponential, so keep the graphs small.
pub fn enumerate_geodesics(g: &Graph) -> Vec<Vec<(u32, u64)>> {
    let n = g.n_vertices();
    let mut out = vec![vec![(0, 0); n]; n];
    for (s, row) in out.iter_mut().enumerate() {
        for (t, cell) in row.iter_mut().enumerate() {
            let mut len = 0;
            loop {
                let mut on_path = vec![false; n];
                on_path[s] = true;
                let count = walk(g, s, t, len, &mut on_path);
                if count > 0 {
                    *cell = (len, count);
                    break;
                }
                len += 1;
                assert!(len as usize <= n, "vertices {s} and {t} are not connected");
            }
        }
    }
    out
}

/// Simple paths from `at` to `t` with exactly `left` more edges.
fn walk(g: &Graph, at: usize, t: usize, left: u32, on_path: &mut [bool]) -> u64 {
    if left == 0 {
        return u64::from(at == t);
    }
    let mut total = 0;
    for &w in g.neighbors(at) {
        if !on_path[w] {
            on_path[w] = true;
            total += walk(g, w, t, left - 1, on_path);
            on_path[w] = false;
        }
    }
    total
}

fn connected_without(g: &Graph, removed: &[bool]) -> bool {
    let n = g.n_vertices();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Smallest vertex set whose removal disconnects the graph, by trying every
/// subset in order of size. A complete graph on `m` vertices gives `m - 1`.
pub fn brute_force_connectivity(g: &Graph) -> usize {
    let n = g.n_vertices();
    let complete = g.n_edges() == n * n.saturating_sub(1) / 2;
    if n <= 1 || complete {
        return n.saturating_sub(1);
    }
    for size in 0..n - 1 {
        let mut found = false;
        subsets(n, size, &mut Vec::new(), 0, &mut |set| {
            let mut removed = vec![false; n];
            for &v in set {
                removed[v] = true;
            }
            if !connected_without(g, &removed) {
                found = true;
            }
            found
        });
        if found {
            return size;
        }
    }
    unreachable!("a non-complete graph has a separating set of size at most n - 2")
}

/// Calls `visit` on each `size`-subset of `0..n`; stops once it returns true.
fn subsets(
    n: usize,
    size: usize,
    cur: &mut Vec<usize>,
    from: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if cur.len() == size {
        return visit(cur);
    }
    for v in from..n {
        if n - v < size - cur.len() {
            break;
        }
        cur.push(v);
        let stop = subsets(n, size, cur, v + 1, visit);
        cur.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut present = vec![false; n * n];
    let mut edges = Vec::new();
    let mut add = |u: usize, v: usize, edges: &mut Vec<(usize, usize)>| {
        if !present[u * n + v] {
            present[u * n + v] = true;
            present[v * n + u] = true;
            edges.push((u, v));
        }
    };
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        add(order[i], parent, &mut edges);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                add(u, v, &mut edges);
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated graph is simple")
}

/// `count` seeded random connected graphs with 2 to `max_n` vertices.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let p = rng.gen_range(0.0..0.5);
            random_connected_graph(&mut rng, n, p)
        })
        .collect()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

pub fn star_of(name: &str) -> Graph {
    let entry = catalog::get_design(name).unwrap();
    star_construct(&entry.design).unwrap().graph().clone()
}

/// The fixed small graphs the tests use, each with at most 20 vertices.
pub fn small_fixtures() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("petersen".to_owned(), petersen()),
        ("star(fig3)".to_owned(), star_of("fig3")),
        ("K2,3".to_owned(), Graph::complete_bipartite(2, 3)),
        ("K4,4".to_owned(), Graph::complete_bipartite(4, 4)),
        ("P5".to_owned(), Graph::path(5)),
    ];
    for m in 2..=6 {
        out.push((format!("K{m}"), Graph::complete(m)));
    }
    for m in [3, 4, 7, 12] {
        out.push((format!("C{m}"), Graph::cycle(m)));
    }
    out
}
