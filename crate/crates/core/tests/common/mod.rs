#![allow(dead_code)]

use oddgirth::Graph;
use rand::Rng;

/// G(n, p) with a fixed RNG.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A random spanning tree plus G(n, p) edges, so always connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Length of the shortest odd simple cycle by exhaustive DFS, each cycle
/// rooted at its smallest vertex.
pub fn shortest_odd_cycle_brute(g: &Graph) -> Option<usize> {
    fn dfs(
        g: &Graph,
        start: usize,
        v: usize,
        len: usize,
        seen: &mut [bool],
        best: &mut Option<usize>,
    ) {
        for &w in g.neighbors(v) {
            if w == start && len >= 3 && len % 2 == 1 {
                *best = Some(best.map_or(len, |b| b.min(len)));
            }
            if w > start && !seen[w] && best.is_none_or(|b| len + 1 < b) {
                seen[w] = true;
                dfs(g, start, w, len + 1, seen, best);
                seen[w] = false;
            }
        }
    }
    let mut best = None;
    for s in 0..g.n() {
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        dfs(g, s, s, 1, &mut seen, &mut best);
    }
    best
}

/// Whether some 2-coloring has no monochromatic edge (all 2^n tried).
pub fn two_colorable_brute(g: &Graph) -> bool {
    (0u32..1 << g.n()).any(|mask| g.edges().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1)))
}

/// |E| minus the maximum cut, by trying every vertex subset.
pub fn d2_brute(g: &Graph) -> usize {
    let best_cut = (0u32..1 << g.n())
        .map(|mask| {
            g.edges()
                .filter(|&(u, v)| (mask >> u & 1) != (mask >> v & 1))
                .count()
        })
        .max()
        .unwrap_or(0);
    g.edge_count() - best_cut
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
