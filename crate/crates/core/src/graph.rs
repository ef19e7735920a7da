//! Undirected simple graphs, the generator families used throughout the
//! crate, and the combinatorial queries (odd girth, components,
//! independence, exact bipartization distance).

use std::collections::VecDeque;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Largest vertex count accepted by [`d2_oracle`].
pub const D2_MAX_VERTICES: usize = 24;

/// Largest dimension accepted by [`cayley_f2`] (2^m vertices).
pub const CAYLEY_MAX_DIM: u32 = 20;

/// An undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are sorted and duplicate free; there are no loops.
/// Values are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut total = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        Ok(Graph {
            adj,
            edges: total / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Common degree if the graph is regular (`None` for the null graph).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn average_degree(&self) -> f64 {
        if self.n() == 0 {
            0.0
        } else {
            2.0 * self.edges as f64 / self.n() as f64
        }
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n() {
                return Err(invalid(format!("vertex {v} out of range")));
            }
            if index[v] != usize::MAX {
                return Err(invalid(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter(move |&&w| index[w] != usize::MAX && index[w] > i)
                .map(move |&w| (i, index[w]))
        });
        Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect()),
        );
        Graph {
            adj,
            edges: self.edges + other.edges,
        }
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap() + 1;
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Length of the shortest odd cycle, or `Infinite` for bipartite graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OddGirth {
    Finite(usize),
    Infinite,
}

impl OddGirth {
    /// Whether every odd cycle has length at least `k`.
    pub fn is_at_least(self, k: usize) -> bool {
        match self {
            OddGirth::Finite(g) => g >= k,
            OddGirth::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            OddGirth::Finite(g) => Some(g),
            OddGirth::Infinite => None,
        }
    }
}

impl fmt::Display for OddGirth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddGirth::Finite(g) => write!(f, "{g}"),
            OddGirth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for OddGirth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OddGirth::Finite(g) => s.serialize_u64(*g as u64),
            OddGirth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for OddGirth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct OddGirthVisitor;

        impl Visitor<'_> for OddGirthVisitor {
            type Value = OddGirth;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an odd integer >= 3 or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<OddGirth, E> {
                if v >= 3 && v % 2 == 1 {
                    Ok(OddGirth::Finite(v as usize))
                } else {
                    Err(E::custom(format!(
                        "odd girth {v} is not an odd integer >= 3"
                    )))
                }
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<OddGirth, E> {
                u64::try_from(v)
                    .map_err(|_| E::custom("negative odd girth"))
                    .and_then(|v| self.visit_u64(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<OddGirth, E> {
                match v {
                    "inf" | "Infinite" => Ok(OddGirth::Infinite),
                    other => other
                        .parse::<u64>()
                        .map_err(|_| E::custom(format!("bad odd girth {other:?}")))
                        .and_then(|v| self.visit_u64(v)),
                }
            }
        }

        d.deserialize_any(OddGirthVisitor)
    }
}

/// The cycle C_k.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(format!("cycle length {k} < 3")));
    }
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// The complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The path P_n on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The star K_{1,leaves}; vertex 0 is the center.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// The complete bipartite graph K_{a,b}; the first part is `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Cayley graph of the additive group F_2^m. Vertices are the integers
/// `0..2^m` read as bit vectors; `x ~ y` iff `x ^ y` is a generator.
pub fn cayley_f2(m: u32, generators: &[u64]) -> Result<Graph> {
    if m < 1 {
        return Err(invalid("cayley graph needs m >= 1"));
    }
    if m > CAYLEY_MAX_DIM {
        return Err(Error::CapacityExceeded {
            what: "F2 dimension",
            got: m as usize,
            limit: CAYLEY_MAX_DIM as usize,
        });
    }
    let gens = normalize_generators(m, generators)?;
    let order = 1usize << m;
    let adj: Vec<Vec<usize>> = (0..order)
        .map(|x| {
            let mut list: Vec<usize> = gens.iter().map(|&s| x ^ s as usize).collect();
            list.sort_unstable();
            list
        })
        .collect();
    Ok(Graph {
        edges: order * gens.len() / 2,
        adj,
    })
}

/// Sorted, deduplicated generator set; rejects zero and out-of-range vectors.
pub(crate) fn normalize_generators(m: u32, generators: &[u64]) -> Result<Vec<u64>> {
    if generators.is_empty() {
        return Err(invalid("generator set is empty"));
    }
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    for &s in &gens {
        if s == 0 {
            return Err(invalid("zero generator would create self-loops"));
        }
        if m < 64 && s >> m != 0 {
            return Err(invalid(format!("generator {s:#x} does not fit in F2^{m}")));
        }
    }
    Ok(gens)
}

/// Unit vectors of F_2^m.
pub fn unit_vectors(m: u32) -> Vec<u64> {
    (0..m).map(|i| 1u64 << i).collect()
}

/// Generators of the folded d-cube: unit vectors of F_2^(d-1) plus all-ones.
pub fn folded_cube_generators(d: u32) -> Result<Vec<u64>> {
    if d < 2 {
        return Err(invalid(format!("folded cube dimension {d} < 2")));
    }
    let m = d - 1;
    let mut gens = unit_vectors(m);
    gens.push((1u64 << m) - 1);
    Ok(gens)
}

/// The hypercube Q_d.
pub fn hypercube(d: u32) -> Result<Graph> {
    cayley_f2(d, &unit_vectors(d))
}

/// The folded d-cube, the hypercube Q_d with antipodal vertices identified.
pub fn folded_cube(d: u32) -> Result<Graph> {
    let gens = folded_cube_generators(d)?;
    cayley_f2(d - 1, &gens)
}

/// Odd girth by breadth-first search from every vertex: an edge joining
/// two vertices at equal distance `d` from the root closes an odd walk of
/// length `2d + 1`, and the minimum over all roots is the shortest odd cycle.
pub fn odd_girth(g: &Graph) -> OddGirth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            let dx = dist[x];
            if 2 * dx + 1 >= best {
                break 'bfs;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dx + 1;
                    queue.push_back(y);
                } else if dist[y] == dx {
                    best = best.min(2 * dx + 1);
                    break 'bfs;
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        OddGirth::Infinite
    } else {
        OddGirth::Finite(best)
    }
}

/// Proper 2-colouring if one exists (`true` marks the second class).
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut stack = Vec::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        stack.push(start);
        while let Some(x) = stack.pop() {
            let cx = color[x].unwrap();
            for &y in g.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        stack.push(y);
                    }
                    Some(cy) if cy == cx => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut components = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && connected_components(g).len() == 1
}

pub fn is_independent_set(g: &Graph, set: &[usize]) -> Result<bool> {
    let mut member = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return Err(invalid(format!("vertex {v} out of range")));
        }
        member[v] = true;
    }
    Ok(set
        .iter()
        .all(|&v| g.neighbors(v).iter().all(|&w| !member[w])))
}

/// Minimum number of edges whose removal leaves a bipartite graph, i.e.
/// `|E|` minus the maximum cut, by exhaustive Gray-code enumeration of
/// 2-colourings with vertex 0 pinned.
pub fn d2_oracle(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > D2_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "vertex count for exhaustive bipartization",
            got: n,
            limit: D2_MAX_VERTICES,
        });
    }
    if n < 2 || is_bipartite(g) {
        return Ok(0);
    }
    let nbr: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let total = g.edge_count() as i64;
    let mut side = 0u32;
    let mut cut: i64 = 0;
    let mut best: i64 = 0;
    for step in 1u64..(1u64 << (n - 1)) {
        // Gray code: flip vertex 1 + trailing_zeros(step).
        let v = 1 + step.trailing_zeros() as usize;
        let same_mask = if side >> v & 1 == 1 { side } else { !side };
        let same = (nbr[v] & same_mask).count_ones() as i64;
        let cross = nbr[v].count_ones() as i64 - same;
        cut += same - cross;
        side ^= 1 << v;
        if cut > best {
            best = cut;
            if best == total {
                break;
            }
        }
    }
    Ok((total - best) as usize)
}
