//! Per-graph analysis records.

use oddgirth::bounds::best_upper_bound;
use oddgirth::graph::{self, Graph, OddGirth};
use oddgirth::spectral::{adjacency_spectrum, signless_laplacian_spectrum};
use oddgirth::{Error, Result};
use serde::{Deserialize, Serialize};

/// Absolute slack allowed when comparing a ratio with its bound.
pub const SOUNDNESS_SLACK: f64 = 1e-9;

/// Column order shared by every CSV output.
pub const CSV_FIELDS: [&str; 12] = [
    "graph_id",
    "n",
    "edge_count",
    "odd_girth",
    "lambda1",
    "lambdan",
    "ratio",
    "qn",
    "bound_for_girth",
    "sound",
    "connected",
    "components",
];

/// Spectral summary of one graph. For a disconnected graph the numeric
/// fields describe the component with the largest ratio, since the
/// spectrum of a graph is the union of its components' spectra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub graph_id: String,
    pub n: usize,
    pub edge_count: usize,
    pub odd_girth: OddGirth,
    pub lambda1: f64,
    pub lambdan: f64,
    /// (λ₁+λ_n)/n
    pub ratio: f64,
    /// Least signless Laplacian eigenvalue.
    pub qn: f64,
    pub bound_for_girth: f64,
    pub sound: bool,
    pub connected: bool,
    pub components: usize,
}

impl AnalysisRecord {
    pub fn csv_fields(&self) -> [String; 12] {
        [
            self.graph_id.clone(),
            self.n.to_string(),
            self.edge_count.to_string(),
            self.odd_girth.to_string(),
            self.lambda1.to_string(),
            self.lambdan.to_string(),
            self.ratio.to_string(),
            self.qn.to_string(),
            self.bound_for_girth.to_string(),
            self.sound.to_string(),
            self.connected.to_string(),
            self.components.to_string(),
        ]
    }
}

struct Part {
    graph: Graph,
    lambda1: f64,
    lambdan: f64,
    ratio: f64,
}

fn spectral_part(g: Graph) -> Result<Part> {
    let spectrum = adjacency_spectrum(&g)?;
    let (lambda1, lambdan) = (spectrum.largest(), spectrum.smallest());
    Ok(Part {
        ratio: (lambda1 + lambdan) / g.n() as f64,
        graph: g,
        lambda1,
        lambdan,
    })
}

fn best_part(g: &Graph) -> Result<(Part, Vec<usize>, usize)> {
    let comps = graph::connected_components(g);
    let count = comps.len();
    if count == 1 {
        return Ok((
            spectral_part(g.clone())?,
            comps.into_iter().next().unwrap(),
            1,
        ));
    }
    let mut best: Option<(Part, Vec<usize>)> = None;
    for comp in comps {
        let part = spectral_part(g.induced_subgraph(&comp)?)?;
        if best.as_ref().is_none_or(|(b, _)| part.ratio > b.ratio) {
            best = Some((part, comp));
        }
    }
    let (part, comp) =
        best.ok_or_else(|| Error::InvalidParameter("graph has no vertices".into()))?;
    Ok((part, comp, count))
}

/// The vertices of the component maximizing (λ₁+λ_n)/n (earliest on
/// ties) and the number of components.
pub fn extremal_component(g: &Graph) -> Result<(Vec<usize>, usize)> {
    best_part(g).map(|(_, comp, count)| (comp, count))
}

/// Analyzes one graph, rejecting graphs above `max_n` vertices.
pub fn analyze_graph(graph_id: &str, g: &Graph, max_n: usize) -> Result<AnalysisRecord> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    if g.n() > max_n {
        return Err(Error::CapacityExceeded {
            what: "vertex count",
            got: g.n(),
            limit: max_n,
        });
    }
    let (part, _, components) = best_part(g)?;
    let odd_girth = graph::odd_girth(&part.graph);
    let qn = signless_laplacian_spectrum(&part.graph)?.smallest();
    let bound = best_upper_bound(odd_girth)?.value;
    Ok(AnalysisRecord {
        graph_id: graph_id.to_string(),
        n: part.graph.n(),
        edge_count: part.graph.edge_count(),
        odd_girth,
        lambda1: part.lambda1,
        lambdan: part.lambdan,
        ratio: part.ratio,
        qn,
        bound_for_girth: bound,
        sound: part.ratio <= bound + SOUNDNESS_SLACK,
        connected: components == 1,
        components,
    })
}
