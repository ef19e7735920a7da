//! Certificate emission for single graphs.

use oddgirth::interlacing::{
    build_quotient, check_interlacing, girth7_certificate, independent_weight_check, Certificate,
};
use oddgirth::Graph;
use serde::{Deserialize, Serialize};

use crate::analysis::extremal_component;
use crate::{HarnessError, HarnessResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyMode {
    /// Odd-girth-7 certificate around a heavy vertex.
    Girth7,
    /// Weight interlacing for a user-supplied partition.
    Partition(Vec<Vec<usize>>),
    /// Weight comparison for a user-supplied independent set.
    IndependentSet(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyOutput {
    pub graph_id: String,
    /// Original labels of the certified component, when the input graph
    /// was disconnected and had to be reduced.
    pub component: Option<Vec<usize>>,
    #[serde(flatten)]
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyError {
    pub graph_id: String,
    pub error: String,
}

fn parse_list(text: &str) -> HarnessResult<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| HarnessError::Usage(format!("{s:?} is not a vertex index")))
        })
        .collect()
}

/// Parses `"0,1;2,3,4"` into classes.
pub fn parse_partition(text: &str) -> HarnessResult<Vec<Vec<usize>>> {
    text.split(';').map(parse_list).collect()
}

pub fn parse_set(text: &str) -> HarnessResult<Vec<usize>> {
    parse_list(text)
}

fn precondition(e: oddgirth::Error) -> HarnessError {
    HarnessError::Precondition(e.to_string())
}

/// Produces the requested certificate. For the odd-girth-7 certificate a
/// disconnected graph is reduced to its component of largest ratio.
pub fn certify_graph(
    graph_id: &str,
    g: &Graph,
    mode: &CertifyMode,
) -> HarnessResult<CertifyOutput> {
    let (certificate, component) = match mode {
        CertifyMode::Girth7 => {
            if g.n() == 0 {
                return Err(HarnessError::Precondition("graph has no vertices".into()));
            }
            let (comp, count) = extremal_component(g).map_err(precondition)?;
            let (sub, component) = if count > 1 {
                (g.induced_subgraph(&comp).map_err(precondition)?, Some(comp))
            } else {
                (g.clone(), None)
            };
            let cert = girth7_certificate(&sub).map_err(precondition)?;
            (Certificate::Girth7(cert), component)
        }
        CertifyMode::Partition(classes) => {
            let q = build_quotient(g, classes.clone()).map_err(precondition)?;
            let cert = check_interlacing(g, &q).map_err(precondition)?;
            (Certificate::Interlacing(cert), None)
        }
        CertifyMode::IndependentSet(set) => {
            let cert = independent_weight_check(g, set).map_err(precondition)?;
            (Certificate::IndependentSet(cert), None)
        }
    };
    Ok(CertifyOutput {
        graph_id: graph_id.to_string(),
        component,
        certificate,
    })
}
