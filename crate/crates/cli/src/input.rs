//! Reading graphs from graph6 files or generator specs.

use std::path::Path;

use oddgirth::graph6::{parse_graph6, HEADER};
use oddgirth::Graph;

use crate::generate::{generate, looks_like_spec};
use crate::{HarnessError, HarnessResult};

/// One graph to process: its id, the raw line it came from (for cache
/// keys) and the parse outcome.
#[derive(Debug, Clone)]
pub struct InputItem {
    pub graph_id: String,
    pub line: Option<String>,
    pub graph: Result<Graph, String>,
}

/// Splits graph6 text into items labelled `<label>:<line number>`.
/// Blank lines and bare header lines are skipped.
pub fn parse_lines(label: &str, text: &str) -> Vec<InputItem> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line == HEADER {
                return None;
            }
            Some(InputItem {
                graph_id: format!("{label}:{}", i + 1),
                line: Some(line.to_string()),
                graph: parse_graph6(line).map_err(|e| e.to_string()),
            })
        })
        .collect()
}

/// Resolves an `analyze`/`certify` argument: an existing file is read as
/// graph6 lines, otherwise the argument must be a generator spec.
pub fn read_source(source: &str) -> HarnessResult<Vec<InputItem>> {
    let path = Path::new(source);
    if path.is_file() || !looks_like_spec(source) {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::io(format!("cannot read {source}"), e))?;
        return Ok(parse_lines(source, &text));
    }
    let graph = generate(source)?;
    Ok(vec![InputItem {
        graph_id: source.to_string(),
        line: None,
        graph: Ok(graph),
    }])
}
