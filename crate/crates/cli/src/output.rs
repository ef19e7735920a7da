//! Record encodings and atomic file writes.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::analysis::{AnalysisRecord, CSV_FIELDS};
use crate::{HarnessError, HarnessResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum RecordFormat {
    #[default]
    Json,
    Csv,
}

/// One JSON object per line.
pub fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize to JSON")
}

/// CSV text with a header row, using `extra` leading columns.
pub fn records_csv<'a, I>(extra: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = (Vec<String>, &'a AnalysisRecord)>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header: Vec<&str> = extra.iter().copied().chain(CSV_FIELDS).collect();
    w.write_record(&header).expect("in-memory write");
    for (lead, record) in rows {
        let fields: Vec<String> = lead.into_iter().chain(record.csv_fields()).collect();
        w.write_record(&fields).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

/// Writes `contents` to a temporary file beside `path`, then renames it
/// into place so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> HarnessResult<()> {
    let context = || format!("cannot write {}", path.display());
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp =
        tempfile::NamedTempFile::new_in(dir).map_err(|e| HarnessError::io(context(), e))?;
    tmp.write_all(contents)
        .and_then(|_| tmp.as_file().sync_all())
        .map_err(|e| HarnessError::io(context(), e))?;
    tmp.persist(path)
        .map_err(|e| HarnessError::io(context(), e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::analyze_graph;
    use oddgirth::graph::cycle;

    #[test]
    fn csv_quotes_and_header() {
        let r = analyze_graph("a,b:1", &cycle(5).unwrap(), 100).unwrap();
        let text = records_csv(&["rank"], [(vec!["1".to_string()], &r)]);
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("rank,graph_id,n,"));
        assert!(lines.next().unwrap().starts_with("1,\"a,b:1\",5,5,5,2,"));
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.txt");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        assert!(matches!(
            write_atomic(&dir.path().join("missing/x"), b""),
            Err(HarnessError::Io { .. })
        ));
    }
}
