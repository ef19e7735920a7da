//! Directory scans: analyze every graph6 line, rank within odd-girth
//! classes, and write a leaderboard.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use oddgirth::OddGirth;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::analysis::{analyze_graph, AnalysisRecord};
use crate::input::{parse_lines, InputItem};
use crate::output::{json_line, records_csv, write_atomic};
use crate::{HarnessError, HarnessResult, CACHE_DIR_ENV, VERSION};

pub const CACHE_FILE_NAME: &str = "scan-cache.tsv";

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub min_girth: usize,
    pub top: Option<usize>,
    pub cache: Option<PathBuf>,
    pub max_n: usize,
    pub jobs: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            min_girth: 3,
            top: None,
            cache: None,
            max_n: crate::DEFAULT_MAX_N,
            jobs: default_jobs(),
        }
    }
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// The cache file implied by the environment, if any.
pub fn default_cache_path() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(|dir| PathBuf::from(dir).join(CACHE_FILE_NAME))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GirthClass {
    pub odd_girth: OddGirth,
    pub entries: Vec<AnalysisRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Leaderboard {
    pub version: String,
    pub min_girth: usize,
    pub top: Option<usize>,
    pub graphs_scanned: usize,
    pub classes: Vec<GirthClass>,
}

#[derive(Debug, Clone, Default)]
pub struct ScanReport {
    pub leaderboard: Option<Leaderboard>,
    pub warnings: Vec<String>,
    pub cache_hits: usize,
    pub computed: usize,
}

impl Leaderboard {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("leaderboard serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        records_csv(
            &["rank"],
            self.classes.iter().flat_map(|c| {
                c.entries
                    .iter()
                    .enumerate()
                    .map(|(i, r)| (vec![(i + 1).to_string()], r))
            }),
        )
    }
}

pub fn cache_key(line: &str) -> String {
    let mut h = Sha256::new();
    h.update(VERSION.as_bytes());
    h.update([0u8]);
    h.update(line.as_bytes());
    hex::encode(h.finalize())
}

/// Loads `<hex>\t<record json>` lines; malformed lines are ignored.
pub fn load_cache(path: &Path, warnings: &mut Vec<String>) -> BTreeMap<String, AnalysisRecord> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return BTreeMap::new(),
        Err(e) => {
            warnings.push(format!("ignoring unreadable cache {}: {e}", path.display()));
            return BTreeMap::new();
        }
    };
    text.lines()
        .filter_map(|l| {
            let (key, json) = l.split_once('\t')?;
            Some((key.to_string(), serde_json::from_str(json).ok()?))
        })
        .collect()
}

pub fn render_cache(cache: &BTreeMap<String, AnalysisRecord>) -> String {
    cache
        .iter()
        .map(|(k, r)| format!("{k}\t{}\n", json_line(r)))
        .collect()
}

/// Regular files directly inside `dir`, sorted by name.
fn list_files(dir: &Path) -> HarnessResult<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| HarnessError::io(format!("cannot read directory {}", dir.display()), e))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    Ok(files)
}

fn collect_items(dir: &Path, warnings: &mut Vec<String>) -> HarnessResult<Vec<InputItem>> {
    let mut items = Vec::new();
    for path in list_files(dir)? {
        let label = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        match std::fs::read_to_string(&path) {
            Ok(text) => items.extend(parse_lines(&label, &text)),
            Err(e) => warnings.push(format!("skipping {}: {e}", path.display())),
        }
    }
    Ok(items)
}

/// Scans `dir` and builds the leaderboard; the cache file, if any, is
/// rewritten with every record computed or reused.
pub fn scan_dir(dir: &Path, opts: &ScanOptions) -> HarnessResult<ScanReport> {
    let mut report = ScanReport::default();
    let items = collect_items(dir, &mut report.warnings)?;
    let mut cache = opts
        .cache
        .as_deref()
        .map(|p| load_cache(p, &mut report.warnings))
        .unwrap_or_default();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| HarnessError::Usage(format!("cannot start worker pool: {e}")))?;
    let outcomes: Vec<(Option<String>, bool, Result<AnalysisRecord, String>)> =
        pool.install(|| {
            items
                .par_iter()
                .map(|item| {
                    let key = item.line.as_deref().map(cache_key);
                    if let Some(hit) = key.as_ref().and_then(|k| cache.get(k)) {
                        if hit.n <= opts.max_n {
                            let mut r = hit.clone();
                            r.graph_id = item.graph_id.clone();
                            return (key, true, Ok(r));
                        }
                    }
                    let result = item.graph.clone().and_then(|g| {
                        analyze_graph(&item.graph_id, &g, opts.max_n).map_err(|e| e.to_string())
                    });
                    (key, false, result)
                })
                .collect()
        });

    let mut by_class: BTreeMap<OddGirth, Vec<AnalysisRecord>> = BTreeMap::new();
    let mut scanned = 0;
    for ((key, hit, outcome), item) in outcomes.into_iter().zip(&items) {
        match outcome {
            Ok(record) => {
                scanned += 1;
                if hit {
                    report.cache_hits += 1;
                } else {
                    report.computed += 1;
                }
                if let Some(k) = key {
                    cache.entry(k).or_insert_with(|| record.clone());
                }
                if record.odd_girth.is_at_least(opts.min_girth) {
                    by_class.entry(record.odd_girth).or_default().push(record);
                }
            }
            Err(e) => report
                .warnings
                .push(format!("skipping {}: {e}", item.graph_id)),
        }
    }

    let classes = by_class
        .into_iter()
        .map(|(odd_girth, mut entries)| {
            entries.sort_by(|a, b| {
                b.ratio
                    .total_cmp(&a.ratio)
                    .then_with(|| a.graph_id.cmp(&b.graph_id))
            });
            if let Some(top) = opts.top {
                entries.truncate(top);
            }
            GirthClass { odd_girth, entries }
        })
        .collect();

    if let Some(path) = opts.cache.as_deref() {
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            std::fs::create_dir_all(parent)
                .map_err(|e| HarnessError::io(format!("cannot create {}", parent.display()), e))?;
        }
        write_atomic(path, render_cache(&cache).as_bytes())?;
    }

    report.leaderboard = Some(Leaderboard {
        version: VERSION.to_string(),
        min_girth: opts.min_girth,
        top: opts.top,
        graphs_scanned: scanned,
        classes,
    });
    Ok(report)
}

/// Writes `<prefix>.csv` and `<prefix>.json` atomically.
pub fn write_leaderboard(board: &Leaderboard, prefix: &Path) -> HarnessResult<(PathBuf, PathBuf)> {
    let with_ext = |ext: &str| {
        let mut s = prefix.as_os_str().to_owned();
        s.push(ext);
        PathBuf::from(s)
    };
    let (csv_path, json_path) = (with_ext(".csv"), with_ext(".json"));
    write_atomic(&csv_path, board.to_csv().as_bytes())?;
    write_atomic(&json_path, board.to_json().as_bytes())?;
    Ok((csv_path, json_path))
}
