use std::io::Write;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};
use oddgirth::graph6::write_graph6;
use oddgirth_cli::analysis::analyze_graph;
use oddgirth_cli::certify::{certify_graph, parse_partition, parse_set, CertifyError, CertifyMode};
use oddgirth_cli::generate::generate;
use oddgirth_cli::input::read_source;
use oddgirth_cli::output::{json_line, records_csv, write_atomic, RecordFormat};
use oddgirth_cli::scan::{
    default_cache_path, default_jobs, scan_dir, write_leaderboard, ScanOptions,
};
use oddgirth_cli::table::{render, table_rows, TableFormat};
use oddgirth_cli::{ExitCode, HarnessError, HarnessResult, DEFAULT_MAX_N};
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "oddgirth",
    version,
    about = "Spectral bipartiteness versus odd girth"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as one graph6 line.
    Gen {
        /// cycle:<k>, complete:<n>, hypercube:<d>, foldedcube:<d>, cayleyf2:<m>:<hex,...>, ...
        spec: String,
        /// Output file (standard output if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Analyze every graph in a graph6 file, or a generated graph.
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value_t = RecordFormat::Json)]
        format: RecordFormat,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Rank the graphs of a directory within each odd-girth class.
    Scan {
        dir: PathBuf,
        #[arg(long, default_value_t = 3)]
        min_girth: usize,
        #[arg(long)]
        top: Option<usize>,
        /// Cache file (defaults to $ODDGIRTH_CACHE_DIR/scan-cache.tsv when set).
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Leaderboard path prefix; writes <prefix>.csv and <prefix>.json.
        #[arg(long, default_value = "leaderboard")]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the table of upper and lower bounds for odd k up to k_max.
    Table {
        k_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        /// Also write the CSV rendering to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Emit a JSON certificate for each input graph.
    Certify {
        input: String,
        /// Interlacing certificate for classes such as "0,1;2,3,4".
        #[arg(long, conflicts_with = "set")]
        partition: Option<String>,
        /// Independent-set weight certificate for a set such as "0,2".
        #[arg(long)]
        set: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
}

fn pool(jobs: Option<usize>) -> HarnessResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or_else(default_jobs).max(1))
        .build()
        .map_err(|e| HarnessError::Usage(format!("cannot start worker pool: {e}")))
}

fn cmd_gen(spec: &str, output: Option<PathBuf>) -> HarnessResult<ExitCode> {
    let g = generate(spec)?;
    let line = write_graph6(&g) + "\n";
    let summary = format!("n={} edges={}", g.n(), g.edge_count());
    match output {
        Some(path) => {
            write_atomic(&path, line.as_bytes())?;
            println!("{summary}");
        }
        None => {
            print!("{line}");
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::Success)
}

fn cmd_analyze(
    input: &str,
    format: RecordFormat,
    max_n: usize,
    jobs: Option<usize>,
) -> HarnessResult<ExitCode> {
    let items = read_source(input)?;
    let results: Vec<_> = pool(jobs)?.install(|| {
        items
            .par_iter()
            .map(|item| {
                let g = item.graph.as_ref().map_err(Clone::clone)?;
                analyze_graph(&item.graph_id, g, max_n).map_err(|e| e.to_string())
            })
            .collect()
    });
    let mut failed = false;
    let mut records = Vec::new();
    for (item, result) in items.iter().zip(results) {
        match result {
            Ok(r) => records.push(r),
            Err(e) => {
                failed = true;
                eprintln!("error: {}: {e}", item.graph_id);
            }
        }
    }
    let text = match format {
        RecordFormat::Json => records.iter().map(|r| json_line(r) + "\n").collect(),
        RecordFormat::Csv => records_csv(&[], records.iter().map(|r| (Vec::new(), r))),
    };
    print!("{text}");
    for r in records.iter().filter(|r| !r.sound) {
        eprintln!("warning: {} exceeds its odd-girth bound", r.graph_id);
    }
    Ok(if failed {
        ExitCode::Partial
    } else {
        ExitCode::Success
    })
}

fn cmd_scan(dir: PathBuf, opts: ScanOptions, output: PathBuf) -> HarnessResult<ExitCode> {
    let report = scan_dir(&dir, &opts)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let board = report
        .leaderboard
        .expect("scan always builds a leaderboard");
    let (csv_path, json_path) = write_leaderboard(&board, &output)?;
    for class in &board.classes {
        if let Some(best) = class.entries.first() {
            println!(
                "odd girth {}: {} graph(s), best {} at {}",
                class.odd_girth,
                class.entries.len(),
                best.graph_id,
                best.ratio
            );
        }
    }
    println!(
        "scanned {} graph(s) ({} cached); wrote {} and {}",
        board.graphs_scanned,
        report.cache_hits,
        csv_path.display(),
        json_path.display()
    );
    Ok(ExitCode::Success)
}

fn cmd_table(k_max: usize, format: TableFormat, csv: Option<PathBuf>) -> HarnessResult<ExitCode> {
    let rows = table_rows(k_max)?;
    print!("{}", render(&rows, format));
    if let Some(path) = csv {
        write_atomic(&path, render(&rows, TableFormat::Csv).as_bytes())?;
    }
    Ok(ExitCode::Success)
}

fn cmd_certify(input: &str, mode: CertifyMode, max_n: usize) -> HarnessResult<ExitCode> {
    let items = read_source(input)?;
    let mut code = ExitCode::Success;
    let mut out = std::io::stdout().lock();
    for item in &items {
        let result = match &item.graph {
            Err(e) => Err(HarnessError::Precondition(e.clone())),
            Ok(g) if g.n() > max_n => Err(HarnessError::Precondition(format!(
                "vertex count {} exceeds the limit {max_n}",
                g.n()
            ))),
            Ok(g) => certify_graph(&item.graph_id, g, &mode),
        };
        let line = match result {
            Ok(cert) => {
                if !cert.certificate.is_valid() && code == ExitCode::Success {
                    code = ExitCode::Partial;
                }
                json_line(&cert)
            }
            Err(e) => {
                code = ExitCode::Precondition;
                json_line(&CertifyError {
                    graph_id: item.graph_id.clone(),
                    error: e.to_string(),
                })
            }
        };
        writeln!(out, "{line}").map_err(|e| HarnessError::io("cannot write output", e))?;
    }
    Ok(code)
}

fn run(cli: Cli) -> HarnessResult<ExitCode> {
    match cli.command {
        Command::Gen { spec, output } => cmd_gen(&spec, output),
        Command::Analyze {
            input,
            format,
            max_n,
            jobs,
        } => cmd_analyze(&input, format, max_n, jobs),
        Command::Scan {
            dir,
            min_girth,
            top,
            cache,
            output,
            max_n,
            jobs,
        } => {
            let opts = ScanOptions {
                min_girth,
                top,
                cache: cache.or_else(default_cache_path),
                max_n,
                jobs: jobs.unwrap_or_else(default_jobs),
            };
            cmd_scan(dir, opts, output)
        }
        Command::Table { k_max, format, csv } => cmd_table(k_max, format, csv),
        Command::Certify {
            input,
            partition,
            set,
            max_n,
        } => {
            let mode = match (partition, set) {
                (Some(p), _) => CertifyMode::Partition(parse_partition(&p)?),
                (_, Some(s)) => CertifyMode::IndependentSet(parse_set(&s)?),
                _ => CertifyMode::Girth7,
            };
            cmd_certify(&input, mode, max_n)
        }
    }
}

fn main() {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    process::exit(code as i32);
}
