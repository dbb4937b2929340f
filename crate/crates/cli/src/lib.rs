//! Command-line front end for the tiling engines.
//!
//! Exit codes: 0 for success (and for "tileable"), 1 for the domain answer
//! "no" (an unbalanced or untileable board), 2 for usage errors, malformed
//! partitions, and out-of-bound requests.

use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ferrotile_core::{
    build_graph, count_brute, count_fkt, hall_check, max_matching, tile, tiling_enumerator,
    tiling_to_json, HallError, Partition, TileResult,
};

pub mod random;
pub mod render;
pub mod sweep;

pub use random::random_partition;
pub use render::{render_ascii, AsciiRendering, RenderError};

/// What a finished invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout_payload: String,
}

/// Runs the tool on `argv` (without the program name), capturing stdout.
/// Diagnostics go to a discarded stderr sink; tests that need them use
/// [`run_with`].
pub fn run<S: AsRef<str>>(argv: &[S]) -> CommandOutcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let exit_code = run_with(argv, &mut out, &mut err);
    CommandOutcome {
        exit_code,
        stdout_payload: String::from_utf8(out).expect("output is UTF-8"),
    }
}

/// Runs the tool on `argv`, streaming stdout and stderr to the given sinks,
/// and returns the exit code.
pub fn run_with<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let full = std::iter::once("ferrotile").chain(argv.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(_) => 2,
    }
}

#[derive(Parser)]
#[command(name = "ferrotile", version, about = "Domino tilings of Ferrers boards")]
struct Cli {
    /// Output format for check, tile, count, and hall.
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Fkt,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Report the board's color counts; exit 0 exactly when balanced.
    Check { partition: String },
    /// Construct a tiling, or report the imbalance that rules one out.
    Tile { partition: String },
    /// Count the board's tilings exactly.
    Count {
        partition: String,
        /// Counting backend: the determinant route or the backtracking oracle.
        #[arg(long, value_enum, default_value_t = Method::Fkt)]
        method: Method,
    },
    /// Stream every tiling, one JSON line each.
    Enumerate {
        partition: String,
        /// Stop after this many tilings.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
    },
    /// Exhaustively verify the subset condition on the board's graph.
    Hall { partition: String },
    /// Cross-check every engine on all partitions of every n up to a bound.
    Sweep {
        #[arg(long)]
        max_n: usize,
    },
    /// Time each backend on one random board per size (CSV on stdout).
    Bench {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let board = match &cli.command {
        Command::Check { partition }
        | Command::Tile { partition }
        | Command::Count { partition, .. }
        | Command::Enumerate { partition, .. }
        | Command::Hall { partition } => match Partition::parse(partition) {
            Ok(board) => Some(board),
            Err(e) => {
                writeln!(err, "error: invalid partition `{partition}`: {e}")?;
                return Ok(2);
            }
        },
        _ => None,
    };
    match &cli.command {
        Command::Check { .. } => cmd_check(&board.unwrap(), cli.format, out),
        Command::Tile { .. } => cmd_tile(&board.unwrap(), cli.format, out),
        Command::Count { method, .. } => {
            cmd_count(&board.unwrap(), *method, cli.format, out, err)
        }
        Command::Enumerate { limit, .. } => {
            cmd_enumerate(&board.unwrap(), limit.map(|k| k as usize), out)
        }
        Command::Hall { .. } => cmd_hall(&board.unwrap(), cli.format, out, err),
        Command::Sweep { max_n } => cmd_sweep(*max_n, out),
        Command::Bench { max_n, seed } => cmd_bench(*max_n, *seed, out),
    }
}

fn cmd_check(board: &Partition, format: Format, out: &mut dyn Write) -> std::io::Result<i32> {
    let summary = board.color_summary();
    match format {
        Format::Ascii => writeln!(
            out,
            "black={} white={} imbalance={}",
            summary.black, summary.white, summary.imbalance
        )?,
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "black": summary.black,
                "white": summary.white,
                "imbalance": summary.imbalance,
            })
        )?,
    }
    Ok(if summary.imbalance == 0 { 0 } else { 1 })
}

fn cmd_tile(board: &Partition, format: Format, out: &mut dyn Write) -> std::io::Result<i32> {
    match tile(board) {
        TileResult::Tiled(tiling) => {
            match format {
                Format::Ascii => {
                    let rendering = render_ascii(board, Some(&tiling))
                        .expect("the tiler only returns valid tilings");
                    if !rendering.lines().is_empty() {
                        writeln!(out, "{rendering}")?;
                    }
                }
                Format::Json => writeln!(out, "{}", tiling_to_json(&tiling))?,
            }
            Ok(0)
        }
        TileResult::Untileable { imbalance } => {
            match format {
                Format::Ascii => writeln!(out, "untileable imbalance={imbalance}")?,
                Format::Json => {
                    writeln!(out, "{}", json!({"tileable": false, "imbalance": imbalance}))?
                }
            }
            Ok(1)
        }
    }
}

fn cmd_count(
    board: &Partition,
    method: Method,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let count = match method {
        Method::Fkt => count_fkt(board),
        Method::Brute => match count_brute(board) {
            Ok(count) => count,
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(2);
            }
        },
    };
    match format {
        Format::Ascii => writeln!(out, "{count}")?,
        Format::Json => writeln!(out, "{}", json!({"count": count.to_string()}))?,
    }
    Ok(0)
}

fn cmd_enumerate(
    board: &Partition,
    limit: Option<usize>,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    let cursor = tiling_enumerator(board);
    for tiling in cursor.take(limit.unwrap_or(usize::MAX)) {
        writeln!(out, "{}", tiling_to_json(&tiling))?;
    }
    Ok(0)
}

fn cmd_hall(
    board: &Partition,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let graph = build_graph(board);
    match hall_check(&graph) {
        Ok(report) => {
            match format {
                Format::Ascii => {
                    let witness: Vec<String> =
                        report.witness.iter().map(usize::to_string).collect();
                    writeln!(
                        out,
                        "satisfied={} min_slack={} witness=[{}]",
                        report.satisfied,
                        report.min_slack,
                        witness.join(",")
                    )?;
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "satisfied": report.satisfied,
                        "min_slack": report.min_slack,
                        "witness": report.witness,
                    })
                )?,
            }
            Ok(if report.satisfied { 0 } else { 1 })
        }
        Err(HallError::Unbalanced { left, right }) => {
            match format {
                Format::Ascii => writeln!(out, "unbalanced black={left} white={right}")?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"satisfied": false, "black": left, "white": right})
                )?,
            }
            Ok(1)
        }
        Err(e @ HallError::TooLarge { .. }) => {
            writeln!(err, "error: {e}")?;
            Ok(2)
        }
    }
}

fn cmd_sweep(max_n: usize, out: &mut dyn Write) -> std::io::Result<i32> {
    let report = sweep::run_sweep(max_n, sweep::worker_count());
    for line in &report.lines {
        writeln!(out, "{line}")?;
    }
    for failure in &report.failures {
        writeln!(out, "FAIL {failure}")?;
    }
    if report.passed() {
        writeln!(out, "sweep ok boards={}", report.boards)?;
        Ok(0)
    } else {
        writeln!(
            out,
            "sweep FAILED boards={} failures={}",
            report.boards,
            report.failures.len()
        )?;
        Ok(1)
    }
}

fn cmd_bench(max_n: usize, seed: u64, out: &mut dyn Write) -> std::io::Result<i32> {
    writeln!(out, "n,parts,backend,us")?;
    for n in 1..=max_n {
        let board = random_partition(n, seed.wrapping_add(n as u64));
        let parts = board.to_string();
        let mut rows: Vec<(&str, u128)> = vec![
            ("tiler", time_us(|| {
                black_box(tile(black_box(&board)));
            })),
            ("matching", time_us(|| {
                let graph = build_graph(black_box(&board));
                black_box(max_matching(&graph));
            })),
            ("fkt", time_us(|| {
                black_box(count_fkt(black_box(&board)));
            })),
        ];
        if board.total() <= ferrotile_core::BRUTE_MAX_CELLS {
            rows.push(("brute", time_us(|| {
                black_box(count_brute(black_box(&board)).expect("size checked"));
            })));
        }
        // The parts field holds commas, so it is always quoted.
        for (backend, us) in rows {
            writeln!(out, "{n},\"{parts}\",{backend},{us}")?;
        }
    }
    Ok(0)
}

/// Wall time of one run in microseconds, after one discarded warmup run.
fn time_us(mut work: impl FnMut()) -> u128 {
    work();
    let start = Instant::now();
    work();
    start.elapsed().as_micros()
}
