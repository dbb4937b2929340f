//! Cross-engine equivalence sweep: on every partition up to a size bound,
//! all four tileability verdicts must agree, every produced tiling must
//! validate, and every odd-split step must satisfy its structural facts.

use std::thread;

use ferrotile_core::{
    build_graph, count_brute, count_fkt, hall_check, matching_to_tiling, max_matching,
    tile_traced, validate_tiling, CaseId, Cell, Color, Partition, StepOutcome, BRUTE_MAX_CELLS,
    HALL_MAX_LEFT,
};

/// Aggregated result of a sweep, with per-size summary lines and one message
/// per failed board.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub boards: usize,
    pub lines: Vec<String>,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Worker count for the sweep: the `FERROTILE_THREADS` variable when set,
/// otherwise the machine's available parallelism.
pub fn worker_count() -> usize {
    if let Ok(value) = std::env::var("FERROTILE_THREADS") {
        if let Ok(threads) = value.trim().parse::<usize>() {
            if threads >= 1 {
                return threads;
            }
        }
    }
    thread::available_parallelism().map_or(1, |n| n.get())
}

/// Checks every partition of every `n <= max_n`, distributing boards over
/// `threads` workers. Results are reported in board order no matter how the
/// workers finish.
pub fn run_sweep(max_n: usize, threads: usize) -> SweepReport {
    let mut report = SweepReport {
        boards: 0,
        lines: Vec::new(),
        failures: Vec::new(),
    };
    for n in 0..=max_n {
        let boards = Partition::partitions_of(n);
        let verdicts = check_all(&boards, threads);
        let mut failed = 0;
        for (board, verdict) in boards.iter().zip(&verdicts) {
            if let Err(message) = verdict {
                failed += 1;
                report.failures.push(format!("partition={board}: {message}"));
            }
        }
        report.boards += boards.len();
        report.lines.push(format!(
            "n={n} boards={} {}",
            boards.len(),
            if failed == 0 {
                "ok".to_string()
            } else {
                format!("FAILED={failed}")
            }
        ));
    }
    report
}

fn check_all(boards: &[Partition], threads: usize) -> Vec<Result<(), String>> {
    let workers = threads.max(1).min(boards.len().max(1));
    if workers <= 1 {
        return boards.iter().map(check_board).collect();
    }
    let chunk_size = boards.len().div_ceil(workers);
    thread::scope(|scope| {
        let handles: Vec<_> = boards
            .chunks(chunk_size)
            .map(|chunk| scope.spawn(move || chunk.iter().map(check_board).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|handle| handle.join().expect("sweep worker panicked"))
            .collect()
    })
}

/// Runs every engine on one board and cross-checks the verdicts.
pub fn check_board(board: &Partition) -> Result<(), String> {
    let balanced = board.imbalance() == 0;

    let (result, trace) = tile_traced(board);
    if result.is_tiled() != balanced {
        return Err(format!(
            "tiler verdict {} disagrees with balance {balanced}",
            result.is_tiled()
        ));
    }
    if let Some(tiling) = result.tiling() {
        if !validate_tiling(board, tiling) {
            return Err("tiler produced an invalid tiling".into());
        }
        if tiling.len() * 2 != board.total() {
            return Err("tiler produced the wrong number of dominoes".into());
        }
    }
    check_odd_splits(&trace)?;

    let graph = build_graph(board);
    let matching = max_matching(&graph);
    if matching.is_perfect(&graph) != balanced {
        return Err(format!(
            "matching verdict {} disagrees with balance {balanced}",
            matching.is_perfect(&graph)
        ));
    }
    if matching.is_perfect(&graph) {
        let tiling = matching_to_tiling(board, &matching)
            .map_err(|e| format!("perfect matching failed to convert: {e}"))?;
        if !validate_tiling(board, &tiling) {
            return Err("matching produced an invalid tiling".into());
        }
    }

    let by_fkt = count_fkt(board);
    if !by_fkt.is_zero() != balanced {
        return Err(format!(
            "determinant count {by_fkt} disagrees with balance {balanced}"
        ));
    }
    if board.total() <= BRUTE_MAX_CELLS {
        let by_brute = count_brute(board).expect("cell bound checked");
        if by_fkt != by_brute {
            return Err(format!(
                "counts disagree: determinant {by_fkt} vs backtracking {by_brute}"
            ));
        }
    }

    if balanced && graph.left().len() <= HALL_MAX_LEFT {
        let report = hall_check(&graph).map_err(|e| format!("subset check failed: {e}"))?;
        if !report.satisfied {
            return Err(format!(
                "subset condition violated with slack {}",
                report.min_slack
            ));
        }
    }

    Ok(())
}

/// Structural facts of every odd-split step: odd column, odd top row, a lone
/// black bottom cell, and a balanced strict prefix at the reported split.
fn check_odd_splits(trace: &[StepOutcome]) -> Result<(), String> {
    for step in trace {
        if step.case != CaseId::OddSplit {
            continue;
        }
        let [upper, lower] = &step.residuals[..] else {
            return Err("odd split without exactly two residuals".into());
        };
        let parts: Vec<usize> = upper
            .parts()
            .iter()
            .chain(lower.parts())
            .copied()
            .collect();
        let stepped =
            Partition::new(parts).map_err(|e| format!("split halves do not rejoin: {e}"))?;
        let rows = stepped.len();
        if rows % 2 == 0 {
            return Err(format!("odd split on an even column: {stepped}"));
        }
        if stepped.parts()[0] % 2 == 0 {
            return Err(format!("odd split on an even top row: {stepped}"));
        }
        if stepped.parts()[rows - 1] != 1 {
            return Err(format!("odd split with a wide bottom row: {stepped}"));
        }
        if Cell::new(rows, 1).color() != Color::Black {
            return Err(format!("odd split with a white bottom cell: {stepped}"));
        }
        let split = upper.len();
        if split == 0 || split >= rows {
            return Err(format!("odd split at a degenerate row {split}: {stepped}"));
        }
        if stepped.row_labels().labels()[split - 1] != 0 {
            return Err(format!("odd split at a nonzero label: {stepped}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_small_board_passes() {
        let report = run_sweep(9, 2);
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert_eq!(report.boards, 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30);
        assert_eq!(report.lines.len(), 10);
        assert!(report.lines[5].starts_with("n=5 boards=7 ok"));
    }

    #[test]
    fn single_threaded_sweep_agrees() {
        let parallel = run_sweep(7, 4);
        let serial = run_sweep(7, 1);
        assert_eq!(parallel.lines, serial.lines);
        assert_eq!(parallel.boards, serial.boards);
    }
}
