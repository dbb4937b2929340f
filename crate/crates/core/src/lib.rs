//! Domino tilings of Ferrers boards.
//!
//! A Ferrers board tiles with dominoes exactly when its checkerboard coloring
//! has equally many black and white cells. This crate carries four engines
//! around that fact: a recursive tiler that constructs an explicit tiling, a
//! bipartite matching formulation with an exhaustive Hall-condition checker,
//! a backtracking enumerator, and an exact polynomial-time counter.

pub mod counting;
pub mod matching;
pub mod partition;
pub mod tiler;

pub use counting::{
    count_brute, count_fkt, enumerate_tilings, kasteleyn_matrix, tiling_enumerator, CountError,
    KasteleynMatrix, TilingCount, TilingEnumerator, BRUTE_MAX_CELLS,
};
pub use matching::{
    build_graph, hall_check, matching_to_tiling, max_matching, BipartiteGraph, HallError,
    HallReport, Matching, MatchingError, HALL_MAX_LEFT,
};
pub use partition::{Board, Cell, Color, ColorSummary, Partition, PartitionError, RowLabels};
pub use tiler::{
    find_zero_row, step_decompose, tile, tile_traced, tiling_from_json, tiling_to_json,
    validate_tiling, CaseId, Domino, StepOutcome, TileResult, TilerError, Tiling, TilingJsonError,
};
