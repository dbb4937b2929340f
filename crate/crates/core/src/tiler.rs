//! Recursive construction of domino tilings for balanced Ferrers boards.
//!
//! Each step peels the board by the first applicable case, always checked in
//! the fixed order Left, Top, Bottom, OddSplit:
//!
//! * Left: the first column has even length; cover it with vertical dominoes.
//! * Top: the first row has even length; cover it with horizontal dominoes.
//! * Bottom: the last row has more than one cell; cover its two rightmost
//!   cells with one domino.
//! * OddSplit: none of the above. The row-label sequence then walks from +1
//!   down to -1, so some prefix of rows is balanced on its own; split there
//!   and recurse on both halves.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Cell, Color, Partition};

/// Which step applied to a board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseId {
    Base,
    Left,
    Top,
    Bottom,
    OddSplit,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CaseId::Base => "Base",
            CaseId::Left => "Left",
            CaseId::Top => "Top",
            CaseId::Bottom => "Bottom",
            CaseId::OddSplit => "OddSplit",
        };
        f.write_str(name)
    }
}

/// A pair of edge-adjacent cells, stored with the row-major smaller cell
/// first. Adjacent cells always have opposite colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    a: Cell,
    b: Cell,
}

impl Domino {
    /// Panics when the cells are not edge-adjacent.
    pub fn new(a: Cell, b: Cell) -> Self {
        Self::try_new(a, b).expect("domino cells must be edge-adjacent")
    }

    pub fn try_new(a: Cell, b: Cell) -> Option<Self> {
        if !a.is_adjacent(b) {
            return None;
        }
        Some(if a < b {
            Domino { a, b }
        } else {
            Domino { a: b, b: a }
        })
    }

    pub fn first(&self) -> Cell {
        self.a
    }

    pub fn second(&self) -> Cell {
        self.b
    }

    pub fn cells(&self) -> [Cell; 2] {
        [self.a, self.b]
    }

    pub fn covers(&self, cell: Cell) -> bool {
        self.a == cell || self.b == cell
    }
}

impl fmt::Display for Domino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A set of dominoes, kept in canonical sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Tiling {
    dominoes: Vec<Domino>,
}

impl Tiling {
    pub fn new(mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort_unstable();
        Tiling { dominoes }
    }

    pub fn empty() -> Self {
        Tiling::default()
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }
}

/// Outcome of one peeling step: the case that fired, the dominoes it placed
/// (in the stepped board's own coordinates), and the boards left to tile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    pub case: CaseId,
    pub placed: Vec<Domino>,
    pub residuals: Vec<Partition>,
}

impl StepOutcome {
    /// Row and column offsets that embed each residual back into the stepped
    /// board: Left shifts columns by one, Top shifts rows by one, and the
    /// second OddSplit residual starts below the split row.
    pub fn residual_origins(&self) -> Vec<(usize, usize)> {
        match self.case {
            CaseId::Base => Vec::new(),
            CaseId::Left => vec![(0, 1); self.residuals.len()],
            CaseId::Top => vec![(1, 0); self.residuals.len()],
            CaseId::Bottom => vec![(0, 0); self.residuals.len()],
            CaseId::OddSplit => vec![(0, 0), (self.residuals[0].len(), 0)],
        }
    }
}

impl fmt::Display for StepOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case={} placed={} residuals=", self.case, self.placed.len())?;
        for (i, residual) in self.residuals.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{residual}")?;
        }
        Ok(())
    }
}

/// Either a full tiling or the imbalance that rules one out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TileResult {
    Tiled(Tiling),
    Untileable { imbalance: i64 },
}

impl TileResult {
    pub fn is_tiled(&self) -> bool {
        matches!(self, TileResult::Tiled(_))
    }

    pub fn tiling(&self) -> Option<&Tiling> {
        match self {
            TileResult::Tiled(t) => Some(t),
            TileResult::Untileable { .. } => None,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TilerError {
    #[error("the board is empty")]
    EmptyBoard,
    #[error("the board is unbalanced (black minus white = {imbalance})")]
    Unbalanced { imbalance: i64 },
    #[error("case {applies} applies instead of the odd split")]
    NotCaseFour { applies: CaseId },
    #[error("no zero-labeled row strictly above the last row")]
    NoZeroRow,
}

/// Applies the first case in the fixed order Left, Top, Bottom, OddSplit to a
/// non-empty balanced board.
pub fn step_decompose(p: &Partition) -> Result<StepOutcome, TilerError> {
    if p.is_empty() {
        return Err(TilerError::EmptyBoard);
    }
    let imbalance = p.imbalance();
    if imbalance != 0 {
        return Err(TilerError::Unbalanced { imbalance });
    }
    Ok(decompose_unchecked(p))
}

fn decompose_unchecked(p: &Partition) -> StepOutcome {
    debug_assert!(!p.is_empty() && p.imbalance() == 0);
    let parts = p.parts();
    let rows = parts.len();

    if rows % 2 == 0 {
        // Left: vertical dominoes down column 1, then every part shrinks by one.
        let placed = (0..rows / 2)
            .map(|k| Domino::new(Cell::new(2 * k + 1, 1), Cell::new(2 * k + 2, 1)))
            .collect();
        let rest: Vec<usize> = parts.iter().map(|&x| x - 1).filter(|&x| x > 0).collect();
        return StepOutcome {
            case: CaseId::Left,
            placed,
            residuals: residual_list(rest),
        };
    }

    if parts[0] % 2 == 0 {
        // Top: horizontal dominoes across row 1.
        let placed = (0..parts[0] / 2)
            .map(|k| Domino::new(Cell::new(1, 2 * k + 1), Cell::new(1, 2 * k + 2)))
            .collect();
        return StepOutcome {
            case: CaseId::Top,
            placed,
            residuals: residual_list(parts[1..].to_vec()),
        };
    }

    let last = parts[rows - 1];
    if last > 1 {
        // Bottom: one domino on the two rightmost cells of the last row.
        let placed = vec![Domino::new(
            Cell::new(rows, last - 1),
            Cell::new(rows, last),
        )];
        let mut rest = parts.to_vec();
        rest[rows - 1] -= 2;
        if rest[rows - 1] == 0 {
            rest.pop();
        }
        return StepOutcome {
            case: CaseId::Bottom,
            placed,
            residuals: residual_list(rest),
        };
    }

    // OddSplit: odd column, odd top row, single-cell bottom row. The lone
    // bottom cell sits in an odd row, hence is black.
    debug_assert_eq!(Cell::new(rows, 1).color(), Color::Black);
    let split = zero_row(p).expect("a balanced board in the odd case has a zero-labeled row");
    let upper = Partition::new(parts[..split].to_vec()).expect("prefix stays non-increasing");
    let lower = Partition::new(parts[split..].to_vec()).expect("suffix stays non-increasing");
    StepOutcome {
        case: CaseId::OddSplit,
        placed: Vec::new(),
        residuals: vec![upper, lower],
    }
}

fn residual_list(parts: Vec<usize>) -> Vec<Partition> {
    if parts.is_empty() {
        Vec::new()
    } else {
        vec![Partition::new(parts).expect("residual parts stay non-increasing and positive")]
    }
}

fn zero_row(p: &Partition) -> Option<usize> {
    let labels = p.row_labels();
    let interior = &labels.labels()[..p.len() - 1];
    interior.iter().position(|&label| label == 0).map(|i| i + 1)
}

/// The topmost row index `m` (1-based, strictly before the last row) whose
/// prefix label is zero, so rows `1..=m` and the rows below each balance on
/// their own.
///
/// The scan relies on the board being balanced with an odd top row and a
/// single-cell bottom row, and those are verified up front. An even first
/// column is tolerated: it changes which case a full step would take, not
/// whether the scan is meaningful.
pub fn find_zero_row(p: &Partition) -> Result<usize, TilerError> {
    if p.is_empty() {
        return Err(TilerError::EmptyBoard);
    }
    let imbalance = p.imbalance();
    if imbalance != 0 {
        return Err(TilerError::Unbalanced { imbalance });
    }
    let parts = p.parts();
    let rows = parts.len();
    if parts[0] % 2 == 0 || parts[rows - 1] != 1 {
        let applies = if rows % 2 == 0 {
            CaseId::Left
        } else if parts[0] % 2 == 0 {
            CaseId::Top
        } else {
            CaseId::Bottom
        };
        return Err(TilerError::NotCaseFour { applies });
    }
    zero_row(p).ok_or(TilerError::NoZeroRow)
}

/// Tiles the board, or reports its imbalance when no tiling exists.
pub fn tile(p: &Partition) -> TileResult {
    tile_traced(p).0
}

/// Like [`tile`], also returning the per-step trace in application order.
/// Sub-boards are processed depth-first, upper OddSplit half first.
pub fn tile_traced(p: &Partition) -> (TileResult, Vec<StepOutcome>) {
    let imbalance = p.imbalance();
    if imbalance != 0 {
        return (TileResult::Untileable { imbalance }, Vec::new());
    }
    let mut trace = Vec::new();
    if p.is_empty() {
        trace.push(StepOutcome {
            case: CaseId::Base,
            placed: Vec::new(),
            residuals: Vec::new(),
        });
        return (TileResult::Tiled(Tiling::empty()), trace);
    }

    let mut dominoes = Vec::with_capacity(p.total() / 2);
    // Explicit work stack; the recursion depth would otherwise grow with the
    // number of rows plus splits.
    let mut stack = vec![(p.clone(), 0usize, 0usize)];
    while let Some((board, row_off, col_off)) = stack.pop() {
        let step = decompose_unchecked(&board);
        for d in &step.placed {
            dominoes.push(translate(d, row_off, col_off));
        }
        let origins = step.residual_origins();
        for (residual, &(dr, dc)) in step.residuals.iter().zip(&origins).rev() {
            stack.push((residual.clone(), row_off + dr, col_off + dc));
        }
        trace.push(step);
    }

    let tiling = Tiling::new(dominoes);
    debug_assert!(validate_tiling(p, &tiling));
    (TileResult::Tiled(tiling), trace)
}

fn translate(d: &Domino, row_off: usize, col_off: usize) -> Domino {
    let shift = |c: Cell| Cell::new(c.row + row_off, c.col + col_off);
    Domino::new(shift(d.first()), shift(d.second()))
}

/// True exactly when the dominoes are pairwise disjoint, lie inside the
/// board, and together cover every cell. Adjacency within each domino holds
/// by construction.
pub fn validate_tiling(p: &Partition, t: &Tiling) -> bool {
    let board = p.cells();
    let mut seen = BTreeSet::new();
    for d in t.dominoes() {
        for cell in d.cells() {
            if !board.contains(cell) || !seen.insert(cell) {
                return false;
            }
        }
    }
    seen.len() == board.len()
}

#[derive(Serialize, Deserialize)]
struct DominoRecord {
    r1: usize,
    c1: usize,
    r2: usize,
    c2: usize,
}

#[derive(Error, Debug)]
pub enum TilingJsonError {
    #[error("invalid tiling JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("cell ({row},{col}) is not 1-based")]
    InvalidCell { row: usize, col: usize },
    #[error("cells ({r1},{c1}) and ({r2},{c2}) are not adjacent")]
    NotAdjacent {
        r1: usize,
        c1: usize,
        r2: usize,
        c2: usize,
    },
}

/// The interchange form used by the command-line tool: an array of
/// `{"r1","c1","r2","c2"}` objects with each domino's cells in canonical
/// order.
pub fn tiling_to_json(t: &Tiling) -> String {
    let records: Vec<DominoRecord> = t
        .dominoes()
        .iter()
        .map(|d| DominoRecord {
            r1: d.first().row,
            c1: d.first().col,
            r2: d.second().row,
            c2: d.second().col,
        })
        .collect();
    serde_json::to_string(&records).expect("domino records always serialize")
}

pub fn tiling_from_json(text: &str) -> Result<Tiling, TilingJsonError> {
    let records: Vec<DominoRecord> = serde_json::from_str(text)?;
    let mut dominoes = Vec::with_capacity(records.len());
    for r in records {
        for (row, col) in [(r.r1, r.c1), (r.r2, r.c2)] {
            if row == 0 || col == 0 {
                return Err(TilingJsonError::InvalidCell { row, col });
            }
        }
        let a = Cell::new(r.r1, r.c1);
        let b = Cell::new(r.r2, r.c2);
        let domino = Domino::try_new(a, b).ok_or(TilingJsonError::NotAdjacent {
            r1: r.r1,
            c1: r.c1,
            r2: r.r2,
            c2: r.c2,
        })?;
        dominoes.push(domino);
    }
    Ok(Tiling::new(dominoes))
}
