//! Counting and enumerating tilings.
//!
//! Two independent routes: a backtracking enumerator that visits every tiling
//! in a fixed order, and a polynomial-time counter that reads the count off
//! an exactly evaluated determinant of a signed adjacency matrix.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::partition::{Cell, Partition};
use crate::tiler::{Domino, Tiling};

/// Brute-force counting is capped at this many cells.
pub const BRUTE_MAX_CELLS: usize = 40;

/// An exact tiling count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TilingCount(BigUint);

impl TilingCount {
    pub fn new(value: BigUint) -> Self {
        TilingCount(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == BigUint::ZERO
    }
}

impl From<u64> for TilingCount {
    fn from(value: u64) -> Self {
        TilingCount(BigUint::from(value))
    }
}

impl fmt::Display for TilingCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("board has {cells} cells, over the brute-force bound of {max}")]
    TooLarge { cells: usize, max: usize },
}

/// Row-major cell indexing with right and down neighbor lookups.
struct GridIndex {
    cells: Vec<Cell>,
    right: Vec<Option<usize>>,
    down: Vec<Option<usize>>,
}

impl GridIndex {
    fn new(p: &Partition) -> Self {
        let parts = p.parts();
        let mut row_start = Vec::with_capacity(parts.len());
        let mut cells = Vec::with_capacity(p.total());
        for (i, &len) in parts.iter().enumerate() {
            row_start.push(cells.len());
            for col in 1..=len {
                cells.push(Cell::new(i + 1, col));
            }
        }
        let right = cells
            .iter()
            .enumerate()
            .map(|(i, cell)| (cell.col < parts[cell.row - 1]).then(|| i + 1))
            .collect();
        let down = cells
            .iter()
            .map(|cell| {
                let below = cell.row; // 0-based index of the next row
                (below < parts.len() && parts[below] >= cell.col)
                    .then(|| row_start[below] + cell.col - 1)
            })
            .collect();
        GridIndex { cells, right, down }
    }

    fn len(&self) -> usize {
        self.cells.len()
    }
}

/// Streams every tiling exactly once: repeatedly cover the row-major-first
/// uncovered cell, trying a horizontal domino before a vertical one.
pub struct TilingEnumerator {
    grid: GridIndex,
    occupied: Vec<bool>,
    stack: Vec<Frame>,
    state: EnumState,
}

struct Frame {
    anchor: usize,
    partner: usize,
    vertical: bool,
}

enum EnumState {
    Descend,
    Backtrack,
    Done,
}

impl TilingEnumerator {
    fn new(p: &Partition) -> Self {
        let grid = GridIndex::new(p);
        let occupied = vec![false; grid.len()];
        TilingEnumerator {
            grid,
            occupied,
            stack: Vec::new(),
            state: EnumState::Descend,
        }
    }

    fn first_free(&self) -> Option<usize> {
        // All cells before the newest anchor are covered.
        let from = self.stack.last().map_or(0, |f| f.anchor + 1);
        (from..self.grid.len()).find(|&i| !self.occupied[i])
    }

    fn place(&mut self, anchor: usize, partner: usize, vertical: bool) {
        self.occupied[anchor] = true;
        self.occupied[partner] = true;
        self.stack.push(Frame {
            anchor,
            partner,
            vertical,
        });
    }

    fn current_tiling(&self) -> Tiling {
        let dominoes = self
            .stack
            .iter()
            .map(|f| Domino::new(self.grid.cells[f.anchor], self.grid.cells[f.partner]))
            .collect();
        Tiling::new(dominoes)
    }
}

impl Iterator for TilingEnumerator {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        loop {
            match self.state {
                EnumState::Done => return None,
                EnumState::Descend => match self.first_free() {
                    None => {
                        let tiling = self.current_tiling();
                        self.state = EnumState::Backtrack;
                        return Some(tiling);
                    }
                    Some(anchor) => {
                        let horizontal = self.grid.right[anchor].filter(|&r| !self.occupied[r]);
                        let vertical = self.grid.down[anchor].filter(|&d| !self.occupied[d]);
                        if let Some(partner) = horizontal {
                            self.place(anchor, partner, false);
                        } else if let Some(partner) = vertical {
                            self.place(anchor, partner, true);
                        } else {
                            self.state = EnumState::Backtrack;
                        }
                    }
                },
                EnumState::Backtrack => match self.stack.pop() {
                    None => {
                        self.state = EnumState::Done;
                        return None;
                    }
                    Some(frame) => {
                        self.occupied[frame.anchor] = false;
                        self.occupied[frame.partner] = false;
                        if !frame.vertical {
                            if let Some(down) =
                                self.grid.down[frame.anchor].filter(|&d| !self.occupied[d])
                            {
                                self.place(frame.anchor, down, true);
                                self.state = EnumState::Descend;
                            }
                        }
                    }
                },
            }
        }
    }
}

/// A resumable cursor over all tilings of the board, in the fixed order.
pub fn tiling_enumerator(p: &Partition) -> TilingEnumerator {
    TilingEnumerator::new(p)
}

/// All tilings of the board, truncated at `limit` when given. Unbalanced
/// boards simply produce nothing.
pub fn enumerate_tilings(p: &Partition, limit: Option<usize>) -> Vec<Tiling> {
    let cursor = tiling_enumerator(p);
    match limit {
        Some(k) => cursor.take(k).collect(),
        None => cursor.collect(),
    }
}

/// Counts tilings by the same backtracking order as the enumerator, without
/// materializing them.
pub fn count_brute(p: &Partition) -> Result<TilingCount, CountError> {
    let cells = p.total();
    if cells > BRUTE_MAX_CELLS {
        return Err(CountError::TooLarge {
            cells,
            max: BRUTE_MAX_CELLS,
        });
    }
    let grid = GridIndex::new(p);
    let mut occupied = vec![false; grid.len()];
    let total = count_from(&grid, &mut occupied, 0);
    Ok(TilingCount(BigUint::from(total)))
}

fn count_from(grid: &GridIndex, occupied: &mut [bool], from: usize) -> u64 {
    let Some(anchor) = (from..grid.len()).find(|&i| !occupied[i]) else {
        return 1;
    };
    let mut total = 0;
    for partner in [grid.right[anchor], grid.down[anchor]] {
        let Some(partner) = partner.filter(|&i| !occupied[i]) else {
            continue;
        };
        occupied[anchor] = true;
        occupied[partner] = true;
        total += count_from(grid, occupied, anchor + 1);
        occupied[anchor] = false;
        occupied[partner] = false;
    }
    total
}

/// Signed adjacency matrix over the board's cells in row-major order.
///
/// Horizontal edges carry +1 from the left cell. Vertical edges carry +1
/// from the upper cell in odd columns and -1 in even columns. Every unit
/// square of the board then sees an odd number of clockwise-oriented border
/// edges, which is what makes |det| the squared tiling count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KasteleynMatrix {
    dim: usize,
    entries: Vec<i8>,
}

impl KasteleynMatrix {
    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.dim + col]
    }
}

pub fn kasteleyn_matrix(p: &Partition) -> KasteleynMatrix {
    let grid = GridIndex::new(p);
    let dim = grid.len();
    let mut entries = vec![0i8; dim * dim];
    let mut set = |u: usize, v: usize, sign: i8| {
        entries[u * dim + v] = sign;
        entries[v * dim + u] = -sign;
    };
    for i in 0..dim {
        if let Some(r) = grid.right[i] {
            set(i, r, 1);
        }
        if let Some(d) = grid.down[i] {
            let sign = if grid.cells[i].col % 2 == 1 { 1 } else { -1 };
            set(i, d, sign);
        }
    }
    KasteleynMatrix { dim, entries }
}

/// Exact tiling count as the integer square root of |det| of the signed
/// adjacency matrix. Panics if |det| is not a perfect square, which would
/// mean the sign convention is broken.
pub fn count_fkt(p: &Partition) -> TilingCount {
    let matrix = kasteleyn_matrix(p);
    let dim = matrix.dimension();
    let rows: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from(matrix.entry(i, j))).collect())
        .collect();
    let det = bareiss_determinant(rows);
    let magnitude = det.magnitude().clone();
    let root = magnitude.sqrt();
    assert_eq!(
        &root * &root,
        magnitude,
        "signed adjacency determinant must be a perfect square"
    );
    TilingCount(root)
}

/// Fraction-free elimination: every division is exact, so the determinant of
/// an integer matrix comes out in integer arithmetic with no growth beyond
/// the minors themselves.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let zero = BigInt::from(0);
    let mut sign = 1i8;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k] == zero {
            let Some(pivot) = (k + 1..n).find(|&r| m[r][k] != zero) else {
                return zero;
            };
            m.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = numerator / &prev;
            }
            m[i][k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
