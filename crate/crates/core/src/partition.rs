//! Integer partitions, Ferrers boards, and the checkerboard coloring.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A board square, 1-based, with row 1 at the top and column 1 at the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    /// Checkerboard color. `(1,1)` is black, and colors alternate along rows
    /// and columns.
    pub fn color(self) -> Color {
        if (self.row + self.col) % 2 == 0 {
            Color::Black
        } else {
            Color::White
        }
    }

    /// True when the two cells share an edge.
    pub fn is_adjacent(self, other: Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("malformed part `{0}`")]
    Malformed(String),
    #[error("part {0} is not positive")]
    NonPositivePart(i64),
    #[error("parts increase from {prev} to {next}")]
    NotMonotone { prev: usize, next: usize },
}

/// An integer partition: a non-increasing sequence of positive parts, read as
/// cell counts per row from the top. The empty partition is valid and stands
/// for the empty board.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        for window in parts.windows(2) {
            if window[1] > window[0] {
                return Err(PartitionError::NotMonotone {
                    prev: window[0],
                    next: window[1],
                });
            }
        }
        if let Some(&zero) = parts.iter().find(|&&p| p == 0) {
            return Err(PartitionError::NonPositivePart(zero as i64));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, i.e. the number the partition partitions.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parses the canonical text form: comma-separated parts with no spaces,
    /// e.g. `"8,6,5,4,4,1"`. The empty string is the empty partition.
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let value: i64 = token
                .trim()
                .parse()
                .map_err(|_| PartitionError::Malformed(token.to_string()))?;
            if value <= 0 {
                return Err(PartitionError::NonPositivePart(value));
            }
            let value = value as usize;
            if let Some(&prev) = parts.last() {
                if value > prev {
                    return Err(PartitionError::NotMonotone { prev, next: value });
                }
            }
            parts.push(value);
        }
        Ok(Partition { parts })
    }

    /// Every partition of `n`, each exactly once, in reverse-lexicographic
    /// order: `(n)` first, `(1,1,...,1)` last.
    pub fn partitions_of(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The column-heights partition: the diagram transposed across the main
    /// diagonal. An involution.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|col| self.parts.iter().take_while(|&&p| p >= col).count())
            .collect();
        Partition { parts }
    }

    /// True when the cell lies inside the diagram.
    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.parts.len()
            && cell.col <= self.parts[cell.row - 1]
    }

    /// The set of cells of the diagram.
    pub fn cells(&self) -> Board {
        let mut cells = BTreeSet::new();
        for (i, &len) in self.parts.iter().enumerate() {
            for col in 1..=len {
                cells.insert(Cell::new(i + 1, col));
            }
        }
        Board { cells }
    }

    /// Exact black and white cell counts under the checkerboard coloring.
    pub fn color_summary(&self) -> ColorSummary {
        let mut black = 0usize;
        let mut white = 0usize;
        for (i, &len) in self.parts.iter().enumerate() {
            let row = i + 1;
            // Row `row` starts black exactly when (row + 1) is even.
            let starts_black = (row + 1) % 2 == 0;
            let first = len.div_ceil(2);
            let second = len / 2;
            if starts_black {
                black += first;
                white += second;
            } else {
                white += first;
                black += second;
            }
        }
        ColorSummary {
            black,
            white,
            imbalance: black as i64 - white as i64,
        }
    }

    /// Black-minus-white count of the whole board.
    pub fn imbalance(&self) -> i64 {
        self.color_summary().imbalance
    }

    /// Prefix labels: the k-th label is the black-minus-white count over rows
    /// 1 through k. Consecutive labels differ by at most one, and the final
    /// label is the imbalance of the whole board.
    pub fn row_labels(&self) -> RowLabels {
        let mut labels = Vec::with_capacity(self.parts.len());
        let mut acc = 0i64;
        for (i, &len) in self.parts.iter().enumerate() {
            let row = i + 1;
            if len % 2 == 1 {
                acc += if (row + 1) % 2 == 0 { 1 } else { -1 };
            }
            labels.push(acc);
        }
        RowLabels { labels }
    }

    /// True when the partition has at least two parts and every consecutive
    /// difference is exactly one. A single even row is tileable on its own,
    /// so single rows do not count.
    pub fn is_staircase(&self) -> bool {
        self.parts.len() >= 2 && self.parts.windows(2).all(|w| w[0] - w[1] == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for part in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::parse(s)
    }
}

/// The cells of a Ferrers diagram, iterated in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    cells: BTreeSet<Cell>,
}

impl Board {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }
}

/// Black and white cell counts with their difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorSummary {
    pub black: usize,
    pub white: usize,
    pub imbalance: i64,
}

/// Per-row prefix labels, one per row from the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowLabels {
    labels: Vec<i64>,
}

impl RowLabels {
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// The last label, which equals the imbalance of the whole board.
    pub fn last(&self) -> i64 {
        self.labels.last().copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Per-cell oracle for color counts, independent of the closed form.
    fn summary_by_cells(partition: &Partition) -> ColorSummary {
        let mut black = 0;
        let mut white = 0;
        for cell in partition.cells().iter() {
            match cell.color() {
                Color::Black => black += 1,
                Color::White => white += 1,
            }
        }
        ColorSummary {
            black,
            white,
            imbalance: black as i64 - white as i64,
        }
    }

    /// Independent count of partitions of `n` by the two-way recurrence
    /// p(n, k) = p(n, k-1) + p(n-k, k).
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for k in 0..=n {
            table[0][k] = 1;
        }
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if k <= m { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn parse_basic() {
        assert_eq!(Partition::parse("5,4,3,1").unwrap(), p(&[5, 4, 3, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("7").unwrap(), p(&[7]));
    }

    #[test]
    fn parse_rejects_increase() {
        assert_eq!(
            Partition::parse("3,4"),
            Err(PartitionError::NotMonotone { prev: 3, next: 4 })
        );
    }

    #[test]
    fn parse_rejects_non_positive() {
        assert_eq!(
            Partition::parse("3,0"),
            Err(PartitionError::NonPositivePart(0))
        );
        assert_eq!(
            Partition::parse("-2"),
            Err(PartitionError::NonPositivePart(-2))
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            Partition::parse("3,x"),
            Err(PartitionError::Malformed(_))
        ));
        assert!(matches!(
            Partition::parse("3,,1"),
            Err(PartitionError::Malformed(_))
        ));
    }

    #[test]
    fn display_round_trips() {
        assert_eq!(p(&[8, 6, 5, 4, 4, 1]).to_string(), "8,6,5,4,4,1");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn partitions_of_five_in_order() {
        let expected: Vec<Partition> = [
            vec![5],
            vec![4, 1],
            vec![3, 2],
            vec![3, 1, 1],
            vec![2, 2, 1],
            vec![2, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
        ]
        .into_iter()
        .map(|v| Partition::new(v).unwrap())
        .collect();
        assert_eq!(Partition::partitions_of(5), expected);
    }

    #[test]
    fn partitions_of_zero_is_the_empty_partition() {
        assert_eq!(Partition::partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn partition_counts_match_recurrence() {
        assert_eq!(Partition::partitions_of(6).len(), 11);
        for n in 0..=20 {
            assert_eq!(
                Partition::partitions_of(n).len() as u64,
                partition_count(n),
                "count mismatch at n={n}"
            );
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_an_involution_and_preserves_imbalance() {
        for n in 0..=10 {
            for q in Partition::partitions_of(n) {
                assert_eq!(q.conjugate().conjugate(), q);
                assert_eq!(q.conjugate().imbalance(), q.imbalance());
            }
        }
    }

    #[test]
    fn self_conjugate_count_equals_distinct_odd_parts_count() {
        for n in 0..=16 {
            let all = Partition::partitions_of(n);
            let self_conjugate = all.iter().filter(|q| q.conjugate() == **q).count();
            let distinct_odd = all
                .iter()
                .filter(|q| {
                    q.parts().iter().all(|&x| x % 2 == 1)
                        && q.parts().windows(2).all(|w| w[0] != w[1])
                })
                .count();
            assert_eq!(self_conjugate, distinct_odd, "mismatch at n={n}");
        }
    }

    #[test]
    fn cells_examples() {
        let board = p(&[2, 1]).cells();
        let got: Vec<Cell> = board.iter().collect();
        assert_eq!(
            got,
            vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]
        );
        assert!(Partition::empty().cells().is_empty());
        assert_eq!(p(&[8, 6, 5, 4, 4, 1]).cells().len(), 28);
    }

    #[test]
    fn cell_count_equals_total() {
        for n in 0..=14 {
            for q in Partition::partitions_of(n) {
                assert_eq!(q.cells().len(), q.total());
            }
        }
    }

    #[test]
    fn contains_matches_cells() {
        let q = p(&[3, 3, 1]);
        let board = q.cells();
        for row in 1..=4 {
            for col in 1..=4 {
                let cell = Cell::new(row, col);
                assert_eq!(q.contains(cell), board.contains(cell));
            }
        }
    }

    #[test]
    fn colors_of_corner_cells() {
        assert_eq!(Cell::new(1, 1).color(), Color::Black);
        assert_eq!(Cell::new(1, 2).color(), Color::White);
        assert_eq!(Cell::new(2, 1).color(), Color::White);
        assert_eq!(Cell::new(2, 2).color(), Color::Black);
    }

    #[test]
    fn color_summary_examples() {
        assert_eq!(
            p(&[2, 2]).color_summary(),
            ColorSummary {
                black: 2,
                white: 2,
                imbalance: 0
            }
        );
        assert_eq!(
            p(&[4, 3, 2, 1]).color_summary(),
            ColorSummary {
                black: 4,
                white: 6,
                imbalance: -2
            }
        );
        assert_eq!(
            p(&[8, 6, 5, 4, 4, 1]).color_summary(),
            ColorSummary {
                black: 14,
                white: 14,
                imbalance: 0
            }
        );
    }

    #[test]
    fn color_summary_matches_per_cell_count() {
        for n in 0..=12 {
            for q in Partition::partitions_of(n) {
                assert_eq!(q.color_summary(), summary_by_cells(&q), "board {q}");
            }
        }
    }

    #[test]
    fn row_label_examples() {
        assert_eq!(p(&[1]).row_labels().labels(), &[1]);
        assert_eq!(p(&[2, 2]).row_labels().labels(), &[0, 0]);
        assert_eq!(p(&[7, 5, 4, 3, 1]).row_labels().labels(), &[1, 0, 0, -1, 0]);
    }

    #[test]
    fn row_labels_end_at_the_imbalance_and_step_by_at_most_one() {
        for n in 0..=12 {
            for q in Partition::partitions_of(n) {
                let labels = q.row_labels();
                assert_eq!(labels.last(), q.imbalance(), "board {q}");
                for w in labels.labels().windows(2) {
                    assert!((w[0] - w[1]).abs() <= 1, "board {q}");
                }
            }
        }
    }

    #[test]
    fn staircase_examples() {
        assert!(p(&[4, 3, 2, 1]).is_staircase());
        assert!(p(&[6, 5, 4]).is_staircase());
        assert!(!p(&[3, 3]).is_staircase());
        assert!(!p(&[4]).is_staircase());
        assert!(!Partition::empty().is_staircase());
    }

    #[test]
    fn staircases_are_never_balanced() {
        for n in 0..=20 {
            for q in Partition::partitions_of(n) {
                if q.is_staircase() {
                    assert_ne!(q.imbalance(), 0, "staircase {q} is balanced");
                }
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        // Random non-increasing positive parts built by sorting.
        proptest::collection::vec(1usize..=9, 0..=8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_display(q in arb_partition()) {
            prop_assert_eq!(Partition::parse(&q.to_string()).unwrap(), q);
        }

        #[test]
        fn conjugate_involution(q in arb_partition()) {
            prop_assert_eq!(q.conjugate().conjugate(), q.clone());
            prop_assert_eq!(q.conjugate().total(), q.total());
        }

        #[test]
        fn labels_prefix_matches_summary(q in arb_partition()) {
            let labels = q.row_labels();
            prop_assert_eq!(labels.last(), q.color_summary().imbalance);
            prop_assert_eq!(labels.labels().len(), q.len());
        }
    }
}
