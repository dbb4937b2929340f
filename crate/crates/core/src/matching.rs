//! Bipartite view of a colored board: black cells on the left, white cells on
//! the right, edges for board adjacency. A perfect matching of this graph is
//! exactly a tiling.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::partition::{Cell, Color, Partition};
use crate::tiler::{Domino, Tiling};

/// Exhaustive subset checking is capped at this many left vertices.
pub const HALL_MAX_LEFT: usize = 24;

/// Adjacency between black (left) and white (right) cells, both listed in
/// row-major order. Neighbor lists hold right indices in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<Cell>,
    right: Vec<Cell>,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds a graph from explicit parts. Intended for tests that need
    /// graphs no Ferrers board produces.
    pub fn new(left: Vec<Cell>, right: Vec<Cell>, adj: Vec<Vec<usize>>) -> Self {
        assert_eq!(adj.len(), left.len(), "one neighbor list per left vertex");
        for neighbors in &adj {
            for &j in neighbors {
                assert!(j < right.len(), "right index {j} out of range");
            }
        }
        BipartiteGraph { left, right, adj }
    }

    pub fn left(&self) -> &[Cell] {
        &self.left
    }

    pub fn right(&self) -> &[Cell] {
        &self.right
    }

    pub fn neighbors(&self, left_index: usize) -> &[usize] {
        &self.adj[left_index]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// One line per left vertex: `B(r,c): W(r,c) W(r,c) ...`, row-major.
    pub fn debug_dump(&self) -> String {
        let mut lines = Vec::with_capacity(self.left.len());
        for (i, cell) in self.left.iter().enumerate() {
            let mut line = format!("B({},{}):", cell.row, cell.col);
            for &j in &self.adj[i] {
                let w = self.right[j];
                line.push_str(&format!(" W({},{})", w.row, w.col));
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

/// Builds the bipartite graph of a board's checkerboard coloring.
pub fn build_graph(p: &Partition) -> BipartiteGraph {
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut right_index = BTreeMap::new();
    for cell in p.cells().iter() {
        match cell.color() {
            Color::Black => left.push(cell),
            Color::White => {
                right_index.insert(cell, right.len());
                right.push(cell);
            }
        }
    }
    let adj = left
        .iter()
        .map(|&cell| {
            let mut neighbors = Vec::new();
            for other in adjacent_cells(cell) {
                if p.contains(other) {
                    neighbors.push(right_index[&other]);
                }
            }
            debug_assert!(neighbors.windows(2).all(|w| w[0] < w[1]));
            neighbors
        })
        .collect();
    BipartiteGraph { left, right, adj }
}

fn adjacent_cells(cell: Cell) -> impl Iterator<Item = Cell> {
    let Cell { row, col } = cell;
    [
        (row > 1).then(|| Cell::new(row - 1, col)),
        (col > 1).then(|| Cell::new(row, col - 1)),
        Some(Cell::new(row, col + 1)),
        Some(Cell::new(row + 1, col)),
    ]
    .into_iter()
    .flatten()
}

/// A set of vertex-disjoint edges, stored as (left index, right index) pairs
/// sorted by left index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            assert_ne!(w[0].0, w[1].0, "left vertex matched twice");
        }
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// True when every vertex on both sides is matched.
    pub fn is_perfect(&self, graph: &BipartiteGraph) -> bool {
        self.pairs.len() == graph.left().len() && graph.left().len() == graph.right().len()
    }
}

/// Maximum-cardinality matching by alternating-path augmentation. With unit
/// capacities this is the same computation as the flow formulation, one
/// augmenting path per unit of flow.
///
/// Deterministic: left vertices are processed in increasing index order and
/// neighbor lists are scanned in stored order.
pub fn max_matching(graph: &BipartiteGraph) -> Matching {
    let mut right_owner: Vec<Option<usize>> = vec![None; graph.right().len()];
    for v in 0..graph.left().len() {
        let mut visited = vec![false; graph.right().len()];
        augment(graph, v, &mut visited, &mut right_owner);
    }
    let pairs = right_owner
        .iter()
        .enumerate()
        .filter_map(|(r, owner)| owner.map(|l| (l, r)))
        .collect();
    Matching::new(pairs)
}

fn augment(
    graph: &BipartiteGraph,
    v: usize,
    visited: &mut [bool],
    right_owner: &mut [Option<usize>],
) -> bool {
    for &r in graph.neighbors(v) {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if right_owner[r].is_none() || augment(graph, right_owner[r].unwrap(), visited, right_owner)
        {
            right_owner[r] = Some(v);
            return true;
        }
    }
    false
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("cell ({row},{col}) is unmatched")]
    NotPerfect { row: usize, col: usize },
}

/// Converts a perfect matching of `build_graph(p)` into the tiling it
/// encodes, one domino per matched pair.
pub fn matching_to_tiling(p: &Partition, matching: &Matching) -> Result<Tiling, MatchingError> {
    let graph = build_graph(p);
    let mut left_done = vec![false; graph.left().len()];
    let mut right_done = vec![false; graph.right().len()];
    let mut dominoes = Vec::with_capacity(matching.len());
    for &(l, r) in matching.pairs() {
        assert!(
            graph.neighbors(l).contains(&r),
            "matching pair ({l},{r}) is not an edge of the board graph"
        );
        assert!(!left_done[l] && !right_done[r], "vertex matched twice");
        left_done[l] = true;
        right_done[r] = true;
        dominoes.push(Domino::new(graph.left()[l], graph.right()[r]));
    }
    let unmatched = left_done
        .iter()
        .position(|&done| !done)
        .map(|i| graph.left()[i])
        .or_else(|| {
            right_done
                .iter()
                .position(|&done| !done)
                .map(|i| graph.right()[i])
        });
    if let Some(cell) = unmatched {
        return Err(MatchingError::NotPerfect {
            row: cell.row,
            col: cell.col,
        });
    }
    Ok(Tiling::new(dominoes))
}

/// Result of checking every subset of the left side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallReport {
    pub satisfied: bool,
    /// Minimum of |N(S)| - |S| over all nonempty subsets S of the left side.
    pub min_slack: i64,
    /// A subset achieving the minimum, as sorted left indices.
    pub witness: Vec<usize>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HallError {
    #[error("sides differ: {left} left vs {right} right vertices")]
    Unbalanced { left: usize, right: usize },
    #[error("{left} left vertices exceed the exhaustive bound of {max}")]
    TooLarge { left: usize, max: usize },
}

/// Checks the subset condition |N(S)| >= |S| for every nonempty subset S of
/// the left side. Exponential on purpose: the contract is exhaustiveness, so
/// the left side is capped at [`HALL_MAX_LEFT`] rather than sampled.
pub fn hall_check(graph: &BipartiteGraph) -> Result<HallReport, HallError> {
    let n = graph.left().len();
    if n != graph.right().len() {
        return Err(HallError::Unbalanced {
            left: n,
            right: graph.right().len(),
        });
    }
    if n > HALL_MAX_LEFT {
        return Err(HallError::TooLarge {
            left: n,
            max: HALL_MAX_LEFT,
        });
    }
    if n == 0 {
        return Ok(HallReport {
            satisfied: true,
            min_slack: 0,
            witness: Vec::new(),
        });
    }
    let neighbor_bits: Vec<u32> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u32, |acc, &r| acc | 1 << r))
        .collect();
    let mut min_slack = i64::MAX;
    let mut best_mask = 0u32;
    for mask in 1u32..(1u32 << n) {
        let mut reach = 0u32;
        let mut rest = mask;
        while rest != 0 {
            reach |= neighbor_bits[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        let slack = reach.count_ones() as i64 - mask.count_ones() as i64;
        if slack < min_slack {
            min_slack = slack;
            best_mask = mask;
        }
    }
    let witness = (0..n).filter(|&v| best_mask & (1 << v) != 0).collect();
    Ok(HallReport {
        satisfied: min_slack >= 0,
        min_slack,
        witness,
    })
}
