//! Shared board fixtures for the criterion benches.

use ferrotile_cli::random_partition;
use ferrotile_core::Partition;

/// A `rows x cols` rectangle written as a partition.
pub fn rectangle(rows: usize, cols: usize) -> Partition {
    Partition::new(vec![cols; rows]).expect("rectangles are valid partitions")
}

/// Balanced boards spanning the backends' comfortable ranges: rectangles
/// plus seeded random boards, filtered down to the tileable ones so every
/// backend does real work.
pub fn fixture_boards() -> Vec<Partition> {
    let mut boards = vec![
        rectangle(2, 8),
        rectangle(4, 8),
        rectangle(6, 6),
        Partition::new(vec![8, 6, 5, 4, 4, 1]).unwrap(),
    ];
    for (n, seed) in [(24, 7u64), (36, 11), (48, 13)] {
        let mut seed = seed;
        // Advance the seed until the draw is balanced.
        loop {
            let board = random_partition(n, seed);
            if board.imbalance() == 0 {
                boards.push(board);
                break;
            }
            seed += 1;
        }
    }
    boards
}
