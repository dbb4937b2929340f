//! ASCII board rendering.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use ferrotile_core::{validate_tiling, Cell, Partition, Tiling};

/// One text row per board row. Cells of the same domino share a glyph and
/// edge-adjacent cells of different dominoes never do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsciiRendering {
    lines: Vec<String>,
}

impl AsciiRendering {
    pub fn lines(&self) -> &[String] {
        &self.lines
    }
}

impl fmt::Display for AsciiRendering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, line) in self.lines.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str(line)?;
        }
        Ok(())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("the tiling does not tile the board")]
    InvalidTiling,
}

/// Renders the bare board with `~` per cell, or the tiled board with glyphs
/// `a..z` assigned greedily to dominoes in canonical order, cycling through
/// the alphabet past any glyph already used by a touching domino.
pub fn render_ascii(p: &Partition, tiling: Option<&Tiling>) -> Result<AsciiRendering, RenderError> {
    let Some(tiling) = tiling else {
        let lines = p.parts().iter().map(|&len| "~".repeat(len)).collect();
        return Ok(AsciiRendering { lines });
    };
    if !validate_tiling(p, tiling) {
        return Err(RenderError::InvalidTiling);
    }

    let mut owner = BTreeMap::new();
    for (index, domino) in tiling.dominoes().iter().enumerate() {
        for cell in domino.cells() {
            owner.insert(cell, index);
        }
    }

    let mut glyphs: Vec<u8> = Vec::with_capacity(tiling.len());
    for (index, domino) in tiling.dominoes().iter().enumerate() {
        let mut taken = [false; 26];
        for cell in domino.cells() {
            for neighbor in neighbors(cell) {
                match owner.get(&neighbor) {
                    Some(&other) if other < index => taken[glyphs[other] as usize] = true,
                    _ => {}
                }
            }
        }
        let glyph = (0..26)
            .find(|&g| !taken[g as usize])
            .expect("a domino touches at most six others");
        glyphs.push(glyph);
    }

    let lines = p
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (1..=len)
                .map(|col| {
                    let index = owner[&Cell::new(i + 1, col)];
                    (b'a' + glyphs[index]) as char
                })
                .collect()
        })
        .collect();
    Ok(AsciiRendering { lines })
}

fn neighbors(cell: Cell) -> impl Iterator<Item = Cell> {
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

#[cfg(test)]
mod tests {
    use super::*;
    use ferrotile_core::{tile, Domino};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn d(r1: usize, c1: usize, r2: usize, c2: usize) -> Domino {
        Domino::new(Cell::new(r1, c1), Cell::new(r2, c2))
    }

    #[test]
    fn bare_board_uses_tildes() {
        let rendering = render_ascii(&p(&[2, 1]), None).unwrap();
        assert_eq!(rendering.lines(), &["~~".to_string(), "~".to_string()]);
        assert!(render_ascii(&Partition::empty(), None)
            .unwrap()
            .lines()
            .is_empty());
    }

    #[test]
    fn horizontal_pair_renders_as_two_glyphs() {
        let tiling = Tiling::new(vec![d(1, 1, 1, 2), d(2, 1, 2, 2)]);
        let rendering = render_ascii(&p(&[2, 2]), Some(&tiling)).unwrap();
        assert_eq!(rendering.lines(), &["aa".to_string(), "bb".to_string()]);
    }

    #[test]
    fn vertical_domino_shares_its_glyph() {
        let tiling = Tiling::new(vec![d(1, 1, 2, 1)]);
        let rendering = render_ascii(&p(&[1, 1]), Some(&tiling)).unwrap();
        assert_eq!(rendering.lines(), &["a".to_string(), "a".to_string()]);
    }

    #[test]
    fn invalid_tilings_are_rejected() {
        let tiling = Tiling::new(vec![d(1, 1, 1, 2)]);
        assert_eq!(
            render_ascii(&p(&[2, 1]), Some(&tiling)),
            Err(RenderError::InvalidTiling)
        );
    }

    #[test]
    fn adjacent_dominoes_never_share_a_glyph() {
        for parts in [vec![8, 6, 5, 4, 4, 1], vec![6; 6], vec![9, 9, 8, 4, 2]] {
            let board = Partition::new(parts).unwrap();
            let result = tile(&board);
            let Some(tiling) = result.tiling() else {
                panic!("board {board} should tile");
            };
            let rendering = render_ascii(&board, Some(tiling)).unwrap();
            let lines = rendering.lines();
            for (i, &len) in board.parts().iter().enumerate() {
                assert_eq!(lines[i].chars().count(), len);
            }
            let glyph_at = |cell: Cell| lines[cell.row - 1].as_bytes()[cell.col - 1];
            for domino in tiling.dominoes() {
                assert_eq!(glyph_at(domino.first()), glyph_at(domino.second()));
            }
            for cell in board.cells().iter() {
                for neighbor in neighbors(cell) {
                    if !board.contains(neighbor) {
                        continue;
                    }
                    let same_domino = tiling
                        .dominoes()
                        .iter()
                        .any(|d| d.covers(cell) && d.covers(neighbor));
                    if !same_domino {
                        assert_ne!(
                            glyph_at(cell),
                            glyph_at(neighbor),
                            "board {board} at {cell}"
                        );
                    }
                }
            }
        }
    }
}
