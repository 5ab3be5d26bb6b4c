use crate::error::{Error, Result};

use super::Composition;

/// Whether `(row, col)` (1-based row, column 0 = basement) is a cell of the
/// augmented diagram of `shape`.
pub fn has_cell(shape: &Composition, row: usize, col: usize) -> bool {
    row >= 1 && row <= shape.len() && col <= shape.part(row) as usize
}

/// `(arm, leg)` of a non-basement box.
///
/// The leg counts boxes to the right. The arm counts boxes in the same column
/// in lower rows that are no longer than this row, plus boxes one column to
/// the left in higher rows that are strictly shorter (basement cells included).
pub fn arm_leg(shape: &Composition, row: usize, col: usize) -> Result<(u32, u32)> {
    if col == 0 || !has_cell(shape, row, col) {
        return Err(Error::CellOutsideDiagram { row, col });
    }
    let len = shape.part(row);
    let leg = len - col as u32;
    let below = (row + 1..=shape.len()).filter(|&r| has_cell(shape, r, col) && shape.part(r) <= len).count();
    let above = (1..row).filter(|&r| has_cell(shape, r, col - 1) && shape.part(r) < len).count();
    Ok(((below + above) as u32, leg))
}
