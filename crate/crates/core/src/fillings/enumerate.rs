use crate::error::{Error, Result};
use crate::shapes::{Composition, Permutation};

use super::AugmentedFilling;

/// Visit every non-attacking filling of `shape` over `basement`.
///
/// `grid[r][c]` is the entry of row `r+1`, column `c`, with `grid[r][0]` the
/// basement label. Boxes are filled column by column, top to bottom; a value is
/// admissible when it differs from every entry already placed in its column and
/// from every entry of the previous column in a higher row. That is exactly the
/// set of attacks involving the box and an earlier box, so pruning is complete.
pub(crate) fn for_each_naf(shape: &Composition, basement: &Permutation, mut visit: impl FnMut(&[Vec<usize>])) {
    let n = shape.len();
    let mut grid: Vec<Vec<usize>> = (1..=n)
        .map(|r| {
            let mut row = vec![0; shape.part(r) as usize + 1];
            row[0] = basement.at(r);
            row
        })
        .collect();
    let width = shape.parts().iter().copied().max().unwrap_or(0) as usize;
    let order: Vec<(usize, usize)> = (1..=width)
        .flat_map(|c| (0..n).filter(move |&r| shape.parts()[r] as usize >= c).map(move |r| (r, c)))
        .collect();

    fn rec(
        k: usize,
        order: &[(usize, usize)],
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(&(r, c)) = order.get(k) else {
            visit(grid);
            return;
        };
        'values: for v in 1..=n {
            for r2 in 0..r {
                if grid[r2].len() > c && grid[r2][c] == v {
                    continue 'values;
                }
                if grid[r2].len() > c - 1 && grid[r2][c - 1] == v {
                    continue 'values;
                }
            }
            grid[r][c] = v;
            rec(k + 1, order, n, grid, visit);
        }
        grid[r][c] = 0;
    }
    rec(0, &order, n, &mut grid, &mut visit);
}

/// All of `NAF_σ(λ)`, in row-major lexicographic order of the entry grids.
pub fn enumerate_naf(shape: &Composition, basement: &Permutation) -> Result<Vec<AugmentedFilling>> {
    if shape.len() != basement.len() {
        return Err(Error::LengthMismatch { left: shape.len(), right: basement.len() });
    }
    let mut out = Vec::new();
    for_each_naf(shape, basement, |grid| {
        let rows = grid.iter().map(|row| row[1..].to_vec()).collect();
        out.push(AugmentedFilling::from_parts_unchecked(shape.clone(), basement.clone(), rows));
    });
    out.sort();
    Ok(out)
}
