use std::fmt;

use crate::algebra::{Monomial, XPoly};
use crate::error::{Error, Result};
use crate::shapes::{arm_leg, has_cell, Composition, Permutation};

/// A cell of an augmented diagram: 1-based row, column 0 is the basement.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleKind {
    /// `a`,`b` adjacent in a row, `c` below `b` in a row no longer than theirs.
    A,
    /// `a`,`b` adjacent in a row, `c` above `a` in a strictly shorter row.
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple {
    pub kind: TripleKind,
    pub a: Cell,
    pub b: Cell,
    pub c: Cell,
}

/// Every type-A and type-B triple of the augmented diagram of `shape`,
/// basement cells included.
pub fn shape_triples(shape: &Composition) -> Vec<Triple> {
    let n = shape.len();
    let mut out = Vec::new();
    for r in 1..=n {
        let len = shape.part(r);
        for c in 0..len as usize {
            for r2 in r + 1..=n {
                if has_cell(shape, r2, c + 1) && len >= shape.part(r2) {
                    out.push(Triple { kind: TripleKind::A, a: (r, c), b: (r, c + 1), c: (r2, c + 1) });
                }
            }
            for r2 in 1..r {
                if has_cell(shape, r2, c) && len > shape.part(r2) {
                    out.push(Triple { kind: TripleKind::B, a: (r, c), b: (r, c + 1), c: (r2, c) });
                }
            }
        }
    }
    out
}

/// Whether the entries `(a, b, c)` of a triple form an inversion.
///
/// Ties are broken by role: on equal values `a` counts as largest, then `c`,
/// then `b`. The triple is an inversion when the three read in cyclic order
/// `b < a < c` (up to rotation); both kinds share this rule.
pub fn is_inversion(fa: usize, fb: usize, fc: usize) -> bool {
    let ka = (fa, 3);
    let kb = (fb, 1);
    let kc = (fc, 2);
    (ka < kc && kc < kb) || (kc < kb && kb < ka) || (kb < ka && ka < kc)
}

/// A filling of a composition diagram together with its basement column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AugmentedFilling {
    shape: Composition,
    basement: Permutation,
    rows: Vec<Vec<usize>>,
}

impl AugmentedFilling {
    /// `rows[r]` holds the non-basement entries of row `r+1`.
    pub fn new(shape: Composition, basement: Permutation, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.len();
        if basement.len() != n {
            return Err(Error::LengthMismatch { left: n, right: basement.len() });
        }
        if rows.len() != n {
            return Err(Error::LengthMismatch { left: n, right: rows.len() });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.part(r + 1) as usize {
                return Err(Error::LengthMismatch { left: shape.part(r + 1) as usize, right: row.len() });
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::IndexOutOfRange { index: v, bound: n });
            }
        }
        Ok(AugmentedFilling { shape, basement, rows })
    }

    pub(crate) fn from_parts_unchecked(shape: Composition, basement: Permutation, rows: Vec<Vec<usize>>) -> Self {
        AugmentedFilling { shape, basement, rows }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn basement(&self) -> &Permutation {
        &self.basement
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, col)`; column 0 reads the basement.
    pub fn entry(&self, (r, c): Cell) -> usize {
        if c == 0 {
            self.basement.at(r)
        } else {
            self.rows[r - 1][c - 1]
        }
    }

    fn cells(&self) -> Vec<Cell> {
        (1..=self.shape.len()).flat_map(|r| (0..=self.shape.part(r) as usize).map(move |c| (r, c))).collect()
    }

    /// Non-basement cells in row-major order.
    pub fn boxes(&self) -> Vec<Cell> {
        self.cells().into_iter().filter(|&(_, c)| c > 0).collect()
    }

    /// Pairs of cells that attack each other: equal entries in one column,
    /// or in adjacent columns with the right-hand cell strictly lower.
    pub fn attacking_pairs(&self) -> Vec<(Cell, Cell)> {
        let cells = self.cells();
        let mut out = Vec::new();
        for (i, &x) in cells.iter().enumerate() {
            for &y in &cells[i + 1..] {
                if self.entry(x) != self.entry(y) {
                    continue;
                }
                let attacks = x.1 == y.1 || (y.1 == x.1 + 1 && y.0 > x.0) || (x.1 == y.1 + 1 && x.0 > y.0);
                if attacks {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_non_attacking(&self) -> bool {
        self.attacking_pairs().is_empty()
    }

    /// Boxes strictly larger than their left neighbour.
    pub fn descent_set(&self) -> Vec<Cell> {
        self.boxes().into_iter().filter(|&(r, c)| self.entry((r, c - 1)) < self.entry((r, c))).collect()
    }

    pub fn maj(&self) -> u32 {
        self.descent_set().into_iter().map(|(r, c)| self.shape.part(r) - c as u32 + 1).sum()
    }

    pub fn inv(&self) -> usize {
        shape_triples(&self.shape)
            .iter()
            .filter(|tr| is_inversion(self.entry(tr.a), self.entry(tr.b), self.entry(tr.c)))
            .count()
    }

    pub fn coinv(&self) -> usize {
        shape_triples(&self.shape).len() - self.inv()
    }

    /// Exponent vector counting each label among the non-basement entries.
    pub fn weight(&self) -> Monomial {
        let mut exps = vec![0u32; self.shape.len()];
        for row in &self.rows {
            for &v in row {
                exps[v - 1] += 1;
            }
        }
        Monomial::new(exps)
    }

    /// `x^F`.
    pub fn weight_monomial(&self) -> XPoly {
        XPoly::monomial(self.weight().exponents())
    }

    /// `(arm, leg)` of every box whose entry differs from its left neighbour.
    pub fn unequal_boxes(&self) -> Vec<(u32, u32)> {
        self.boxes()
            .into_iter()
            .filter(|&(r, c)| self.entry((r, c - 1)) != self.entry((r, c)))
            .map(|(r, c)| arm_leg(&self.shape, r, c).expect("box of the diagram"))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape.parts(),
            "basement": self.basement.one_line(),
            "rows": self.rows,
            "stats": {"maj": self.maj(), "inv": self.inv(), "coinv": self.coinv()},
        })
    }
}

/// Tableau rendering with the basement as a bracketed zeroth column.
impl fmt::Display for AugmentedFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.shape.len() {
            write!(f, "[{}]", self.basement.at(r))?;
            for v in &self.rows[r - 1] {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
