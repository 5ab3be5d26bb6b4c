//! Worked examples with hand-transcribed expected values, shared by the
//! example tests and the acceptance runner.

use permac::algebra::{Monomial, QtPoly, QtRational, XPoly};
use permac::bases::{elementary_poly, patom_t};
use permac::fillings::enumerate_naf;
use permac::shapes::{Composition, Permutation};

fn comp(v: &[u32]) -> Composition {
    Composition::new(v.to_vec())
}

fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

/// The eight fillings of shape (1,1,0,2) over basement 3124, each with
/// (rows, coinv, maj).
pub fn naf_3124() -> Result<(), String> {
    let mut expected: Vec<(Vec<Vec<usize>>, usize, u32)> = vec![
        (vec![vec![1], vec![2], vec![], vec![4, 3]], 1, 1),
        (vec![vec![1], vec![2], vec![], vec![4, 4]], 1, 1),
        (vec![vec![2], vec![1], vec![], vec![4, 3]], 0, 0),
        (vec![vec![2], vec![1], vec![], vec![4, 4]], 0, 0),
        (vec![vec![3], vec![1], vec![], vec![4, 2]], 1, 0),
        (vec![vec![3], vec![1], vec![], vec![4, 4]], 0, 0),
        (vec![vec![3], vec![2], vec![], vec![4, 1]], 2, 1),
        (vec![vec![3], vec![2], vec![], vec![4, 4]], 0, 1),
    ];
    let mut actual: Vec<_> = enumerate_naf(&comp(&[1, 1, 0, 2]), &perm(&[3, 1, 2, 4]))
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|f| (f.rows().to_vec(), f.coinv(), f.maj()))
        .collect();
    expected.sort();
    actual.sort();
    if expected == actual {
        Ok(())
    } else {
        Err(format!("expected {expected:?}, got {actual:?}"))
    }
}

/// Fillings of (2,1,0) over 132: twelve in all, nine coinversion-free with
/// weights summing to e_2 e_1.
pub fn coinversion_free_132() -> Result<(), String> {
    let all = enumerate_naf(&comp(&[2, 1, 0]), &perm(&[1, 3, 2])).map_err(|e| e.to_string())?;
    if all.len() != 12 {
        return Err(format!("{} fillings, expected 12", all.len()));
    }
    let free: Vec<_> = all.into_iter().filter(|f| f.coinv() == 0).collect();
    if free.len() != 9 {
        return Err(format!("{} coinversion-free fillings, expected 9", free.len()));
    }
    let mut sum = XPoly::zero(3);
    for f in &free {
        sum = sum.add(&f.weight_monomial()).map_err(|e| e.to_string())?;
    }
    let e21 = elementary_poly(&[2, 1], 3);
    if sum == e21 {
        Ok(())
    } else {
        Err(format!("weight sum {sum}, expected {e21}"))
    }
}

/// The t-atom of shape (2,3,0,1) over basement 1423, term by term, from the
/// seven maj-free fillings among 108.
pub fn seven_term_atom() -> Result<(), String> {
    let all = enumerate_naf(&comp(&[2, 3, 0, 1]), &perm(&[1, 4, 2, 3])).map_err(|e| e.to_string())?;
    let maj_free = all.iter().filter(|f| f.maj() == 0).count();
    if (all.len(), maj_free) != (108, 7) {
        return Err(format!("{} fillings with {maj_free} maj-free, expected 108 and 7", all.len()));
    }
    let one_minus_t = QtPoly::one_minus(0, 1);
    let coeff = |p: QtPoly| QtRational::from_poly(p);
    let terms: Vec<([u32; 4], QtRational)> = vec![
        ([2, 3, 1, 0], coeff(one_minus_t.mul(&QtPoly::t()))),
        ([2, 2, 1, 1], coeff(one_minus_t.clone())),
        ([2, 1, 2, 1], coeff(one_minus_t.pow(2))),
        ([2, 0, 3, 1], coeff(one_minus_t.clone())),
        ([2, 1, 1, 2], coeff(one_minus_t.clone())),
        ([2, 0, 2, 2], coeff(one_minus_t.clone())),
        ([2, 0, 1, 3], QtRational::one()),
    ];
    let mut expected = XPoly::zero(4);
    for (e, c) in terms {
        expected.add_term(Monomial::new(e.to_vec()), c);
    }
    let actual = patom_t(&comp(&[2, 3, 0, 1]), &perm(&[1, 4, 2, 3])).map_err(|e| e.to_string())?;
    if actual == expected {
        Ok(())
    } else {
        Err(format!("got {actual}, expected {expected}"))
    }
}
