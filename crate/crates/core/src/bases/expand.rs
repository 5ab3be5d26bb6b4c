use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{rational_from_json, rational_to_json, Monomial, QtRational, XPoly};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::shapes::{grevlex_desc, Composition, Partition, Permutation};

use super::families::{elementary_poly, hall_littlewood_p, monomial_symmetric, patom_t, permuted_atom, schur_poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Monomial,
    Elementary,
    Schur,
    HallLittlewoodP,
    Key,
    Atom,
    PatomT,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Monomial => "monomial",
            Family::Elementary => "elementary",
            Family::Schur => "schur",
            Family::HallLittlewoodP => "hall_littlewood_P",
            Family::Key => "key",
            Family::Atom => "atom",
            Family::PatomT => "patom_t",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s {
            "monomial" => Family::Monomial,
            "elementary" => Family::Elementary,
            "schur" => Family::Schur,
            "hall_littlewood_P" | "hall-littlewood" | "hl" => Family::HallLittlewoodP,
            "key" => Family::Key,
            "atom" => Family::Atom,
            "patom_t" | "patom-t" => Family::PatomT,
            other => return Err(Error::InvalidBasis(format!("unknown family {other:?}"))),
        })
    }

    /// Indexed by partitions (length `n`, weakly decreasing) rather than by
    /// all compositions.
    pub fn is_symmetric(self) -> bool {
        matches!(self, Family::Monomial | Family::Elementary | Family::Schur | Family::HallLittlewoodP)
    }
}

/// A named basis. `patom_t` needs a basement; `atom` takes one optionally
/// (identity by default); `key` is the `ω₀` atom basis; the symmetric
/// families take none.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisId {
    family: Family,
    basement: Option<Permutation>,
}

impl BasisId {
    pub fn new(family: Family, basement: Option<Permutation>) -> Result<Self> {
        match (family, &basement) {
            (Family::PatomT, None) => return Err(Error::InvalidBasis("patom_t requires a basement".into())),
            (Family::Key, Some(b)) if *b != Permutation::longest(b.len()) => {
                return Err(Error::InvalidBasis("key basis has the longest basement".into()))
            }
            (f, Some(_)) if f.is_symmetric() => {
                return Err(Error::InvalidBasis(format!("{} takes no basement", f.name())))
            }
            _ => {}
        }
        Ok(BasisId { family, basement })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn basement(&self) -> Option<&Permutation> {
        self.basement.as_ref()
    }

    fn effective_basement(&self, n: usize) -> Result<Permutation> {
        let b = match (self.family, &self.basement) {
            (_, Some(b)) => b.clone(),
            (Family::Key, None) => Permutation::longest(n),
            _ => Permutation::identity(n),
        };
        if b.len() != n {
            return Err(Error::LengthMismatch { left: n, right: b.len() });
        }
        Ok(b)
    }

    /// Index set in degree `d` with `n` variables, in canonical order.
    pub fn indices(&self, n: usize, d: u32) -> Vec<Composition> {
        if self.family.is_symmetric() {
            Partition::all_of_size(n, d).into_iter().map(|p| p.as_composition()).collect()
        } else {
            Composition::all_of_size(n, d)
        }
    }

    /// The basis element indexed by `alpha`. For the elementary family the
    /// index `λ` names `e_{λ'}`.
    pub fn element(&self, alpha: &Composition) -> Result<XPoly> {
        let n = alpha.len();
        let part = || alpha.revsort();
        Ok(match self.family {
            Family::Monomial => monomial_symmetric(&part(), n),
            Family::Elementary => elementary_poly(part().conjugate().parts(), n),
            Family::Schur => schur_poly(&part(), n),
            Family::HallLittlewoodP => hall_littlewood_p(&part(), n)?,
            Family::Key | Family::Atom => permuted_atom(alpha, &self.effective_basement(n)?)?,
            Family::PatomT => patom_t(alpha, &self.effective_basement(n)?)?,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("family".into(), self.family.name().into());
        if let Some(b) = &self.basement {
            m.insert("basement".into(), serde_json::json!(b.one_line()));
        }
        serde_json::Value::Object(m)
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.basement {
            Some(b) => write!(f, "{}[{}]", self.family.name(), b),
            None => write!(f, "{}", self.family.name()),
        }
    }
}

/// Coefficients of a polynomial in a named basis; zero coefficients omitted,
/// indices in descending graded reverse-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    basis: BasisId,
    coeffs: Vec<(Composition, QtRational)>,
}

impl ExpansionResult {
    pub fn basis(&self) -> &BasisId {
        &self.basis
    }

    pub fn coefficients(&self) -> &[(Composition, QtRational)] {
        &self.coeffs
    }

    pub fn coefficient(&self, alpha: &Composition) -> QtRational {
        self.coeffs.iter().find(|(a, _)| a == alpha).map(|(_, c)| c.clone()).unwrap_or_else(QtRational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Composition> {
        self.coeffs.iter().map(|(a, _)| a)
    }

    /// `Σ c_α b_α`.
    pub fn reconstruct(&self, n: usize) -> Result<XPoly> {
        let mut out = XPoly::zero(n);
        for (alpha, c) in &self.coeffs {
            out = out.add(&self.basis.element(alpha)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(alpha, c)| {
                let r = rational_to_json(c);
                serde_json::json!({"alpha": alpha.parts(), "num": r["num"], "den": r["den"]})
            })
            .collect();
        serde_json::json!({"basis": self.basis.to_json(), "coeffs": coeffs})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("expansion JSON: {what}"));
        let b = &v["basis"];
        let family = Family::parse(b["family"].as_str().ok_or_else(|| bad("family"))?)?;
        let basement = match b.get("basement") {
            None | Some(serde_json::Value::Null) => None,
            Some(arr) => {
                let one_line: Option<Vec<usize>> = arr
                    .as_array()
                    .ok_or_else(|| bad("basement"))?
                    .iter()
                    .map(|x| x.as_u64().map(|k| k as usize))
                    .collect();
                Some(Permutation::new(one_line.ok_or_else(|| bad("basement"))?)?)
            }
        };
        let basis = BasisId::new(family, basement)?;
        let mut coeffs = Vec::new();
        for entry in v["coeffs"].as_array().ok_or_else(|| bad("coeffs"))? {
            let alpha: Option<Vec<u32>> = entry["alpha"]
                .as_array()
                .ok_or_else(|| bad("alpha"))?
                .iter()
                .map(|x| x.as_u64().map(|k| k as u32))
                .collect();
            let c = rational_from_json(&serde_json::json!({"num": entry["num"], "den": entry["den"]}))?;
            coeffs.push((Composition::new(alpha.ok_or_else(|| bad("alpha"))?), c));
        }
        Ok(ExpansionResult { basis, coeffs })
    }
}

impl fmt::Display for ExpansionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(alpha, c)| {
                let cs =
                    if c.is_polynomial() && c.numerator().terms().len() > 1 { format!("({c})") } else { c.to_string() };
                format!("{cs} * {}{}", self.basis.family.name(), alpha)
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn homogeneous_degree(f: &XPoly) -> Result<Option<u32>> {
    if f.is_zero() {
        return Ok(None);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(f.degree())
}

/// Solve `Σ_α c_α b_α = f` for each target by Gauss–Jordan elimination in
/// monomial coordinates, then confirm each reconstruction exactly.
fn solve(basis: &[XPoly], targets: &[XPoly]) -> Result<Vec<Vec<QtRational>>> {
    let k = basis.len();
    let mut rows_of: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in basis.iter().chain(targets) {
        for (m, _) in p.terms() {
            let next = rows_of.len();
            rows_of.entry(m.clone()).or_insert(next);
        }
    }
    let width = k + targets.len();
    let mut mat = vec![vec![QtRational::zero(); width]; rows_of.len()];
    for (j, p) in basis.iter().chain(targets).enumerate() {
        for (m, c) in p.terms() {
            mat[rows_of[m]][j] = c.clone();
        }
    }

    let mut rank = 0;
    for col in 0..k {
        // prefer a constant pivot to keep the fractions small
        let candidates = (rank..mat.len()).filter(|&r| !mat[r][col].is_zero());
        let pivot =
            candidates.clone().find(|&r| mat[r][col].as_constant().is_some()).or_else(|| candidates.clone().next());
        let Some(p) = pivot else {
            return Err(Error::SingularBasis);
        };
        mat.swap(rank, p);
        let inv = mat[rank][col].inverse()?;
        for j in col..width {
            if !mat[rank][j].is_zero() {
                mat[rank][j] = &mat[rank][j] * &inv;
            }
        }
        for r in 0..mat.len() {
            if r == rank || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for j in col..width {
                if mat[rank][j].is_zero() {
                    continue;
                }
                let delta = &factor * &mat[rank][j];
                mat[r][j] = &mat[r][j] - &delta;
            }
        }
        rank += 1;
    }

    let mut out = Vec::with_capacity(targets.len());
    for (t, target) in targets.iter().enumerate() {
        let coeffs: Vec<QtRational> = (0..k).map(|r| mat[r][k + t].clone()).collect();
        let mut residual = target.clone();
        for (b, c) in basis.iter().zip(&coeffs) {
            if !c.is_zero() {
                residual = residual.sub(&b.scale(c))?;
            }
        }
        if !residual.is_zero() {
            return Err(Error::NotInSpan { residual: residual.to_string() });
        }
        out.push(coeffs);
    }
    Ok(out)
}

/// Basis elements of one degree, generated once and shared across targets.
pub struct BasisTable {
    basis: BasisId,
    indices: Vec<Composition>,
    elements: Vec<XPoly>,
}

impl BasisTable {
    pub fn new(basis: &BasisId, n: usize, d: u32, exec: Exec) -> Result<Self> {
        let indices = basis.indices(n, d);
        let elements = exec.map(&indices, |a| basis.element(a)).into_iter().collect::<Result<Vec<_>>>()?;
        Ok(BasisTable { basis: basis.clone(), indices, elements })
    }

    pub fn indices(&self) -> &[Composition] {
        &self.indices
    }

    pub fn elements(&self) -> &[XPoly] {
        &self.elements
    }

    /// Expand several homogeneous polynomials of this table's degree at once.
    pub fn expand_all(&self, targets: &[XPoly]) -> Result<Vec<ExpansionResult>> {
        let sols = solve(&self.elements, targets)?;
        Ok(sols
            .into_iter()
            .map(|coeffs| {
                let mut pairs: Vec<(Composition, QtRational)> =
                    self.indices.iter().cloned().zip(coeffs).filter(|(_, c)| !c.is_zero()).collect();
                pairs.sort_by(|a, b| grevlex_desc(&a.0, &b.0));
                ExpansionResult { basis: self.basis.clone(), coeffs: pairs }
            })
            .collect())
    }
}

/// Coefficients of a homogeneous `f` in `basis`; errors if `f` is outside
/// the span.
pub fn expand_in_basis(f: &XPoly, basis: &BasisId, exec: Exec) -> Result<ExpansionResult> {
    let Some(d) = homogeneous_degree(f)? else {
        return Ok(ExpansionResult { basis: basis.clone(), coeffs: Vec::new() });
    };
    let table = BasisTable::new(basis, f.n(), d, exec)?;
    Ok(table.expand_all(std::slice::from_ref(f))?.remove(0))
}

/// `s_μ · A^σ_γ` in the `(σ, t = 0)` atom basis.
pub fn product_expand_schur(
    mu: &Partition,
    gamma: &Composition,
    sigma: &Permutation,
    exec: Exec,
) -> Result<ExpansionResult> {
    let n = gamma.len();
    let f = schur_poly(mu, n).mul(&permuted_atom(gamma, sigma)?)?;
    expand_in_basis(&f, &BasisId::new(Family::Atom, Some(sigma.clone()))?, exec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::families::key_poly;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn basis_element_is_unit_vector() {
        let basis = BasisId::new(Family::PatomT, Some(Permutation::new(vec![2, 3, 1]).unwrap())).unwrap();
        let alpha = comp(&[1, 0, 2]);
        let r = expand_in_basis(&basis.element(&alpha).unwrap(), &basis, Exec::Sequential).unwrap();
        assert_eq!(r.coefficients().len(), 1);
        assert!(r.coefficient(&alpha).is_one());
    }

    #[test]
    fn key_into_atoms_is_zero_one() {
        let atoms = BasisId::new(Family::Atom, None).unwrap();
        let r = expand_in_basis(&key_poly(&comp(&[2, 0, 1])).unwrap(), &atoms, Exec::Sequential).unwrap();
        assert!(r.coefficients().iter().all(|(_, c)| c.is_one()));
        assert!(r.support().all(|a| a.revsort() == comp(&[2, 0, 1]).revsort()));
        assert_eq!(r.reconstruct(3).unwrap(), key_poly(&comp(&[2, 0, 1])).unwrap());
    }

    #[test]
    fn errors() {
        let f = XPoly::monomial(&[1, 0]).add(&XPoly::one(2)).unwrap();
        let schur = BasisId::new(Family::Schur, None).unwrap();
        assert_eq!(expand_in_basis(&f, &schur, Exec::Sequential), Err(Error::NotHomogeneous));
        let r = expand_in_basis(&XPoly::monomial(&[1, 0]), &schur, Exec::Sequential);
        assert!(matches!(r, Err(Error::NotInSpan { .. })));
        assert!(BasisId::new(Family::PatomT, None).is_err());
        assert!(BasisId::new(Family::Schur, Some(Permutation::identity(2))).is_err());
    }

    #[test]
    fn json_round_trip() {
        let basis = BasisId::new(Family::PatomT, Some(Permutation::identity(3))).unwrap();
        let f = crate::bases::families::hall_littlewood_p(&Partition::new(vec![2, 1]).unwrap(), 3).unwrap();
        let r = expand_in_basis(&f, &basis, Exec::Sequential).unwrap();
        assert_eq!(ExpansionResult::from_json(&r.to_json()).unwrap(), r);
        assert_eq!(r.to_json()["basis"], serde_json::json!({"family": "patom_t", "basement": [1, 2, 3]}));
    }
}
