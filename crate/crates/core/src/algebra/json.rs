//! Canonical JSON encoding of polynomials and rational functions.
//!
//! `{"n": 2, "terms": [{"exp": [1,0], "coeff": {"num": [[1,0,0],[-1,0,1]], "den": [[1,0,0]]}}]}`
//! Terms are in descending grevlex order; each `[c, dq, dt]` triple list is
//! sorted q-degree then t-degree descending.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{Monomial, QtPoly, QtRational, XPoly};
use crate::error::{Error, Result};

fn integer_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => Value::String(c.to_string()),
    }
}

fn integer_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            n.as_i64().map(BigInt::from).ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}")))
        }
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

fn usize_from_json(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse(format!("expected non-negative integer, got {v}")))
}

pub fn qtpoly_to_json(p: &QtPoly) -> Value {
    Value::Array(p.terms().iter().map(|(c, dq, dt)| json!([integer_to_json(c), dq, dt])).collect())
}

pub fn qtpoly_from_json(v: &Value) -> Result<QtPoly> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected array of [c, dq, dt]".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let t =
            t.as_array().filter(|t| t.len() == 3).ok_or_else(|| Error::Parse(format!("bad monomial triple {t}")))?;
        terms.push((integer_from_json(&t[0])?, usize_from_json(&t[1])?, usize_from_json(&t[2])?));
    }
    Ok(QtPoly::from_terms(terms))
}

pub fn rational_to_json(c: &QtRational) -> Value {
    json!({"num": qtpoly_to_json(c.numerator()), "den": qtpoly_to_json(c.denominator())})
}

/// Reads `{"num": ..., "den": ...}`; the result is re-normalized.
pub fn rational_from_json(v: &Value) -> Result<QtRational> {
    let num = qtpoly_from_json(v.get("num").ok_or_else(|| Error::Parse("missing num".into()))?)?;
    let den = qtpoly_from_json(v.get("den").ok_or_else(|| Error::Parse("missing den".into()))?)?;
    QtRational::new(num, den)
}

pub fn xpoly_to_json(f: &XPoly) -> Value {
    let terms: Vec<Value> =
        f.terms().map(|(m, c)| json!({"exp": m.exponents(), "coeff": rational_to_json(c)})).collect();
    json!({"n": f.n(), "terms": terms})
}

pub fn xpoly_from_json(v: &Value) -> Result<XPoly> {
    let n = usize_from_json(v.get("n").ok_or_else(|| Error::Parse("missing n".into()))?)?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing terms".into()))?;
    let mut f = XPoly::zero(n);
    for t in terms {
        let exp = t.get("exp").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing exp".into()))?;
        if exp.len() != n {
            return Err(Error::LengthMismatch { left: exp.len(), right: n });
        }
        let exp = exp
            .iter()
            .map(|e| e.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u32>>>()?;
        let coeff = rational_from_json(t.get("coeff").ok_or_else(|| Error::Parse("missing coeff".into()))?)?;
        f.add_term(Monomial::new(exp), coeff);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodes_canonical_layout() {
        let c = QtRational::new(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 1)).unwrap();
        let f = XPoly::term(Monomial::new(vec![1, 0]), c);
        let v = xpoly_to_json(&f);
        assert_eq!(
            v.to_string(),
            r#"{"n":2,"terms":[{"coeff":{"den":[[1,1,1],[-1,0,0]],"num":[[1,0,1],[-1,0,0]]},"exp":[1,0]}]}"#
        );
        assert_eq!(xpoly_from_json(&v).unwrap(), f);
    }

    #[test]
    fn big_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let f = XPoly::term(Monomial::new(vec![0]), QtRational::from_integer(big));
        assert_eq!(xpoly_from_json(&xpoly_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(
            xpoly_from_json(&json!({"n": 2, "terms": [{"exp": [1], "coeff": {"num": [], "den": [[1,0,0]]}}]})).is_err()
        );
        assert!(
            xpoly_from_json(&json!({"n": 1, "terms": [{"exp": [1], "coeff": {"num": [[1,0,0]], "den": []}}]})).is_err()
        );
    }
}
