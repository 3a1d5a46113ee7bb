//! JSON literals for scalars: `{"q": "p/q"}`, `{"quad": {"a": .., "b": .., "d": ..}}`
//! and `{"gen": "<expression in t1, t2, ...>"}`.

use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize, Serializer};

use super::{FieldDescriptor, Scalar};
use crate::error::{Error, Result};
use crate::expr;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ScalarLiteral {
    Q(String),
    Quad(QuadLiteral),
    Gen(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadLiteral {
    pub a: String,
    pub b: String,
    pub d: i64,
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = num_bigint::BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        let d = num_bigint::BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        if d == 0.into() {
            return Err(Error::Parse(format!("{s:?}: zero denominator")));
        }
        return Ok(BigRational::new(n, d));
    }
    let n = num_bigint::BigInt::from_str(s).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
    Ok(BigRational::from_integer(n))
}

impl From<&Scalar> for ScalarLiteral {
    fn from(s: &Scalar) -> Self {
        match s {
            Scalar::Rational(q) => ScalarLiteral::Q(q.to_string()),
            Scalar::Quadratic(q) => ScalarLiteral::Quad(QuadLiteral {
                a: q.a().to_string(),
                b: q.b().to_string(),
                d: q.d(),
            }),
            Scalar::Generic(r) => ScalarLiteral::Gen(r.to_string()),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarLiteral::from(self).serialize(serializer)
    }
}

/// Field shared by a list of literals: the quadratic field if any literal is
/// quadratic, the generic field with the largest indeterminate index if any
/// is generic, rationals otherwise.
pub fn literal_field(lits: &[ScalarLiteral]) -> Result<FieldDescriptor> {
    let mut quad: Option<i64> = None;
    let mut gen: Option<usize> = None;
    for lit in lits {
        match lit {
            ScalarLiteral::Q(_) => {}
            ScalarLiteral::Quad(q) => match quad {
                Some(d) if d != q.d => {
                    return Err(Error::Domain(format!(
                        "towers of quadratic extensions are not supported (sqrt({d}) and sqrt({}))",
                        q.d
                    )))
                }
                _ => quad = Some(q.d),
            },
            ScalarLiteral::Gen(s) => {
                let e = expr::parse(s)?;
                let req = e.requirements();
                if req.uses_x || req.uses_pi || !req.sqrt.is_empty() {
                    return Err(Error::Parse(format!("{s:?}: generic literals may only use t1, t2, ...")));
                }
                gen = Some(gen.unwrap_or(1).max(req.max_t));
            }
        }
    }
    match (quad, gen) {
        (Some(_), Some(_)) => Err(Error::Domain("cannot mix quadratic and generic scalars".into())),
        (Some(d), None) => FieldDescriptor::quadratic(d),
        (None, Some(k)) => FieldDescriptor::generic(k),
        (None, None) => Ok(FieldDescriptor::Rational),
    }
}

/// Resolves literals into scalars of one common field.
pub fn resolve_literals(lits: &[ScalarLiteral]) -> Result<(FieldDescriptor, Vec<Scalar>)> {
    let field = literal_field(lits)?;
    let scalars = lits
        .iter()
        .map(|lit| resolve_in(lit, field))
        .collect::<Result<Vec<_>>>()?;
    Ok((field, scalars))
}

fn resolve_in(lit: &ScalarLiteral, field: FieldDescriptor) -> Result<Scalar> {
    match lit {
        ScalarLiteral::Q(s) => Ok(field.from_rational(parse_rational(s)?)),
        ScalarLiteral::Quad(q) => {
            let a = field.from_rational(parse_rational(&q.a)?);
            let b = field.from_rational(parse_rational(&q.b)?);
            let root = field.sqrt().expect("quadratic field");
            Ok(&a + &(&b * &root))
        }
        ScalarLiteral::Gen(s) => expr::parse(s)?.eval_scalar(field, None),
    }
}
