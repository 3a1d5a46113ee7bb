//! Text inputs shared by the command line and job files: node tuples and
//! polynomials either as infix strings or as JSON literals.

use crate::dope::common_field;
use crate::error::{Error, Result};
use crate::expr::{self, Expr, Requirements};
use crate::forms::NodeTuple;
use crate::poly::{Poly, PolyLiteral};
use crate::scalar::ScalarLiteral;

fn is_json(s: &str) -> bool {
    let s = s.trim_start();
    s.starts_with('[') || s.starts_with('{')
}

fn split_entries(s: &str) -> Vec<&str> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    s.split(',').map(str::trim).collect()
}

fn lambda_exprs(s: &str) -> Result<Vec<Expr>> {
    let items = split_entries(s);
    if items.iter().any(|x| x.is_empty()) {
        return Err(Error::Parse(format!("empty entry in node list {s:?}")));
    }
    items.iter().map(|x| expr::parse(x)).collect()
}

/// `"0,1,sqrt(2)"`, `"(0,1,pi)"` or a JSON array of scalar literals.
pub fn parse_lambda(s: &str) -> Result<NodeTuple> {
    if is_json(s) {
        let lits: Vec<ScalarLiteral> = serde_json::from_str(s).map_err(|e| Error::Parse(format!("node list: {e}")))?;
        return NodeTuple::from_literals(&lits);
    }
    let exprs = lambda_exprs(s)?;
    let mut req = Requirements::default();
    exprs.iter().for_each(|e| req.merge(&e.requirements()));
    build_lambda(&exprs, &req)
}

fn build_lambda(exprs: &[Expr], req: &Requirements) -> Result<NodeTuple> {
    if exprs.iter().any(|e| e.requirements().uses_x) {
        return Err(Error::Parse("node entries must be constants".into()));
    }
    let field = req.field()?;
    let entries = exprs.iter().map(|e| e.eval_scalar(field, req.pi_index())).collect::<Result<Vec<_>>>()?;
    NodeTuple::new(field, entries)
}

/// An infix polynomial in `x` or `{"coeffs": [...]}`.
pub fn parse_poly(s: &str) -> Result<Poly> {
    if is_json(s) {
        let lit: PolyLiteral = serde_json::from_str(s).map_err(|e| Error::Parse(format!("polynomial: {e}")))?;
        return lit.resolve();
    }
    let e = expr::parse(s)?;
    let req = e.requirements();
    e.eval_poly(req.field()?, req.pi_index())
}

/// A polynomial and a node tuple over one common field. When both are infix
/// strings they are parsed together, so `pi` means the same indeterminate in
/// each.
pub fn parse_poly_and_lambda(poly: &str, lambda: &str) -> Result<(Poly, NodeTuple)> {
    if is_json(poly) || is_json(lambda) {
        let p = parse_poly(poly)?;
        let l = parse_lambda(lambda)?;
        let field = common_field(p.field(), l.field())?;
        return Ok((Poly::new(field, p.coeffs().to_vec())?, NodeTuple::new(field, l.entries().to_vec())?));
    }
    let pe = expr::parse(poly)?;
    let le = lambda_exprs(lambda)?;
    let mut req = pe.requirements();
    le.iter().for_each(|e| req.merge(&e.requirements()));
    let field = req.field()?;
    let p = pe.eval_poly(field, req.pi_index())?;
    let l = build_lambda(&le, &req)?;
    Ok((p, l))
}

/// Comma-separated nonnegative integers, e.g. `"0,2,5"`; empty means the empty set.
pub fn parse_index_list(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    let s = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(s);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| Error::Parse(format!("{x:?} is not a nonnegative integer"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldDescriptor;

    #[test]
    fn lambda_forms() {
        let l = parse_lambda("(0, 1, sqrt(2))").unwrap();
        assert_eq!(l.field(), FieldDescriptor::Quadratic(2));
        let l = parse_lambda(r#"[{"q":"0"},{"q":"1"},{"gen":"t1"}]"#).unwrap();
        assert_eq!(l.field(), FieldDescriptor::Generic(1));
        assert!(matches!(parse_lambda("0,1,0"), Err(Error::DuplicateNodes(1, 3))));
        assert!(parse_lambda("0,,1").is_err());
    }

    #[test]
    fn joint_parsing_shares_pi() {
        let (p, l) = parse_poly_and_lambda("x-pi", "0,pi").unwrap();
        assert_eq!(p.field(), l.field());
        assert!(p.eval(l.get(1)).is_zero());
    }
}
