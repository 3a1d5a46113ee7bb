use std::collections::BTreeSet;

use serde::Serialize;

use super::DopeMatrix;
use crate::error::{Error, Result};
use crate::forms::{form_vector, NodeTuple};
use crate::linalg::{self, ExactMatrix};
use crate::poly::binom;
use crate::scalar::FieldDescriptor;

/// Polya condition for a two-row incidence matrix: every prefix of `k`
/// columns holds at least `k` ones.
pub fn polya_poised(e: &DopeMatrix) -> Result<bool> {
    if e.m() != 2 {
        return Err(Error::Dimension(format!("expected 2 rows, got {}", e.m())));
    }
    let mut ones = 0;
    for k in 1..=e.n() + 1 {
        ones += (0..2).filter(|&i| e.get(i, k - 1)).count();
        if ones < k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the only polynomial of degree at most `n` with `P^(j)(lambda_i) = 0`
/// on every one of `e` is zero.
pub fn poised_by_nullspace(e: &DopeMatrix, lambda: &NodeTuple) -> Result<bool> {
    if e.m() != lambda.len() {
        return Err(Error::Dimension(format!("{} rows but {} nodes", e.m(), lambda.len())));
    }
    let n = e.n();
    let mut rows = Vec::new();
    for i in 0..e.m() {
        for j in 0..=n {
            if e.get(i, j) {
                rows.push(form_vector(lambda.get(i), j, n));
            }
        }
    }
    if rows.is_empty() {
        return Ok(false);
    }
    let m = ExactMatrix::from_rows(lambda.field(), rows)?;
    Ok(linalg::nullspace(&m).is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GvReport {
    pub condition_holds: bool,
    pub det_nonzero: bool,
}

/// Interval condition `|G ∩ [0,c]| <= |H ∩ [0,c]|` for all `c`, and whether the
/// matrix `(binom(g, h))` is nonsingular.
pub fn gv_nonsingular(g: &[u64], h: &[u64]) -> Result<GvReport> {
    let gs: BTreeSet<u64> = g.iter().copied().collect();
    let hs: BTreeSet<u64> = h.iter().copied().collect();
    if gs.len() != g.len() || hs.len() != h.len() {
        return Err(Error::Domain("index sets must not repeat elements".into()));
    }
    if gs.len() != hs.len() {
        return Err(Error::Dimension(format!("|G| = {} but |H| = {}", gs.len(), hs.len())));
    }
    let top = gs.iter().chain(&hs).copied().max().unwrap_or(0);
    let condition_holds = (0..=top).all(|c| gs.range(..=c).count() <= hs.range(..=c).count());
    let field = FieldDescriptor::Rational;
    let rows = gs
        .iter()
        .map(|&a| hs.iter().map(|&b| binom(field, a as usize, b as usize)).collect())
        .collect();
    let det = if gs.is_empty() {
        field.one()
    } else {
        linalg::determinant(&ExactMatrix::from_rows(field, rows)?)?
    };
    Ok(GvReport { condition_holds, det_nonzero: !det.is_zero() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polya_examples() {
        assert!(polya_poised(&DopeMatrix::parse("10/10").unwrap()).unwrap());
        assert!(!polya_poised(&DopeMatrix::parse("00/00").unwrap()).unwrap());
        let l = NodeTuple::rationals(&[0, 1]).unwrap();
        assert!(poised_by_nullspace(&DopeMatrix::parse("10/10").unwrap(), &l).unwrap());
        assert!(!poised_by_nullspace(&DopeMatrix::parse("01/01").unwrap(), &l).unwrap());
    }

    #[test]
    fn gv_examples() {
        assert_eq!(gv_nonsingular(&[0, 1, 2], &[0, 1, 2]).unwrap(), GvReport { condition_holds: true, det_nonzero: true });
        assert_eq!(gv_nonsingular(&[2], &[0]).unwrap(), GvReport { condition_holds: true, det_nonzero: true });
        assert!(!gv_nonsingular(&[0], &[2]).unwrap().condition_holds);
        assert!(gv_nonsingular(&[0, 1], &[2]).is_err());
    }
}
