//! Dope, multiplicity and signed matrices of polynomials at node tuples,
//! the row/column/tail conditions, and realizability witnesses.

mod birkhoff;
mod extension;
mod matrix;
mod witness;

use serde::Serialize;

pub use birkhoff::{gv_nonsingular, poised_by_nullspace, polya_poised, GvReport};
pub use extension::{extend, ExtensionPlan};
pub use matrix::{DopeMatrix, MultiplicityMatrix, SignedDopeMatrix};
pub use witness::{witness_general, witness_two_row, Realization};

use crate::error::{Error, Result};
use crate::forms::NodeTuple;
use crate::poly::Poly;
use crate::scalar::FieldDescriptor;

/// The smallest field containing both, if one contains the other.
pub fn common_field(a: FieldDescriptor, b: FieldDescriptor) -> Result<FieldDescriptor> {
    match (a, b) {
        _ if a == b => Ok(a),
        (FieldDescriptor::Rational, _) => Ok(b),
        (_, FieldDescriptor::Rational) => Ok(a),
        _ => Err(Error::FieldMismatch(a, b)),
    }
}

/// Taylor coefficients `P^(j)(lambda_i) / j!` for `j = 0..=deg p`, one row per node.
/// Over `Q(t..)` they are taken for a polynomial multiple of `P`, which has the
/// same zeros.
fn taylor_rows(p: &Poly, lambda: &NodeTuple) -> Result<Vec<Vec<crate::scalar::Scalar>>> {
    let Some(n) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let field = common_field(p.field(), lambda.field())?;
    let mut coeffs = p.coeffs().to_vec();
    if matches!(field, FieldDescriptor::Generic(_)) {
        crate::scalar::clear_denominators(&mut coeffs);
    }
    let p = Poly::new(field, coeffs)?;
    let lambda = NodeTuple::new(field, lambda.entries().to_vec())?;
    Ok(lambda.entries().iter().map(|l| p.taylor_coeffs(l, n + 1)).collect())
}

pub fn dope_matrix_of(p: &Poly, lambda: &NodeTuple) -> Result<DopeMatrix> {
    let rows = taylor_rows(p, lambda)?;
    DopeMatrix::new(rows.into_iter().map(|r| r.iter().map(|c| c.is_zero()).collect()).collect())
}

pub fn signed_dope_matrix_of(p: &Poly, lambda: &NodeTuple) -> Result<SignedDopeMatrix> {
    let field = common_field(p.field(), lambda.field())?;
    if !field.is_ordered() {
        return Err(Error::SignUndefined(field));
    }
    let rows = taylor_rows(p, lambda)?;
    let signs = rows
        .into_iter()
        .map(|r| r.iter().map(|c| c.sign()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(SignedDopeMatrix::from_rows(signs))
}

/// Entry `(i, j)` is the length of the run of ones in row `i` starting at column `j`.
pub fn multiplicity_from_dope(d: &DopeMatrix) -> MultiplicityMatrix {
    let rows = d
        .rows()
        .iter()
        .map(|r| {
            let mut out = vec![0i64; r.len()];
            for j in (0..r.len()).rev() {
                if r[j] {
                    out[j] = 1 + out.get(j + 1).copied().unwrap_or(0);
                }
            }
            out
        })
        .collect();
    MultiplicityMatrix::new(rows).expect("dope matrices are rectangular")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub e: bool,
    pub r: bool,
    pub c: bool,
    pub t: bool,
    /// Smallest `k` with more than `k` nonzero entries in the last `k+1` columns.
    pub t_violation: Option<usize>,
}

pub fn check_conditions(mu: &MultiplicityMatrix) -> ConditionReport {
    let (m, n) = (mu.m(), mu.n());
    let e = mu.rows().iter().flatten().all(|&x| x >= 0);
    let r = (0..m).all(|i| {
        (0..=n).all(|j| {
            let x = mu.get(i, j);
            x <= 0 || (j < n && mu.get(i, j + 1) == x - 1)
        })
    });
    let c = (0..=n).all(|j| (0..m).map(|i| mu.get(i, j)).sum::<i64>() <= (n - j) as i64);
    let t_violation = tail_violation(&mu.support());
    ConditionReport { e, r, c, t: t_violation.is_none(), t_violation }
}

pub fn check_dope_conditions(d: &DopeMatrix) -> ConditionReport {
    check_conditions(&multiplicity_from_dope(d))
}

fn tail_violation(d: &DopeMatrix) -> Option<usize> {
    let n = d.n();
    let mut ones = 0;
    for k in 0..=n {
        ones += (0..d.m()).filter(|&i| d.get(i, n - k)).count();
        if ones > k {
            return Some(k);
        }
    }
    None
}

pub fn satisfies_condition_t(d: &DopeMatrix) -> bool {
    tail_violation(d).is_none()
}

/// Whether a two-row matrix is the dope matrix of some polynomial.
pub fn is_dope_two_row(d: &DopeMatrix) -> Result<bool> {
    if d.m() != 2 {
        return Err(Error::Dimension(format!("expected 2 rows, got {}", d.m())));
    }
    Ok(satisfies_condition_t(d))
}
