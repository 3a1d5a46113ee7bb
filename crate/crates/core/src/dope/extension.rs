use serde::Serialize;

use super::DopeMatrix;
use crate::error::{Error, Result};
use crate::forms::NodeTuple;
use crate::poly::{crt_interpolate, crt_interpolate_multiple, CrtResidue, Poly};
use crate::scalar::{clear_denominators, FieldDescriptor};

/// Row data for extending a matrix: `A_i` holds the zero columns of row `i`
/// and `P_i = sum over j in A_i of (x - lambda_i)^j`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionPlan {
    pub zero_columns: Vec<Vec<usize>>,
    pub row_polys: Vec<Poly>,
}

impl ExtensionPlan {
    pub fn new(d: &DopeMatrix, lambda: &NodeTuple) -> Result<Self> {
        if d.m() != lambda.len() {
            return Err(Error::Dimension(format!("{} rows but {} nodes", d.m(), lambda.len())));
        }
        let field = lambda.field();
        let mut zero_columns = Vec::with_capacity(d.m());
        let mut row_polys = Vec::with_capacity(d.m());
        for (i, l) in lambda.entries().iter().enumerate() {
            let a: Vec<usize> = (0..=d.n()).filter(|&j| !d.get(i, j)).collect();
            let mut p = Poly::zero(field);
            for &j in &a {
                p = p.add(&Poly::linear_power(l, j as u32));
            }
            zero_columns.push(a);
            row_polys.push(p);
        }
        Ok(ExtensionPlan { zero_columns, row_polys })
    }
}

/// A polynomial of degree between `n` and `m(n+2)` whose dope matrix at
/// `lambda` starts with the columns of `d`. Over `Q(t..)` the interpolant is
/// returned as a polynomial multiple with coprime integer coefficients.
pub fn extend(d: &DopeMatrix, lambda: &NodeTuple) -> Result<Poly> {
    let plan = ExtensionPlan::new(d, lambda)?;
    let n = d.n();
    let power = n + 2;
    let residues: Vec<CrtResidue> = lambda
        .entries()
        .iter()
        .zip(plan.row_polys)
        .map(|(l, p)| CrtResidue { root: l.clone(), power, residue: p })
        .collect();
    let p = match lambda.field() {
        FieldDescriptor::Generic(_) => {
            let mut c = crt_interpolate_multiple(&residues)?.coeffs().to_vec();
            clear_denominators(&mut c);
            Poly::new(lambda.field(), c)?
        }
        _ => crt_interpolate(&residues)?,
    };
    if p.degree().is_some_and(|deg| deg >= n) {
        return Ok(p);
    }
    let mut bump = Poly::constant(lambda.field().one());
    for l in lambda.entries() {
        bump = bump.mul(&Poly::linear_power(l, power as u32));
    }
    Ok(p.add(&bump))
}
