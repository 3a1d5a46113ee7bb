use serde::Serialize;

use super::{satisfies_condition_t, DopeMatrix};
use crate::error::{Error, Result};
use crate::forms::{build_forms, form_vector, v0, NodeTuple, PositionSet};
use crate::linalg::{self, dot, ExactMatrix};
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Realization {
    Realized(Poly),
    NotRealizable,
}

impl Realization {
    pub fn poly(&self) -> Option<&Poly> {
        match self {
            Realization::Realized(p) => Some(p),
            Realization::NotRealizable => None,
        }
    }
}

/// A degree-`n` polynomial whose dope matrix at a pair of nodes is `d`.
///
/// With `h = n - ones(d)`, prepend `h` all-one columns, solve for the monic
/// degree `n + h` polynomial vanishing on every one of the widened pattern,
/// and differentiate `h` times.
pub fn witness_two_row(d: &DopeMatrix, lambda: &NodeTuple) -> Result<Poly> {
    if d.m() != 2 || lambda.len() != 2 {
        return Err(Error::Dimension(format!(
            "expected a 2-row matrix and 2 nodes, got {} rows and {} nodes",
            d.m(),
            lambda.len()
        )));
    }
    if !satisfies_condition_t(d) {
        return Err(Error::NotDope(format!("{:?} violates the tail condition", d.row_strings())));
    }
    let n = d.n();
    let h = n - d.ones();
    let top = n + h;
    let field = lambda.field();
    let mut rows = Vec::with_capacity(top + 1);
    for i in 0..2 {
        for j in 0..=top {
            if j < h || d.get(i, j - h) {
                rows.push(form_vector(lambda.get(i), j, top));
            }
        }
    }
    let mut rhs = vec![field.zero(); rows.len()];
    rows.push(v0(field, top));
    rhs.push(field.one());
    let m = ExactMatrix::from_rows(field, rows)?;
    let a = linalg::solve(&m, &rhs)?.ok_or_else(|| Error::Domain("two-node system is inconsistent".into()))?;
    Ok(Poly::new(field, a)?.derivative(h))
}

/// A degree-`n` polynomial whose vanishing pattern at `lambda` is exactly `e`,
/// or `NotRealizable` when `e` is not closed or its span contains `v0`.
///
/// The solution space of the forms over `e` is parametrized by a nullspace
/// basis `b_1..b_r`, and the coefficients `c_s` of `sum c_s b_s` are picked one
/// at a time from `0..=m*n+1`, each the smallest value keeping every
/// hyperplane whose last nonzero coordinate is `s` avoided.
pub fn witness_general(e: &PositionSet, lambda: &NodeTuple, n: usize) -> Result<Realization> {
    let forms = build_forms(lambda, n)?;
    if e.grid() != forms.grid() {
        return Err(Error::Dimension(format!(
            "position set is over a {}x{} grid, expected {}x{}",
            e.grid().m,
            e.grid().n + 1,
            lambda.len(),
            n + 1
        )));
    }
    if e.touches_top() || forms.closure(e) != *e {
        return Ok(Realization::NotRealizable);
    }
    let field = lambda.field();
    let basis: Vec<Vec<Scalar>> = if e.is_empty() {
        (0..=n).map(|k| (0..=n).map(|i| if i == k { field.one() } else { field.zero() }).collect()).collect()
    } else {
        let rows = e.iter().map(|p| forms.form(p).to_vec()).collect();
        linalg::nullspace(&ExactMatrix::from_rows(field, rows)?)
    };
    let r = basis.len();

    let mut avoid: Vec<Vec<Scalar>> = vec![v0(field, n)];
    for p in forms.grid().positions() {
        if p.col < n && !e.contains(p) {
            avoid.push(forms.form(p).to_vec());
        }
    }
    let betas: Vec<Vec<Scalar>> = avoid.iter().map(|f| basis.iter().map(|b| dot(f, b)).collect()).collect();
    let mut last_nonzero = Vec::with_capacity(betas.len());
    for beta in &betas {
        match beta.iter().rposition(|x| !x.is_zero()) {
            Some(s) => last_nonzero.push(s),
            None => return Ok(Realization::NotRealizable),
        }
    }

    let limit = (lambda.len() * n + 1) as i64;
    let mut alpha = vec![field.zero(); betas.len()];
    let mut c = Vec::with_capacity(r);
    for s in 0..r {
        let due: Vec<usize> = (0..betas.len()).filter(|&h| last_nonzero[h] == s).collect();
        let pick = (0..=limit)
            .map(|v| field.from_int(v))
            .find(|v| due.iter().all(|&h| !(&alpha[h] + &(&betas[h][s] * v)).is_zero()))
            .ok_or_else(|| Error::Domain("no admissible coefficient in the search grid".into()))?;
        for (h, beta) in betas.iter().enumerate() {
            if !beta[s].is_zero() && !pick.is_zero() {
                alpha[h] = &alpha[h] + &(&beta[s] * &pick);
            }
        }
        c.push(pick);
    }

    let mut coeffs = vec![field.zero(); n + 1];
    for (b, cs) in basis.iter().zip(&c) {
        if cs.is_zero() {
            continue;
        }
        for (a, x) in coeffs.iter_mut().zip(b) {
            if !x.is_zero() {
                *a = &*a + &(cs * x);
            }
        }
    }
    Ok(Realization::Realized(Poly::new(field, coeffs)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dope::dope_matrix_of;
    use crate::forms::{Grid, Position};

    #[test]
    fn two_row_examples() {
        let l = NodeTuple::rationals(&[0, 1]).unwrap();
        for rows in ["00/00", "10/00", "100/010", "000/110"] {
            let d = DopeMatrix::parse(rows).unwrap();
            let p = witness_two_row(&d, &l).unwrap();
            assert_eq!(p.degree(), Some(d.n()));
            assert_eq!(dope_matrix_of(&p, &l).unwrap(), d);
        }
        assert!(matches!(
            witness_two_row(&DopeMatrix::parse("01/00").unwrap(), &l),
            Err(Error::NotDope(_))
        ));
    }

    #[test]
    fn general_examples() {
        let l = NodeTuple::rationals(&[0, 1, 2]).unwrap();
        let g = Grid::new(3, 2).unwrap();
        let Realization::Realized(p) = witness_general(&g.empty(), &l, 2).unwrap() else { panic!() };
        assert_eq!(dope_matrix_of(&p, &l).unwrap(), DopeMatrix::zeros(3, 2));

        let top = PositionSet::from_positions(g, [Position::new(0, 2)]).unwrap();
        assert_eq!(witness_general(&top, &l, 2).unwrap(), Realization::NotRealizable);

        let ones = PositionSet::from_positions(g, (0..3).map(|i| Position::new(i, 1))).unwrap();
        assert_eq!(witness_general(&ones, &l, 2).unwrap(), Realization::NotRealizable);
    }
}
