//! Node tuples, the linear forms `L_{i,j}` and position sets over the grid
//! `[1,m] x [0,n]`.
//!
//! Rows are 0-based internally and printed 1-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::poly::binom;
use crate::scalar::{resolve_literals, FieldDescriptor, Scalar, ScalarLiteral};

/// Largest grid (`m * (n + 1)` cells) a [`PositionSet`] can hold.
pub const MAX_CELLS: usize = 128;

/// The coefficient vector of the form `a -> P^(j)(lambda) / j!` on
/// polynomials of degree at most `n`: entry `k` is `binom(k, j) lambda^(k-j)`.
pub fn form_vector(lambda: &Scalar, j: usize, n: usize) -> Vec<Scalar> {
    let field = lambda.field();
    let mut v = vec![field.zero(); n + 1];
    if j > n {
        return v;
    }
    let mut power = field.one();
    for k in j..=n {
        v[k] = if k == j { field.one() } else { &binom(field, k, j) * &power };
        power = &power * lambda;
    }
    v
}

/// `v0 = (0, ..., 0, 1)` in `K^(n+1)`.
pub fn v0(field: FieldDescriptor, n: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n + 1];
    v[n] = field.one();
    v
}

/// Pairwise distinct nodes over one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NodeTuple {
    field: FieldDescriptor,
    entries: Vec<Scalar>,
}

impl NodeTuple {
    pub fn new(field: FieldDescriptor, entries: Vec<Scalar>) -> Result<Self> {
        let entries = entries.iter().map(|x| field.embed(x)).collect::<Result<Vec<_>>>()?;
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                if entries[i] == entries[j] {
                    return Err(Error::DuplicateNodes(i + 1, j + 1));
                }
            }
        }
        Ok(NodeTuple { field, entries })
    }

    pub fn rationals(values: &[i64]) -> Result<Self> {
        Self::new(FieldDescriptor::Rational, values.iter().map(|&v| Scalar::int(v)).collect())
    }

    pub fn from_literals(lits: &[ScalarLiteral]) -> Result<Self> {
        let (field, entries) = resolve_literals(lits)?;
        Self::new(field, entries)
    }

    /// `(0, 1, t1, ..., t_{m-2})` over `Q(t1, .., t_{m-2})`, or the rational
    /// prefix of `(0, 1)` when `m <= 2`.
    pub fn generic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("a node tuple needs at least one entry".into()));
        }
        if m <= 2 {
            return Self::rationals(&[0, 1][..m]);
        }
        let field = FieldDescriptor::generic(m - 2)?;
        let mut entries = vec![field.zero(), field.one()];
        entries.extend((1..=m - 2).map(|k| field.indeterminate(k).unwrap()));
        Self::new(field, entries)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    /// `a + b * lambda` entrywise.
    pub fn affine(&self, a: &Scalar, b: &Scalar) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::Domain("affine map must have nonzero slope".into()));
        }
        let a = self.field.embed(a)?;
        let b = self.field.embed(b)?;
        Self::new(self.field, self.entries.iter().map(|x| &a + &(&b * x)).collect())
    }
}

impl fmt::Display for NodeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A cell `(row, col)` of the grid, `row` 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl Position {
    pub fn new(row: usize, col: usize) -> Self {
        Position { row, col }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row + 1, self.col)
    }
}

/// Shape of an `m x (n+1)` grid with row-major cell indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    pub m: usize,
    pub n: usize,
}

impl Grid {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m * (n + 1) > MAX_CELLS {
            return Err(Error::SizeLimit(format!(
                "{m}x{} grid has more than {MAX_CELLS} cells",
                n + 1
            )));
        }
        Ok(Grid { m, n })
    }

    pub fn cells(&self) -> usize {
        self.m * (self.n + 1)
    }

    pub fn index(&self, p: Position) -> usize {
        p.row * (self.n + 1) + p.col
    }

    pub fn position(&self, idx: usize) -> Position {
        Position::new(idx / (self.n + 1), idx % (self.n + 1))
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        (0..self.cells()).map(|i| self.position(i))
    }

    /// Bits of the cells in the last column.
    pub fn top_mask(&self) -> u128 {
        (0..self.m).fold(0u128, |acc, i| acc | 1u128 << self.index(Position::new(i, self.n)))
    }

    pub fn full(&self) -> PositionSet {
        let bits = if self.cells() == 128 { u128::MAX } else { (1u128 << self.cells()) - 1 };
        PositionSet { grid: *self, bits }
    }

    pub fn empty(&self) -> PositionSet {
        PositionSet { grid: *self, bits: 0 }
    }
}

/// A subset of a [`Grid`], stored as a bitset over row-major cell indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PositionSet {
    grid: Grid,
    bits: u128,
}

impl PositionSet {
    pub fn from_bits(grid: Grid, bits: u128) -> Self {
        debug_assert!(bits & !grid.full().bits == 0);
        PositionSet { grid, bits }
    }

    pub fn from_positions(grid: Grid, positions: impl IntoIterator<Item = Position>) -> Result<Self> {
        let mut s = grid.empty();
        for p in positions {
            if p.row >= grid.m || p.col > grid.n {
                return Err(Error::Dimension(format!("position {p} outside the {}x{} grid", grid.m, grid.n + 1)));
            }
            s.insert(p);
        }
        Ok(s)
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, p: Position) -> bool {
        self.bits >> self.grid.index(p) & 1 == 1
    }

    pub fn insert(&mut self, p: Position) {
        self.bits |= 1u128 << self.grid.index(p);
    }

    pub fn remove(&mut self, p: Position) {
        self.bits &= !(1u128 << self.grid.index(p));
    }

    pub fn union(&self, other: &Self) -> Self {
        PositionSet { grid: self.grid, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        PositionSet { grid: self.grid, bits: self.bits & other.bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Whether some cell of the last column is present.
    pub fn touches_top(&self) -> bool {
        self.bits & self.grid.top_mask() != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Position> + '_ {
        let bits = self.bits;
        (0..self.grid.cells()).filter(move |i| bits >> i & 1 == 1).map(|i| self.grid.position(i))
    }
}

impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// All forms `L_{i,j}` for a node tuple and degree.
#[derive(Clone, Debug)]
pub struct FormGrid {
    lambda: NodeTuple,
    grid: Grid,
    forms: Vec<Vec<Scalar>>,
}

pub fn build_forms(lambda: &NodeTuple, n: usize) -> Result<FormGrid> {
    let grid = Grid::new(lambda.len(), n)?;
    let forms = grid
        .positions()
        .map(|p| form_vector(lambda.get(p.row), p.col, n))
        .collect();
    Ok(FormGrid { lambda: lambda.clone(), grid, forms })
}

impl FormGrid {
    pub fn lambda(&self) -> &NodeTuple {
        &self.lambda
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn field(&self) -> FieldDescriptor {
        self.lambda.field()
    }

    pub fn form(&self, p: Position) -> &[Scalar] {
        &self.forms[self.grid.index(p)]
    }

    pub fn form_at(&self, idx: usize) -> &[Scalar] {
        &self.forms[idx]
    }

    /// Echelonized span of the forms over `e`.
    pub fn span(&self, e: &PositionSet) -> EchelonBasis {
        let mut basis = EchelonBasis::new(self.grid.n + 1);
        for p in e.iter() {
            basis.insert(self.form(p));
        }
        basis
    }

    pub fn rank(&self, e: &PositionSet) -> usize {
        self.span(e).rank()
    }

    /// Every position whose form lies in the span of the forms over `e`.
    pub fn closure(&self, e: &PositionSet) -> PositionSet {
        let basis = self.span(e);
        let mut out = *e;
        for (idx, form) in self.forms.iter().enumerate() {
            if e.bits >> idx & 1 == 0 && basis.contains(form) {
                out.bits |= 1u128 << idx;
            }
        }
        out
    }

    pub fn v0_in_span(&self, e: &PositionSet) -> bool {
        self.span(e).contains(&v0(self.field(), self.grid.n))
    }
}

pub fn closure(e: &PositionSet, forms: &FormGrid) -> PositionSet {
    forms.closure(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_examples() {
        let zero = Scalar::int(0);
        for j in 0..4 {
            let v = form_vector(&zero, j, 3);
            for (k, x) in v.iter().enumerate() {
                assert_eq!(x.is_one(), k == j);
                assert!(k == j || x.is_zero());
            }
        }
        assert_eq!(form_vector(&Scalar::int(1), 0, 2), vec![Scalar::int(1); 3]);
        assert_eq!(form_vector(&Scalar::int(7), 3, 3), v0(FieldDescriptor::Rational, 3));
    }

    #[test]
    fn duplicate_nodes_rejected() {
        assert!(matches!(NodeTuple::rationals(&[0, 1, 0]), Err(Error::DuplicateNodes(1, 3))));
    }

    #[test]
    fn closure_examples() {
        let forms = build_forms(&NodeTuple::rationals(&[0]).unwrap(), 3).unwrap();
        let g = forms.grid();
        assert!(forms.closure(&g.empty()).is_empty());
        let e = PositionSet::from_positions(g, [Position::new(0, 0)]).unwrap();
        assert_eq!(forms.closure(&e), e);

        let forms = build_forms(&NodeTuple::rationals(&[0, 1]).unwrap(), 1).unwrap();
        let g = forms.grid();
        let e = PositionSet::from_positions(g, [Position::new(0, 0), Position::new(1, 0)]).unwrap();
        assert_eq!(forms.closure(&e), g.full());
    }
}
