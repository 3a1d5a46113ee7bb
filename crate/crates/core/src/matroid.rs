//! The matroid on `[1,m] x [0,n]` whose independent sets are the sets of
//! linearly independent forms `L_{i,j}`.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::dope::DopeMatrix;
use crate::enumerate::{enumerate_flats, EnumOptions, FlatRecord};
use crate::error::{Error, Result};
use crate::forms::{build_forms, FormGrid, Grid, NodeTuple, Position, PositionSet};

pub struct MatroidView {
    forms: FormGrid,
    ranks: RwLock<HashMap<u128, usize>>,
}

impl MatroidView {
    pub fn new(lambda: &NodeTuple, n: usize) -> Result<Self> {
        Ok(MatroidView { forms: build_forms(lambda, n)?, ranks: RwLock::new(HashMap::new()) })
    }

    pub fn grid(&self) -> Grid {
        self.forms.grid()
    }

    pub fn forms(&self) -> &FormGrid {
        &self.forms
    }

    fn check(&self, s: &PositionSet) -> Result<()> {
        if s.grid() != self.grid() {
            return Err(Error::Dimension("position set is over a different grid".into()));
        }
        Ok(())
    }

    pub fn rank(&self, s: &PositionSet) -> Result<usize> {
        self.check(s)?;
        if let Some(&r) = self.ranks.read().unwrap().get(&s.bits()) {
            return Ok(r);
        }
        let r = self.forms.rank(s);
        self.ranks.write().unwrap().insert(s.bits(), r);
        Ok(r)
    }

    pub fn is_independent(&self, s: &PositionSet) -> Result<bool> {
        Ok(self.rank(s)? == s.len())
    }

    pub fn closure(&self, s: &PositionSet) -> Result<PositionSet> {
        self.check(s)?;
        Ok(self.forms.closure(s))
    }

    pub fn is_flat(&self, s: &PositionSet) -> Result<bool> {
        Ok(self.closure(s)? == *s)
    }

    /// All flats sorted by rank, then by row-major bitstring. With
    /// `contract_top`, the flats of the contraction by `(1,n)`: flats
    /// containing it, with it removed, and ranks lowered by one.
    pub fn all_flats(&self, contract_top: bool, opts: &EnumOptions) -> Result<Vec<FlatRecord>> {
        let g = self.grid();
        let mut flats = if contract_top {
            let e = Position::new(0, g.n);
            let start = self.forms.closure(&PositionSet::from_positions(g, [e])?);
            enumerate_flats(&self.forms, start, false, opts)?
                .into_iter()
                .map(|mut f| {
                    f.positions.remove(e);
                    f.rank -= 1;
                    f
                })
                .collect()
        } else {
            enumerate_flats(&self.forms, g.empty(), false, opts)?
        };
        sort_flats(&mut flats);
        Ok(flats)
    }

    /// Flats meeting no position of the last column.
    pub fn flats_avoiding_top(&self, opts: &EnumOptions) -> Result<Vec<FlatRecord>> {
        let mut flats = enumerate_flats(&self.forms, self.grid().empty(), true, opts)?;
        sort_flats(&mut flats);
        Ok(flats)
    }
}

fn sort_flats(flats: &mut [FlatRecord]) {
    flats.sort_by_cached_key(|f| (f.rank, DopeMatrix::from_positions(&f.positions)));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_examples() {
        let v = MatroidView::new(&NodeTuple::rationals(&[0, 1]).unwrap(), 1).unwrap();
        let g = v.grid();
        assert!(v.is_independent(&g.empty()).unwrap());
        let tops = PositionSet::from_positions(g, [Position::new(0, 1), Position::new(1, 1)]).unwrap();
        assert!(!v.is_independent(&tops).unwrap());
        let bottoms = PositionSet::from_positions(g, [Position::new(0, 0), Position::new(1, 0)]).unwrap();
        assert!(v.is_independent(&bottoms).unwrap());
    }

    #[test]
    fn single_row_flats() {
        let n = 3;
        let v = MatroidView::new(&NodeTuple::rationals(&[5]).unwrap(), n).unwrap();
        let opts = EnumOptions::default();
        let all = v.all_flats(false, &opts).unwrap();
        assert_eq!(all.len(), 1 << (n + 1));
        assert_eq!(all.last().unwrap().positions, v.grid().full());
        assert_eq!(v.all_flats(true, &opts).unwrap().len(), 1 << n);
        assert_eq!(v.flats_avoiding_top(&opts).unwrap().len(), 1 << n);
    }
}
