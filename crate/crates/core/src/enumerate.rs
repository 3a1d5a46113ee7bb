//! Enumeration of all dope matrices at a node tuple through the flats of the
//! matroid of linear forms, plus a subset-sweep oracle and the tail-condition
//! counts they are compared against.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::dope::{satisfies_condition_t, DopeMatrix};
use crate::error::{Error, Result};
use crate::forms::{build_forms, v0, FormGrid, NodeTuple, PositionSet};
use crate::linalg::EchelonBasis;
use crate::scalar::{normalize_vector, Scalar};

pub const DEFAULT_FLAT_CAP: usize = 10_000_000;
pub const FLAT_CAP_ENV: &str = "DOPEKIT_FLAT_CAP";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub flat_cap: usize,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { flat_cap: DEFAULT_FLAT_CAP, threads: None }
    }
}

impl EnumOptions {
    /// Defaults, with the cap taken from `DOPEKIT_FLAT_CAP` when set.
    pub fn from_env() -> Result<Self> {
        let mut o = Self::default();
        if let Ok(v) = std::env::var(FLAT_CAP_ENV) {
            o.flat_cap = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{FLAT_CAP_ENV}={v:?} is not a nonnegative integer")))?;
        }
        Ok(o)
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            None => Ok(f()),
            Some(k) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build()
                    .map_err(|e| Error::Domain(format!("cannot start thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

/// A closed set of positions together with the rank of its forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FlatRecord {
    pub positions: PositionSet,
    pub rank: usize,
}

struct Node {
    bits: u128,
    basis: EchelonBasis,
}

/// Flats containing `start` (which must be closed), found rank by rank: the
/// children of a flat `F` are `F` together with one parallel class of the
/// residuals of the forms outside `F`. With `avoid_top`, flats meeting the
/// last column are skipped.
pub fn enumerate_flats(forms: &FormGrid, start: PositionSet, avoid_top: bool, opts: &EnumOptions) -> Result<Vec<FlatRecord>> {
    opts.run(|| flats_inner(forms, start, avoid_top, opts.flat_cap))?
}

fn flats_inner(forms: &FormGrid, start: PositionSet, avoid_top: bool, cap: usize) -> Result<Vec<FlatRecord>> {
    let grid = forms.grid();
    let top = grid.top_mask();
    if avoid_top && start.touches_top() {
        return Ok(Vec::new());
    }
    let base_rank = forms.rank(&start);
    let v0 = v0(forms.field(), grid.n);
    let mut layer = vec![Node { bits: start.bits(), basis: forms.span(&start) }];
    let mut out = Vec::new();
    let mut rank = base_rank;
    while !layer.is_empty() {
        if out.len() + layer.len() > cap {
            return Err(Error::FlatCapExceeded { cap });
        }
        out.extend(layer.iter().map(|nd| FlatRecord { positions: PositionSet::from_bits(grid, nd.bits), rank }));
        let children: Vec<Vec<(u128, usize)>> = layer
            .par_iter()
            .map(|nd| children_of(forms, nd, avoid_top, top, &v0))
            .collect();
        let mut next: BTreeMap<u128, (usize, usize)> = BTreeMap::new();
        for (parent, kids) in children.into_iter().enumerate() {
            for (bits, rep) in kids {
                next.entry(bits).or_insert((parent, rep));
            }
        }
        if out.len() + next.len() > cap {
            return Err(Error::FlatCapExceeded { cap });
        }
        let next: Vec<(u128, (usize, usize))> = next.into_iter().collect();
        layer = next
            .par_iter()
            .map(|&(bits, (parent, rep))| {
                let mut basis = layer[parent].basis.clone();
                basis.insert(forms.form_at(rep));
                Node { bits, basis }
            })
            .collect();
        rank += 1;
    }
    Ok(out)
}

fn children_of(forms: &FormGrid, nd: &Node, avoid_top: bool, top: u128, v0: &[Scalar]) -> Vec<(u128, usize)> {
    let cells = forms.grid().cells();
    let residual = |v: &[Scalar]| {
        let mut r = nd.basis.reduce(v);
        normalize_vector(&mut r);
        r
    };
    let top_key = if avoid_top { Some(residual(v0)) } else { None };
    let mut classes: HashMap<Vec<Scalar>, (u128, usize)> = HashMap::new();
    let mut order = Vec::new();
    for idx in 0..cells {
        let bit = 1u128 << idx;
        if nd.bits & bit != 0 || (avoid_top && top & bit != 0) {
            continue;
        }
        let key = residual(forms.form_at(idx));
        if top_key.as_ref() == Some(&key) {
            continue;
        }
        match classes.get_mut(&key) {
            Some(entry) => entry.0 |= bit,
            None => {
                order.push(key.clone());
                classes.insert(key, (bit, idx));
            }
        }
    }
    order
        .into_iter()
        .map(|k| {
            let (bits, rep) = classes[&k];
            (nd.bits | bits, rep)
        })
        .collect()
}

/// All dope matrices of degree-`n` polynomials at `lambda`, sorted by
/// row-major bitstring.
pub fn enumerate_dope(lambda: &NodeTuple, n: usize) -> Result<Vec<DopeMatrix>> {
    enumerate_dope_with(lambda, n, &EnumOptions::default())
}

pub fn enumerate_dope_with(lambda: &NodeTuple, n: usize, opts: &EnumOptions) -> Result<Vec<DopeMatrix>> {
    let forms = build_forms(lambda, n)?;
    let flats = enumerate_flats(&forms, forms.grid().empty(), true, opts)?;
    let mut out: Vec<DopeMatrix> = flats.iter().map(|f| DopeMatrix::from_positions(&f.positions)).collect();
    out.sort();
    Ok(out)
}

/// Enumeration at `(0, 1, t1, ..., t_{m-2})`.
pub fn enumerate_generic(m: usize, n: usize) -> Result<Vec<DopeMatrix>> {
    enumerate_generic_with(m, n, &EnumOptions::default())
}

pub fn enumerate_generic_with(m: usize, n: usize, opts: &EnumOptions) -> Result<Vec<DopeMatrix>> {
    enumerate_dope_with(&NodeTuple::generic(m)?, n, opts)
}

/// Largest `m * n` the subset sweep accepts.
pub const BRUTE_FORCE_LIMIT: usize = 16;

/// The same set as [`enumerate_dope`], by testing every subset of the
/// non-final columns for closedness.
pub fn brute_force_dope(lambda: &NodeTuple, n: usize) -> Result<Vec<DopeMatrix>> {
    let m = lambda.len();
    if m * n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit(format!("m*n = {} exceeds {BRUTE_FORCE_LIMIT}", m * n)));
    }
    let forms = build_forms(lambda, n)?;
    let grid = forms.grid();
    let free: Vec<usize> = grid.positions().filter(|p| p.col < n).map(|p| grid.index(p)).collect();
    let mut out: Vec<DopeMatrix> = (0u32..1 << free.len())
        .into_par_iter()
        .filter_map(|mask| {
            let bits = free
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(0u128, |acc, (_, &idx)| acc | 1u128 << idx);
            let e = PositionSet::from_bits(grid, bits);
            let basis = forms.span(&e);
            let closed = (0..grid.cells()).all(|idx| bits >> idx & 1 == 1 || !basis.contains(forms.form_at(idx)));
            (closed && !basis.contains(&v0(forms.field(), n))).then(|| DopeMatrix::from_positions(&e))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Number of `m x (n+1)` zero/one matrices with at most `k` ones in the last
/// `k+1` columns for every `k`.
pub fn count_condition_t(m: usize, n: usize) -> BigUint {
    let mut dp = vec![BigUint::from(1u32)];
    for k in 0..=n {
        let mut next = vec![BigUint::from(0u32); k + 1];
        for (s, ways) in dp.iter().enumerate() {
            for c in 0..=m {
                if s + c <= k {
                    next[s + c] += ways * num_integer::binomial(BigUint::from(m), BigUint::from(c));
                }
            }
        }
        dp = next;
    }
    dp.into_iter().sum()
}

/// Every matrix satisfying the tail condition, sorted.
pub fn condition_t_matrices(m: usize, n: usize) -> Result<Vec<DopeMatrix>> {
    let total = count_condition_t(m, n);
    if total > BigUint::from(50_000_000u64) {
        return Err(Error::SizeLimit(format!("{total} matrices")));
    }
    let mut out = Vec::new();
    let mut d = DopeMatrix::zeros(m, n);
    fill_tail(&mut d, n as isize, 0, &mut out);
    out.sort();
    debug_assert!(out.iter().all(satisfies_condition_t));
    Ok(out)
}

fn fill_tail(d: &mut DopeMatrix, col: isize, used: usize, out: &mut Vec<DopeMatrix>) {
    if col < 0 {
        out.push(d.clone());
        return;
    }
    let c = col as usize;
    let k = d.n() - c;
    let m = d.m();
    for mask in 0u32..1 << m {
        let ones = mask.count_ones() as usize;
        if used + ones > k {
            continue;
        }
        for i in 0..m {
            d.set(i, c, mask >> i & 1 == 1);
        }
        fill_tail(d, col - 1, used + ones, out);
    }
    for i in 0..m {
        d.set(i, c, false);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub generic_count: usize,
    pub condition_t_count: usize,
    pub equal: bool,
    /// A matrix in exactly one of the two sets, with the set it belongs to.
    pub counterexample: Option<(DopeMatrix, &'static str)>,
}

/// Compares the generic dope set with the tail-condition set for each
/// `n <= n_max`.
pub fn check_conjecture_8_1(m: usize, n_max: usize, opts: &EnumOptions) -> Result<Vec<ConjectureRow>> {
    (0..=n_max)
        .map(|n| {
            let gen: BTreeSet<DopeMatrix> = enumerate_generic_with(m, n, opts)?.into_iter().collect();
            let tail: BTreeSet<DopeMatrix> = condition_t_matrices(m, n)?.into_iter().collect();
            let counterexample = gen
                .difference(&tail)
                .next()
                .map(|d| (d.clone(), "generic"))
                .or_else(|| tail.difference(&gen).next().map(|d| (d.clone(), "condition_t")));
            Ok(ConjectureRow {
                n,
                generic_count: gen.len(),
                condition_t_count: tail.len(),
                equal: counterexample.is_none(),
                counterexample,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericComparison {
    pub size: usize,
    pub generic_size: usize,
    pub subset: bool,
    pub equal: bool,
}

pub fn compare_to_generic(lambda: &NodeTuple, n: usize, opts: &EnumOptions) -> Result<GenericComparison> {
    let own: BTreeSet<DopeMatrix> = enumerate_dope_with(lambda, n, opts)?.into_iter().collect();
    let gen: BTreeSet<DopeMatrix> = enumerate_generic_with(lambda.len(), n, opts)?.into_iter().collect();
    Ok(GenericComparison {
        size: own.len(),
        generic_size: gen.len(),
        subset: own.is_subset(&gen),
        equal: own == gen,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleComparison {
    pub n: usize,
    pub size_a: usize,
    pub size_b: usize,
    pub equal: bool,
}

/// Per-degree comparison of the dope sets of two tuples of the same length.
pub fn compare_tuples(a: &NodeTuple, b: &NodeTuple, n_max: usize, opts: &EnumOptions) -> Result<Vec<TupleComparison>> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("tuples of length {} and {}", a.len(), b.len())));
    }
    (0..=n_max)
        .map(|n| {
            let da = enumerate_dope_with(a, n, opts)?;
            let db = enumerate_dope_with(b, n, opts)?;
            Ok(TupleComparison { n, size_a: da.len(), size_b: db.len(), equal: da == db })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row_counts() {
        for n in 0..5 {
            let l = NodeTuple::rationals(&[3]).unwrap();
            assert_eq!(enumerate_dope(&l, n).unwrap().len(), 1 << n);
        }
    }

    #[test]
    fn small_table_entries() {
        assert_eq!(enumerate_dope(&NodeTuple::rationals(&[0, 1, 2]).unwrap(), 2).unwrap().len(), 17);
        assert_eq!(enumerate_generic(1, 0).unwrap().len(), 1);
        assert_eq!(enumerate_generic(2, 3).unwrap().len(), 35);
    }

    #[test]
    fn tail_counts() {
        assert_eq!(count_condition_t(2, 5), BigUint::from(462u32));
        assert_eq!(count_condition_t(3, 6), BigUint::from(17060u32));
        assert_eq!(count_condition_t(4, 0), BigUint::from(1u32));
        assert_eq!(condition_t_matrices(2, 3).unwrap().len(), 35);
    }

    #[test]
    fn cap_is_enforced() {
        let opts = EnumOptions { flat_cap: 5, threads: Some(1) };
        let r = enumerate_dope_with(&NodeTuple::rationals(&[0, 1, 2]).unwrap(), 2, &opts);
        assert!(matches!(r, Err(Error::FlatCapExceeded { cap: 5 })));
    }
}
