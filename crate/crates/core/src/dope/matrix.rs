use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{Grid, Position, PositionSet};

/// An `m x (n+1)` zero/one matrix. Ordering is lexicographic on the
/// row-major bitstring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "DopeJson", into = "DopeJson")]
pub struct DopeMatrix {
    rows: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DopeJson {
    rows: Vec<String>,
}

impl TryFrom<DopeJson> for DopeMatrix {
    type Error = Error;
    fn try_from(j: DopeJson) -> Result<Self> {
        DopeMatrix::parse_rows(&j.rows)
    }
}

impl From<DopeMatrix> for DopeJson {
    fn from(d: DopeMatrix) -> Self {
        DopeJson { rows: d.row_strings() }
    }
}

impl DopeMatrix {
    pub fn new(rows: Vec<Vec<bool>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::Dimension("a matrix needs at least one row".into()));
        };
        let w = first.len();
        if w == 0 {
            return Err(Error::Dimension("a matrix needs at least one column".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != w) {
            return Err(Error::Dimension(format!("row {} has {} entries, expected {w}", i + 1, rows[i].len())));
        }
        Ok(DopeMatrix { rows })
    }

    pub fn zeros(m: usize, n: usize) -> Self {
        DopeMatrix { rows: vec![vec![false; n + 1]; m.max(1)] }
    }

    /// Parses rows such as `["0101", "0010"]`.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .trim()
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::Parse(format!("unexpected character {c:?} in matrix row {:?}", r.as_ref()))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    /// Parses rows separated by `/`, `;`, commas or whitespace.
    pub fn parse(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split(|c: char| c == '/' || c == ';' || c == ',' || c.is_whitespace()).filter(|r| !r.is_empty()).collect();
        Self::parse_rows(&rows)
    }

    pub fn from_positions(set: &PositionSet) -> Self {
        let g = set.grid();
        let mut d = Self::zeros(g.m, g.n);
        for p in set.iter() {
            d.rows[p.row][p.col] = true;
        }
        d
    }

    /// Row-major bits, row 0 column 0 first.
    pub fn from_bits(m: usize, n: usize, bits: u128) -> Self {
        let mut d = Self::zeros(m, n);
        for i in 0..m {
            for j in 0..=n {
                d.rows[i][j] = bits >> (i * (n + 1) + j) & 1 == 1;
            }
        }
        d
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().flatten().filter(|&&b| b).count()
    }

    pub fn grid(&self) -> Result<Grid> {
        Grid::new(self.m(), self.n())
    }

    pub fn one_positions(&self) -> Result<PositionSet> {
        let g = self.grid()?;
        let mut s = g.empty();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, &b) in r.iter().enumerate() {
                if b {
                    s.insert(Position::new(i, j));
                }
            }
        }
        Ok(s)
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect()).collect()
    }

    /// Rows in reverse order.
    pub fn swap_rows(&self) -> Self {
        DopeMatrix { rows: self.rows.iter().rev().cloned().collect() }
    }

    /// The first `cols` columns.
    pub fn prefix(&self, cols: usize) -> Self {
        DopeMatrix { rows: self.rows.iter().map(|r| r[..cols.min(r.len())].to_vec()).collect() }
    }

    /// Every `m x (n+1)` zero/one matrix, in order.
    pub fn all(m: usize, n: usize) -> Result<impl Iterator<Item = DopeMatrix>> {
        let cells = m * (n + 1);
        if cells > 30 {
            return Err(Error::SizeLimit(format!("2^{cells} matrices is too many to sweep")));
        }
        Ok((0u128..1 << cells).map(move |b| {
            let mut d = DopeMatrix::zeros(m, n);
            for k in 0..cells {
                d.rows[k / (n + 1)][k % (n + 1)] = b >> (cells - 1 - k) & 1 == 1;
            }
            d
        }))
    }
}

impl fmt::Display for DopeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.row_strings().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Integer grid of root multiplicities `mu_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiplicityMatrix {
    rows: Vec<Vec<i64>>,
}

impl MultiplicityMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let w = rows.first().map_or(0, |r| r.len());
        if w == 0 || rows.iter().any(|r| r.len() != w) {
            return Err(Error::Dimension("multiplicity matrix must be a nonempty rectangular grid".into()));
        }
        Ok(MultiplicityMatrix { rows })
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Nonzero entries become ones.
    pub fn support(&self) -> DopeMatrix {
        DopeMatrix { rows: self.rows.iter().map(|r| r.iter().map(|&x| x != 0).collect()).collect() }
    }
}

impl fmt::Display for MultiplicityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Grid of signs `sigma_ij` in {-1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedDopeMatrix {
    rows: Vec<Vec<i8>>,
}

impl SignedDopeMatrix {
    pub(crate) fn from_rows(rows: Vec<Vec<i8>>) -> Self {
        SignedDopeMatrix { rows }
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i][j]
    }

    pub fn zero_pattern(&self) -> DopeMatrix {
        DopeMatrix { rows: self.rows.iter().map(|r| r.iter().map(|&x| x == 0).collect()).collect() }
    }
}

impl fmt::Display for SignedDopeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let s: String = r
                .iter()
                .map(|&x| match x {
                    0 => '0',
                    1 => '+',
                    _ => '-',
                })
                .collect();
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
