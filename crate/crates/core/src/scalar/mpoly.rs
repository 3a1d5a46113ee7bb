//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Terms are kept sorted in descending lexicographic order of their exponent
//! vectors, with no zero coefficients, so structural equality is polynomial
//! equality. This is the numerator/denominator ring of generic scalars.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: Vec<(Exponents, BigInt)>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MPoly { nvars, terms: vec![(vec![0; nvars], c)] }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    /// The indeterminate `t_{index+1}` (0-based `index`).
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        MPoly { nvars, terms: vec![(e, BigInt::one())] }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut terms: Vec<(Exponents, BigInt)> = terms.into_iter().collect();
        for (e, _) in &terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Exponents, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MPoly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Exponents, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one() && self.terms[0].0.iter().all(|&e| e == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if e.iter().all(|&x| x == 0) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MPoly { nvars: self.nvars, terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                terms.push((e, ca * cb));
            }
        }
        Self::from_terms(self.nvars, terms)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    fn mul_term(&self, exp: &[u32], c: &BigInt) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x / c)).collect(),
        }
    }

    /// Gcd of the integer coefficients (non-negative; zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if let Some(c) = other.constant_value() {
            if self.terms.iter().all(|(_, x)| x.is_multiple_of(&c)) {
                return Some(self.div_int_exact(&c));
            }
            return None;
        }
        let (lead_e, lead_c) = &other.terms[0];
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.terms.first() {
            if re.iter().zip(lead_e).any(|(a, b)| a < b) || !rc.is_multiple_of(lead_c) {
                return None;
            }
            let qe: Exponents = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = rc / lead_c;
            rem = rem.sub(&other.mul_term(&qe, &qc));
            quot.push((qe, qc));
        }
        Some(Self::from_terms(self.nvars, quot))
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients with respect to `var`, indexed by degree; each coefficient
    /// is free of `var`.
    fn to_univariate(&self, var: usize) -> Vec<MPoly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Exponents, BigInt)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let d = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            buckets[d].push((e2, c.clone()));
        }
        buckets.into_iter().map(|t| Self::from_terms(self.nvars, t)).collect()
    }

    fn from_univariate(nvars: usize, var: usize, coeffs: &[MPoly]) -> Self {
        let mut terms = Vec::new();
        for (d, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e2 = e.clone();
                e2[var] += d as u32;
                terms.push((e2, x.clone()));
            }
        }
        Self::from_terms(nvars, terms)
    }

    fn main_var(&self) -> Option<usize> {
        (0..self.nvars).find(|&v| self.degree_in(v) > 0)
    }

    /// Multiplies by -1 if needed so the leading coefficient is positive.
    pub fn normalize_sign(self) -> Self {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    /// Greatest common divisor over the integers, normalized to a positive
    /// leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.is_zero() {
            return other.clone().normalize_sign();
        }
        if other.is_zero() || self == other {
            return self.clone().normalize_sign();
        }
        if self.is_one() || other.is_one() {
            return Self::one(self.nvars);
        }
        if self.is_constant() || other.is_constant() {
            return Self::constant(self.nvars, self.integer_content().gcd(&other.integer_content()));
        }
        let var = match self.main_var().into_iter().chain(other.main_var()).min() {
            Some(v) => v,
            None => {
                let a = self.constant_value().unwrap();
                let b = other.constant_value().unwrap();
                return Self::constant(self.nvars, a.gcd(&b));
            }
        };
        let ua = self.to_univariate(var);
        let ub = other.to_univariate(var);
        let ca = content_of(&ua);
        let cb = content_of(&ub);
        let c = ca.gcd(&cb);
        if ua.len() == 1 || ub.len() == 1 {
            return c;
        }
        let mut r0: Vec<MPoly> = ua.iter().map(|x| x.div_exact(&ca).unwrap()).collect();
        let mut r1: Vec<MPoly> = ub.iter().map(|x| x.div_exact(&cb).unwrap()).collect();
        if r0.len() < r1.len() {
            std::mem::swap(&mut r0, &mut r1);
        }
        // primitive polynomial remainder sequence
        let g = loop {
            let r = pseudo_remainder(&r0, &r1);
            if r.is_empty() {
                break r1;
            }
            if r.len() == 1 {
                break vec![Self::one(self.nvars)];
            }
            let cr = content_of(&r);
            let r: Vec<MPoly> = r.iter().map(|x| x.div_exact(&cr).unwrap()).collect();
            r0 = r1;
            r1 = r;
        };
        let cg = content_of(&g);
        let g: Vec<MPoly> = g.iter().map(|x| x.div_exact(&cg).unwrap()).collect();
        Self::from_univariate(self.nvars, var, &g).mul(&c).normalize_sign()
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &dyn Fn(usize) -> String) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let mut first = true;
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", names(v))?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Gcd of a list of coefficients (each free of the main variable).
fn content_of(coeffs: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero(coeffs[0].nvars);
    for c in coeffs {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Pseudo-remainder of `a` by `b` as univariate polynomials over the
/// coefficient ring; trailing zero coefficients are trimmed.
fn pseudo_remainder(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let lb = b.last().unwrap();
    let db = b.len() - 1;
    let mut r: Vec<MPoly> = a.to_vec();
    trim(&mut r);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&bc.mul(&lr));
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<MPoly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &|v| format!("t{}", v + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(nvars: usize, i: usize) -> MPoly {
        MPoly::var(nvars, i)
    }

    fn c(nvars: usize, x: i64) -> MPoly {
        MPoly::constant(nvars, BigInt::from(x))
    }

    #[test]
    fn arithmetic_cancels() {
        let a = t(2, 0).add(&c(2, 1));
        let b = t(2, 0).sub(&c(2, 1));
        let p = a.mul(&b);
        assert_eq!(p, t(2, 0).mul(&t(2, 0)).sub(&c(2, 1)));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = t(2, 0).add(&t(2, 1));
        let b = t(2, 0).sub(&c(2, 3));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a));
        assert_eq!(t(2, 0).div_exact(&t(2, 1)), None);
    }

    #[test]
    fn gcd_univariate() {
        let x = t(1, 0);
        let a = x.sub(&c(1, 1)).mul(&x.add(&c(1, 2))).scale(&BigInt::from(6));
        let b = x.sub(&c(1, 1)).mul(&x.sub(&c(1, 5))).scale(&BigInt::from(4));
        assert_eq!(a.gcd(&b), x.sub(&c(1, 1)).scale(&BigInt::from(2)));
    }

    #[test]
    fn gcd_multivariate() {
        let (x, y) = (t(2, 0), t(2, 1));
        let g = x.mul(&y).add(&c(2, 1));
        let a = g.mul(&x.sub(&y));
        let b = g.mul(&x.add(&y)).mul(&y);
        assert_eq!(a.gcd(&b), g);
        assert_eq!(x.gcd(&y), c(2, 1));
    }

    #[test]
    fn display() {
        let (x, y) = (t(2, 0), t(2, 1));
        let p = x.mul(&x).scale(&BigInt::from(3)).sub(&y).add(&c(2, -2));
        assert_eq!(p.to_string(), "3*t1^2-t2-2");
    }
}
