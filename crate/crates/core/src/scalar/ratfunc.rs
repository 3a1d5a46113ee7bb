//! Rational functions over the integers in `k` indeterminates.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::mpoly::MPoly;

/// `num / den` with `gcd(num, den) = 1` and a positive leading coefficient on
/// `den`, which makes the representation unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn from_poly(p: MPoly) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: MPoly::one(n) }
    }

    pub fn from_rational(nvars: usize, q: &BigRational) -> Self {
        Self::new(
            MPoly::constant(nvars, q.numer().clone()),
            MPoly::constant(nvars, q.denom().clone()),
        )
    }

    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let nvars = num.nvars();
        if num.is_zero() {
            return RatFunc { num, den: MPoly::one(nvars) };
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if den.leading_coeff().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Panics on a zero divisor; callers check first.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        if self.den.is_one() && other.den.is_one() {
            if let Some(q) = self.num.div_exact(&other.num) {
                return Self::from_poly(q);
            }
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, point: &[BigRational]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Leading integer coefficient of the numerator (zero for zero).
    pub fn leading_sign_positive(&self) -> bool {
        self.num.leading_coeff().map_or(true, |c| c.is_positive())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.terms().len() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        match self.den.constant_value() {
            Some(d) => write!(f, "{num}/{d}"),
            None => write!(f, "{num}/({})", self.den),
        }
    }
}

pub(crate) fn content_gcd(polys: impl IntoIterator<Item = MPoly>, nvars: usize) -> MPoly {
    let mut g = MPoly::zero(nvars);
    for p in polys {
        g = g.gcd(&p);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = a.gcd(b);
    a.div_exact(&g).unwrap().mul(b)
}
