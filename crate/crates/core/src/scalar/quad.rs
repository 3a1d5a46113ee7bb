use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::sign_of;

/// `a + b*sqrt(d)` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad {
    a: BigRational,
    b: BigRational,
    d: i64,
}

impl Quad {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        Quad { a, b, d }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn d_rat(&self) -> BigRational {
        BigRational::from_integer(self.d.into())
    }

    pub fn neg(&self) -> Self {
        Quad::new(-&self.a, -&self.b, self.d)
    }

    pub fn add(&self, o: &Self) -> Self {
        Quad::new(&self.a + &o.a, &self.b + &o.b, self.d)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Quad::new(&self.a - &o.a, &self.b - &o.b, self.d)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.b.is_zero() && o.b.is_zero() {
            return Quad::new(&self.a * &o.a, BigRational::zero(), self.d);
        }
        let a = &self.a * &o.a + &self.b * &o.b * self.d_rat();
        let b = &self.a * &o.b + &self.b * &o.a;
        Quad::new(a, b, self.d)
    }

    /// `a^2 - d*b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - self.d_rat() * &self.b * &self.b
    }

    pub fn conj(&self) -> Self {
        Quad::new(self.a.clone(), -&self.b, self.d)
    }

    pub fn div(&self, o: &Self) -> Self {
        if o.b.is_zero() {
            return Quad::new(&self.a / &o.a, &self.b / &o.a, self.d);
        }
        let n = o.norm();
        let p = self.mul(&o.conj());
        Quad::new(p.a / &n, p.b / n, self.d)
    }

    /// Sign for `d > 0`, comparing `a^2` against `d*b^2` when the parts disagree.
    pub fn sign(&self) -> i8 {
        debug_assert!(self.d > 0);
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let db2 = self.d_rat() * &self.b * &self.b;
        if a2 > db2 {
            sa
        } else if a2 < db2 {
            sb
        } else {
            0
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = format!("sqrt({})", self.d);
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write_surd(f, &self.b, &root, true),
            (false, false) => {
                write!(f, "{}", self.a)?;
                write_surd(f, &self.b, &root, false)
            }
        }
    }
}

fn write_surd(f: &mut fmt::Formatter<'_>, b: &BigRational, root: &str, leading: bool) -> fmt::Result {
    let mag = b.abs();
    if b.is_negative() {
        write!(f, "-")?;
    } else if !leading {
        write!(f, "+")?;
    }
    if mag.is_one() {
        write!(f, "{root}")
    } else if mag.denom().is_one() {
        write!(f, "{}*{root}", mag.numer())
    } else {
        write!(f, "{}*{root}/{}", mag.numer(), mag.denom())
    }
}
