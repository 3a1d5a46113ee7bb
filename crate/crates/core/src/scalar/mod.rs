//! Exact scalars: rationals, one real or imaginary quadratic extension, and
//! rational functions in indeterminates standing in for generic nodes.
//!
//! Every scalar carries enough information to recover its [`FieldDescriptor`];
//! binary operations on scalars from different fields are rejected by the
//! `checked_*` methods and panic through the operator impls.

mod json;
pub mod mpoly;
mod quad;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use json::{resolve_literals, ScalarLiteral};
pub use mpoly::MPoly;
pub use quad::Quad;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    /// `Q(sqrt(d))` for a square-free `d` other than 0 and 1.
    Quadratic(i64),
    /// `Q(t1, ..., tk)`.
    Generic(usize),
}

impl FieldDescriptor {
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(Error::Domain(format!("sqrt({d}) does not define a quadratic field")));
        }
        Ok(FieldDescriptor::Quadratic(d))
    }

    pub fn generic(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("a generic field needs at least one indeterminate".into()));
        }
        Ok(FieldDescriptor::Generic(k))
    }

    pub fn zero(&self) -> Scalar {
        self.from_rational(BigRational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> Scalar {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, q: BigRational) -> Scalar {
        match *self {
            FieldDescriptor::Rational => Scalar::Rational(q),
            FieldDescriptor::Quadratic(d) => Scalar::Quadratic(Quad::new(q, BigRational::zero(), d)),
            FieldDescriptor::Generic(k) => Scalar::Generic(RatFunc::from_rational(k, &q)),
        }
    }

    /// `sqrt(d)` as an element of this field.
    pub fn sqrt(&self) -> Option<Scalar> {
        match *self {
            FieldDescriptor::Quadratic(d) => {
                Some(Scalar::Quadratic(Quad::new(BigRational::zero(), BigRational::one(), d)))
            }
            _ => None,
        }
    }

    /// The indeterminate `t_{index}` (1-based), if it exists in this field.
    pub fn indeterminate(&self, index: usize) -> Option<Scalar> {
        match *self {
            FieldDescriptor::Generic(k) if (1..=k).contains(&index) => {
                Some(Scalar::Generic(RatFunc::from_poly(MPoly::var(k, index - 1))))
            }
            _ => None,
        }
    }

    /// Whether elements have a sign under a real embedding.
    pub fn is_ordered(&self) -> bool {
        match *self {
            FieldDescriptor::Rational => true,
            FieldDescriptor::Quadratic(d) => d > 0,
            FieldDescriptor::Generic(_) => false,
        }
    }

    /// Brings `s` into this field when that is a canonical embedding
    /// (rationals embed everywhere).
    pub fn embed(&self, s: &Scalar) -> Result<Scalar> {
        if s.field() == *self {
            return Ok(s.clone());
        }
        match s.as_rational() {
            Some(q) => Ok(self.from_rational(q)),
            None => Err(Error::FieldMismatch(s.field(), *self)),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
            FieldDescriptor::Generic(k) => {
                write!(f, "Q(")?;
                for i in 1..=*k {
                    if i > 1 {
                        write!(f, ",")?;
                    }
                    write!(f, "t{i}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn is_square_free(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// An element of one exact field, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Quadratic(Quad),
    Generic(RatFunc),
}

impl Scalar {
    pub fn rational(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::Rational(BigRational::from_integer(n.into()))
    }

    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rational,
            Scalar::Quadratic(q) => FieldDescriptor::Quadratic(q.d()),
            Scalar::Generic(r) => FieldDescriptor::Generic(r.nvars()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Quadratic(q) => q.is_zero(),
            Scalar::Generic(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Quadratic(q) => q.a().is_one() && q.b().is_zero(),
            Scalar::Generic(r) => r.is_one(),
        }
    }

    /// The value as a rational number, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Quadratic(q) if q.b().is_zero() => Some(q.a().clone()),
            Scalar::Quadratic(_) => None,
            Scalar::Generic(r) => r.as_rational(),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(Error::FieldMismatch(a, b))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.div_unchecked(other))
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Quadratic(a), Scalar::Quadratic(b)) => Scalar::Quadratic(a.add(b)),
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.add(b)),
            _ => unreachable!(),
        }
    }

    fn sub_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Quadratic(a), Scalar::Quadratic(b)) => Scalar::Quadratic(a.sub(b)),
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.sub(b)),
            _ => unreachable!(),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Quadratic(a), Scalar::Quadratic(b)) => Scalar::Quadratic(a.mul(b)),
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.mul(b)),
            _ => unreachable!(),
        }
    }

    fn div_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a / b),
            (Scalar::Quadratic(a), Scalar::Quadratic(b)) => Scalar::Quadratic(a.div(b)),
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.div(b)),
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        self.field().one().checked_div(self)
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Sign under the real embedding sending `sqrt(d)` to the positive root.
    pub fn sign(&self) -> Result<i8> {
        match self {
            Scalar::Rational(q) => Ok(sign_of(q)),
            Scalar::Quadratic(q) if q.d() > 0 => Ok(q.sign()),
            Scalar::Quadratic(q) => Err(Error::SignUndefined(FieldDescriptor::Quadratic(q.d()))),
            Scalar::Generic(r) => Err(Error::SignUndefined(FieldDescriptor::Generic(r.nvars()))),
        }
    }

    /// Value after substituting rationals for the indeterminates of a generic
    /// scalar; `None` when a denominator vanishes. Other kinds are returned
    /// unchanged.
    pub fn substitute(&self, point: &[BigRational]) -> Option<Scalar> {
        match self {
            Scalar::Generic(r) => r.eval(point).map(Scalar::Rational),
            other => Some(other.clone()),
        }
    }
}

pub(crate) fn sign_of(q: &BigRational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Rescales a vector in place to a canonical representative of its line.
///
/// Over rationals and quadratic fields the first nonzero entry becomes 1. Over
/// generic fields denominators are cleared and the polynomial content is
/// divided out, leaving a primitive polynomial vector whose first nonzero
/// entry has a positive leading coefficient. Two nonzero vectors are parallel
/// iff their normalizations are equal.
pub fn normalize_vector(v: &mut [Scalar]) {
    let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
        return;
    };
    match &v[lead] {
        Scalar::Rational(_) | Scalar::Quadratic(_) => {
            if v[lead].is_one() {
                return;
            }
            let inv = v[lead].inv().expect("nonzero pivot");
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        Scalar::Generic(r) => {
            let k = r.nvars();
            let mut den = MPoly::one(k);
            for x in v.iter() {
                if let Scalar::Generic(r) = x {
                    den = ratfunc::lcm(&den, r.denom());
                }
            }
            let polys: Vec<MPoly> = v
                .iter()
                .map(|x| match x {
                    Scalar::Generic(r) if r.denom().is_one() => r.numer().mul(&den),
                    Scalar::Generic(r) => r.numer().mul(&den.div_exact(r.denom()).unwrap()),
                    _ => unreachable!("mixed fields in vector"),
                })
                .collect();
            let mut g = ratfunc::content_gcd(polys.iter().filter(|p| !p.is_zero()).cloned(), k);
            if polys[lead].leading_coeff().is_some_and(|c| c.is_negative()) {
                g = g.neg();
            }
            for (x, p) in v.iter_mut().zip(polys) {
                let q = if g.is_one() { p } else { p.div_exact(&g).unwrap() };
                *x = Scalar::Generic(RatFunc::from_poly(q));
            }
        }
    }
}

/// Over `Q(t..)`, scales `v` by a nonzero constant so that every entry is a
/// polynomial with coprime integer coefficients overall. Cheaper than
/// [`normalize_vector`], which also divides out polynomial common factors.
pub fn clear_denominators(v: &mut [Scalar]) {
    let Some(Scalar::Generic(first)) = v.iter().find(|x| !x.is_zero()) else {
        return;
    };
    let k = first.nvars();
    let mut den = MPoly::one(k);
    for x in v.iter() {
        if let Scalar::Generic(r) = x {
            den = ratfunc::lcm(&den, r.denom());
        }
    }
    let polys: Vec<MPoly> = v
        .iter()
        .map(|x| match x {
            Scalar::Generic(r) => r.numer().mul(&den.div_exact(r.denom()).unwrap()),
            _ => unreachable!("mixed fields in vector"),
        })
        .collect();
    let mut g = BigInt::zero();
    for p in &polys {
        g = g.gcd(&p.integer_content());
    }
    for (x, p) in v.iter_mut().zip(polys) {
        let q = if g.is_one() { p } else { p.div_int_exact(&g) };
        *x = Scalar::Generic(RatFunc::from_poly(q));
    }
}

/// A nonzero multiple of both: the lcm of the numerators over `Q(t..)`, and
/// one elsewhere.
pub(crate) fn common_multiple(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Generic(x), Scalar::Generic(y)) => {
            Scalar::Generic(RatFunc::from_poly(ratfunc::lcm(x.numer(), y.numer())))
        }
        _ => a.field().one(),
    }
}

/// Integer-valued binomial coefficient as a scalar of `field`.
pub(crate) fn binomial_scalar(field: FieldDescriptor, n: u64, k: u64) -> Scalar {
    if k > n {
        return field.zero();
    }
    field.from_int(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Quadratic(q) => write!(f, "{q}"),
            Scalar::Generic(r) => write!(f, "{r}"),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident, $sym:literal) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                if let Err(e) = self.same_field(rhs) {
                    panic!("scalar {}: {e}", $sym);
                }
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_unchecked, "+");
forward_binop!(Sub, sub, sub_unchecked, "-");
forward_binop!(Mul, mul, mul_unchecked, "*");

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        match self.checked_div(rhs) {
            Ok(s) => s,
            Err(e) => panic!("scalar /: {e}"),
        }
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Quadratic(q) => Scalar::Quadratic(q.neg()),
            Scalar::Generic(r) => Scalar::Generic(r.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let s = Scalar::rational(1, 2) + Scalar::rational(1, 3);
        assert_eq!(s, Scalar::rational(5, 6));
    }

    #[test]
    fn sqrt_two_squared() {
        let f = FieldDescriptor::quadratic(2).unwrap();
        let r = f.sqrt().unwrap();
        assert_eq!(&r * &r, f.from_int(2));
    }

    #[test]
    fn generic_self_quotient_is_one() {
        let f = FieldDescriptor::generic(1).unwrap();
        let t = f.indeterminate(1).unwrap();
        assert_eq!(&t / &t, f.one());
        assert!((&t / &t).is_one());
    }

    #[test]
    fn signs() {
        assert_eq!(Scalar::rational(3, 4).sign().unwrap(), 1);
        assert_eq!(Scalar::int(0).sign().unwrap(), 0);
        let f = FieldDescriptor::quadratic(2).unwrap();
        let x = &f.one() - &f.sqrt().unwrap();
        assert_eq!(x.sign().unwrap(), -1);
        let g = FieldDescriptor::generic(1).unwrap();
        assert!(matches!(g.one().sign(), Err(Error::SignUndefined(_))));
    }

    #[test]
    fn mixed_fields_rejected() {
        let f = FieldDescriptor::quadratic(2).unwrap();
        let err = Scalar::int(1).checked_add(&f.one()).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch(..)));
        assert!(matches!(Scalar::int(1).checked_div(&Scalar::int(0)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn quadratic_descriptor_validation() {
        assert!(FieldDescriptor::quadratic(0).is_err());
        assert!(FieldDescriptor::quadratic(1).is_err());
        assert!(FieldDescriptor::quadratic(8).is_err());
        assert!(FieldDescriptor::quadratic(-1).is_ok());
        assert!(FieldDescriptor::quadratic(6).is_ok());
    }

    #[test]
    fn normalized_parallel_vectors_agree() {
        let g = FieldDescriptor::generic(1).unwrap();
        let t = g.indeterminate(1).unwrap();
        let mut a = vec![g.zero(), &t * &t, &t + &g.one()];
        let scale = &(&t - &g.from_int(3)) / &g.from_int(7);
        let mut b: Vec<Scalar> = a.iter().map(|x| x * &scale).collect();
        normalize_vector(&mut a);
        normalize_vector(&mut b);
        assert_eq!(a, b);
    }
}
