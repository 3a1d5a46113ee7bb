//! Dense univariate polynomials over an exact field.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{binomial_scalar, common_multiple, resolve_literals, FieldDescriptor, Scalar, ScalarLiteral};

/// `coeffs[j]` is the coefficient of `x^j`; the highest stored coefficient is
/// nonzero, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldDescriptor,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero(field: FieldDescriptor) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs_unchecked(c.field(), vec![c])
    }

    pub fn x(field: FieldDescriptor) -> Self {
        Poly { field, coeffs: vec![field.zero(), field.one()] }
    }

    /// Coefficients in ascending order; rationals are embedded into `field`.
    pub fn new(field: FieldDescriptor, coeffs: Vec<Scalar>) -> Result<Self> {
        let coeffs = coeffs.iter().map(|c| field.embed(c)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs_unchecked(field, coeffs))
    }

    pub(crate) fn from_coeffs_unchecked(field: FieldDescriptor, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    /// `(x - root)^k`.
    pub fn linear_power(root: &Scalar, k: u32) -> Self {
        let f = root.field();
        let lin = Poly { field: f, coeffs: vec![-root, f.one()] };
        lin.pow(k)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, j: usize) -> Scalar {
        self.coeffs.get(j).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficient vector padded with zeros to length `len`.
    pub fn coeff_vector(&self, len: usize) -> Vec<Scalar> {
        (0..len).map(|j| self.coeff(j)).collect()
    }

    pub fn neg(&self) -> Self {
        Poly { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| &self.coeff(j) + &other.coeff(j)).collect();
        Self::from_coeffs_unchecked(self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| &self.coeff(j) - &other.coeff(j)).collect();
        Self::from_coeffs_unchecked(self.field, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs_unchecked(self.field, out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs_unchecked(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::constant(self.field.one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// The `j`-th derivative.
    pub fn derivative(&self, j: usize) -> Self {
        if j == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= j {
            return Self::zero(self.field);
        }
        let coeffs = (j..self.coeffs.len())
            .map(|k| {
                // k! / (k-j)!
                let falling: u64 = ((k - j + 1)..=k).map(|x| x as u64).product();
                &self.coeffs[k] * &self.field.from_int(falling)
            })
            .collect();
        Self::from_coeffs_unchecked(self.field, coeffs)
    }

    /// `q(x) = p(x + c)` by repeated synthetic division.
    pub fn taylor_shift(&self, c: &Scalar) -> Self {
        let mut a = self.coeffs.clone();
        if c.is_zero() || a.len() < 2 {
            return self.clone();
        }
        let n = a.len() - 1;
        for i in 0..n {
            for j in (i..n).rev() {
                let t = c * &a[j + 1];
                a[j] = &a[j] + &t;
            }
        }
        Self::from_coeffs_unchecked(self.field, a)
    }

    /// The first `count` Taylor coefficients at `c`, i.e. `p^(j)(c) / j!`.
    pub fn taylor_coeffs(&self, c: &Scalar, count: usize) -> Vec<Scalar> {
        self.taylor_shift(c).coeff_vector(count)
    }

    /// Remainder modulo `(x - root)^power`.
    pub fn rem_linear_power(&self, root: &Scalar, power: usize) -> Self {
        let shifted = self.taylor_shift(root).coeff_vector(power);
        Poly::from_coeffs_unchecked(self.field, shifted).taylor_shift(&-root)
    }
}

/// One congruence `P = residue (mod (x - root)^power)`.
#[derive(Clone, Debug)]
pub struct CrtResidue {
    pub root: Scalar,
    pub power: usize,
    pub residue: Poly,
}

/// The unique polynomial of degree below the sum of the powers satisfying
/// every congruence: `sum_i M_i * (r_i / M_i mod (x - a_i)^k_i)` with
/// `M_i` the product of the other moduli.
pub fn crt_interpolate(residues: &[CrtResidue]) -> Result<Poly> {
    let (field, parts) = crt_parts(residues)?;
    let mut total = Poly::zero(field);
    for (num, den) in parts {
        total = total.add(&num.scale(&den.inv()?));
    }
    Ok(total)
}

/// A nonzero constant multiple of [`crt_interpolate`] computed without
/// dividing, which keeps coefficients polynomial over `Q(t..)`.
pub fn crt_interpolate_multiple(residues: &[CrtResidue]) -> Result<Poly> {
    let (field, parts) = crt_parts(residues)?;
    let mut l = field.one();
    for (_, den) in &parts {
        l = common_multiple(&l, den);
    }
    let mut total = Poly::zero(field);
    for (num, den) in &parts {
        total = total.add(&num.scale(&(&l / den)));
    }
    Ok(total)
}

/// Pairs `(N_i, c_i)` with the interpolant equal to `sum_i N_i / c_i`. The
/// local inverse of `M_i` is a power series in `y = x - a_i` whose terms
/// `U_l = s_0^(l+1) u_l` stay free of division.
fn crt_parts(residues: &[CrtResidue]) -> Result<(FieldDescriptor, Vec<(Poly, Scalar)>)> {
    let Some(first) = residues.first() else {
        return Err(Error::Domain("at least one congruence is required".into()));
    };
    let field = first.root.field();
    for (i, a) in residues.iter().enumerate() {
        field.embed(&a.root)?;
        if a.residue.field() != field {
            return Err(Error::FieldMismatch(a.residue.field(), field));
        }
        if a.residue.degree().is_some_and(|d| d >= a.power) {
            return Err(Error::Domain(format!(
                "residue {i} has degree {} but the modulus has degree {}",
                a.residue.degree().unwrap(),
                a.power
            )));
        }
        for (j, b) in residues.iter().enumerate().skip(i + 1) {
            if a.root == b.root {
                return Err(Error::DuplicateNodes(i, j));
            }
        }
    }
    let mut parts = Vec::new();
    for (i, r) in residues.iter().enumerate() {
        if r.power == 0 || r.residue.is_zero() {
            continue;
        }
        let mut others = Poly::constant(field.one());
        for (j, o) in residues.iter().enumerate() {
            if j != i {
                others = others.mul(&Poly::linear_power(&o.root, o.power as u32));
            }
        }
        let s = others.taylor_coeffs(&r.root, r.power);
        let t = r.residue.taylor_coeffs(&r.root, r.power);
        let k = r.power;
        let s0_pows: Vec<Scalar> = (0..=k).map(|e| s[0].pow(e as u32)).collect();
        let mut u: Vec<Scalar> = Vec::with_capacity(k);
        for l in 0..k {
            let mut acc = &t[l] * &s0_pows[l];
            for q in 1..=l {
                acc = &acc - &(&(&s[q] * &s0_pows[q - 1]) * &u[l - q]);
            }
            u.push(acc);
        }
        let local: Vec<Scalar> = u.iter().enumerate().map(|(l, x)| x * &s0_pows[k - 1 - l]).collect();
        let local = Poly::new(field, local)?.taylor_shift(&-&r.root);
        parts.push((others.mul(&local), s0_pows[k].clone()));
    }
    Ok((field, parts))
}

/// Binomial coefficient helper shared with the form builder.
pub(crate) fn binom(field: FieldDescriptor, n: usize, k: usize) -> Scalar {
    binomial_scalar(field, n as u64, k as u64)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let simple = !s[1..].contains(['+', '-', '/']);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let body = if simple || j == 0 { body } else { format!("({body})") };
            match j {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    write!(f, "x")?;
                    if j > 1 {
                        write!(f, "^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct PolyJsonOut<'a> {
    coeffs: &'a [Scalar],
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJsonOut { coeffs: &self.coeffs }.serialize(serializer)
    }
}

/// `{"coeffs": [scalar, ...]}` in ascending order.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyLiteral {
    pub coeffs: Vec<ScalarLiteral>,
}

impl PolyLiteral {
    pub fn resolve(&self) -> Result<Poly> {
        let (field, coeffs) = resolve_literals(&self.coeffs)?;
        Poly::new(field, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> Poly {
        Poly::new(FieldDescriptor::Rational, coeffs.iter().map(|&c| Scalar::int(c)).collect()).unwrap()
    }

    #[test]
    fn derivatives() {
        let cube = q(&[0, 0, 0, 1]);
        assert_eq!(cube.derivative(1), q(&[0, 0, 3]));
        assert!(cube.derivative(4).is_zero());
        assert_eq!(cube.derivative(0), cube);
    }

    #[test]
    fn taylor_shift_examples() {
        assert_eq!(q(&[0, 0, 1]).taylor_shift(&Scalar::int(1)), q(&[1, 2, 1]));
        let p = q(&[0, -1, 0, 1]);
        assert_eq!(p.taylor_shift(&Scalar::int(0)), p);
        // (x+1)^3 - (x+1) expanded by hand
        assert_eq!(p.taylor_shift(&Scalar::int(1)), q(&[0, 2, 3, 1]));
    }

    #[test]
    fn crt_examples() {
        let f = FieldDescriptor::Rational;
        let r = |root: i64, power: usize, res: Poly| CrtResidue { root: Scalar::int(root), power, residue: res };
        // P = 0 mod x^2, P = 1 mod (x-1)^2 solved by hand: 3x^2 - 2x^3
        let p = crt_interpolate(&[r(0, 2, Poly::zero(f)), r(1, 2, q(&[1]))]).unwrap();
        assert_eq!(p, q(&[0, 0, 3, -2]));
        let p = crt_interpolate(&[r(0, 3, q(&[1, 1]))]).unwrap();
        assert_eq!(p, q(&[1, 1]));
        let p = crt_interpolate(&[r(0, 1, q(&[1])), r(1, 1, Poly::zero(f))]).unwrap();
        assert_eq!(p, q(&[1, -1]));
        assert!(matches!(
            crt_interpolate(&[r(0, 1, q(&[1])), r(0, 1, q(&[2]))]),
            Err(Error::DuplicateNodes(0, 1))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(q(&[-1, 0, 1]).to_string(), "x^2-1");
        assert_eq!(q(&[0, -2, 3]).to_string(), "3*x^2-2*x");
    }
}
