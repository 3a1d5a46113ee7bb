//! Closed-form counts of two-row dope matrices and upper bounds on the
//! number of dope matrices, as exact integers. Quantities involving pi, e or
//! entropy are reported as approximate base-2 logarithms.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binomial(BigUint::from(n), BigUint::from(k))
}

fn binom_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    BigInt::from(binom(n as u64, k as u64))
}

fn nonneg(x: BigInt) -> BigUint {
    if x.is_negative() {
        BigUint::zero()
    } else {
        x.to_biguint().unwrap()
    }
}

/// Two-row dope matrices of width `n+1` with exactly `t` ones:
/// `binom(2n+1, t) - binom(2n+1, t-1)`, zero outside `0 <= t <= n+1`.
pub fn count_c(n: i64, t: i64) -> BigUint {
    if n < 0 || t < 0 || t > n + 1 {
        return BigUint::zero();
    }
    nonneg(binom_i(2 * n + 1, t) - binom_i(2 * n + 1, t - 1))
}

/// `C(n,t) = C(n-1,t) + 2C(n-1,t-1) + C(n-1,t-2)` from `C(0,0) = 1`.
pub fn count_c_recurrence(n: i64, t: i64) -> BigUint {
    if n < 0 || t < 0 {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); row.len() + 2];
        for (k, v) in row.iter().enumerate() {
            next[k] += v;
            next[k + 1] += v * 2u32;
            next[k + 2] += v;
        }
        next.truncate(row.len() + 1);
        row = next;
    }
    row.get(t as usize).cloned().unwrap_or_default()
}

/// Two-row dope matrices with identical rows and `2s` ones:
/// `binom(n, s) - binom(n, s-1)`, zero outside `0 <= 2s <= n+1`.
pub fn count_b(n: i64, s: i64) -> BigUint {
    if n < 0 || s < 0 || 2 * s > n + 1 {
        return BigUint::zero();
    }
    nonneg(binom_i(n, s) - binom_i(n, s - 1))
}

/// `B(n,2s) = B(n-1,2s) + B(n-1,2s-2)` from `B(0,0) = 1`.
pub fn count_b_recurrence(n: i64, s: i64) -> BigUint {
    if n < 0 || s < 0 {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for k in 1..=n {
        let mut next = vec![BigUint::zero(); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += v;
            next[j + 1] += v;
        }
        next.truncate((k / 2 + 1) as usize);
        row = next;
    }
    row.get(s as usize).cloned().unwrap_or_default()
}

pub fn catalan(k: u64) -> BigUint {
    binom(2 * k, k) / BigUint::from(k + 1)
}

/// `binom(2n+1, n)`, the number of two-row dope matrices of width `n+1`.
pub fn two_row_total(n: u64) -> BigUint {
    binom(2 * n + 1, n)
}

/// Two-row dope matrices up to swapping the rows:
/// `(binom(2n+1, n) + binom(n, floor(n/2))) / 2`.
pub fn count_two_row_up_to_swap(n: u64) -> BigUint {
    (two_row_total(n) + binom(n, n / 2)) / 2u32
}

/// A base-2 logarithm of a real-valued relaxation; never exact.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Approx {
    pub label: String,
    pub log2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bound {
    #[serde(serialize_with = "as_decimal")]
    pub exact: BigUint,
    pub approximate: Vec<Approx>,
}

fn as_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn log2_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        return x.to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

fn ceil_sqrt(x: &BigUint) -> BigUint {
    let r = x.sqrt();
    if &(&r * &r) < x {
        r + 1u32
    } else {
        r
    }
}

/// `ceil(binom(2n+1, n)^(m/2))`.
pub fn bound_pairwise(m: u64, n: u64) -> Result<Bound> {
    if m < 2 || n < 1 {
        return Err(Error::Domain(format!("pairwise bound needs m >= 2 and n >= 1 (got m={m}, n={n})")));
    }
    let exact = ceil_sqrt(&two_row_total(n).pow(m as u32));
    let relax = (m as f64 / 2.0) * (2.0 / (std::f64::consts::PI * n as f64).sqrt()).log2() + (m * n) as f64;
    Ok(Bound { exact, approximate: vec![Approx { label: "(2/sqrt(pi n))^(m/2) 2^(mn)".into(), log2: relax }] })
}

/// `2n + (m-2)n(n+1)/2`, the degree sum behind the zero-pattern bound.
pub fn zero_pattern_degree_sum(m: u64, n: u64) -> u64 {
    2 * n + (m - 2) * n * (n + 1) / 2
}

/// `binom(3n + m - 2 + (m-2)n(n+1)/2, m + n - 2)`.
pub fn bound_zero_patterns(m: u64, n: u64) -> Result<Bound> {
    if m < 3 || n < 2 {
        return Err(Error::Domain(format!("zero-pattern bound needs m >= 3 and n >= 2 (got m={m}, n={n})")));
    }
    let top = zero_pattern_degree_sum(m, n) + n + m - 2;
    let exact = binom(top, m + n - 2);
    let relax1 = log2_big(&binom(m * n * n, m + n));
    let relax2 = (m + n) as f64 * (std::f64::consts::E * (m * n) as f64).log2();
    Ok(Bound {
        exact,
        approximate: vec![
            Approx { label: "binom(m n^2, m+n)".into(), log2: relax1 },
            Approx { label: "2^((m+n) log2(e m n))".into(), log2: relax2 },
        ],
    })
}

fn entropy(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
}

/// `sum_{i=0}^{n} binom(mn, i)`.
pub fn bound_fixed_tuple(m: u64, n: u64) -> Result<Bound> {
    if m < 3 {
        return Err(Error::Domain(format!("fixed-tuple bound needs m >= 3 (got m={m})")));
    }
    let exact = (0..=n).map(|i| binom(m * n, i)).sum();
    let relax = (m * n) as f64 * entropy(1.0 / m as f64);
    Ok(Bound { exact, approximate: vec![Approx { label: "2^(mn H(1/m))".into(), log2: relax }] })
}

/// Checkerboard construction of matrices with the entry, row and column
/// conditions: `prod_{j<n} sum_{k <= n-j} binom(n/2, k)`.
pub fn erc_lower_bound_construction(n: u64) -> Result<Bound> {
    if n % 2 == 1 || n > 20 {
        return Err(Error::Domain(format!("construction needs an even n <= 20 (got {n})")));
    }
    let half = n / 2;
    let exact = (0..n)
        .map(|j| (0..=(n - j).min(half)).map(|k| binom(half, k)).sum::<BigUint>())
        .product();
    let compare = if n == 0 { 0.0 } else { 4.0 * n as f64 * (std::f64::consts::E * n as f64).log2() };
    Ok(Bound { exact, approximate: vec![Approx { label: "4n log2(en)".into(), log2: compare }] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_values() {
        for n in 1..8 {
            assert_eq!(count_c(n, 0), BigUint::one());
            assert_eq!(count_c(n, n), catalan(n as u64 + 1));
        }
        assert!(count_c(0, 1).is_zero());
        assert!(count_c(3, -1).is_zero());
    }

    #[test]
    fn b_values() {
        assert_eq!(count_b(4, 2), BigUint::from(2u32));
        assert_eq!(count_b(5, 0), BigUint::one());
        assert!(count_b(0, 1).is_zero());
    }

    #[test]
    fn swap_values() {
        assert_eq!(count_two_row_up_to_swap(1), BigUint::from(2u32));
        assert_eq!(count_two_row_up_to_swap(2), BigUint::from(6u32));
    }

    #[test]
    fn bound_values() {
        assert_eq!(bound_pairwise(2, 5).unwrap().exact, BigUint::from(462u32));
        assert_eq!(bound_pairwise(4, 1).unwrap().exact, BigUint::from(9u32));
        assert_eq!(bound_pairwise(3, 6).unwrap().exact, BigUint::from(71085u32));
        assert_eq!(bound_zero_patterns(3, 2).unwrap().exact, BigUint::from(120u32));
        assert_eq!(bound_fixed_tuple(3, 6).unwrap().exact, BigUint::from(31180u32));
        assert_eq!(bound_fixed_tuple(3, 0).unwrap().exact, BigUint::one());
        assert_eq!(erc_lower_bound_construction(2).unwrap().exact, BigUint::from(4u32));
        assert!(bound_zero_patterns(2, 2).is_err());
    }
}
