//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p/q` or `p`. Decimal points and exponents are rejected.
pub fn parse_scalar(s: &str) -> Result<Scalar, AlgebraError> {
    let t = s.trim();
    let bad = || AlgebraError::Parse(format!("not an exact fraction: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let ok = |x: &str| {
        let digits = x.strip_prefix('-').or_else(|| x.strip_prefix('+')).unwrap_or(x);
        !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
    };
    if !ok(num) || !ok(den) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact `d`-th root of a rational, if one exists in Q. Even roots pick the positive one.
pub fn rational_root(x: &Scalar, d: u32) -> Option<Scalar> {
    assert!(d >= 1);
    if d == 1 || x.is_zero() {
        return Some(x.clone());
    }
    if x.is_negative() && d % 2 == 0 {
        return None;
    }
    let root_int = |v: &BigInt| -> Option<BigInt> {
        let r = v.abs().nth_root(d);
        if num_traits::pow(r.clone(), d as usize) == v.abs() {
            Some(if v.is_negative() { -r } else { r })
        } else {
            None
        }
    };
    let n = root_int(x.numer())?;
    let q = root_int(x.denom())?;
    Some(Scalar::new(n, q))
}

/// Integer power with possibly negative exponent.
pub fn pow_i(x: &Scalar, e: i64) -> Scalar {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}
