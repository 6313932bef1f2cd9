//! Integer and rational helpers shared by the rest of the crate.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result, Scalar};

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Row `n` of Pascal's triangle in an arbitrary scalar, built by additions only.
pub fn binomial_row<T: Scalar>(n: u32) -> Vec<T> {
    let mut row = vec![T::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(T::one());
        for w in row.windows(2) {
            next.push(w[0].clone() + w[1].clone());
        }
        next.push(T::one());
        row = next;
    }
    row
}

pub fn pow<T: Scalar>(base: &T, exp: u32) -> T {
    num_traits::pow(base.clone(), exp as usize)
}

/// Parses `"p/q"` or a bare integer, with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::InvalidRational(s.to_string());
    let trimmed = s.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Lossless text form: `"p/q"`, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Decimal expansion rounded half away from zero to `digits` places.
pub fn to_decimal(q: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let scaled = q.abs() * Rational::from_integer(scale.clone());
    let twice = scaled * Rational::from_integer(BigInt::from(2));
    let rounded: BigInt = (twice.numer() + twice.denom()).div_floor(&(twice.denom() * 2));
    let (int_part, frac_part) = rounded.div_mod_floor(&scale);
    let sign = if q.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!(
        "{sign}{int_part}.{:0>width$}",
        frac_part.to_string(),
        width = digits
    )
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Smallest positive `m` with `m * q` integral.
pub fn integral_stride(q: &Rational) -> BigInt {
    q.denom().clone()
}
