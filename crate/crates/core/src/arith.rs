//! Small exact-arithmetic helpers shared by the other modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `C(n, k)` for nonnegative integers; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(-1)^k` as a small integer.
pub fn sign(k: u64) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn big(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Generalized binomial `C(y, n) = y (y-1) ... (y-n+1) / n!` for rational `y`.
pub fn binomial_rational(y: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..n {
        acc *= y - int(i as i64);
        acc /= int(i as i64 + 1);
    }
    acc
}

/// Parse an exact rational written as `p` or `p/q`. Decimal notation is
/// rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational of the form p or p/q"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

/// Parse a positive tolerance. Accepts `p/q` as well as scientific notation
/// such as `1e-9`, which is converted exactly.
pub fn parse_tolerance(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let value = if s.contains('/') {
        parse_rational(s)?
    } else {
        parse_decimal(s)?
    };
    if !value.is_positive() {
        return Err(Error::Parse(format!("tolerance `{s}` must be positive")));
    }
    Ok(value)
}

fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("`{s}` is not a decimal number"));
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let digits: BigInt = digits.parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    })
}

/// Render a rational as `p` or `p/q`.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Approximate decimal rendering for human-facing reports.
pub fn approx(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
