//! Eulerian polynomials, the identities between them, and exact Taylor
//! expansions of their exponential generating functions.

mod identities;
mod series;

pub use identities::*;
pub use series::{egf_pde_check, egf_series, PowerSeries};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{big, fmt_rational};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::triangles::{coupled_rows_d, row_a, row_b, Row};

/// Dense polynomial in `t` over the rationals; `coeffs[i]` multiplies `t^i`.
///
/// Trailing zero coefficients may be stored (so a triangle row keeps its
/// length) but are ignored by equality and [`Polynomial::degree`].
#[derive(Debug, Clone, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Polynomial { coeffs }
    }

    pub fn from_integers(row: &[BigInt]) -> Self {
        Polynomial { coeffs: row.iter().map(big).collect() }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// `a + b t`
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Polynomial { coeffs: vec![a, b] }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// `p(t^k)`
    pub fn substitute_power(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Polynomial { coeffs }
    }

    /// Pad or cut to exactly `len` stored coefficients. Cutting only drops
    /// zeros.
    pub fn with_len(mut self, len: usize) -> Result<Self> {
        if self.degree().is_some_and(|d| d >= len) {
            return Err(Error::Range(format!("degree exceeds {}", len.saturating_sub(1))));
        }
        self.coeffs.resize(len, BigRational::zero());
        Ok(self)
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Row> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|i| self.coeff(i) == other.coeff(i))
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => fmt_rational(c),
                1 => format!("{}*t", fmt_rational(c)),
                _ => format!("{}*t^{i}", fmt_rational(c)),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial { coeffs: (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect() }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial { coeffs: (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial { coeffs }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The generating polynomial of row `n` of the family's triangle.
pub fn eulerian_poly(family: Family, n: usize) -> Result<Polynomial> {
    let row = match family {
        Family::A => row_a(n),
        Family::B => row_b(n),
        Family::D => coupled_rows_d(n).0,
        Family::Dtilde => coupled_rows_d(n).1,
        Family::BrentiD => {
            return Err(Error::Unsupported("Eulerian polynomials are defined for A, B, D and Dtilde".into()))
        }
    };
    Ok(Polynomial::from_integers(&row))
}

/// Polynomials `P_0, ..., P_{n_max}` of one family, built in a single pass.
pub fn eulerian_polys(family: Family, n_max: usize) -> Result<Vec<Polynomial>> {
    use crate::triangles::{ARows, BRows, CoupledDRows};
    let rows: Vec<Row> = match family {
        Family::A => ARows::new().take(n_max + 1).collect(),
        Family::B => BRows::new().take(n_max + 1).collect(),
        Family::D => CoupledDRows::new().take(n_max + 1).map(|p| p.0).collect(),
        Family::Dtilde => CoupledDRows::new().take(n_max + 1).map(|p| p.1).collect(),
        Family::BrentiD => {
            return Err(Error::Unsupported("Eulerian polynomials are defined for A, B, D and Dtilde".into()))
        }
    };
    Ok(rows.iter().map(|r| Polynomial::from_integers(r)).collect())
}
