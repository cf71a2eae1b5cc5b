use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{eulerian_polys, Polynomial};
use crate::arith::{factorial, fmt_rational, int};
use crate::error::{Error, Result};
use crate::family::Family;

/// Truncated power series in `z` with exact rational coefficients, holding
/// the coefficients of `z^0 ..= z^order`. The generating-function parameter
/// `t` is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    t: BigRational,
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn new(t: BigRational, coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series keeps at least the constant term");
        PowerSeries { t, coeffs }
    }

    pub fn constant(t: BigRational, c: BigRational, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = c;
        PowerSeries { t, coeffs }
    }

    /// `e^(c z)`, coefficient `n` being `c^n / n!`.
    pub fn exp_linear(t: BigRational, c: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigRational::one();
        for n in 0..=order {
            coeffs.push(term.clone());
            term = term * c / int(n as i64 + 1);
        }
        PowerSeries { t, coeffs }
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries { t: self.t.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Quotient by a series with invertible constant term, by the usual
    /// recursive convolution.
    pub fn div(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        let lead = &rhs.coeffs[0];
        if lead.is_zero() {
            return Err(Error::Degenerate(format!(
                "series quotient with zero constant term at t = {}",
                fmt_rational(&self.t)
            )));
        }
        let order = self.order().min(rhs.order());
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for (j, qj) in q.iter().enumerate() {
                acc -= qj * &rhs.coeffs[n - j];
            }
            q.push(acc / lead);
        }
        Ok(PowerSeries { t: self.t.clone(), coeffs: q })
    }
}

fn zip_order(a: &PowerSeries, b: &PowerSeries) -> usize {
    a.order().min(b.order())
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let coeffs = (0..=zip_order(self, rhs)).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect();
        PowerSeries { t: self.t.clone(), coeffs }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let coeffs = (0..=zip_order(self, rhs)).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect();
        PowerSeries { t: self.t.clone(), coeffs }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = zip_order(self, rhs);
        let coeffs = (0..=order)
            .map(|n| (0..=n).map(|j| &self.coeffs[j] * &rhs.coeffs[n - j]).sum())
            .collect();
        PowerSeries { t: self.t.clone(), coeffs }
    }
}

fn refuse_t_one(t: &BigRational) -> Result<()> {
    if t.is_one() {
        Err(Error::Degenerate(
            "the closed-form generating functions are 0/0 at t = 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// Taylor coefficients through `z^order` of the family's exponential
/// generating function `sum_n P_n(t) z^n / n!`, built from its closed form.
pub fn egf_series(family: Family, t: &BigRational, order: usize) -> Result<PowerSeries> {
    refuse_t_one(t)?;
    let one = BigRational::one();
    let exp = |c: BigRational| PowerSeries::exp_linear(t.clone(), &c, order);
    let konst = |c: BigRational| PowerSeries::constant(t.clone(), c, order);
    let s = &one - t;
    match family {
        // (t - 1) / (t - e^((t-1)z))
        Family::A => konst(t - &one).div(&(&konst(t.clone()) - &exp(t - &one))),
        // (1 - t) e^((1-t)z) / (1 - t e^(2(1-t)z))
        Family::B => {
            let num = exp(s.clone()).scale(&s);
            let den = &konst(one.clone()) - &exp(&s * int(2)).scale(t);
            num.div(&den)
        }
        // ((2 - t) e^((1-t)z) - t e^(3(1-t)z)) / (2 - 2t e^(2(1-t)z))
        Family::D | Family::Dtilde => {
            let e1 = exp(s.clone());
            let e3 = exp(&s * int(3));
            let num = match family {
                Family::D => &e1.scale(&(int(2) - t)) - &e3.scale(t),
                _ => &e3.scale(t) - &e1.scale(t),
            };
            let den = &konst(int(2)) - &exp(&s * int(2)).scale(&(t * int(2)));
            num.div(&den)
        }
        Family::BrentiD => Err(Error::Unsupported("no generating function for BrentiD".into())),
    }
}

/// Coefficient-wise check of
/// `(1+t) f + (2tz - 1) df/dz + 2t(1-t) df/dt = +-t e^((1-t)z)`
/// through `z^(order-1)`, with `+` for `D` and `-` for `D~`.
///
/// `f` comes from [`egf_series`]; since its `z^n` coefficient is `P_n(t)/n!`,
/// `df/dt` is taken from the exact derivative of the Eulerian polynomials.
pub fn egf_pde_check(family: Family, t: &BigRational, order: usize) -> Result<bool> {
    let sign = match family {
        Family::D => int(1),
        Family::Dtilde => int(-1),
        other => return Err(Error::Unsupported(format!("generating-function PDE for {other}"))),
    };
    if order < 2 {
        return Err(Error::Range("PDE check needs order >= 2".into()));
    }
    let f = egf_series(family, t, order)?;
    let polys = eulerian_polys(family, order)?;
    Ok(pde_holds(&f, &polys, &sign))
}

fn pde_holds(f: &PowerSeries, polys: &[Polynomial], sign: &BigRational) -> bool {
    let t = &f.t;
    let order = f.order();
    let one = BigRational::one();
    let s = &one - t;
    let forcing = PowerSeries::exp_linear(t.clone(), &s, order).scale(&(t * sign));
    (0..order).all(|m| {
        let fm = &f.coeffs[m];
        let m_fact = BigRational::from_integer(factorial(m as u64));
        let df_dt = polys[m].derivative().eval(t) / &m_fact;
        let lhs = (&one + t) * fm + t * int(2 * m as i64) * fm - int(m as i64 + 1) * &f.coeffs[m + 1]
            + t * int(2) * &s * df_dt;
        lhs == forcing.coeffs[m]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::poly::eulerian_poly;

    #[test]
    fn exp_and_quotient() {
        let t = int(0);
        let e = PowerSeries::exp_linear(t.clone(), &int(1), 5);
        assert_eq!(e.coeff(3), Some(&ratio(1, 6)));
        let inv = PowerSeries::constant(t.clone(), int(1), 5).div(&e).unwrap();
        let back = PowerSeries::exp_linear(t.clone(), &int(-1), 5);
        assert_eq!(inv, back);
        let zero_lead = PowerSeries::new(t.clone(), vec![int(0), int(1)]);
        assert!(matches!(e.div(&zero_lead), Err(Error::Degenerate(_))));
    }

    #[test]
    fn b_at_zero_is_exp() {
        let f = egf_series(Family::B, &int(0), 7).unwrap();
        assert_eq!(f, PowerSeries::exp_linear(int(0), &int(1), 7));
    }

    #[test]
    fn coefficients_match_polynomials() {
        for (family, t) in [(Family::D, ratio(1, 2)), (Family::A, int(2))] {
            let f = egf_series(family, &t, 8).unwrap();
            for n in 0..=8 {
                let expected = eulerian_poly(family, n).unwrap().eval(&t)
                    / BigRational::from_integer(factorial(n as u64));
                assert_eq!(f.coeffs()[n], expected, "{family} n={n}");
            }
        }
    }

    #[test]
    fn refuses_t_one() {
        for family in Family::ANALYTIC {
            assert!(matches!(egf_series(family, &int(1), 4), Err(Error::Degenerate(_))));
        }
        assert!(matches!(egf_pde_check(Family::D, &int(1), 4), Err(Error::Degenerate(_))));
    }

    #[test]
    fn pde_examples() {
        assert!(egf_pde_check(Family::D, &ratio(1, 2), 8).unwrap());
        assert!(egf_pde_check(Family::Dtilde, &int(2), 8).unwrap());
        assert!(egf_pde_check(Family::D, &int(0), 4).unwrap());
        assert!(egf_pde_check(Family::B, &int(2), 4).is_err());
        assert!(egf_pde_check(Family::D, &int(2), 1).is_err());
    }

    #[test]
    fn pde_rejects_wrong_forcing_sign() {
        let t = ratio(1, 3);
        let f = egf_series(Family::Dtilde, &t, 6).unwrap();
        let polys = eulerian_polys(Family::Dtilde, 6).unwrap();
        assert!(pde_holds(&f, &polys, &int(-1)));
        assert!(!pde_holds(&f, &polys, &int(1)));
    }
}
