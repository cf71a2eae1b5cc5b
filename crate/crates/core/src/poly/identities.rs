use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{eulerian_poly, Polynomial};
use crate::arith::{big, binomial, binomial_rational, int, sign};
use crate::error::{Error, Result};
use crate::family::Family;

/// Coefficient-reversal symmetry: `t^(n-1) P^A_n(1/t) = P^A_n(t)` for
/// `n >= 1`, and `t^n P^B_n(1/t) = P^B_n(t)`.
pub fn symmetry_identity_check(family: Family, n: usize) -> Result<bool> {
    let p = eulerian_poly(family, n)?;
    let c = p.coeffs();
    match family {
        Family::A if n == 0 => Err(Error::Range("type A symmetry needs n >= 1".into())),
        Family::A => Ok(c[n].is_zero() && (0..n).all(|k| c[k] == c[n - 1 - k])),
        Family::B => Ok((0..=n).all(|k| c[k] == c[n - k])),
        other => Err(Error::Unsupported(format!("reversal symmetry for {other}"))),
    }
}

/// The same symmetry checked by evaluation at a nonzero rational point.
pub fn reciprocal_eval_check(family: Family, n: usize, t: &BigRational) -> Result<bool> {
    if t.is_zero() {
        return Err(Error::Range("reciprocal evaluation needs t != 0".into()));
    }
    let shift = match family {
        Family::A if n >= 1 => n - 1,
        Family::A => return Err(Error::Range("type A symmetry needs n >= 1".into())),
        Family::B => n,
        other => return Err(Error::Unsupported(format!("reversal symmetry for {other}"))),
    };
    let p = eulerian_poly(family, n)?;
    let lhs = num_traits::pow(t.clone(), shift) * p.eval(&t.recip());
    Ok(lhs == p.eval(t))
}

/// `(1+t)^(n+1) P^A_n(t) - 2^n t P^A_n(t^2) = P^B_n(t^2)` as polynomials.
pub fn ab_relation_check(n: usize) -> bool {
    let pa = eulerian_poly(Family::A, n).expect("type A");
    let pb = eulerian_poly(Family::B, n).expect("type B");
    let one_plus_t = Polynomial::linear(int(1), int(1));
    let two_pow_t = Polynomial::new(vec![int(0), big(&(num_bigint::BigInt::one() << n))]);
    let lhs = &(&one_plus_t.pow(n as u32 + 1) * &pa) - &(&two_pow_t * &pa.substitute_power(2));
    lhs == pb.substitute_power(2)
}

/// `P^D_n = (P^B_n + (1-t)^n)/2` and `P^D~_n = (P^B_n - (1-t)^n)/2`.
pub fn db_relation_check(n: usize) -> bool {
    let pb = eulerian_poly(Family::B, n).expect("type B");
    let pd = eulerian_poly(Family::D, n).expect("type D");
    let pt = eulerian_poly(Family::Dtilde, n).expect("type D~");
    let half = BigRational::new(1.into(), 2.into());
    let one_minus_t = Polynomial::linear(int(1), int(-1)).pow(n as u32);
    pd == (&pb + &one_minus_t).scale(&half) && pt == (&pb - &one_minus_t).scale(&half)
}

/// Both sides of the Worpitzky identity for the family at rational `x`.
///
/// The left side is `sum_k C(x+k, n) T(n,k)`. The right side is `x^n` for
/// `A`, `(1+2x)^n` for `B`, and `((2x+1)^n +- (-1)^n)/2` for `D` and `D~`.
pub fn worpitzky(family: Family, n: usize, x: &BigRational) -> Result<(BigRational, BigRational)> {
    let p = eulerian_poly(family, n)?;
    let lhs = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| binomial_rational(&(x + int(k as i64)), n as u64) * c)
        .sum();
    let odd_part = num_traits::pow(x * int(2) + int(1), n);
    let half = BigRational::new(1.into(), 2.into());
    let parity = int(sign(n as u64) as i64);
    let rhs = match family {
        Family::A => num_traits::pow(x.clone(), n),
        Family::B => odd_part,
        Family::D => (odd_part + parity) * half,
        Family::Dtilde => (odd_part - parity) * half,
        Family::BrentiD => unreachable!("rejected by eulerian_poly"),
    };
    Ok((lhs, rhs))
}

/// `sum_k C(x+k, n) C(n,k) (-1)^k = (-1)^n`
pub fn binomial_alternating_identity_check(n: usize, x: &BigRational) -> bool {
    let lhs: BigRational = (0..=n)
        .map(|k| {
            binomial_rational(&(x + int(k as i64)), n as u64) * big(&binomial(n as u64, k as u64)) * int(sign(k as u64) as i64)
        })
        .sum();
    lhs == int(sign(n as u64) as i64)
}

/// One step of the derivative recurrence
/// `P_n = (2nt - t + 1) P_(n-1) + 2t(1-t) P'_(n-1) -+ t(1-t)^(n-1)`,
/// with `-` for `D` and `+` for `D~`. The result has `n + 1` stored
/// coefficients.
pub fn poly_step_d(family: Family, prev: &Polynomial, n: usize) -> Result<Polynomial> {
    let correction_sign = match family {
        Family::D => int(-1),
        Family::Dtilde => int(1),
        other => return Err(Error::Unsupported(format!("derivative recurrence for {other}"))),
    };
    if n == 0 {
        return Err(Error::Range("derivative recurrence starts at n = 1".into()));
    }
    let linear = Polynomial::linear(int(1), int(2 * n as i64 - 1));
    let two_t_one_minus_t = Polynomial::new(vec![int(0), int(2), int(-2)]);
    let t_times = Polynomial::new(vec![int(0), correction_sign]);
    let correction = &t_times * &Polynomial::linear(int(1), int(-1)).pow(n as u32 - 1);
    let next = &(&(&linear * prev) + &(&two_t_one_minus_t * &prev.derivative())) + &correction;
    next.with_len(n + 1)
}

fn check_unit_interval(t: &BigRational) -> Result<()> {
    if t.is_positive() && *t < BigRational::one() {
        Ok(())
    } else {
        Err(Error::Range("summation formulas need 0 < t < 1".into()))
    }
}

/// Partial sum of the first `terms` terms of `sum_{j>=1} t^j j^n` (type A)
/// or `sum_{k>=0} (2k+1)^n t^k` (type B).
pub fn summation_partial(family: Family, t: &BigRational, n: usize, terms: usize) -> Result<BigRational> {
    check_unit_interval(t)?;
    if terms == 0 {
        return Err(Error::Range("summation needs at least one term".into()));
    }
    let mut acc = BigRational::zero();
    let mut tk = BigRational::one();
    for k in 0..terms as i64 {
        match family {
            Family::A => {
                tk *= t;
                acc += &tk * num_traits::pow(int(k + 1), n);
            }
            Family::B => {
                acc += &tk * num_traits::pow(int(2 * k + 1), n);
                tk *= t;
            }
            other => return Err(Error::Unsupported(format!("summation formula for {other}"))),
        }
    }
    Ok(acc)
}

/// Closed value of the infinite sum: `t P^A_n(t) / (1-t)^(n+1)` or
/// `P^B_n(t) / (1-t)^(n+1)`.
pub fn summation_limit(family: Family, t: &BigRational, n: usize) -> Result<BigRational> {
    check_unit_interval(t)?;
    let denom = num_traits::pow(BigRational::one() - t, n + 1);
    match family {
        Family::A => Ok(t * eulerian_poly(family, n)?.eval(t) / denom),
        Family::B => Ok(eulerian_poly(family, n)?.eval(t) / denom),
        other => Err(Error::Unsupported(format!("summation formula for {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn symmetry_examples() {
        assert!(symmetry_identity_check(Family::A, 4).unwrap());
        assert!(symmetry_identity_check(Family::B, 4).unwrap());
        assert!(symmetry_identity_check(Family::A, 1).unwrap());
        assert!(symmetry_identity_check(Family::A, 0).is_err());
        assert!(symmetry_identity_check(Family::D, 3).is_err());
        assert!(reciprocal_eval_check(Family::A, 5, &ratio(-2, 7)).unwrap());
        assert!(reciprocal_eval_check(Family::B, 5, &ratio(3, 2)).unwrap());
        assert!(reciprocal_eval_check(Family::B, 5, &int(0)).is_err());
    }

    #[test]
    fn ab_and_db_relations() {
        for n in [0, 1, 2, 12] {
            assert!(ab_relation_check(n), "n={n}");
        }
        for n in [0, 3, 15] {
            assert!(db_relation_check(n), "n={n}");
        }
    }

    #[test]
    fn worpitzky_examples() {
        assert_eq!(worpitzky(Family::D, 2, &int(1)).unwrap(), (int(5), int(5)));
        for n in 0..6 {
            assert_eq!(worpitzky(Family::A, n, &int(1)).unwrap(), (int(1), int(1)));
        }
        let (lhs, rhs) = worpitzky(Family::B, 3, &int(2)).unwrap();
        assert_eq!(rhs, int(125));
        assert_eq!(lhs, rhs);
        assert!(worpitzky(Family::BrentiD, 3, &int(2)).is_err());
    }

    #[test]
    fn binomial_identity_examples() {
        assert!(binomial_alternating_identity_check(0, &int(4)));
        assert!(binomial_alternating_identity_check(3, &int(2)));
        assert!(binomial_alternating_identity_check(10, &ratio(-5, 2)));
    }

    #[test]
    fn derivative_recurrence_examples() {
        let d1 = poly_step_d(Family::D, &Polynomial::one(), 1).unwrap();
        assert_eq!(d1.coeffs(), &[int(1), int(0)]);
        let d2 = eulerian_poly(Family::D, 2).unwrap();
        let d3 = poly_step_d(Family::D, &d2, 3).unwrap();
        assert_eq!(d3.coeffs(), &[int(1), int(10), int(13), int(0)]);
        let t3 = eulerian_poly(Family::Dtilde, 3).unwrap();
        let t4 = poly_step_d(Family::Dtilde, &t3, 4).unwrap();
        assert_eq!(t4.coeffs(), &[int(0), int(40), int(112), int(40), int(0)]);
        assert!(poly_step_d(Family::D, &Polynomial::one(), 0).is_err());
        assert!(poly_step_d(Family::B, &Polynomial::one(), 1).is_err());
    }

    #[test]
    fn summation_examples() {
        let close = |a: BigRational, b: BigRational| (a - b).abs() < ratio(1, 1_000_000_000);
        assert!(close(summation_partial(Family::A, &ratio(1, 2), 2, 60).unwrap(), int(6)));
        assert!(close(summation_partial(Family::B, &ratio(1, 3), 1, 60).unwrap(), int(3)));
        assert_eq!(summation_limit(Family::A, &ratio(1, 2), 0).unwrap(), int(1));
        assert_eq!(summation_limit(Family::A, &ratio(1, 2), 2).unwrap(), int(6));
        assert_eq!(summation_limit(Family::B, &ratio(1, 3), 1).unwrap(), int(3));
        assert!(summation_partial(Family::A, &int(1), 2, 10).is_err());
        assert!(summation_partial(Family::A, &int(0), 2, 10).is_err());
    }
}
