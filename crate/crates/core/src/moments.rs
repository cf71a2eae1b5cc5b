//! Probability measures whose moments are the Eulerian polynomials, moment
//! evaluation with certified tail bounds, and Hankel positivity.
//!
//! A [`Measure`] is a finite list of atoms, plus optionally one infinite atom
//! family with geometric weight decay, plus optionally a gamma-type density
//! `c x^p e^(-x/s)` on `[0, inf)`. Atom series are summed exactly until a
//! rational bound on the remaining tail drops below the requested tolerance;
//! density moments are exact gamma integrals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{common_denominator, factorial, fmt_rational, int, ratio};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::poly::{eulerian_polys, Polynomial};

/// Maximum number of series terms summed for one moment.
pub const ITERATION_CAP: u64 = 1_000_000;

/// Which measure to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureFamily {
    A,
    B,
    D,
    /// The measure whose moments are `P^D~_(n+1)(t) / t`, defined for `t >= 1`.
    Nu,
}

impl MeasureFamily {
    pub fn name(self) -> &'static str {
        match self {
            MeasureFamily::A => "A",
            MeasureFamily::B => "B",
            MeasureFamily::D => "D",
            MeasureFamily::Nu => "nu",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub location: BigRational,
    pub weight: BigRational,
}

impl Atom {
    pub fn new(location: BigRational, weight: BigRational) -> Self {
        Atom { location, weight }
    }
}

/// Atoms `k = start, start+1, ...` with location `scale * (alpha k + beta)`
/// and weight `coef * (alpha k + beta)^weight_power * ratio^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSeries {
    pub start: u64,
    pub scale: BigRational,
    pub alpha: i64,
    pub beta: i64,
    pub coef: BigRational,
    pub ratio: BigRational,
    pub weight_power: u32,
}

impl AtomSeries {
    fn base(&self, k: u64) -> BigRational {
        int(self.alpha * k as i64 + self.beta)
    }

    pub fn atom(&self, k: u64) -> Atom {
        let base = self.base(k);
        let weight = &self.coef
            * num_traits::pow(base.clone(), self.weight_power as usize)
            * num_traits::pow(self.ratio.clone(), k as usize);
        Atom { location: &self.scale * base, weight }
    }
}

/// `coef * x^power * e^(-x/scale)` on `[0, inf)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaDensity {
    pub coef: BigRational,
    pub power: u32,
    pub scale: BigRational,
}

impl GammaDensity {
    /// `coef * scale^(n+p+1) * (n+p)!`
    pub fn moment(&self, n: usize) -> BigRational {
        let m = n + self.power as usize;
        &self.coef * num_traits::pow(self.scale.clone(), m + 1) * BigRational::from_integer(factorial(m as u64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Measure {
    atoms: Vec<Atom>,
    series: Option<AtomSeries>,
    density: Option<GammaDensity>,
}

/// A moment value `v` with a certified bound: `|v - true moment| <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedMoment {
    pub value: BigRational,
    pub bound: BigRational,
}

impl Measure {
    pub fn new(atoms: Vec<Atom>, series: Option<AtomSeries>, density: Option<GammaDensity>) -> Self {
        Measure { atoms, series, density }
    }

    pub fn dirac(location: BigRational) -> Self {
        Measure { atoms: vec![Atom::new(location, BigRational::one())], ..Default::default() }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn series(&self) -> Option<&AtomSeries> {
        self.series.as_ref()
    }

    pub fn density(&self) -> Option<&GammaDensity> {
        self.density.as_ref()
    }

    /// The finite atoms together with the series atoms of index below
    /// `series_end`, sorted by location with coincident atoms merged.
    pub fn atoms_up_to(&self, series_end: u64) -> Vec<Atom> {
        let mut all = self.atoms.clone();
        if let Some(s) = &self.series {
            all.extend((s.start..series_end.max(s.start)).map(|k| s.atom(k)));
        }
        merge_atoms(all)
    }

    /// `n`-th moment to within `tol`.
    pub fn moment(&self, n: usize, tol: &BigRational) -> Result<CertifiedMoment> {
        self.moment_with_cap(n, tol, ITERATION_CAP)
    }

    /// As [`Measure::moment`], summing at most `cap` series terms.
    pub fn moment_with_cap(&self, n: usize, tol: &BigRational, cap: u64) -> Result<CertifiedMoment> {
        if !tol.is_positive() {
            return Err(Error::Range("moment tolerance must be positive".into()));
        }
        let mut value: BigRational = self
            .atoms
            .iter()
            .map(|a| &a.weight * num_traits::pow(a.location.clone(), n))
            .sum();
        if let Some(d) = &self.density {
            value += d.moment(n);
        }
        let mut bound = BigRational::zero();
        if let Some(s) = &self.series {
            let part = series_moment(s, n, tol, cap)?;
            value += part.value;
            bound = part.bound;
        }
        Ok(CertifiedMoment { value, bound })
    }
}

fn merge_atoms(mut atoms: Vec<Atom>) -> Vec<Atom> {
    atoms.sort_by(|a, b| a.location.cmp(&b.location));
    let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
    for atom in atoms {
        match merged.last_mut() {
            Some(last) if last.location == atom.location => last.weight += atom.weight,
            _ => merged.push(atom),
        }
    }
    merged
}

/// Upper bound on `sum_{k >= from} ratio^k (alpha k + beta)^power`.
///
/// Consecutive terms have quotient `ratio ((alpha(k+1) + beta)/(alpha k + beta))^power`,
/// which decreases in `k`; when its value `rho` at `k = from` is below one the
/// tail is at most `g(from) / (1 - rho)`. Returns `None` when that does not
/// hold yet.
pub fn power_geometric_tail(
    ratio: &BigRational,
    alpha: i64,
    beta: i64,
    power: usize,
    from: u64,
) -> Option<BigRational> {
    let base = alpha * from as i64 + beta;
    if base <= 0 || ratio.is_negative() {
        return None;
    }
    let growth = BigRational::new(BigInt::from(base + alpha), BigInt::from(base));
    let rho = ratio * num_traits::pow(growth, power);
    if rho >= BigRational::one() {
        return None;
    }
    let head = num_traits::pow(ratio.clone(), from as usize) * num_traits::pow(int(base), power);
    Some(head / (BigRational::one() - rho))
}

fn series_moment(s: &AtomSeries, n: usize, tol: &BigRational, cap: u64) -> Result<CertifiedMoment> {
    let power = n + s.weight_power as usize;
    let prefactor = &s.coef * num_traits::pow(s.scale.clone(), n);
    let magnitude = prefactor.abs();
    let mut sum = BigRational::zero();
    let mut rk = num_traits::pow(s.ratio.clone(), s.start as usize);
    let mut k = s.start;
    loop {
        sum += &rk * num_traits::pow(s.base(k), power);
        rk *= &s.ratio;
        k += 1;
        if (k - s.start).is_multiple_of(8) || s.ratio.is_zero() {
            if let Some(tail) = power_geometric_tail(&s.ratio, s.alpha, s.beta, power, k) {
                let bound = &magnitude * tail;
                if bound <= *tol {
                    return Ok(CertifiedMoment { value: prefactor * sum, bound });
                }
            }
        }
        if k - s.start >= cap {
            return Err(Error::IterationCap(format!(
                "moment {n} did not reach tolerance {} within {cap} terms",
                fmt_rational(tol)
            )));
        }
    }
}

fn half() -> BigRational {
    ratio(1, 2)
}

/// The measure whose `n`-th moment is `P_n(t)` (or `P^D~_(n+1)(t)/t` for
/// [`MeasureFamily::Nu`]).
pub fn measure_for(family: MeasureFamily, t: &BigRational) -> Result<Measure> {
    if t.is_negative() {
        return Err(Error::Range("measures are defined for t >= 0".into()));
    }
    let one = BigRational::one();
    if family == MeasureFamily::Nu {
        return nu_measure(t);
    }
    if t.is_zero() {
        return Ok(Measure::dirac(one));
    }
    if t.is_one() {
        // e^-x, (1/2) e^(-x/2), and (1/2) delta_0 + (1/4) e^(-x/2)
        return Ok(match family {
            MeasureFamily::A => Measure::new(vec![], None, Some(GammaDensity { coef: one.clone(), power: 0, scale: one })),
            MeasureFamily::B => Measure::new(vec![], None, Some(GammaDensity { coef: half(), power: 0, scale: int(2) })),
            MeasureFamily::D => Measure::new(
                vec![Atom::new(BigRational::zero(), half())],
                None,
                Some(GammaDensity { coef: ratio(1, 4), power: 0, scale: int(2) }),
            ),
            MeasureFamily::Nu => unreachable!(),
        });
    }
    let below = *t < one;
    // |1 - t| scales every atom location; the weights decay like t^k or t^-k.
    let spread = (&one - t).abs();
    let decay = if below { t.clone() } else { t.recip() };
    let head = if below { spread.clone() } else { &spread / t };
    let series = |alpha, beta, coef: BigRational, start| AtomSeries {
        start,
        scale: spread.clone(),
        alpha,
        beta,
        coef,
        ratio: decay.clone(),
        weight_power: 0,
    };
    Ok(match family {
        // (1-t) t^(j-1) at j(1-t), j >= 1; or (t-1)/t^(j+1) at j(t-1), j >= 0
        MeasureFamily::A if below => Measure::new(vec![], Some(series(1, 1, head, 0)), None),
        MeasureFamily::A => Measure::new(vec![], Some(series(1, 0, head, 0)), None),
        MeasureFamily::B => Measure::new(vec![], Some(series(2, 1, head, 0)), None),
        MeasureFamily::D if below => {
            // (2-t)/2 at 1-t, then (1-t) t^k / 2 at (2k+1)(1-t) for k >= 1
            let first = Atom::new(&one - t, (int(2) - t) * half());
            Measure::new(vec![first], Some(series(2, 1, head * half(), 1)), None)
        }
        MeasureFamily::D => {
            let extra = Atom::new(&one - t, half());
            let s = series(2, 1, head * half(), 0);
            if !(extra.location.is_negative() && s.atom(0).location.is_positive()) {
                return Err(Error::Internal("mixture atom collides with the B atoms".into()));
            }
            Measure::new(vec![extra], Some(s), None)
        }
        MeasureFamily::Nu => unreachable!(),
    })
}

fn nu_measure(t: &BigRational) -> Result<Measure> {
    let one = BigRational::one();
    if *t < one {
        return Err(Error::Unsupported(format!(
            "nu_t is only defined for t >= 1, got t = {}",
            fmt_rational(t)
        )));
    }
    if t.is_one() {
        return Ok(Measure::new(vec![], None, Some(GammaDensity { coef: ratio(1, 4), power: 1, scale: int(2) })));
    }
    let s = t - &one;
    // (t-1)/(2t) at 1-t, and (t-1)^2 (2k+1) / (2 t^(k+2)) at (t-1)(2k+1)
    let extra = Atom::new(&one - t, &s / (t * int(2)));
    let series = AtomSeries {
        start: 0,
        scale: s.clone(),
        alpha: 2,
        beta: 1,
        coef: &s * &s / (t * t * int(2)),
        ratio: t.recip(),
        weight_power: 1,
    };
    Ok(Measure::new(vec![extra], Some(series), None))
}

/// Per-`n` comparison of a measure's moment with the expected polynomial value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentRow {
    pub n: usize,
    pub moment: CertifiedMoment,
    pub expected: BigRational,
    pub deviation: BigRational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub family: MeasureFamily,
    pub t: BigRational,
    pub tol: BigRational,
    pub rows: Vec<MomentRow>,
}

impl MomentReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn max_deviation(&self) -> BigRational {
        self.rows.iter().map(|r| r.deviation.clone()).max().unwrap_or_else(BigRational::zero)
    }

    /// True when every moment was computed without truncation and matched
    /// exactly.
    pub fn exact(&self) -> bool {
        self.rows.iter().all(|r| r.moment.bound.is_zero() && r.deviation.is_zero())
    }
}

fn compare(family: MeasureFamily, t: &BigRational, tol: &BigRational, measure: &Measure, expected: Vec<BigRational>) -> Result<MomentReport> {
    let rows = expected
        .into_iter()
        .enumerate()
        .map(|(n, expected)| {
            let moment = measure.moment(n, tol)?;
            let deviation = (&moment.value - &expected).abs();
            let pass = deviation <= tol + &moment.bound;
            Ok(MomentRow { n, moment, expected, deviation, pass })
        })
        .collect::<Result<_>>()?;
    Ok(MomentReport { family, t: t.clone(), tol: tol.clone(), rows })
}

fn polynomial_family(family: MeasureFamily) -> Result<Family> {
    match family {
        MeasureFamily::A => Ok(Family::A),
        MeasureFamily::B => Ok(Family::B),
        MeasureFamily::D => Ok(Family::D),
        MeasureFamily::Nu => Err(Error::Unsupported("use nu_check for nu_t".into())),
    }
}

/// Compare moments `0..=n_max` of the family's measure with `P_n(t)`.
pub fn moment_theorem_check(family: MeasureFamily, t: &BigRational, n_max: usize, tol: &BigRational) -> Result<MomentReport> {
    let polys = eulerian_polys(polynomial_family(family)?, n_max)?;
    let measure = measure_for(family, t)?;
    compare(family, t, tol, &measure, polys.iter().map(|p| p.eval(t)).collect())
}

/// Compare moments `0..=n_max` of `nu_t` with `P^D~_(n+1)(t) / t`, `t >= 1`.
pub fn nu_check(t: &BigRational, n_max: usize, tol: &BigRational) -> Result<MomentReport> {
    let measure = measure_for(MeasureFamily::Nu, t)?;
    let polys = eulerian_polys(Family::Dtilde, n_max + 1)?;
    let expected = polys[1..].iter().map(|p| p.eval(t) / t).collect();
    compare(MeasureFamily::Nu, t, tol, &measure, expected)
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Leading principal minors of orders `1..=m` of the Hankel matrix
/// `(seq[i+j])`. Denominators are cleared first so the elimination runs over
/// the integers.
pub fn hankel_minors(seq: &[BigRational], m: usize) -> Result<Vec<BigRational>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    if seq.len() < 2 * m - 1 {
        return Err(Error::Range(format!(
            "order-{m} Hankel matrix needs {} entries, got {}",
            2 * m - 1,
            seq.len()
        )));
    }
    let used = &seq[..2 * m - 1];
    let lcm = common_denominator(used);
    let scaled: Vec<BigInt> = used.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    Ok((1..=m)
        .map(|k| {
            let matrix = (0..k).map(|i| (0..k).map(|j| scaled[i + j].clone()).collect()).collect();
            BigRational::new(bareiss_determinant(matrix), num_traits::pow(lcm.clone(), k))
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    /// Every minor is strictly positive.
    Positive,
    /// Every minor is nonnegative and at least one vanishes.
    NonNegative,
    /// The minor of this order (1-based) is the first negative one.
    Negative(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelReport {
    pub family: Family,
    pub t: BigRational,
    pub minors: Vec<BigRational>,
    pub positivity: Positivity,
}

impl HankelReport {
    /// All leading principal minors are `>= 0`.
    pub fn passes(&self) -> bool {
        !matches!(self.positivity, Positivity::Negative(_))
    }
}

fn classify(minors: &[BigRational]) -> Positivity {
    if let Some(i) = minors.iter().position(|v| v.is_negative()) {
        Positivity::Negative(i + 1)
    } else if minors.iter().any(Zero::is_zero) {
        Positivity::NonNegative
    } else {
        Positivity::Positive
    }
}

/// `P_0(t), ..., P_(len-1)(t)`
pub fn moment_sequence(family: Family, t: &BigRational, len: usize) -> Result<Vec<BigRational>> {
    if len == 0 {
        return Ok(Vec::new());
    }
    Ok(eulerian_polys(family, len - 1)?.iter().map(|p: &Polynomial| p.eval(t)).collect())
}

/// Hankel minors of orders `1..=m` for the sequence `P_n(t)`.
pub fn positive_definite_check(family: Family, t: &BigRational, m: usize) -> Result<HankelReport> {
    if m == 0 {
        return Err(Error::Range("Hankel order must be >= 1".into()));
    }
    let seq = moment_sequence(family, t, 2 * m - 1)?;
    let minors = hankel_minors(&seq, m)?;
    let positivity = classify(&minors);
    Ok(HankelReport { family, t: t.clone(), minors, positivity })
}

/// A negative Hankel minor for the `D~` polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub t: BigRational,
    pub order: usize,
    pub minor: BigRational,
}

/// Smallest Hankel order `<= max_order` at which `P^D~_n(t)` has a negative
/// leading minor.
pub fn dtilde_not_pd_witness_at(t: &BigRational, max_order: usize) -> Result<Witness> {
    let report = positive_definite_check(Family::Dtilde, t, max_order)?;
    match report.positivity {
        Positivity::Negative(order) => Ok(Witness { t: t.clone(), order, minor: report.minors[order - 1].clone() }),
        _ => Err(Error::SearchExhausted(format!(
            "no negative minor up to order {max_order} at t = {}",
            fmt_rational(t)
        ))),
    }
}

/// Search a fixed grid of `t` values for a negative `D~` Hankel minor.
pub fn dtilde_not_pd_witness() -> Result<Witness> {
    let grid = [ratio(1, 2), int(2), ratio(1, 3), int(3), ratio(1, 4), int(4)];
    grid.iter()
        .find_map(|t| dtilde_not_pd_witness_at(t, 6).ok())
        .ok_or_else(|| Error::SearchExhausted("no negative D~ minor on the search grid".into()))
}

/// Hankel minors of `P^D~_(n+1)(t)/t` for any `t > 0`.
///
/// Only `t >= 1` is covered by a known measure. For `0 < t < 1` the result is
/// exploratory and `conclusive` is false whatever the signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuMinorScan {
    pub t: BigRational,
    pub minors: Vec<BigRational>,
    pub conclusive: bool,
}

pub fn nu_minor_scan(t: &BigRational, m: usize) -> Result<NuMinorScan> {
    if !t.is_positive() {
        return Err(Error::Range("nu minor scan needs t > 0".into()));
    }
    let seq: Vec<BigRational> = moment_sequence(Family::Dtilde, t, 2 * m)?
        .into_iter()
        .skip(1)
        .map(|v| v / t)
        .collect();
    let minors = hankel_minors(&seq, m)?;
    Ok(NuMinorScan { t: t.clone(), minors, conclusive: *t >= BigRational::one() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::eulerian_poly;

    fn tol() -> BigRational {
        ratio(1, 1_000_000_000)
    }

    #[test]
    fn measure_shapes() {
        assert_eq!(measure_for(MeasureFamily::A, &int(0)).unwrap(), Measure::dirac(int(1)));
        let d1 = measure_for(MeasureFamily::D, &int(1)).unwrap();
        assert_eq!(d1.atoms(), &[Atom::new(int(0), half())]);
        assert_eq!(d1.density().unwrap().coef, ratio(1, 4));
        let b2 = measure_for(MeasureFamily::B, &int(2)).unwrap();
        let atoms = b2.atoms_up_to(4);
        let expected: Vec<Atom> = (0..4).map(|k| Atom::new(int(2 * k + 1), ratio(1, 1 << (k + 1)))).collect();
        assert_eq!(atoms, expected);
        assert!(matches!(measure_for(MeasureFamily::Nu, &half()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn first_moment_of_a_half() {
        let m = measure_for(MeasureFamily::A, &half()).unwrap();
        let v = m.moment(1, &tol()).unwrap();
        assert!((v.value - int(1)).abs() <= tol() + v.bound);
    }

    #[test]
    fn gamma_density_moments_are_exact() {
        let b1 = measure_for(MeasureFamily::B, &int(1)).unwrap();
        for n in 0..8u32 {
            let v = b1.moment(n as usize, &tol()).unwrap();
            assert!(v.bound.is_zero());
            let expected = BigRational::from_integer(factorial(n as u64) << n);
            assert_eq!(v.value, expected);
        }
    }

    #[test]
    fn d_third_moment_check() {
        let report = moment_theorem_check(MeasureFamily::D, &ratio(1, 3), 4, &tol()).unwrap();
        assert!(report.passed());
        let expected = eulerian_poly(Family::D, 4).unwrap().eval(&ratio(1, 3));
        assert_eq!(report.rows[4].expected, expected);
    }

    #[test]
    fn dirac_moments() {
        let report = moment_theorem_check(MeasureFamily::D, &int(0), 8, &tol()).unwrap();
        assert!(report.exact());
        assert!(report.rows.iter().all(|r| r.expected.is_one()));
    }

    #[test]
    fn nu_examples() {
        let one = nu_check(&int(1), 2, &tol()).unwrap();
        assert!(one.exact());
        assert_eq!(one.rows[0].expected, int(1));
        assert_eq!(one.rows[2].expected, int(24));
        let two = nu_check(&int(2), 1, &tol()).unwrap();
        assert!(two.passed());
        assert_eq!(two.rows[1].expected, int(4));
        assert!(nu_check(&half(), 2, &tol()).is_err());
    }

    #[test]
    fn tail_bound_requires_contraction() {
        assert!(power_geometric_tail(&half(), 1, 0, 3, 0).is_none());
        assert!(power_geometric_tail(&half(), 1, 1, 10, 1).is_none());
        let b = power_geometric_tail(&half(), 1, 1, 0, 3).unwrap();
        // sum_{k>=3} 2^-k = 1/4, and the bound is exact for a pure geometric tail
        assert_eq!(b, ratio(1, 4));
    }

    #[test]
    fn iteration_cap() {
        let slow = Measure::new(
            vec![],
            Some(AtomSeries { start: 0, scale: int(1), alpha: 1, beta: 1, coef: int(1), ratio: ratio(999_999, 1_000_000), weight_power: 0 }),
            None,
        );
        assert!(matches!(slow.moment_with_cap(4, &tol(), 200), Err(Error::IterationCap(_))));
    }

    #[test]
    fn hankel_examples() {
        let fact: Vec<BigRational> = (0..3).map(|n| BigRational::from_integer(factorial(n))).collect();
        assert_eq!(hankel_minors(&fact, 2).unwrap(), vec![int(1), int(1)]);
        let ones = vec![int(1); 3];
        assert_eq!(hankel_minors(&ones, 2).unwrap(), vec![int(1), int(0)]);
        assert!(hankel_minors(&ones, 3).is_err());
        let b_half = positive_definite_check(Family::B, &half(), 4).unwrap();
        assert_eq!(b_half.positivity, Positivity::Positive);
    }

    #[test]
    fn b_at_one_minors() {
        // Hankel of 2^n n!: 1, 4, 256
        let r = positive_definite_check(Family::B, &int(1), 3).unwrap();
        assert_eq!(r.minors, vec![int(1), int(4), int(256)]);
    }

    #[test]
    fn positivity_examples() {
        assert!(positive_definite_check(Family::A, &int(1), 5).unwrap().passes());
        assert!(positive_definite_check(Family::D, &half(), 5).unwrap().passes());
        let a0 = positive_definite_check(Family::A, &int(0), 3).unwrap();
        assert_eq!(a0.positivity, Positivity::NonNegative);
        assert_eq!(a0.minors, vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn dtilde_witnesses() {
        for t in [half(), int(2)] {
            let w = dtilde_not_pd_witness_at(&t, 4).unwrap();
            assert_eq!(w.order, 2);
            assert_eq!(w.minor, -(&t * &t));
        }
        let w = dtilde_not_pd_witness().unwrap();
        assert_eq!(w.t, half());
    }

    #[test]
    fn nu_scan_labels() {
        assert!(!nu_minor_scan(&half(), 3).unwrap().conclusive);
        assert!(nu_minor_scan(&int(2), 3).unwrap().conclusive);
    }
}
