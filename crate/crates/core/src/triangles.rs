//! Exact construction of the Eulerian triangles.
//!
//! Each family has a row iterator that builds row `n` from row `n - 1` (a pair
//! of rows for the coupled `D`/`D~` recurrence), so building the first `N`
//! rows costs one pass. Closed forms and the derivation of `D` from `B` give
//! independent routes to the same entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, sign};
use crate::error::{Error, Result};
use crate::family::{Family, Route};
use crate::perm;

pub type Row = Vec<BigInt>;

/// A family tag plus rows `0..=n_max`, row `n` holding `T(n,0), ..., T(n,n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    family: Family,
    rows: Vec<Row>,
}

impl Triangle {
    /// Wrap precomputed rows, checking the shape and sign invariants.
    pub fn new(family: Family, rows: Vec<Row>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Range(format!(
                    "row {n} of {family} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
            if let Some(k) = row.iter().position(|v| v.is_negative()) {
                return Err(Error::Range(format!("{family}({n},{k}) is negative")));
            }
        }
        Ok(Triangle { family, rows })
    }

    /// Build rows `0..=n_max` through the given route.
    ///
    /// The brute-force route enumerates the underlying group row by row and
    /// fails with [`Error::Budget`] once a row would exceed `budget` elements.
    pub fn build(family: Family, route: Route, n_max: usize, budget: u128) -> Result<Self> {
        if !route.supports(family) {
            return Err(Error::Unsupported(format!(
                "route `{route}` is not available for family {family}"
            )));
        }
        let rows: Vec<Row> = match route {
            Route::Recurrence => match family {
                Family::A => ARows::new().take(n_max + 1).collect(),
                Family::B => BRows::new().take(n_max + 1).collect(),
                Family::D => CoupledDRows::new().take(n_max + 1).map(|(d, _)| d).collect(),
                Family::Dtilde => CoupledDRows::new().take(n_max + 1).map(|(_, t)| t).collect(),
                Family::BrentiD => unreachable!(),
            },
            Route::ClosedForm => (0..=n_max)
                .map(|n| {
                    (0..=n)
                        .map(|k| match family {
                            Family::A => closed_form_a(n, k),
                            _ => closed_form_b(n, k),
                        })
                        .collect::<Result<Row>>()
                })
                .collect::<Result<_>>()?,
            Route::Derived => (0..=n_max)
                .map(|n| (0..=n).map(|k| d_from_b(n, k, family)).collect::<Result<Row>>())
                .collect::<Result<_>>()?,
            Route::BruteForce => (0..=n_max)
                .map(|n| perm::brute_triangle(family, n, budget))
                .collect::<Result<_>>()?,
        };
        Triangle::new(family, rows)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn row(&self, n: usize) -> Result<&[BigInt]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Range(format!("row {n} not computed (n_max = {})", self.n_max())))
    }

    /// Entry `T(n,k)`. Indices outside `0..=n` are an error, never zero.
    pub fn get(&self, n: usize, k: usize) -> Result<&BigInt> {
        self.row(n)?
            .get(k)
            .ok_or_else(|| Error::Range(format!("k = {k} outside 0..={n}")))
    }

    /// Check the boundary values and row sums for the family.
    pub fn check_invariants(&self) -> Result<()> {
        for (n, row) in self.rows.iter().enumerate() {
            let fail = |what: &str| Err(Error::Internal(format!("{} row {n}: {what}", self.family)));
            let even = n % 2 == 0;
            let (first, last) = (&row[0], &row[n]);
            let boundary_ok = match self.family {
                Family::A => first.is_one() && (n == 0 || last.is_zero()),
                Family::B => first.is_one() && last.is_one(),
                Family::D => first.is_one() && (*last == BigInt::from(u8::from(even))),
                Family::Dtilde => first.is_zero() && (*last == BigInt::from(u8::from(!even))),
                Family::BrentiD => first.is_one() && last.is_one(),
            };
            if !boundary_ok {
                return fail("boundary values");
            }
            if let Some(expected) = row_sum(self.family, n) {
                if row.iter().sum::<BigInt>() != expected {
                    return fail("row sum");
                }
            }
        }
        Ok(())
    }
}

/// Expected row sum: `n!`, `2^n n!`, and `2^(n-1) n!` for the type D halves
/// (`n >= 1`). `None` where no closed value applies.
pub fn row_sum(family: Family, n: usize) -> Option<BigInt> {
    let n64 = n as u64;
    let pow2 = |e: u64| BigInt::one() << e;
    match family {
        Family::A => Some(factorial(n64)),
        Family::B => Some(pow2(n64) * factorial(n64)),
        Family::D | Family::Dtilde if n >= 1 => Some(pow2(n64 - 1) * factorial(n64)),
        Family::D => Some(BigInt::one()),
        Family::Dtilde => Some(BigInt::zero()),
        // rows 0 and 1 are fixed conventions, not histograms over D_n
        Family::BrentiD if n >= 2 => Some(pow2(n64 - 1) * factorial(n64)),
        Family::BrentiD => None,
    }
}

/// Rows of the type A triangle, starting at `n = 0`.
#[derive(Debug, Clone, Default)]
pub struct ARows {
    prev: Option<Row>,
}

impl ARows {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for ARows {
    type Item = Row;

    fn next(&mut self) -> Option<Row> {
        let row = match &self.prev {
            None => vec![BigInt::one()],
            Some(prev) => {
                let n = prev.len();
                let mut row = Vec::with_capacity(n + 1);
                row.push(BigInt::one());
                for k in 1..n {
                    row.push((n - k) * &prev[k - 1] + (k + 1) * &prev[k]);
                }
                row.push(BigInt::zero());
                row
            }
        };
        self.prev = Some(row.clone());
        Some(row)
    }
}

/// Rows of the type B triangle, starting at `n = 0`.
#[derive(Debug, Clone, Default)]
pub struct BRows {
    prev: Option<Row>,
}

impl BRows {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for BRows {
    type Item = Row;

    fn next(&mut self) -> Option<Row> {
        let row = match &self.prev {
            None => vec![BigInt::one()],
            Some(prev) => {
                let n = prev.len();
                let mut row = Vec::with_capacity(n + 1);
                row.push(BigInt::one());
                for k in 1..n {
                    row.push((2 * n - 2 * k + 1) * &prev[k - 1] + (2 * k + 1) * &prev[k]);
                }
                row.push(BigInt::one());
                row
            }
        };
        self.prev = Some(row.clone());
        Some(row)
    }
}

fn d_boundary(n: usize) -> (Row, Row) {
    let even = n.is_multiple_of(2);
    let mut d = vec![BigInt::zero(); n + 1];
    let mut t = vec![BigInt::zero(); n + 1];
    d[0] = BigInt::one();
    if even {
        d[n] = BigInt::one();
    } else {
        t[n] = BigInt::one();
    }
    (d, t)
}

/// Pairs `(D row, D~ row)` from the coupled four-term recurrence.
#[derive(Debug, Clone, Default)]
pub struct CoupledDRows {
    prev: Option<(Row, Row)>,
}

impl CoupledDRows {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for CoupledDRows {
    type Item = (Row, Row);

    fn next(&mut self) -> Option<(Row, Row)> {
        let n = self.prev.as_ref().map_or(0, |(d, _)| d.len());
        let (mut d, mut t) = d_boundary(n);
        if let Some((pd, pt)) = &self.prev {
            for k in 1..n {
                d[k] = (k + 1) * &pd[k] + (n - k) * &pd[k - 1] + k * &pt[k] + (n - k + 1) * &pt[k - 1];
                t[k] = (k + 1) * &pt[k] + (n - k) * &pt[k - 1] + k * &pd[k] + (n - k + 1) * &pd[k - 1];
            }
        }
        self.prev = Some((d.clone(), t.clone()));
        Some((d, t))
    }
}

/// Rows of `D` or `D~` alone, each from its own three-term recurrence with a
/// signed binomial correction.
#[derive(Debug, Clone)]
pub struct IndependentDRows {
    complementary: bool,
    prev: Option<Row>,
}

impl IndependentDRows {
    pub fn new(family: Family) -> Result<Self> {
        let complementary = match family {
            Family::D => false,
            Family::Dtilde => true,
            other => return Err(Error::Unsupported(format!("independent D recurrence for {other}"))),
        };
        Ok(IndependentDRows { complementary, prev: None })
    }
}

impl Iterator for IndependentDRows {
    type Item = Row;

    fn next(&mut self) -> Option<Row> {
        let n = self.prev.as_ref().map_or(0, Vec::len);
        let (d, t) = d_boundary(n);
        let mut row = if self.complementary { t } else { d };
        if let Some(prev) = &self.prev {
            for k in 1..n {
                let correction = binomial(n as u64 - 1, k as u64 - 1) * sign(k as u64);
                let base = (2 * k + 1) * &prev[k] + (2 * n - 2 * k + 1) * &prev[k - 1];
                row[k] = if self.complementary { base - correction } else { base + correction };
            }
        }
        self.prev = Some(row.clone());
        Some(row)
    }
}

pub fn row_a(n: usize) -> Row {
    ARows::new().nth(n).expect("row iterator is infinite")
}

pub fn row_b(n: usize) -> Row {
    BRows::new().nth(n).expect("row iterator is infinite")
}

pub fn coupled_rows_d(n: usize) -> (Row, Row) {
    CoupledDRows::new().nth(n).expect("row iterator is infinite")
}

pub fn independent_row_d(n: usize, family: Family) -> Result<Row> {
    Ok(IndependentDRows::new(family)?.nth(n).expect("row iterator is infinite"))
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::Range(format!("k = {k} outside 0..={n}")))
    } else {
        Ok(())
    }
}

/// `sum_{j<=k} (-1)^(k-j) C(n+1, k-j) f(j)^n`
fn alternating_closed_form(n: usize, k: usize, base: impl Fn(u64) -> u64) -> BigInt {
    (0..=k as u64)
        .map(|j| {
            let term = binomial(n as u64 + 1, k as u64 - j) * num_traits::pow(BigInt::from(base(j)), n);
            term * sign(k as u64 - j)
        })
        .sum()
}

pub fn closed_form_a(n: usize, k: usize) -> Result<BigInt> {
    check_k(n, k)?;
    Ok(alternating_closed_form(n, k, |j| j + 1))
}

pub fn closed_form_b(n: usize, k: usize) -> Result<BigInt> {
    check_k(n, k)?;
    Ok(alternating_closed_form(n, k, |j| 2 * j + 1))
}

/// `D(n,k) = (B(n,k) + (-1)^k C(n,k)) / 2`, and `D~` with the sign flipped.
pub fn d_from_b(n: usize, k: usize, family: Family) -> Result<BigInt> {
    check_k(n, k)?;
    let b = closed_form_b(n, k)?;
    let signed = binomial(n as u64, k as u64) * sign(k as u64);
    let twice = match family {
        Family::D => b + signed,
        Family::Dtilde => b - signed,
        other => return Err(Error::Unsupported(format!("derivation from B for {other}"))),
    };
    if twice.is_odd() {
        return Err(Error::Internal(format!("B({n},{k}) +- C({n},{k}) is odd")));
    }
    Ok(twice / 2)
}

/// `D(n,k) - D~(n,k) = (-1)^k C(n,k)` for every `k`.
pub fn difference_check(n: usize) -> bool {
    let (d, t) = coupled_rows_d(n);
    (0..=n).all(|k| &d[k] - &t[k] == binomial(n as u64, k as u64) * sign(k as u64))
}

/// Negation symmetry: palindromic rows for even `n`, `D` reversed onto `D~`
/// for odd `n`.
pub fn symmetry_check_d(n: usize) -> bool {
    let (d, t) = coupled_rows_d(n);
    (0..=n).all(|k| {
        if n.is_multiple_of(2) {
            d[k] == d[n - k] && t[k] == t[n - k]
        } else {
            d[k] == t[n - k] && t[k] == d[n - k]
        }
    })
}

/// `A(n,k) = A(n, n-k-1)` for `n >= 1`, `0 <= k <= n-1`.
pub fn symmetry_check_a(n: usize) -> bool {
    let row = row_a(n);
    n == 0 || (0..n).all(|k| row[k] == row[n - 1 - k])
}

/// Non-decreasing up to some peak index and non-increasing after it.
pub fn is_unimodal(row: &[BigInt]) -> bool {
    let mut i = 0;
    while i + 1 < row.len() && row[i] <= row[i + 1] {
        i += 1;
    }
    while i + 1 < row.len() && row[i] >= row[i + 1] {
        i += 1;
    }
    i + 1 >= row.len()
}

/// The two diagonal directions scanned for monotonicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diagonal {
    /// `T(n+k, k)` for `n = 0, 1, ...`
    FixedColumn,
    /// `T(n+k, n)` for `n = 0, 1, ...`
    FixedCoColumn,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalViolation {
    pub family: Family,
    pub diagonal: Diagonal,
    pub k: usize,
    /// First index of the failing adjacent pair.
    pub n: usize,
    pub values: (BigInt, BigInt),
}

/// Empirical evidence for the unimodality and diagonal-monotonicity
/// conjectures on the `D` and `D~` triangles. This is never a proof.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n_max: usize,
    pub rows_scanned: usize,
    pub diagonals_scanned: usize,
    /// `(family, n)` for each row that is not unimodal.
    pub unimodality_violations: Vec<(Family, usize)>,
    /// Adjacent diagonal pairs that fail `a < b`.
    pub strict_violations: Vec<DiagonalViolation>,
    /// Adjacent diagonal pairs that fail `a <= b`.
    pub weak_violations: Vec<DiagonalViolation>,
}

impl ConjectureReport {
    pub fn is_clean(&self) -> bool {
        self.unimodality_violations.is_empty() && self.strict_violations.is_empty() && self.weak_violations.is_empty()
    }
}

pub fn scan_conjectures(n_max: usize) -> Result<ConjectureReport> {
    if n_max < 1 {
        return Err(Error::Range("conjecture scan needs n_max >= 1".into()));
    }
    let (d_rows, t_rows): (Vec<Row>, Vec<Row>) = CoupledDRows::new().take(n_max + 1).unzip();
    let mut report = ConjectureReport { n_max, ..Default::default() };
    for (family, rows) in [(Family::D, &d_rows), (Family::Dtilde, &t_rows)] {
        for (n, row) in rows.iter().enumerate() {
            report.rows_scanned += 1;
            if !is_unimodal(row) {
                report.unimodality_violations.push((family, n));
            }
        }
        for k in 1..=n_max {
            for diagonal in [Diagonal::FixedColumn, Diagonal::FixedCoColumn] {
                let seq: Vec<&BigInt> = (0..=n_max - k)
                    .map(|n| match diagonal {
                        Diagonal::FixedColumn => &rows[n + k][k],
                        Diagonal::FixedCoColumn => &rows[n + k][n],
                    })
                    .collect();
                report.diagonals_scanned += 1;
                for (n, pair) in seq.windows(2).enumerate() {
                    let violation = || DiagonalViolation {
                        family,
                        diagonal,
                        k,
                        n,
                        values: (pair[0].clone(), pair[1].clone()),
                    };
                    if pair[0] >= pair[1] {
                        report.strict_violations.push(violation());
                    }
                    if pair[0] > pair[1] {
                        report.weak_violations.push(violation());
                    }
                }
            }
        }
    }
    Ok(report)
}
