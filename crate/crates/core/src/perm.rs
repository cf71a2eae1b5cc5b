//! Signed permutations and the brute-force descent histograms.
//!
//! Elements of `B_n` are stored by their images `s(1), ..., s(n)`; the odd
//! extension `s(-k) = -s(k)` is implicit. Enumeration walks the permutations
//! of `{1..n}` in lexicographic order and, for each, the `2^n` sign masks in
//! binary order (bit `i` set means position `i + 1` is negative).

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::triangles::Row;

/// Default cap on the number of group elements a single histogram may visit.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "EULERIAN_ENUM_BUDGET";

pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// The groups that can be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    /// `S_n`, embedded as the sign-free elements of `B_n`.
    S,
    B,
    D,
    /// The coset `B_n \ D_n`.
    Dtilde,
}

impl Group {
    pub fn order(self, n: usize) -> u128 {
        let fact = factorial_u128(n);
        match self {
            Group::S => fact,
            Group::B => fact << n,
            Group::D if n == 0 => 1,
            Group::Dtilde if n == 0 => 0,
            Group::D | Group::Dtilde => fact << (n - 1),
        }
    }

    fn admits(self, negatives: u32) -> bool {
        match self {
            Group::S => negatives == 0,
            Group::B => true,
            Group::D => negatives.is_multiple_of(2),
            Group::Dtilde => negatives % 2 == 1,
        }
    }
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    image: Vec<i32>,
}

impl SignedPermutation {
    /// Validates that the absolute values form a permutation of `{1..n}`.
    pub fn new(image: Vec<i32>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Range(format!("{image:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { image: (1..=n as i32).collect() }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[i32] {
        &self.image
    }

    pub fn negative_count(&self) -> usize {
        self.image.iter().filter(|&&v| v < 0).count()
    }

    /// Number of negative entries mod 2.
    pub fn parity(&self) -> usize {
        self.negative_count() % 2
    }

    pub fn in_d(&self) -> bool {
        self.parity() == 0
    }

    /// `(-s)(k) = -s(k)`
    pub fn negate(&self) -> Self {
        SignedPermutation { image: self.image.iter().map(|v| -v).collect() }
    }

    /// Delete the entry `+-n`, giving an element of `B_(n-1)`.
    pub fn remove_largest(&self) -> Option<Self> {
        let n = self.n() as i32;
        let image: Vec<i32> = self.image.iter().copied().filter(|v| v.abs() != n).collect();
        (!self.image.is_empty()).then_some(SignedPermutation { image })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Number of positions `i` with `seq[i] > seq[i + 1]`.
pub fn descent_count<T: PartialOrd>(seq: &[T]) -> Result<usize> {
    if seq.is_empty() {
        return Err(Error::Range("descent count of an empty sequence".into()));
    }
    Ok(descents(seq))
}

fn descents<T: PartialOrd>(seq: &[T]) -> usize {
    seq.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Descents of `(0, s(1), ..., s(n))`.
pub fn statistic_type_b(sigma: &SignedPermutation) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for &v in &sigma.image {
        if prev > v {
            count += 1;
        }
        prev = v;
    }
    count
}

/// Descents of `(-s(2), s(1), s(2), ..., s(n))`; undefined below `n = 2`.
pub fn statistic_brenti_d(sigma: &SignedPermutation) -> Result<usize> {
    if sigma.n() < 2 {
        return Err(Error::Unsupported(format!(
            "Brenti statistic needs n >= 2, got n = {}",
            sigma.n()
        )));
    }
    let head = -sigma.image[1];
    let count = usize::from(head > sigma.image[0]) + descents(&sigma.image);
    Ok(count)
}

/// Advance to the next permutation in lexicographic order; false after the last.
fn next_permutation(perm: &mut [i32]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&v| v > perm[i]).expect("pivot has a successor");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// The permutation of `{1..n}` with the given lexicographic rank.
fn unrank(n: usize, mut rank: u128) -> Vec<i32> {
    let mut pool: Vec<i32> = (1..=n as i32).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial_u128(i);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Stream over one group, optionally restricted to a range of lexicographic
/// ranks of the underlying unsigned permutation.
#[derive(Debug, Clone)]
pub struct Enumeration {
    group: Group,
    perm: Vec<i32>,
    rank: u128,
    end: u128,
    mask: u64,
}

impl Iterator for Enumeration {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let n = self.perm.len();
        let masks = if self.group == Group::S { 1 } else { 1u64 << n };
        while self.rank < self.end {
            if self.mask == masks {
                self.rank += 1;
                self.mask = 0;
                if self.rank < self.end {
                    next_permutation(&mut self.perm);
                }
                continue;
            }
            let mask = self.mask;
            self.mask += 1;
            if self.group.admits(mask.count_ones()) {
                let image = self
                    .perm
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect();
                return Some(SignedPermutation { image });
            }
        }
        None
    }
}

/// Every element of the group, each exactly once, in the documented order.
pub fn enumerate(group: Group, n: usize) -> Enumeration {
    enumerate_partition(group, n, 0..factorial_u128(n))
}

/// The elements whose unsigned permutation has lexicographic rank in `ranks`.
/// Disjoint ranges partition the group.
pub fn enumerate_partition(group: Group, n: usize, ranks: Range<u128>) -> Enumeration {
    let end = ranks.end.min(factorial_u128(n));
    let start = ranks.start.min(end);
    let perm = if start < end { unrank(n, start) } else { Vec::new() };
    let perm = if perm.is_empty() && n > 0 { (1..=n as i32).collect() } else { perm };
    Enumeration { group, perm, rank: start, end, mask: 0 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Statistic {
    Plain,
    TypeB,
    Brenti,
}

/// Histograms of the statistic split by parity of the number of negatives.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SplitHistogram {
    even: Vec<u64>,
    odd: Vec<u64>,
}

impl SplitHistogram {
    fn zero(n: usize) -> Self {
        SplitHistogram { even: vec![0; n + 1], odd: vec![0; n + 1] }
    }

    fn merge(mut self, other: SplitHistogram) -> Self {
        for (a, b) in self.even.iter_mut().zip(other.even) {
            *a += b;
        }
        for (a, b) in self.odd.iter_mut().zip(other.odd) {
            *a += b;
        }
        self
    }
}

fn histogram_range(stat: Statistic, n: usize, ranks: Range<u128>) -> SplitHistogram {
    let mut hist = SplitHistogram::zero(n);
    if ranks.start >= ranks.end {
        return hist;
    }
    let masks: u64 = if stat == Statistic::Plain { 1 } else { 1 << n };
    let mut perm = unrank(n, ranks.start);
    let mut signed = vec![0i32; n];
    for _ in ranks {
        for mask in 0..masks {
            for (i, (&v, s)) in perm.iter().zip(signed.iter_mut()).enumerate() {
                *s = if mask >> i & 1 == 1 { -v } else { v };
            }
            let count = match stat {
                Statistic::Plain => descents(&signed),
                Statistic::TypeB => usize::from(n > 0 && signed[0] < 0) + descents(&signed),
                Statistic::Brenti => usize::from(-signed[1] > signed[0]) + descents(&signed),
            };
            if mask.count_ones() % 2 == 0 {
                hist.even[count] += 1;
            } else {
                hist.odd[count] += 1;
            }
        }
        next_permutation(&mut perm);
    }
    hist
}

/// Split the `n!` permutation ranks into contiguous chunks and merge the
/// partial histograms in order, so the result never depends on scheduling.
fn histogram(stat: Statistic, n: usize) -> SplitHistogram {
    let total = factorial_u128(n);
    let chunks: u128 = if total >= 5040 { 64 } else { 1 };
    let size = total.div_ceil(chunks);
    (0..chunks)
        .into_par_iter()
        .map(|c| histogram_range(stat, n, (c * size).min(total)..((c + 1) * size).min(total)))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(SplitHistogram::zero(n), SplitHistogram::merge)
}

fn to_row(counts: &[u64]) -> Row {
    counts.iter().map(|&c| BigInt::from(c)).collect()
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::Budget { needed, budget })
    } else {
        Ok(())
    }
}

/// Row `n` of the family's triangle by exhaustive enumeration.
///
/// `A` counts descents over `S_n` without a leading zero; `B`, `D` and `D~`
/// use the type B statistic on the matching part of `B_n`; `BrentiD` uses the
/// Brenti statistic on `D_n`, with rows 0 and 1 fixed to `[1]` and `[1, 1]`.
pub fn brute_triangle(family: Family, n: usize, budget: u128) -> Result<Row> {
    match family {
        Family::A => {
            check_budget(Group::S.order(n), budget)?;
            let hist = histogram(Statistic::Plain, n);
            Ok(to_row(&hist.even))
        }
        Family::B => {
            let (d, t) = brute_split_d(n, budget)?;
            Ok(d.into_iter().zip(t).map(|(a, b)| a + b).collect())
        }
        Family::D => Ok(brute_split_d(n, budget)?.0),
        Family::Dtilde => Ok(brute_split_d(n, budget)?.1),
        Family::BrentiD => match n {
            0 => Ok(to_row(&[1])),
            1 => Ok(to_row(&[1, 1])),
            _ => {
                check_budget(Group::B.order(n), budget)?;
                Ok(to_row(&histogram(Statistic::Brenti, n).even))
            }
        },
    }
}

/// `(D row, D~ row)` from one pass over `B_n`.
pub fn brute_split_d(n: usize, budget: u128) -> Result<(Row, Row)> {
    check_budget(Group::B.order(n), budget)?;
    let hist = histogram(Statistic::TypeB, n);
    Ok((to_row(&hist.even), to_row(&hist.odd)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(enumerate(Group::B, 2).count(), 8);
        assert_eq!(enumerate(Group::D, 3).count(), 24);
        assert_eq!(enumerate(Group::S, 4).count(), 24);
        assert_eq!(enumerate(Group::D, 0).count(), 1);
        assert_eq!(enumerate(Group::Dtilde, 0).count(), 0);
        assert_eq!(enumerate(Group::B, 0).count(), 1);
        for n in 0..6 {
            for g in [Group::S, Group::B, Group::D, Group::Dtilde] {
                assert_eq!(enumerate(g, n).count() as u128, g.order(n), "{g:?} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic_then_masks() {
        let first: Vec<_> = enumerate(Group::B, 2).map(|s| s.image().to_vec()).collect();
        assert_eq!(
            first,
            vec![
                vec![1, 2],
                vec![-1, 2],
                vec![1, -2],
                vec![-1, -2],
                vec![2, 1],
                vec![-2, 1],
                vec![2, -1],
                vec![-2, -1],
            ]
        );
    }

    #[test]
    fn partitions_cover_the_group() {
        let whole: Vec<_> = enumerate(Group::D, 4).collect();
        let mut parts = Vec::new();
        for r in [0..5, 5..17, 17..24] {
            parts.extend(enumerate_partition(Group::D, 4, r));
        }
        assert_eq!(whole, parts);
    }

    #[test]
    fn descents() {
        assert_eq!(descent_count(&[0, -1, -2, -3]).unwrap(), 3);
        assert_eq!(descent_count(&[0, 1, 2, 3]).unwrap(), 0);
        assert_eq!(descent_count(&[0, 2, -1, -2]).unwrap(), 2);
        assert_eq!(descent_count(&[0.5, 0.25]).unwrap(), 1);
        assert!(descent_count::<i32>(&[]).is_err());
    }

    #[test]
    fn type_b_statistic() {
        assert_eq!(statistic_type_b(&SignedPermutation::identity(5)), 0);
        assert_eq!(statistic_type_b(&SignedPermutation::identity(5).negate()), 5);
        let s = SignedPermutation::new(vec![2, -1]).unwrap();
        assert_eq!(statistic_type_b(&s), 1);
    }

    #[test]
    fn brenti_statistic() {
        let id = SignedPermutation::new(vec![1, 2]).unwrap();
        assert_eq!(statistic_brenti_d(&id).unwrap(), 0);
        let neg = SignedPermutation::new(vec![-1, -2]).unwrap();
        assert_eq!(statistic_brenti_d(&neg).unwrap(), 2);
        assert!(statistic_brenti_d(&SignedPermutation::identity(1)).is_err());
    }

    #[test]
    fn invalid_signed_permutations() {
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 1]).is_err());
        assert!(SignedPermutation::new(vec![3, 1]).is_err());
        assert!(SignedPermutation::new(vec![-2, 1]).is_ok());
    }

    #[test]
    fn brute_rows() {
        let ints = |v: &[u64]| to_row(v);
        assert_eq!(brute_triangle(Family::B, 3, DEFAULT_BUDGET).unwrap(), ints(&[1, 23, 23, 1]));
        assert_eq!(brute_triangle(Family::D, 4, DEFAULT_BUDGET).unwrap(), ints(&[1, 36, 118, 36, 1]));
        assert_eq!(brute_triangle(Family::BrentiD, 3, DEFAULT_BUDGET).unwrap(), ints(&[1, 11, 11, 1]));
        assert_eq!(brute_triangle(Family::BrentiD, 4, DEFAULT_BUDGET).unwrap(), ints(&[1, 44, 102, 44, 1]));
        assert_eq!(brute_triangle(Family::A, 0, DEFAULT_BUDGET).unwrap(), ints(&[1]));
        assert_eq!(brute_triangle(Family::Dtilde, 0, DEFAULT_BUDGET).unwrap(), ints(&[0]));
    }

    #[test]
    fn budget_is_enforced() {
        let err = brute_triangle(Family::B, 5, 100).unwrap_err();
        assert_eq!(err, Error::Budget { needed: 3840, budget: 100 });
        assert!(err.is_resource());
        assert!(brute_triangle(Family::A, 5, 120).is_ok());
        assert!(brute_triangle(Family::BrentiD, 1, 0).is_ok());
    }

    #[test]
    fn chunked_histogram_matches_single_pass() {
        let n = 7;
        let single = histogram_range(Statistic::TypeB, n, 0..factorial_u128(n));
        assert_eq!(histogram(Statistic::TypeB, n), single);
    }

    #[test]
    fn stream_agrees_with_fast_histogram() {
        for n in 2..6 {
            let mut d = vec![0u64; n + 1];
            for s in enumerate(Group::D, n) {
                d[statistic_brenti_d(&s).unwrap()] += 1;
            }
            assert_eq!(to_row(&d), brute_triangle(Family::BrentiD, n, DEFAULT_BUDGET).unwrap());
        }
    }
}
