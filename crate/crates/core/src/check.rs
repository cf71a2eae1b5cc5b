//! Verification suites over the whole library.
//!
//! Each suite runs a fixed, ordered list of named checks and records every
//! failing `(n, k, t, x)` tuple. Reports contain no timings or addresses, so
//! two runs with the same configuration render byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{fmt_rational, int, ratio};
use crate::error::{Error, Result};
use crate::family::{Family, Route};
use crate::moments::{
    self, dtilde_not_pd_witness_at, measure_for, moment_theorem_check, nu_check, positive_definite_check,
    power_geometric_tail, Atom, MeasureFamily, MomentReport, Positivity,
};
use crate::perm;
use crate::poly::{self, eulerian_polys, Polynomial};
use crate::reference;
use crate::triangles::{self, CoupledDRows, IndependentDRows, Row, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Triangles,
    Identities,
    Moments,
    Conjectures,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "triangles" => Ok(Suite::Triangles),
            "identities" => Ok(Suite::Identities),
            "moments" => Ok(Suite::Moments),
            "conjectures" => Ok(Suite::Conjectures),
            _ => Err(Error::Parse(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub triangle_n_max: usize,
    pub brute_n_max: usize,
    pub identity_n_max: usize,
    pub worpitzky_n_max: usize,
    pub worpitzky_x: Vec<BigRational>,
    pub egf_n_max: usize,
    pub pde_order: usize,
    pub egf_t: Vec<BigRational>,
    pub moment_n_max: usize,
    pub moment_t: Vec<BigRational>,
    pub nu_t: Vec<BigRational>,
    pub hankel_t: Vec<BigRational>,
    pub hankel_order: usize,
    pub conjecture_n_max: usize,
    pub tol: BigRational,
    pub budget: u128,
}

impl Default for CheckConfig {
    fn default() -> Self {
        let mut worpitzky_x: Vec<BigRational> = (-6..=6).map(int).collect();
        worpitzky_x.extend([ratio(1, 2), ratio(-3, 2)]);
        CheckConfig {
            triangle_n_max: 30,
            brute_n_max: 8,
            identity_n_max: 20,
            worpitzky_n_max: 15,
            worpitzky_x,
            egf_n_max: 12,
            pde_order: 8,
            egf_t: vec![int(0), ratio(1, 3), ratio(1, 2), int(2), ratio(7, 2)],
            moment_n_max: 10,
            moment_t: vec![ratio(1, 4), ratio(1, 2), ratio(3, 4), int(1), int(2), int(3)],
            nu_t: vec![int(1), int(2), int(3)],
            hankel_t: vec![ratio(1, 2), int(1), int(2)],
            hankel_order: 6,
            conjecture_n_max: 25,
            tol: BigRational::new(BigInt::one(), BigInt::from(10).pow(9)),
            budget: perm::DEFAULT_BUDGET,
        }
    }
}

impl CheckConfig {
    /// Use one bound for every `n` range except the brute-force one.
    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.triangle_n_max = n_max;
        self.identity_n_max = n_max;
        self.worpitzky_n_max = n_max;
        self.egf_n_max = n_max;
        self.moment_n_max = n_max;
        self.conjecture_n_max = n_max.max(1);
        self
    }

    /// Use one list of `t` values everywhere; `nu` keeps the values `>= 1`.
    pub fn with_t(mut self, ts: Vec<BigRational>) -> Self {
        self.nu_t = ts.iter().filter(|t| **t >= BigRational::one()).cloned().collect();
        self.egf_t = ts.clone();
        self.moment_t = ts.clone();
        self.hankel_t = ts;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Failure {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub t: Option<String>,
    pub x: Option<String>,
    pub detail: String,
}

impl Failure {
    fn new(detail: impl Into<String>) -> Self {
        Failure { detail: detail.into(), ..Default::default() }
    }

    fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn t(mut self, t: &BigRational) -> Self {
        self.t = Some(fmt_rational(t));
        self
    }

    fn x(mut self, x: &BigRational) -> Self {
        self.x = Some(fmt_rational(x));
        self
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(t) = &self.t {
            parts.push(format!("t={t}"));
        }
        if let Some(x) = &self.x {
            parts.push(format!("x={x}"));
        }
        parts.push(self.detail.clone());
        parts.join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub identity: String,
    pub scope: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl CheckOutcome {
    fn new(suite: &'static str, identity: impl Into<String>, scope: impl Into<String>) -> Self {
        CheckOutcome {
            suite,
            identity: identity.into(),
            scope: scope.into(),
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn find(&self, identity: &str) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.identity == identity)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "{status} {}/{} cases={} [{}]", o.suite, o.identity, o.cases, o.scope).unwrap();
            for note in &o.notes {
                writeln!(out, "  note: {note}").unwrap();
            }
            for f in &o.failures {
                writeln!(out, "  fail: {}", f.render()).unwrap();
            }
        }
        let failed = self.failed().count();
        writeln!(
            out,
            "SUMMARY checks={} passed={} failed={}",
            self.outcomes.len(),
            self.outcomes.len() - failed,
            failed
        )
        .unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        let checks: Vec<Value> = self
            .outcomes
            .iter()
            .map(|o| {
                json!({
                    "suite": o.suite,
                    "identity": o.identity,
                    "scope": o.scope,
                    "cases": o.cases,
                    "passed": o.passed(),
                    "notes": o.notes,
                    "failures": o.failures.iter().map(|f| json!({
                        "n": f.n, "k": f.k, "t": f.t, "x": f.x, "detail": f.detail,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&json!({ "passed": self.passed(), "checks": checks }))
            .expect("report serializes");
        out.push('\n');
        out
    }
}

pub fn run_suite(suite: Suite, config: &CheckConfig) -> Result<CheckReport> {
    let mut outcomes = Vec::new();
    if matches!(suite, Suite::All | Suite::Triangles) {
        outcomes.extend(triangle_checks(config)?);
    }
    if matches!(suite, Suite::All | Suite::Identities) {
        outcomes.extend(identity_checks(config)?);
    }
    if matches!(suite, Suite::All | Suite::Moments) {
        outcomes.extend(moment_checks(config)?);
    }
    if matches!(suite, Suite::All | Suite::Conjectures) {
        outcomes.extend(conjecture_checks(config)?);
    }
    Ok(CheckReport { outcomes })
}

fn compare_rows(outcome: &mut CheckOutcome, n: usize, got: &[BigInt], want: &[BigInt], what: &str) {
    if got.len() != want.len() {
        outcome.expect(false, || Failure::new(format!("{what}: row lengths {} vs {}", got.len(), want.len())).n(n));
        return;
    }
    for (k, (a, b)) in got.iter().zip(want).enumerate() {
        outcome.expect(a == b, || Failure::new(format!("{what}: {a} != {b}")).n(n).k(k));
    }
}

fn published(family: Family) -> Vec<Row> {
    reference::rows(family)
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

const SUITE_TRIANGLES: &str = "triangles";
const SUITE_IDENTITIES: &str = "identities";
const SUITE_MOMENTS: &str = "moments";
const SUITE_CONJECTURES: &str = "conjectures";

/// Published rows for every family via the recurrence and brute-force routes.
/// `BrentiD` has no recurrence, so only its brute-force rows are compared.
pub fn published_rows_check(route: Route, budget: u128) -> Result<CheckOutcome> {
    let mut o = CheckOutcome::new(
        SUITE_TRIANGLES,
        format!("published_rows_{}", route.name()),
        "A rows 0..5; B, D, Dtilde, BrentiD rows 0..4",
    );
    for family in Family::ALL {
        if !route.supports(family) {
            o.notes.push(format!("{family} has no {} route", route.name()));
            continue;
        }
        let want = published(family);
        let tri = Triangle::build(family, route, want.len() - 1, budget)?;
        for (n, row) in want.iter().enumerate() {
            compare_rows(&mut o, n, tri.row(n)?, row, &format!("{family} {}", route.name()));
        }
    }
    Ok(o)
}

fn triangle_checks(c: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let n_max = c.triangle_n_max;
    let scope = format!("n <= {n_max}");
    let mut out = vec![
        published_rows_check(Route::Recurrence, c.budget)?,
        published_rows_check(Route::BruteForce, c.budget)?,
    ];

    let a = Triangle::build(Family::A, Route::Recurrence, n_max, 0)?;
    let b = Triangle::build(Family::B, Route::Recurrence, n_max, 0)?;
    let d = Triangle::build(Family::D, Route::Recurrence, n_max, 0)?;
    let dt = Triangle::build(Family::Dtilde, Route::Recurrence, n_max, 0)?;

    let mut o = CheckOutcome::new(SUITE_TRIANGLES, "closed_form_equals_recurrence", scope.clone());
    for (tri, route_family) in [(&a, Family::A), (&b, Family::B)] {
        let closed = Triangle::build(route_family, Route::ClosedForm, n_max, 0)?;
        for n in 0..=n_max {
            compare_rows(&mut o, n, closed.row(n)?, tri.row(n)?, &format!("{route_family} closed form"));
        }
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_TRIANGLES, "d_three_routes_agree", scope.clone());
    for (tri, family) in [(&d, Family::D), (&dt, Family::Dtilde)] {
        let derived = Triangle::build(family, Route::Derived, n_max, 0)?;
        let independent: Vec<Row> = IndependentDRows::new(family)?.take(n_max + 1).collect();
        for (n, row) in independent.iter().enumerate() {
            compare_rows(&mut o, n, row, tri.row(n)?, &format!("{family} independent recurrence"));
            compare_rows(&mut o, n, derived.row(n)?, tri.row(n)?, &format!("{family} from B"));
        }
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_TRIANGLES, "d_plus_dtilde_is_b", scope.clone());
    for n in 0..=n_max {
        let sum: Row = d.row(n)?.iter().zip(dt.row(n)?).map(|(x, y)| x + y).collect();
        compare_rows(&mut o, n, &sum, b.row(n)?, "D + Dtilde vs B");
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_TRIANGLES, "row_sums_and_boundaries", scope.clone());
    for tri in [&a, &b, &d, &dt] {
        for n in 0..=n_max {
            let sum: BigInt = tri.row(n)?.iter().sum();
            let want = triangles::row_sum(tri.family(), n).expect("analytic families have row sums");
            o.expect(sum == want, || Failure::new(format!("{} row sum {sum} != {want}", tri.family())).n(n));
        }
        let boundary = tri.check_invariants();
        o.expect(boundary.is_ok(), || Failure::new(format!("{:?}", boundary.err())));
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_TRIANGLES, "a_symmetry", format!("1 <= n <= {n_max}"));
    for n in 1..=n_max {
        let row = a.row(n)?;
        for k in 0..n {
            o.expect(row[k] == row[n - 1 - k], || Failure::new("A(n,k) != A(n,n-k-1)").n(n).k(k));
        }
    }
    out.push(o);

    let brute_max = c.brute_n_max;
    let mut o = CheckOutcome::new(SUITE_TRIANGLES, "brute_force_oracle", format!("S_n, B_n, D_n, Dtilde_n for n <= {brute_max}"));
    let analytic = |tri: &Triangle, n: usize| -> Result<Row> {
        Ok(if n <= n_max { tri.row(n)?.to_vec() } else { tri_row(tri.family(), n) })
    };
    for n in 0..=brute_max {
        let s_row = perm::brute_triangle(Family::A, n, c.budget)?;
        compare_rows(&mut o, n, &s_row, &analytic(&a, n)?, "S_n histogram");
        let (d_row, t_row) = perm::brute_split_d(n, c.budget)?;
        let b_row: Row = d_row.iter().zip(&t_row).map(|(x, y)| x + y).collect();
        compare_rows(&mut o, n, &b_row, &analytic(&b, n)?, "B_n histogram");
        compare_rows(&mut o, n, &d_row, &analytic(&d, n)?, "D_n histogram");
        compare_rows(&mut o, n, &t_row, &analytic(&dt, n)?, "Dtilde_n histogram");
    }
    out.push(o);
    Ok(out)
}

fn tri_row(family: Family, n: usize) -> Row {
    match family {
        Family::A => triangles::row_a(n),
        Family::B => triangles::row_b(n),
        Family::D => triangles::coupled_rows_d(n).0,
        _ => triangles::coupled_rows_d(n).1,
    }
}

fn identity_checks(c: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let n_max = c.identity_n_max;
    let scope = format!("n <= {n_max}");

    let w_max = c.worpitzky_n_max;
    let xs: Vec<String> = c.worpitzky_x.iter().map(fmt_rational).collect();
    for family in Family::ANALYTIC {
        let mut o = CheckOutcome::new(
            SUITE_IDENTITIES,
            format!("worpitzky_{family}"),
            format!("n <= {w_max}, x in {{{}}}", xs.join(",")),
        );
        for n in 0..=w_max {
            for x in &c.worpitzky_x {
                let (lhs, rhs) = poly::worpitzky(family, n, x)?;
                o.expect(lhs == rhs, || {
                    Failure::new(format!("{} != {}", fmt_rational(&lhs), fmt_rational(&rhs))).n(n).x(x)
                });
            }
        }
        out.push(o);
    }

    let mut o = CheckOutcome::new(SUITE_IDENTITIES, "binomial_alternating_sum", format!("n <= {n_max}, Worpitzky x values"));
    for n in 0..=n_max {
        for x in &c.worpitzky_x {
            o.expect(poly::binomial_alternating_identity_check(n, x), || Failure::new("sum != (-1)^n").n(n).x(x));
        }
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_IDENTITIES, "a_b_polynomial_relation", scope.clone());
    for n in 0..=n_max {
        o.expect(poly::ab_relation_check(n), || Failure::new("polynomial identity fails").n(n));
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_IDENTITIES, "d_from_b_polynomial_relation", scope.clone());
    for n in 0..=n_max {
        o.expect(poly::db_relation_check(n), || Failure::new("polynomial identity fails").n(n));
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_IDENTITIES, "polynomial_reversal_symmetry", format!("A: 1 <= n <= {n_max}; B: n <= {n_max}"));
    let points = [int(2), ratio(-1, 3), ratio(7, 2)];
    for n in 0..=n_max {
        if n >= 1 {
            o.expect(poly::symmetry_identity_check(Family::A, n)?, || Failure::new("A coefficients").n(n));
        }
        o.expect(poly::symmetry_identity_check(Family::B, n)?, || Failure::new("B coefficients").n(n));
        for t in &points {
            if n >= 1 {
                o.expect(poly::reciprocal_eval_check(Family::A, n, t)?, || Failure::new("A at 1/t").n(n).t(t));
            }
            o.expect(poly::reciprocal_eval_check(Family::B, n, t)?, || Failure::new("B at 1/t").n(n).t(t));
        }
    }
    out.push(o);

    let t_max = c.triangle_n_max.max(n_max);
    let mut o = CheckOutcome::new(SUITE_IDENTITIES, "d_minus_dtilde_signed_binomial", format!("n <= {t_max}"));
    for n in 0..=t_max {
        o.expect(triangles::difference_check(n), || Failure::new("D - Dtilde != (-1)^k C(n,k)").n(n));
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_IDENTITIES, "d_negation_symmetry", format!("n <= {t_max}"));
    for n in 0..=t_max {
        o.expect(triangles::symmetry_check_d(n), || Failure::new("parity-dependent symmetry fails").n(n));
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_IDENTITIES, "d_derivative_recurrence", scope.clone());
    let (d_rows, dt_rows): (Vec<Row>, Vec<Row>) = CoupledDRows::new().take(n_max + 1).unzip();
    for (family, rows) in [(Family::D, &d_rows), (Family::Dtilde, &dt_rows)] {
        let mut p = Polynomial::from_integers(&rows[0]);
        for (n, want) in rows.iter().enumerate().skip(1) {
            p = poly::poly_step_d(family, &p, n)?;
            let ok = p.to_integers().as_ref() == Some(want);
            o.expect(ok, || Failure::new(format!("{family} polynomial {p}")).n(n));
        }
    }
    out.push(o);

    out.extend(egf_checks(c)?);
    out.push(summation_check(c)?);
    Ok(out)
}

fn egf_checks(c: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let n_max = c.egf_n_max;
    let ts: Vec<String> = c.egf_t.iter().map(fmt_rational).collect();
    let mut coeffs = CheckOutcome::new(
        SUITE_IDENTITIES,
        "egf_coefficients",
        format!("A, B, D, Dtilde; n <= {n_max}; t in {{{}}}", ts.join(",")),
    );
    let mut pde = CheckOutcome::new(
        SUITE_IDENTITIES,
        "egf_pde",
        format!("D, Dtilde; through z^{}; t in {{{}}}", c.pde_order.saturating_sub(1), ts.join(",")),
    );
    for t in &c.egf_t {
        if t.is_one() {
            let note = "t=1 skipped: closed forms are 0/0 there (row sums cover it)".to_string();
            coeffs.notes.push(note.clone());
            pde.notes.push(note);
            continue;
        }
        for family in Family::ANALYTIC {
            let series = poly::egf_series(family, t, n_max)?;
            let polys = eulerian_polys(family, n_max)?;
            let mut fact = BigRational::one();
            for (n, p) in polys.iter().enumerate() {
                if n > 0 {
                    fact *= int(n as i64);
                }
                let got = &series.coeffs()[n] * &fact;
                let want = p.eval(t);
                coeffs.expect(got == want, || {
                    Failure::new(format!("{family}: n! [z^n] = {} vs P_n(t) = {}", fmt_rational(&got), fmt_rational(&want)))
                        .n(n)
                        .t(t)
                });
            }
        }
        for family in [Family::D, Family::Dtilde] {
            let ok = poly::egf_pde_check(family, t, c.pde_order)?;
            pde.expect(ok, || Failure::new(format!("{family} PDE residual nonzero")).t(t));
        }
    }
    Ok(vec![coeffs, pde])
}

/// Partial sums of the Euler summation formulas against their closed values,
/// with the gap bounded by a certified tail.
fn summation_check(c: &CheckConfig) -> Result<CheckOutcome> {
    let inside: Vec<&BigRational> = c.egf_t.iter().filter(|t| t.is_positive() && **t < BigRational::one()).collect();
    let ts: Vec<String> = inside.iter().map(|t| fmt_rational(t)).collect();
    let mut o = CheckOutcome::new(
        SUITE_IDENTITIES,
        "euler_summation",
        format!("A, B; n <= {}; t in {{{}}}", c.egf_n_max, ts.join(",")),
    );
    for t in inside {
        for family in [Family::A, Family::B] {
            for n in 0..=c.egf_n_max {
                let (alpha, beta) = if family == Family::A { (1, 1) } else { (2, 1) };
                let mut terms = 32usize;
                let tail = loop {
                    let bound = power_geometric_tail(t, alpha, beta, n, terms as u64)
                        .map(|b| if family == Family::A { b * t } else { b });
                    match bound {
                        Some(b) if b <= c.tol => break b,
                        _ if terms >= 1 << 16 => {
                            return Err(Error::IterationCap(format!("summation tail at t = {}", fmt_rational(t))))
                        }
                        _ => terms *= 2,
                    }
                };
                let partial = poly::summation_partial(family, t, n, terms)?;
                let limit = poly::summation_limit(family, t, n)?;
                let gap = (&limit - &partial).abs();
                o.expect(gap <= tail && partial <= limit, || {
                    Failure::new(format!("{family}: gap {} exceeds tail {}", fmt_rational(&gap), fmt_rational(&tail)))
                        .n(n)
                        .t(t)
                });
            }
        }
    }
    Ok(o)
}

fn moment_checks(c: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let tol = fmt_rational(&c.tol);
    let ts: Vec<String> = c.moment_t.iter().map(fmt_rational).collect();
    for family in [MeasureFamily::A, MeasureFamily::B, MeasureFamily::D] {
        let mut o = CheckOutcome::new(
            SUITE_MOMENTS,
            format!("moments_of_mu_{}", family.name()),
            format!("n <= {}; t in {{{}}}; tol {tol}", c.moment_n_max, ts.join(",")),
        );
        for t in &c.moment_t {
            let report = moment_theorem_check(family, t, c.moment_n_max, &c.tol)?;
            record_moments(&mut o, &report, t.is_zero() || t.is_one());
        }
        out.push(o);
    }

    let ts: Vec<String> = c.nu_t.iter().map(fmt_rational).collect();
    let mut o = CheckOutcome::new(
        SUITE_MOMENTS,
        "moments_of_nu",
        format!("n <= {}; t in {{{}}}; tol {tol}", c.moment_n_max, ts.join(",")),
    );
    for t in &c.nu_t {
        let report = nu_check(t, c.moment_n_max, &c.tol)?;
        record_moments(&mut o, &report, t.is_one());
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_MOMENTS, "mu_d_is_half_b_plus_half_dirac", "first 64 series atoms per t");
    for t in &c.moment_t {
        o.expect(d_mixture_check(t, 64)?, || Failure::new("atom lists differ").t(t));
    }
    out.push(o);

    let ts: Vec<String> = c.hankel_t.iter().map(fmt_rational).collect();
    let mut o = CheckOutcome::new(
        SUITE_MOMENTS,
        "hankel_minors_positive",
        format!("A, B, D; orders 1..={}; t in {{{}}}", c.hankel_order, ts.join(",")),
    );
    for t in &c.hankel_t {
        for family in [Family::A, Family::B, Family::D] {
            let report = positive_definite_check(family, t, c.hankel_order)?;
            let strict = t.is_positive();
            let ok = if strict { report.positivity == Positivity::Positive } else { report.passes() };
            o.expect(ok, || Failure::new(format!("{family}: minors {:?}", report.positivity)).t(t));
        }
    }
    out.push(o);

    let mut o = CheckOutcome::new(SUITE_MOMENTS, "dtilde_negative_minor", format!("order 2; t in {{{}}}", ts.join(",")));
    for t in c.hankel_t.iter().filter(|t| t.is_positive()) {
        match dtilde_not_pd_witness_at(t, c.hankel_order.max(2)) {
            Ok(w) => o.expect(w.order == 2 && w.minor.is_negative(), || {
                Failure::new(format!("first negative minor at order {}", w.order)).t(t)
            }),
            Err(e) => o.expect(false, || Failure::new(e.to_string()).t(t)),
        }
    }
    out.push(o);
    Ok(out)
}

fn record_moments(o: &mut CheckOutcome, report: &MomentReport, must_be_exact: bool) {
    for row in &report.rows {
        o.expect(row.pass, || {
            Failure::new(format!(
                "{}: deviation {:.3e} beyond tol + bound",
                report.family.name(),
                crate::arith::approx(&row.deviation)
            ))
            .n(row.n)
            .t(&report.t)
        });
    }
    if must_be_exact {
        o.expect(report.exact(), || Failure::new(format!("{}: closed-form case not exact", report.family.name())).t(&report.t));
    }
}

/// `mu^D_t` equals `(1/2) mu^B_t + (1/2) delta_(1-t)` atom by atom, over the
/// series indices below `series_end`.
pub fn d_mixture_check(t: &BigRational, series_end: u64) -> Result<bool> {
    let d = measure_for(MeasureFamily::D, t)?;
    let b = measure_for(MeasureFamily::B, t)?;
    let half = ratio(1, 2);
    if t.is_one() {
        let density_ok = match (d.density(), b.density()) {
            (Some(dd), Some(bd)) => dd.scale == bd.scale && dd.power == bd.power && dd.coef == &bd.coef * &half,
            _ => false,
        };
        return Ok(density_ok && d.atoms() == [Atom::new(BigRational::zero(), half)]);
    }
    let mut mixture: Vec<Atom> = b
        .atoms_up_to(series_end)
        .into_iter()
        .map(|a| Atom::new(a.location, a.weight * &half))
        .collect();
    mixture.push(Atom::new(BigRational::one() - t, half));
    let mixture = moments::Measure::new(mixture, None, None).atoms_up_to(0);
    Ok(d.atoms_up_to(series_end) == mixture)
}

fn conjecture_checks(c: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let report = triangles::scan_conjectures(c.conjecture_n_max)?;
    let scope = format!("D and Dtilde, n <= {}", c.conjecture_n_max);
    let note = "empirical evidence only, not a proof".to_string();

    let mut o = CheckOutcome::new(SUITE_CONJECTURES, "row_unimodality", scope.clone());
    o.cases = report.rows_scanned;
    o.failures = report
        .unimodality_violations
        .iter()
        .map(|(family, n)| Failure::new(format!("{family} row not unimodal")).n(*n))
        .collect();
    o.notes.push(note.clone());
    if o.failures.is_empty() {
        o.notes.push("no violations found (empirical)".into());
    }
    let mut out = vec![o];

    for (name, list) in [
        ("diagonals_strictly_increasing", &report.strict_violations),
        ("diagonals_weakly_increasing", &report.weak_violations),
    ] {
        let mut o = CheckOutcome::new(SUITE_CONJECTURES, name, format!("{scope}; T(n+k,k) and T(n+k,n) for k >= 1"));
        o.cases = report.diagonals_scanned;
        o.failures = list
            .iter()
            .map(|v| {
                Failure::new(format!(
                    "{} {:?} diagonal k={}: {} then {}",
                    v.family, v.diagonal, v.k, v.values.0, v.values.1
                ))
                .n(v.n)
            })
            .collect();
        o.notes.push(note.clone());
        if o.failures.is_empty() {
            o.notes.push("no violations found (empirical)".into());
        }
        out.push(o);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CheckConfig {
        CheckConfig { brute_n_max: 5, ..CheckConfig::default() }.with_n_max(8)
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Triangles, Suite::Identities, Suite::Conjectures] {
            let report = run_suite(suite, &small()).unwrap();
            assert!(report.passed(), "{}", report.render_text());
        }
    }

    #[test]
    fn moments_suite_with_custom_t() {
        let config = small().with_t(vec![ratio(1, 2), int(2)]);
        assert_eq!(config.nu_t, vec![int(2)]);
        let report = run_suite(Suite::Moments, &config).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn failures_render_their_tuple() {
        let mut o = CheckOutcome::new(SUITE_IDENTITIES, "demo", "scope");
        o.expect(false, || Failure::new("boom").n(3).k(1).t(&ratio(1, 2)));
        let report = CheckReport { outcomes: vec![o] };
        let text = report.render_text();
        assert!(text.contains("FAIL identities/demo"));
        assert!(text.contains("fail: n=3 k=1 t=1/2 boom"));
        assert!(text.ends_with("SUMMARY checks=1 passed=0 failed=1\n"));
        assert!(!report.passed());
    }

    #[test]
    fn budget_errors_propagate() {
        let config = CheckConfig { budget: 10, ..small() };
        let err = run_suite(Suite::Triangles, &config).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn mixture_matches() {
        for t in [int(0), ratio(1, 4), int(1), int(3)] {
            assert!(d_mixture_check(&t, 16).unwrap());
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }
}
