use std::process::{Command, ExitCode};
use std::time::Instant;

use eulerian::arith::{factorial, int, ratio};
use eulerian::moments::{
    dtilde_not_pd_witness_at, moment_theorem_check, nu_check, positive_definite_check, MeasureFamily, Positivity,
};
use eulerian::perm::budget_from_env;
use eulerian::poly::{
    ab_relation_check, binomial_alternating_identity_check, db_relation_check, egf_pde_check, egf_series,
    eulerian_poly, reciprocal_eval_check, worpitzky,
};
use eulerian::reference;
use eulerian::triangles::{
    difference_check, independent_row_d, row_sum, scan_conjectures, symmetry_check_a, symmetry_check_d,
};
use eulerian::{BigInt, Family, Rational, Route, Triangle};

type Outcome = eulerian::Result<Result<(), String>>;
type Criterion = (&'static str, fn() -> Outcome);

const ANALYTIC: [Family; 4] = [Family::A, Family::B, Family::D, Family::Dtilde];

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn published_tables() -> Outcome {
    let budget = budget_from_env();
    for family in Family::ALL {
        let want: Vec<Vec<BigInt>> =
            reference::rows(family).iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        for route in [Route::Recurrence, Route::BruteForce] {
            if !route.supports(family) {
                continue;
            }
            let tri = Triangle::build(family, route, want.len() - 1, budget)?;
            if tri.rows() != want {
                return Ok(Err(format!("{family} via {route} differs from the published rows")));
            }
        }
    }
    Ok(Ok(()))
}

fn route_equivalence() -> Outcome {
    let n = 30;
    for family in [Family::A, Family::B] {
        let rec = Triangle::build(family, Route::Recurrence, n, 0)?;
        let closed = Triangle::build(family, Route::ClosedForm, n, 0)?;
        if rec != closed {
            return Ok(Err(format!("{family}: closed form differs from recurrence")));
        }
    }
    for family in [Family::D, Family::Dtilde] {
        let coupled = Triangle::build(family, Route::Recurrence, n, 0)?;
        let derived = Triangle::build(family, Route::Derived, n, 0)?;
        if coupled != derived {
            return Ok(Err(format!("{family}: derived rows differ from coupled recurrence")));
        }
        for m in 0..=n {
            if independent_row_d(m, family)? != coupled.row(m)? {
                return Ok(Err(format!("{family} n={m}: independent recurrence differs")));
            }
        }
    }
    Ok(Ok(()))
}

fn brute_force_oracle() -> Outcome {
    let budget = budget_from_env();
    for family in ANALYTIC {
        let brute = Triangle::build(family, Route::BruteForce, 8, budget)?;
        let rec = Triangle::build(family, Route::Recurrence, 8, 0)?;
        for n in 0..=8 {
            if brute.row(n)? != rec.row(n)? {
                return Ok(Err(format!("{family} n={n}: histogram differs from recurrence")));
            }
        }
    }
    Ok(Ok(()))
}

fn row_sums() -> Outcome {
    for family in ANALYTIC {
        let tri = Triangle::build(family, Route::Recurrence, 30, 0)?;
        for n in 0..=30 {
            let fact = factorial(n as u64);
            let want = match family {
                Family::A => fact,
                Family::B => (BigInt::from(1) << n) * fact,
                _ if n == 0 => continue,
                _ => (BigInt::from(1) << (n - 1)) * fact,
            };
            let got: BigInt = tri.row(n)?.iter().sum();
            if got != want || row_sum(family, n).as_ref() != Some(&want) {
                return Ok(Err(format!("{family} n={n}: row sum {got}, expected {want}")));
            }
        }
    }
    Ok(Ok(()))
}

fn identity_suite() -> Outcome {
    let mut xs: Vec<Rational> = (-6..=6).map(int).collect();
    xs.extend([ratio(1, 2), ratio(-3, 2)]);
    for family in ANALYTIC {
        for n in 0..=15 {
            for x in &xs {
                let (lhs, rhs) = worpitzky(family, n, x)?;
                if lhs != rhs {
                    return Ok(Err(format!("Worpitzky {family} n={n} x={x}")));
                }
            }
        }
    }
    for n in 0..=20 {
        let r = ensure(ab_relation_check(n), || format!("A/B relation n={n}"))
            .and_then(|_| ensure(db_relation_check(n), || format!("D/B relation n={n}")))
            .and_then(|_| ensure(difference_check(n), || format!("D - D~ n={n}")))
            .and_then(|_| ensure(symmetry_check_d(n), || format!("D symmetry n={n}")))
            .and_then(|_| ensure(n == 0 || symmetry_check_a(n), || format!("A symmetry n={n}")));
        if r.is_err() {
            return Ok(r);
        }
        if n >= 1 {
            for family in [Family::A, Family::B] {
                if !reciprocal_eval_check(family, n, &ratio(2, 3))? {
                    return Ok(Err(format!("{family} reciprocal symmetry n={n}")));
                }
            }
        }
        for x in &xs {
            if !binomial_alternating_identity_check(n, x) {
                return Ok(Err(format!("binomial identity n={n} x={x}")));
            }
        }
    }
    Ok(Ok(()))
}

fn egf_verification() -> Outcome {
    let ts = [int(0), ratio(1, 3), ratio(1, 2), int(2), ratio(7, 2)];
    for t in &ts {
        for family in ANALYTIC {
            let f = egf_series(family, t, 12)?;
            for n in 0..=12 {
                let scaled = &f.coeffs()[n] * Rational::from_integer(factorial(n as u64));
                if scaled != eulerian_poly(family, n)?.eval(t) {
                    return Ok(Err(format!("{family} t={t} n={n}: series coefficient")));
                }
            }
        }
        for family in [Family::D, Family::Dtilde] {
            if !egf_pde_check(family, t, 8)? {
                return Ok(Err(format!("{family} t={t}: PDE")));
            }
        }
    }
    Ok(Ok(()))
}

fn moment_theorems() -> Outcome {
    let tol = ratio(1, 1_000_000_000);
    let ts = [ratio(1, 4), ratio(1, 2), ratio(3, 4), int(1), int(2), int(3)];
    for family in [MeasureFamily::A, MeasureFamily::B, MeasureFamily::D] {
        for t in &ts {
            let report = moment_theorem_check(family, t, 10, &tol)?;
            if !report.passed() {
                return Ok(Err(format!("mu^{} t={t}: deviation {}", family.name(), report.max_deviation())));
            }
            if *t == int(1) && !report.exact() {
                return Ok(Err(format!("mu^{} t=1: density moments not exact", family.name())));
            }
        }
    }
    let b = moment_theorem_check(MeasureFamily::B, &int(1), 10, &tol)?;
    for row in &b.rows {
        let want = Rational::from_integer((BigInt::from(1) << row.n) * factorial(row.n as u64));
        if row.moment.value != want {
            return Ok(Err(format!("mu^B t=1 n={}: expected 2^n n!", row.n)));
        }
    }
    for t in [int(1), int(2), int(3)] {
        if !nu_check(&t, 10, &tol)?.passed() {
            return Ok(Err(format!("nu t={t}")));
        }
    }
    Ok(Ok(()))
}

fn hankel_positivity() -> Outcome {
    for family in [Family::A, Family::B, Family::D] {
        for t in [ratio(1, 2), int(1), int(2)] {
            let report = positive_definite_check(family, &t, 6)?;
            if report.positivity != Positivity::Positive {
                return Ok(Err(format!("{family} t={t}: {:?}", report.positivity)));
            }
        }
    }
    for t in [ratio(1, 2), int(2)] {
        let w = dtilde_not_pd_witness_at(&t, 2)?;
        if w.order != 2 || w.minor >= int(0) {
            return Ok(Err(format!("D~ witness at t={t}: order {} minor {}", w.order, w.minor)));
        }
    }
    Ok(Ok(()))
}

fn conjecture_scan() -> Outcome {
    let report = scan_conjectures(25)?;
    Ok(ensure(report.is_clean(), || {
        format!(
            "{} unimodality, {} strict, {} weak violations",
            report.unimodality_violations.len(),
            report.strict_violations.len(),
            report.weak_violations.len()
        )
    }))
}

fn determinism() -> Outcome {
    let run = || Command::new(env!("CARGO_BIN_EXE_eulerian")).args(["check", "--suite", "all"]).output();
    let (first, second) = match (run(), run()) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return Ok(Err("could not run the eulerian binary".into())),
    };
    if first.status.code() != Some(0) {
        return Ok(Err(format!("check --suite all exited with {:?}", first.status.code())));
    }
    Ok(ensure(first.stdout == second.stdout, || "reports differ between runs".into()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("published triangles via recurrence and brute force", published_tables),
        ("route equivalence for n <= 30", route_equivalence),
        ("brute-force histograms for n <= 8", brute_force_oracle),
        ("row sums for n <= 30", row_sums),
        ("identity suite", identity_suite),
        ("generating functions and PDEs", egf_verification),
        ("moment theorems", moment_theorems),
        ("Hankel positivity and D~ witness", hankel_positivity),
        ("conjecture scan for n <= 25", conjecture_scan),
        ("deterministic check reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = criterion();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Ok(())) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Ok(Err(detail)) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: error: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
