//! Moments of the measures attached to each family, with certified tails.

use eulerian::arith::{approx, fmt_rational, int, ratio};
use eulerian::moments::{measure_for, moment_theorem_check, nu_check, MeasureFamily};

fn main() -> eulerian::Result<()> {
    let tol = ratio(1, 1_000_000_000);

    let mu = measure_for(MeasureFamily::B, &ratio(1, 2))?;
    println!("mu^B at t=1/2, first atoms:");
    for atom in mu.atoms_up_to(5) {
        println!("  x = {:<6} weight = {}", fmt_rational(&atom.location), fmt_rational(&atom.weight));
    }

    for family in [MeasureFamily::A, MeasureFamily::B, MeasureFamily::D] {
        for t in [ratio(1, 2), int(1), int(3)] {
            let report = moment_theorem_check(family, &t, 8, &tol)?;
            println!(
                "{:<2} t={:<4} passed={} exact={} max deviation {:.3e}",
                family.name(),
                fmt_rational(&t),
                report.passed(),
                report.exact(),
                approx(&report.max_deviation())
            );
            assert!(report.passed());
        }
    }
    let nu = nu_check(&int(2), 8, &tol)?;
    println!("nu at t=2 passed={}", nu.passed());
    Ok(())
}
