//! Hankel minors of the Eulerian polynomial sequences.

use eulerian::arith::{fmt_rational, int, ratio};
use eulerian::moments::{dtilde_not_pd_witness, nu_minor_scan, positive_definite_check};
use eulerian::Family;

fn main() -> eulerian::Result<()> {
    for family in [Family::A, Family::B, Family::D] {
        for t in [ratio(1, 2), int(1), int(2)] {
            let report = positive_definite_check(family, &t, 6)?;
            let minors: Vec<String> = report.minors.iter().take(3).map(fmt_rational).collect();
            println!("{family} t={:<3} {:?} first minors {}", fmt_rational(&t), report.positivity, minors.join(", "));
        }
    }

    let w = dtilde_not_pd_witness()?;
    println!("D~ is not a moment sequence at t={}: minor {} = {}", fmt_rational(&w.t), w.order, fmt_rational(&w.minor));

    let scan = nu_minor_scan(&ratio(1, 2), 4)?;
    println!("nu-type scan at t=1/2 (conclusive: {}):", scan.conclusive);
    for m in &scan.minors {
        println!("  {}", fmt_rational(m));
    }
    Ok(())
}
