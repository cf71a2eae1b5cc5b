//! Scan the type D triangles for unimodality and diagonal monotonicity.
//! The output is empirical evidence, not a proof.
//!
//! `cargo run --example conjectures -- 40`

use eulerian::triangles::scan_conjectures;

fn main() -> eulerian::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(25);
    let report = scan_conjectures(n)?;
    println!("rows scanned:      {}", report.rows_scanned);
    println!("diagonals scanned: {}", report.diagonals_scanned);
    println!("unimodality violations:         {}", report.unimodality_violations.len());
    println!("strict diagonal violations:     {}", report.strict_violations.len());
    println!("weak diagonal violations:       {}", report.weak_violations.len());
    for v in report.strict_violations.iter().take(5) {
        println!("  {} {:?} k={} n={}: {} then {}", v.family, v.diagonal, v.k, v.n, v.values.0, v.values.1);
    }
    if report.is_clean() {
        println!("no violations found (empirical)");
    }
    Ok(())
}
