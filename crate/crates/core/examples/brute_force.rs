//! Enumerate signed permutations and histogram their descents.
//!
//! `cargo run --release --example brute_force -- 7`

use eulerian::perm::{self, brute_split_d, enumerate, statistic_type_b, Group};
use eulerian::triangles::{coupled_rows_d, row_b};
use eulerian::{Family, Route, Triangle};

fn main() -> eulerian::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let budget = perm::budget_from_env();

    println!("B_2 with type B descents:");
    for sigma in enumerate(Group::B, 2) {
        println!("  {sigma}  des = {}", statistic_type_b(&sigma));
    }

    let (d, dt) = brute_split_d(n, budget)?;
    let (d_rec, dt_rec) = coupled_rows_d(n);
    println!("D_{n}  by enumeration: {d:?}");
    println!("D~_{n} by enumeration: {dt:?}");
    assert_eq!((d, dt), (d_rec, dt_rec));
    assert_eq!(perm::brute_triangle(Family::B, n, budget)?, row_b(n));

    let brenti = Triangle::build(Family::BrentiD, Route::BruteForce, n.min(6), budget)?;
    println!("Brenti D rows:");
    for row in brenti.rows() {
        println!("  {row:?}");
    }
    Ok(())
}
