//! Print the first rows of every triangle and confirm the routes agree.
//!
//! `cargo run --example triangles -- 8`

use eulerian::{Family, Route, Triangle};

fn main() -> eulerian::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);

    for family in [Family::A, Family::B, Family::D, Family::Dtilde] {
        let tri = Triangle::build(family, Route::Recurrence, n, 0)?;
        tri.check_invariants()?;
        println!("{family}:");
        for row in tri.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            println!("  {}", cells.join(" "));
        }
        for route in [Route::ClosedForm, Route::Derived] {
            if route.supports(family) {
                let other = Triangle::build(family, route, n, 0)?;
                assert_eq!(tri, other);
                println!("  {route} route agrees");
            }
        }
    }
    Ok(())
}
