//! Expand the exponential generating functions and check them against the
//! Eulerian polynomials.

use eulerian::arith::{factorial, fmt_rational, ratio};
use eulerian::poly::{egf_pde_check, egf_series, eulerian_poly};
use eulerian::{Family, Rational};

fn main() -> eulerian::Result<()> {
    let t = ratio(1, 3);
    for family in [Family::A, Family::B, Family::D, Family::Dtilde] {
        let f = egf_series(family, &t, 8)?;
        print!("{family}: n! [z^n] f at t=1/3:");
        for (n, c) in f.coeffs().iter().enumerate() {
            let value = c * Rational::from_integer(factorial(n as u64));
            assert_eq!(value, eulerian_poly(family, n)?.eval(&t));
            print!(" {}", fmt_rational(&value));
        }
        println!();
    }
    for family in [Family::D, Family::Dtilde] {
        assert!(egf_pde_check(family, &t, 8)?);
        println!("PDE for {family} holds through order 8");
    }
    match egf_series(Family::B, &ratio(1, 1), 4) {
        Err(e) => println!("t = 1: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
