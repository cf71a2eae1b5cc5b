//! Worpitzky expansions and the polynomial relations between the families.

use eulerian::arith::{fmt_rational, int, ratio};
use eulerian::poly::{ab_relation_check, binomial_alternating_identity_check, db_relation_check, worpitzky};
use eulerian::triangles::{difference_check, symmetry_check_d};
use eulerian::Family;

fn main() -> eulerian::Result<()> {
    let x = ratio(-3, 2);
    for family in [Family::A, Family::B, Family::D, Family::Dtilde] {
        let (lhs, rhs) = worpitzky(family, 6, &x)?;
        println!("Worpitzky {family} n=6 x={}: {} = {}", fmt_rational(&x), fmt_rational(&lhs), fmt_rational(&rhs));
        assert_eq!(lhs, rhs);
    }

    for n in 0..=12 {
        assert!(ab_relation_check(n));
        assert!(db_relation_check(n));
        assert!(difference_check(n));
        assert!(symmetry_check_d(n));
        assert!(binomial_alternating_identity_check(n, &int(3)));
    }
    println!("A/B and D/B polynomial relations, D - D~ and symmetry hold for n <= 12");
    Ok(())
}
