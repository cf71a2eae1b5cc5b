//! Exact Eulerian numbers of types A, B and D.
//!
//! The crate builds the four triangles `A(n,k)`, `B(n,k)`, `D(n,k)` and the
//! complementary `D~(n,k)` (plus the Brenti variant of the type D triangle)
//! through several independent routes, checks the identities that tie them
//! together, and certifies that the Eulerian polynomials are the moment
//! sequences of explicit probability measures.
//!
//! Every value is an arbitrary-precision integer or an exact fraction. The
//! only inexact objects are the tail bounds of infinite atom series, and those
//! are themselves exact rationals.
//!
//! ```
//! use eulerian::triangles::{coupled_rows_d, row_b};
//!
//! let (d, dt) = coupled_rows_d(4);
//! let b = row_b(4);
//! for k in 0..=4 {
//!     assert_eq!(&d[k] + &dt[k], b[k]);
//! }
//! ```

pub mod arith;
pub mod check;
pub mod error;
pub mod export;
pub mod family;
pub mod moments;
pub mod perm;
pub mod poly;
pub mod reference;
pub mod triangles;

pub use error::{Error, Result};
pub use family::{Family, Route};
pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
pub use triangles::{Row, Triangle};
