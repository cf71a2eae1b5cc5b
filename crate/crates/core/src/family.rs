use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Which triangle a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Classical Eulerian numbers, permutations of `{1..n}`.
    A,
    /// Signed permutations, descents of `(0, s(1), ..., s(n))`.
    B,
    /// The part of `B` with an even number of negative entries.
    D,
    /// The part of `B` with an odd number of negative entries.
    Dtilde,
    /// Brenti's type D statistic, descents of `(-s(2), s(1), ..., s(n))` over `D_n`.
    BrentiD,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::B, Family::D, Family::Dtilde, Family::BrentiD];
    pub const ANALYTIC: [Family; 4] = [Family::A, Family::B, Family::D, Family::Dtilde];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::Dtilde => "Dtilde",
            Family::BrentiD => "BrentiD",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            "Dtilde" | "dtilde" | "DT" | "Dt" => Ok(Family::Dtilde),
            "BrentiD" | "brentid" | "brenti" => Ok(Family::BrentiD),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

/// How a triangle is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Recurrence,
    ClosedForm,
    BruteForce,
    /// `D` and `D~` obtained from `B` and a signed binomial.
    Derived,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::ClosedForm => "closed",
            Route::BruteForce => "brute",
            Route::Derived => "derived",
        }
    }

    pub fn supports(self, family: Family) -> bool {
        match self {
            Route::Recurrence => family != Family::BrentiD,
            Route::ClosedForm => matches!(family, Family::A | Family::B),
            Route::BruteForce => true,
            Route::Derived => matches!(family, Family::D | Family::Dtilde),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recurrence" => Ok(Route::Recurrence),
            "closed" | "closed-form" => Ok(Route::ClosedForm),
            "brute" | "brute-force" => Ok(Route::BruteForce),
            "derived" => Ok(Route::Derived),
            _ => Err(Error::Parse(format!("unknown route `{s}`"))),
        }
    }
}
