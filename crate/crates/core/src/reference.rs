//! The published small rows of each triangle, used as golden values.

pub const A_ROWS: &[&[u64]] = &[
    &[1],
    &[1, 0],
    &[1, 1, 0],
    &[1, 4, 1, 0],
    &[1, 11, 11, 1, 0],
    &[1, 26, 66, 26, 1, 0],
];

pub const B_ROWS: &[&[u64]] = &[
    &[1],
    &[1, 1],
    &[1, 6, 1],
    &[1, 23, 23, 1],
    &[1, 76, 230, 76, 1],
];

pub const D_ROWS: &[&[u64]] = &[
    &[1],
    &[1, 0],
    &[1, 2, 1],
    &[1, 10, 13, 0],
    &[1, 36, 118, 36, 1],
];

pub const DTILDE_ROWS: &[&[u64]] = &[
    &[0],
    &[0, 1],
    &[0, 4, 0],
    &[0, 13, 10, 1],
    &[0, 40, 112, 40, 0],
];

pub const BRENTI_D_ROWS: &[&[u64]] = &[
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[1, 11, 11, 1],
    &[1, 44, 102, 44, 1],
];

pub fn rows(family: crate::Family) -> &'static [&'static [u64]] {
    use crate::Family::*;
    match family {
        A => A_ROWS,
        B => B_ROWS,
        D => D_ROWS,
        Dtilde => DTILDE_ROWS,
        BrentiD => BRENTI_D_ROWS,
    }
}
