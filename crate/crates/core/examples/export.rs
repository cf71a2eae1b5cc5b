//! Write a triangle as CSV, b-file and JSON, then read each back.

use eulerian::export::{decode, encode, Format};
use eulerian::{Family, Route, Triangle};

fn main() -> eulerian::Result<()> {
    let tri = Triangle::build(Family::D, Route::Recurrence, 5, 0)?;
    for format in [Format::Csv, Format::BFile, Format::Json] {
        let text = encode(&tri, format, 1);
        println!("--- {format:?}\n{}", text.lines().take(6).collect::<Vec<_>>().join("\n"));
        assert_eq!(decode(&text, format, 1)?, tri.rows());
    }
    Ok(())
}
