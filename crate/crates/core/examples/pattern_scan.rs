//! Tabulate the biplane existence pattern against BRC and the known list.
//!
//!     cargo run --example pattern_scan -- 30
//!
//! Rows past n = 12 are reported, not asserted.

use bigeodetic::pattern::{pattern_scan, render_table};

fn main() {
    let n_max = std::env::args()
        .nth(1)
        .map_or(12, |a| a.parse().expect("n_max"));
    let rows = pattern_scan(n_max).expect("parameters fit in u64");
    print!("{}", render_table(&rows));
}
