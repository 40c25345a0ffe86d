//! Bruck-Ryser-Chowla verdicts for symmetric design parameters.
//!
//!     cargo run --example brc_checker            # a few well-known cases
//!     cargo run --example brc_checker -- 43 7 1  # one triple

use bigeodetic::numbertheory::brc_check;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("arguments are n k lambda"))
        .collect();
    let cases = match args[..] {
        [n, k, l] => vec![(n, k, l)],
        [] => vec![
            (7, 3, 1),
            (43, 7, 1),
            (22, 7, 2),
            (29, 8, 2),
            (79, 13, 2),
            (53, 13, 3),
            (111, 11, 1),
        ],
        _ => panic!("expected n k lambda"),
    };
    for (n, k, l) in cases {
        match brc_check(n, k, l) {
            Ok(v) => println!("({n}, {k}, {l}): {v}"),
            Err(e) => println!("({n}, {k}, {l}): error: {e}"),
        }
    }
}
