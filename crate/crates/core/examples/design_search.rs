//! Exhaustive search for a design with given parameters.
//!
//!     cargo run --release --example design_search -- 13 13 4 4 1

use std::time::Duration;

use bigeodetic::design::DesignParams;
use bigeodetic::search::{search_design, SearchBudget, SearchOutcome};

fn main() {
    let v: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("b n r k lambda"))
        .collect();
    let params = match v[..] {
        [b, n, r, k, l] => DesignParams::new(b, n, r, k, l),
        [] => DesignParams::new(12, 9, 4, 3, 1),
        _ => panic!("expected b n r k lambda"),
    };
    let budget = SearchBudget {
        time_limit: Duration::from_secs(30),
        ..SearchBudget::default()
    };
    let report = match search_design(params, budget) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!(
        "{params}: {:?} in {:.3}s",
        report.stats,
        report.elapsed.as_secs_f64()
    );
    match report.outcome {
        SearchOutcome::Found(d) => {
            for block in d.blocks() {
                println!("  {block:?}");
            }
        }
        other => println!("  {other:?}"),
    }
}
