//! Verify every built-in design and print its block-intersection profile.
//!
//!     cargo run --example verify_catalog

use bigeodetic::catalog;
use bigeodetic::design::{intersection_profile, verify_design};

fn main() {
    for entry in catalog::entries() {
        let report = verify_design(&entry.design).expect("catalog designs have n >= 2");
        let profile = intersection_profile(&entry.design, entry.params.lambda).expect("b >= 2");
        println!(
            "{:<12} {:<22} valid={} max|Bi∩Bj|={} disjoint pair={} mu={}",
            entry.name,
            entry.params.to_string(),
            report.valid,
            profile.max_intersection,
            profile.has_disjoint_pair,
            profile.mu
        );
    }
}
