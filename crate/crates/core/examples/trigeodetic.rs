//! λ = 3 analogues: star graphs of triplanes and of a (10, 5, 6, 3, 3)
//! design have at most three geodesics between nonadjacent vertices.
//!
//!     cargo run --release --example trigeodetic

use bigeodetic::design::{Design, DesignParams};
use bigeodetic::search::{search_design, SearchBudget, SearchOutcome};
use bigeodetic::{analysis, catalog, construct};

fn show(label: &str, design: &Design) {
    let star = construct::star_construct(design).expect("verified design");
    let r = analysis::classify(star.graph()).expect("connected");
    println!(
        "{label:<24} |V|={:<4} degrees={:?} diam={} index={}",
        r.n_vertices, r.degree_multiset, r.diameter, r.geodetic_index
    );
}

fn main() {
    for name in ["triplane-5", "triplane-11"] {
        show(name, &catalog::get_design(name).unwrap().design);
    }
    let params = DesignParams::new(10, 5, 6, 3, 3);
    let report = search_design(params, SearchBudget::default()).unwrap();
    if let SearchOutcome::Found(d) = report.outcome {
        show(&format!("searched {params}"), &d);
    }
}
