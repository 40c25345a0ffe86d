//! Two-fold triple systems and their star graphs.
//!
//! For each n with n ≡ 0, 1 (mod 3) a `(n(n-1)/3, n, n-1, 3, 2)` design is
//! found by search. Its star graph has n² vertices, hubs of degree n - 1,
//! copies of degree 3, connectivity 3 and at most two geodesics between any
//! nonadjacent pair.
//!
//!     cargo run --release --example triple_systems

use bigeodetic::design::DesignParams;
use bigeodetic::search::{search_design, SearchBudget, SearchOutcome};
use bigeodetic::{analysis, construct};

fn main() {
    for n in [4usize, 6, 7, 9, 10] {
        let params = DesignParams::new(n * (n - 1) / 3, n, n - 1, 3, 2);
        let report =
            search_design(params, SearchBudget::default()).expect("parameters are admissible");
        let SearchOutcome::Found(design) = report.outcome else {
            println!("{params}: {:?}", report.outcome);
            continue;
        };
        let star = construct::star_construct(&design).expect("search output verifies");
        let r = analysis::classify(star.graph()).expect("star graphs are connected");
        println!(
            "{params:<22} {:>6} nodes  |V|={:<4} degrees={:?} kappa={} index={} diam={}",
            report.stats.explored,
            r.n_vertices,
            r.degree_multiset,
            r.vertex_connectivity,
            r.geodetic_index,
            r.diameter
        );
    }
}
