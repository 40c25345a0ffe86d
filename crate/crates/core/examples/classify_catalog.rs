//! Build the star graph of each catalog design and report its metrics,
//! including membership in a class B(κ, ρ, d) of bigeodetic blocks.
//!
//!     cargo run --release --example classify_catalog

use bigeodetic::{analysis, catalog, construct};

fn main() {
    println!(
        "{:<12} {:>5} {:>5} {:>5} {:>5} {:>5}  class",
        "design", "|V|", "|E|", "diam", "kappa", "index"
    );
    for entry in catalog::entries() {
        let star = construct::star_construct(&entry.design).expect("catalog designs verify");
        let r = analysis::classify(star.graph()).expect("star graphs are connected");
        let class = match r.class_membership {
            Some((k, rho, d)) => format!("B({k}, {rho}, {d})"),
            None => "-".into(),
        };
        println!(
            "{:<12} {:>5} {:>5} {:>5} {:>5} {:>5}  {class}",
            entry.name,
            r.n_vertices,
            r.n_edges,
            r.diameter,
            r.vertex_connectivity,
            r.geodetic_index
        );
    }
}
