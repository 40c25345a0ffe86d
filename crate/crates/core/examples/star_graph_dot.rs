//! Print the star graph of a catalog design as Graphviz DOT.
//!
//!     cargo run --example star_graph_dot -- fig3 | dot -Tsvg > fig3.svg

use bigeodetic::catalog;
use bigeodetic::construct::{export_dot, star_construct};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fig3".into());
    let entry = match catalog::get_design(&name) {
        Ok(entry) => entry,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let star = star_construct(&entry.design).expect("catalog designs verify");
    print!("{}", export_dot(&star));
}
