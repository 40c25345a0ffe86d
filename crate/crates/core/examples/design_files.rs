//! Write a design as JSON and as plain text, then read both back.
//!
//!     cargo run --example design_files

use bigeodetic::catalog::{self, load_design, save_design};
use bigeodetic::design::verify_design;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fano = catalog::get_design("fano")?.design;
    let dir = std::env::temp_dir().join(format!("bigeodetic-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    for file in ["fano.json", "fano.txt"] {
        let path = dir.join(file);
        save_design(&fano, &path)?;
        println!("--- {}", path.display());
        print!("{}", std::fs::read_to_string(&path)?);
        let back = load_design(&path)?;
        println!("reads back as {:?}", verify_design(&back)?.params);
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
