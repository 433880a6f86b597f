//! Generates the synthetic fixture data referenced by the recipes under
//! `fixtures/recipes/`. Output is deterministic: rerunning produces
//! byte-identical files.
//!
//! Usage: `cargo run --release -p pairsift --example gen_fixtures [OUT_DIR]`
//! (default OUT_DIR is `<crate>/fixtures/data`).

use std::path::PathBuf;

fn main() {
    let out_dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR"))
                .join("fixtures")
                .join("data")
        });
    if let Err(e) = pairsift::fixtures::generate_all(&out_dir, 42) {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
    println!("fixture data written to {}", out_dir.display());
}
