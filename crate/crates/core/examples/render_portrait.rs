//! Writes an SVG of the annulus near the equator of the Poincaré disk.
//!
//! `cargo run --example render_portrait -- out.svg` (default `portrait.svg`).

use qsinf::classify::classify;
use qsinf::poincare::{numeric_indices, render_portrait, PortraitOptions};
use qsinf::system::QuadraticSystem;

fn main() -> std::io::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "portrait.svg".into());
    let s = QuadraticSystem::from_ints([0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]);
    let c = classify(&s).expect("valid system");
    let title = format!("Figure {}: {s}", c.figure);
    let svg = render_portrait(&s, &numeric_indices(&s), &title, &PortraitOptions::default());
    std::fs::write(&path, svg)?;
    println!("wrote {path}");
    Ok(())
}
