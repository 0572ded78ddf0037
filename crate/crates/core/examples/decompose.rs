//! Separating classes and the visual graph of groups for each C-minimal one.
//!
//!     cargo run --example decompose -- data/amalgam.cox | dot -Tsvg > lambda.svg

use coxforge::decompose::{build_lambda, c_minimal_classes, separating_classes};
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/hub.cox").into());
    let d = parse_diagram(&std::fs::read_to_string(path)?)?;
    for c in separating_classes(&d) {
        eprintln!("class of {} ({} members)", d.format_subset(c.representative), c.members.len());
    }
    for c in c_minimal_classes(&d) {
        let g = build_lambda(&d, c.representative)?;
        let v: Vec<String> = g.v_nodes.iter().map(|&x| d.format_subset(x)).collect();
        eprintln!("J = {}: vertex groups {}", d.format_subset(c.representative), v.join(" | "));
        println!("{}", g.to_dot(&d));
    }
    Ok(())
}
