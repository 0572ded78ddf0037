//! Group orders from the type formula next to Todd–Coxeter coset counts.

use coxforge::classify::order_of;
use coxforge::oracle::{enumerate_order, parabolic_order};
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    for name in ["a4", "c4", "b4", "d2_7", "f4", "g3", "g4", "e6"] {
        let d = parse_diagram(&std::fs::read_to_string(format!("{dir}/{name}.cox"))?)?;
        let formula = order_of(&d, d.all());
        // E6 is too large for a single table, so go through a chain of parabolic indices.
        let counted = if name == "e6" {
            parabolic_order(&d, d.all(), 1_000_000)?
        } else {
            enumerate_order(&d, d.all(), 1_000_000)? as u128
        };
        println!("{name:<5} {formula:>8} {counted:>8}");
    }
    Ok(())
}
