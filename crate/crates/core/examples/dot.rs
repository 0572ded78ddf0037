//! Graphviz output for the presentation and Coxeter views.
//!
//!     cargo run --example dot | dot -Tpng > g3.png

use coxforge::diagram::View;
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/g3.cox"))?)?;
    print!("{}", d.emit_dot(View::C));
    print!("{}", d.emit_dot(View::P));
    Ok(())
}
