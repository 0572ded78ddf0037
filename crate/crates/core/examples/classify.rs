//! Finite-type recognition of every irreducible component.
//!
//!     cargo run --example classify -- data/f4.cox

use coxforge::classify::{components, order_of, type_string};
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => "gens a b c d e f g\ndefault 2\nedge a b 3\nedge b c 4\nedge d e 6\nedge f g inf\n".to_string(),
    };
    let d = parse_diagram(&text)?;
    println!("rank {}", d.rank());
    for comp in d.c_components(d.all()) {
        match type_string(&d, comp) {
            Some(t) => println!("{:<20} {t} (order {})", d.format_subset(comp), order_of(&d, comp)),
            None => println!("{:<20} infinite", d.format_subset(comp)),
        }
    }
    if let Some(cs) = components(&d, d.all()) {
        let tags: Vec<String> = cs.iter().map(|(_, r)| r.tag.to_string()).collect();
        println!("spherical: {}", tags.join(" x "));
    }
    Ok(())
}
