//! Simplex census at maximum rank, compared across two blow-up orders.

use coxforge::census::{compare_census, simplex_census};
use coxforge::matching::{max_rank, BaseOrder};
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/mixed.cox"))?)?;
    let a = simplex_census(max_rank(&d, BaseOrder::Lexicographic)?.lineage.child())?;
    let b = simplex_census(max_rank(&d, BaseOrder::ReverseLexicographic)?.lineage.child())?;
    for e in &a.entries {
        println!("{:>4}  {}", e.count, e.diagram);
    }
    println!("by size: {:?}", a.histogram());
    println!("orders disagree on {} keys", compare_census(&a, &b).len());
    Ok(())
}
