//! Matching bases and heavy edges of a diagram with those of its maximum-rank child.

use coxforge::diagram::Label;
use coxforge::matching::{match_bases, match_edge, max_rank, BaseOrder};
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/mixed.cox"))?)?;
    let l = max_rank(&d, BaseOrder::Lexicographic)?.lineage;
    let c = l.child();
    for m in match_bases(&l)? {
        println!("{:<12} -> {:<12} {}", d.format_subset(m.parent_base), c.format_subset(m.child_base), m.relation);
    }
    for x in 0..d.rank() {
        for y in x + 1..d.rank() {
            if matches!(d.m(x, y), Label::Finite(k) if k >= 4) {
                let e = match_edge(&l, (x, y))?;
                println!("edge {}{} -> {}{} {}", d.name(x), d.name(y), c.name(e.edge.0), c.name(e.edge.1), e.relation);
            }
        }
    }
    Ok(())
}
