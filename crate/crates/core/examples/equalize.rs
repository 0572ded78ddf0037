//! Twisting a visual decomposition until every edge group is the same subset.

use coxforge::decompose::{build_lambda, c_minimal_classes, equalize_edge_groups, realize_tree};
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/hub.cox"))?)?;
    for c in c_minimal_classes(&d) {
        let g = build_lambda(&d, c.representative)?;
        let before: Vec<String> = realize_tree(&g).edges.iter().map(|e| d.format_subset(e.2)).collect();
        let (l, h) = equalize_edge_groups(&d, &g)?;
        let child = l.child();
        let after: Vec<String> = realize_tree(&h).edges.iter().map(|e| child.format_subset(e.2)).collect();
        println!("edges {}  ->  {}  ({} twists)", before.join(" "), after.join(" "), l.stages.len());
    }
    Ok(())
}
