//! Bases, the blow-up hypothesis, and a single blow-up.

use coxforge::lineage_file::write_lineage;
use coxforge::matching::{blow_up, can_blow_up, find_bases};
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/c3_tame.cox"))?)?;
    for base in find_bases(&d) {
        let plan = can_blow_up(&d, &base)?;
        println!("{:<10} {:<6} blow-up: {}", d.format_subset(base.subset), base.tag, plan.is_some());
        if let Some(plan) = plan {
            let l = blow_up(&d, &plan)?;
            println!("\n{}", l.child());
            print!("{}", write_lineage(&l));
        }
    }
    Ok(())
}
