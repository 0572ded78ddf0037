//! Repeated blow-ups until no base qualifies; the potential strictly drops.

use coxforge::classify::type_string;
use coxforge::matching::{find_bases, max_rank, BaseOrder};
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(
        "gens a b c d e\ndefault inf\nedge a b 4\nedge b c 3\nedge a c 2\nedge d e 10\n\
         edge c d 2\nedge b d 2\nedge a d 2\nedge c e 2\nedge b e 2",
    )?;
    for order in [BaseOrder::Lexicographic, BaseOrder::ReverseLexicographic] {
        let run = max_rank(&d, order)?;
        let p: Vec<String> = run.potentials.iter().map(|x| x.to_string()).collect();
        println!("{order:?}: {} blow-ups, potential {}", run.lineage.blowup_count(), p.join(" > "));
        let c = run.lineage.child();
        for b in find_bases(c) {
            println!("  {:<16} {}", c.format_subset(b.subset), type_string(c, b.subset).unwrap());
        }
    }
    Ok(())
}
