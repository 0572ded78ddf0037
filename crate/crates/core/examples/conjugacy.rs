//! Visual conjugacy of special subgroups via ν-moves, with certificates.

use coxforge::conjugacy::{are_conjugate_visual, conjugacy_class};
use coxforge::oracle::reduce;
use coxforge::{parse_diagram, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/a4.cox"))?)?;
    let a = d.parse_subset("s1,s2")?;
    let class = conjugacy_class(&d, a);
    let members: Vec<String> = class.members.iter().map(|&m| d.format_subset(m)).collect();
    println!("class of {}: {}", d.format_subset(a), members.join("  "));

    let b = d.parse_subset("s3,s4")?;
    let path = are_conjugate_visual(&d, a, b).expect("conjugate in A4");
    let w = path.total_word(&d)?;
    println!("conjugator {} ({} moves)", w.display(&d), path.len());
    let f = path.bijection(d.rank());
    for x in a.iter() {
        let img = reduce(&d, &w.concat(&Word(vec![x])).concat(&w.inverse()))?;
        println!("  {} -> {} = {}", d.name(x), d.name(f[x]), img.display(&d));
    }

    let c = d.parse_subset("s1,s3")?;
    println!("{} ~ {}: {}", d.format_subset(a), d.format_subset(c), are_conjugate_visual(&d, a, c).is_some());
    Ok(())
}
