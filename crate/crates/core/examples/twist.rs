//! An elementary twist along a separation, and its inverse.

use coxforge::decompose::{apply_twist, find_separations, twisted_separation, TwistData, TwistKind};
use coxforge::diagram::canonical_form;
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/twist_a2.cox"))?)?;
    for sep in find_separations(&d) {
        println!("S1 {}  S0 {}  S2 {}", d.format_subset(sep.s1), d.format_subset(sep.s0), d.format_subset(sep.s2));
    }
    let s1 = d.parse_subset("x,p,q")?;
    let s2 = d.parse_subset("p,q,r")?;
    let sep = coxforge::decompose::Separation::new(&d, s1, s2)?;
    let bullet = d.parse_subset("p,q")?;
    let l = apply_twist(&d, &TwistData { separation: sep, kind: TwistKind::Elementary { bullet } })?;
    let child = l.child();
    println!("\n{child}");

    let sep2 = twisted_separation(&l.stages[0])?;
    let bullet2 = child.parse_subset("p,q")?;
    let back = apply_twist(child, &TwistData { separation: sep2, kind: TwistKind::Elementary { bullet: bullet2 } })?;
    println!("twisting back restores the diagram: {}", canonical_form(back.child())? == canonical_form(&d)?);
    Ok(())
}
