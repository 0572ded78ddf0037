//! Reduced words, descents and longest elements.

use coxforge::oracle::{is_descent, longest_word, reduce};
use coxforge::{parse_diagram, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram("gens a b c\nedge a b 4\nedge b c 3\nedge a c 2")?;
    let w = Word::parse(&d, "a b a b c b a b a c")?;
    let r = reduce(&d, &w)?;
    println!("{}  ->  {}", w.display(&d), r.display(&d));
    for s in 0..d.rank() {
        println!("  {} is a right descent: {}", d.name(s), is_descent(&d, &r, s)?);
    }
    let w0 = longest_word(&d, d.all())?;
    println!("longest element ({} letters): {}", w0.len(), w0.display(&d));

    // Hyperbolic triangle group: words do not collapse.
    let h = parse_diagram("gens x y z\nedge x y 3\nedge y z 3\nedge x z 7")?;
    let v = Word::parse(&h, "x y z x y z x y z")?;
    println!("{} stays length {}", v.display(&h), reduce(&h, &v)?.len());
    Ok(())
}
