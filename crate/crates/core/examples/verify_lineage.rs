//! Independent check of a lineage: relations, round trips and base orders.

use coxforge::lineage_file::{parse_lineage, write_lineage};
use coxforge::matching::{max_rank, verify_lineage, BaseOrder};
use coxforge::oracle::OracleConfig;
use coxforge::parse_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_diagram(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/d26_chain.cox"))?)?;
    let l = max_rank(&d, BaseOrder::Lexicographic)?.lineage;
    let text = write_lineage(&l);
    let back = parse_lineage(&text, Some(&d))?;
    let report = verify_lineage(&back, OracleConfig::default())?;
    for c in &report.checks {
        println!("[{}] stage {} {}: {}", if c.ok { "ok" } else { "FAIL" }, c.stage, c.what, c.detail);
    }
    println!("{} checks, passed: {}", report.checks.len(), report.passed());

    // Lengthen the first definition by one letter.
    let broken: String = text
        .lines()
        .scan(false, |done, line| {
            let out = if !*done && line.starts_with("def ") {
                *done = true;
                format!("{line} {}", line.split_whitespace().last().unwrap())
            } else {
                line.to_string()
            };
            Some(out + "\n")
        })
        .collect();
    match parse_lineage(&broken, Some(&d)).and_then(|l| verify_lineage(&l, OracleConfig::default())) {
        Ok(r) => println!("tampered lineage passed: {}", r.passed()),
        Err(e) => println!("tampered lineage rejected: {e}"),
    }
    Ok(())
}
