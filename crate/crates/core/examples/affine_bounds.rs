// Runs the full bound suite over every affine space of F_9 and reports
// the tightest instance of each bound.

use std::collections::BTreeMap;

use charsum::characters::CharacterTable;
use charsum::sums::{verify_bounds, Population};
use charsum::Field;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::build(3, 1, 2, 0)?;
    let table = CharacterTable::build(&field, 0)?;
    let reports = verify_bounds(&table, Population::Exhaustive { budget: 1_000_000 })?;

    let mut tightest = BTreeMap::new();
    for r in reports.iter().filter(|r| r.hypothesis_met) {
        let slot = tightest.entry(r.theorem.name()).or_insert(r);
        if r.slack < slot.slack {
            *slot = r;
        }
    }
    for (name, r) in &tightest {
        println!("{name:18} slack {:.4} on {} (chi {})", r.slack, r.set, r.chi_index);
    }
    let violations = reports.iter().filter(|r| r.is_violation()).count();
    println!("{} checks, {violations} violations", reports.len());
    assert_eq!(violations, 0);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
