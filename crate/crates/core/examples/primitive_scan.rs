// Exact primitive counts in every affine space of F_25, compared with the
// sieve lower bound and the two-condition characterization.

use charsum::primitive::{characterization_scan, translate_check, ElementSelection, SpaceSelection};
use charsum::Field;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::build(5, 1, 2, 0)?;
    let scan = characterization_scan(&field, &[1, 2], SpaceSelection::Exhaustive { budget: 100_000 })?;
    let with_primitive = scan.results.iter().filter(|r| r.contains_primitive).count();
    println!("{} spaces, {with_primitive} contain a primitive element", scan.results.len());
    println!("necessity violations: {}", scan.necessity_violations.len());
    println!("sufficiency deviations: {}", scan.sufficiency_violations.len());
    println!("sieve failures: {}", scan.sieve_failures.len());
    assert!(scan.necessity_violations.is_empty());
    assert!(scan.sieve_failures.is_empty());

    let translate = translate_check(&field, ElementSelection::Exhaustive)?;
    println!("translate property: {} lines checked, {} fail", translate.checked, translate.failures.len());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
