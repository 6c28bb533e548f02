// Multiplicative characters of F_{5^2}: orthogonality, the order-d
// families and the polynomial and translate bounds.

use charsum::characters::{group_divisors, CharacterTable};
use charsum::ff::poly::Poly;
use charsum::sums::{char_sum, katz_check, weil_check};
use charsum::{Field, FiniteField};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::build(5, 1, 2, 0)?;
    let table = CharacterTable::build(&field, 0)?;
    let all: Vec<_> = field.elements().collect();

    let worst = table
        .characters()
        .skip(1)
        .map(|chi| char_sum(&chi, &all).norm())
        .fold(0.0, f64::max);
    println!("largest |sum over the field| of a nontrivial character: {worst:.2e}");
    assert!(worst < 1e-6);

    for d in group_divisors(&field) {
        println!("characters of order {d}: {}", table.lambda_set(d)?.len());
    }

    // x^2 + 1 against the quadratic character.
    let quad = table.character(table.group_order() / 2);
    let f = Poly::new(vec![field.one(), field.zero(), field.one()], &field);
    let r = weil_check(&quad, &f)?;
    println!("weil: |sum| = {:.4} <= {:.4}", r.lhs, r.rhs);
    assert!(r.holds);

    let r = katz_check(&table.character(1), &field.generator_x())?;
    println!("translate: |sum| = {:.4} <= {:.4}", r.lhs, r.rhs);
    assert!(r.holds);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
