// Primitive-free subspaces of F_16 and digit prescriptions that rule out
// every primitive element.

use std::collections::BTreeMap;

use charsum::primitive::{digit_search, digit_sharpness_example, grassmann_threshold};
use charsum::Field;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::build(2, 1, 4, 0)?;
    let g = grassmann_threshold(&field, 1_000)?;
    for layer in &g.layers {
        println!("dim {}: {} of {} subspaces are primitive-free", layer.dim, layer.primitive_free, layer.subspaces);
    }
    println!("t = {:?}, subfield dimension {}, witness {}", g.t, g.subfield_dim, g.witness);

    let basis: Vec<_> = (0..field.n()).map(|i| field.monomial(i)).collect();
    let one_digit: BTreeMap<usize, u64> = [(0, 1)].into();
    let r = digit_search(&field, &basis, &one_digit)?;
    println!("first digit 1: {} primitive elements, e.g. {:?}", r.primitive_count, r.witness);

    let (basis, prescription) = digit_sharpness_example(&field)?;
    let r = digit_search(&field, &basis, &prescription)?;
    println!("{} digits zeroed in a subfield-adapted basis: {} primitive", r.prescribed, r.primitive_count);
    assert_eq!(r.primitive_count, 0);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
