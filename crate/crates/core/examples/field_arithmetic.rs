// Builds F_{3^4} over F_3, walks the Frobenius orbit of x and finds a
// primitive element.

use charsum::ff::poly::format_coeffs;
use charsum::{Field, FiniteField};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::build(3, 1, 4, 7)?;
    println!("F_{{{}}} with modulus {}", field.tag(), format_coeffs(field.modulus()));

    let x = field.generator_x();
    for j in 0..field.n() {
        println!("x^(q^{j}) = {}", field.frobenius(&x, j));
    }
    let m = field.minimal_polynomial(&x);
    assert_eq!(m.coeffs(), field.modulus());
    println!("degree of x over F_3: {}", field.degree_over_base(&x));

    let g = field.find_generator(1);
    assert_eq!(field.order_of(&g)?, field.order() - 1);
    println!("primitive element {g}, order {}", field.order() - 1);

    let inv = field.inv(&g).ok_or("zero has no inverse")?;
    assert_eq!(field.mul(&g, &inv), field.one());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
