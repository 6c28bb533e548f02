// F_3-orders in F_81: the census by divisor of x^4 - 1 and a search for
// primitive 1-normal elements.

use charsum::knormal::{knormal_census, primitive_knormal_search, OrderContext};
use charsum::Field;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::build(3, 1, 4, 0)?;
    let ctx = OrderContext::new(&field);
    println!("{:>12} {:>4} {:>6} {:>6} {:>6}", "g", "deg", "phi_q", "count", "free");
    for row in knormal_census(&ctx) {
        println!("{:>12} {:>4} {:>6} {:>6} {:>6}", row.g, row.deg, row.phi_q, row.count, row.free_of_binomials);
        assert_eq!(row.count, row.phi_q);
    }
    for k in 0..=2 {
        let search = primitive_knormal_search(&ctx, k)?;
        println!("k = {k}: {:?}", search.result);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
