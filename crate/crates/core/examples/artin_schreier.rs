// The root of x^p - x - a in F_{p^p}: its F_p-order, normality and
// multiplicative order for small p, and the F_{9^3} k-normal scan.

use charsum::knormal::{artin_schreier_check, fqp_knormal_scan, smallest_primitive_root};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2, 3, 5, 7] {
        let a = smallest_primitive_root(p)?;
        let r = artin_schreier_check(p, a)?;
        println!(
            "p = {p}, a = {a}: order {} of {}, primitive {}, F_p-order {}, {} elements of that F_p-order",
            r.theta_order, r.group_order, r.theta_primitive, r.theta_fq_order, r.low_normal_count
        );
        assert!(r.order_is_square_of_x_minus_1);
    }
    let scan = fqp_knormal_scan(9, 3, 0)?;
    for row in &scan.rows {
        println!("F_{{9^3}}, k = {}: {} primitive of order {}", row.k, row.primitive_with_order_g, row.g);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
