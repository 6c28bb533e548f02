//! Runs every example as a test.

#[allow(dead_code)]
mod field_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/field_arithmetic.rs"));
}

#[test]
fn field_arithmetic_runs() {
    field_arithmetic::run_example().expect("field_arithmetic example should run");
}

#[allow(dead_code)]
mod character_sums {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/character_sums.rs"));
}

#[test]
fn character_sums_runs() {
    character_sums::run_example().expect("character_sums example should run");
}

#[allow(dead_code)]
mod affine_bounds {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/affine_bounds.rs"));
}

#[test]
fn affine_bounds_runs() {
    affine_bounds::run_example().expect("affine_bounds example should run");
}

#[allow(dead_code)]
mod primitive_scan {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/primitive_scan.rs"));
}

#[test]
fn primitive_scan_runs() {
    primitive_scan::run_example().expect("primitive_scan example should run");
}

#[allow(dead_code)]
mod grassmann_digits {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/grassmann_digits.rs"));
}

#[test]
fn grassmann_digits_runs() {
    grassmann_digits::run_example().expect("grassmann_digits example should run");
}

#[allow(dead_code)]
mod knormal_census {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/knormal_census.rs"));
}

#[test]
fn knormal_census_runs() {
    knormal_census::run_example().expect("knormal_census example should run");
}

#[allow(dead_code)]
mod artin_schreier {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/artin_schreier.rs"));
}

#[test]
fn artin_schreier_runs() {
    artin_schreier::run_example().expect("artin_schreier example should run");
}

#[allow(dead_code)]
mod cli_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_report.rs"));
}

#[test]
fn cli_report_runs() {
    cli_report::run_example().expect("cli_report example should run");
}
