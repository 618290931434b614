//! Build an instance in memory, serialize it to the JSON format the CLI
//! reads, parse it back, and run a computation on the result.
//!
//! Run with: cargo run --example instance_files

use specseq::instance::{parse_instance_str, render_instance, Instance, InstanceContent};
use specseq::{generate, FieldSpec};

fn main() {
    let f = FieldSpec::prime(3).unwrap();
    let v = generate::random_polycomplex(&mut generate::seeded(8), f, 2, 2, 2);
    let instance = Instance {
        field: f,
        content: InstanceContent::Poly(v),
        filtration_override: None,
    };

    let text = render_instance(&instance);
    println!("canonical instance file:\n{text}");

    // parsing re-validates everything: shapes first, then the axioms
    let reparsed = parse_instance_str(&text).unwrap();
    assert_eq!(render_instance(&reparsed), text, "serialization is canonical");

    let total = reparsed.polycomplex().unwrap().totalize();
    println!("total complex dims: {:?}", total.underlying().dims());
    println!("H(total): {:?}", total.underlying().cohomology().dims());
}
