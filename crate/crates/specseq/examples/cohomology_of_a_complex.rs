//! Build a small cochain complex by hand, validate it, and compute its
//! cohomology with explicit representatives.
//!
//! Run with: cargo run --example cohomology_of_a_complex

use specseq::{CochainComplex, FieldSpec, Matrix};

fn main() {
    // k --[1]--> k --[0]--> k over GF(2): H^0 = 0, H^1 = 0, H^2 = k
    let f = FieldSpec::prime(2).unwrap();
    let complex = CochainComplex::new(
        f,
        vec![1, 1, 1],
        vec![Matrix::identity(f, 1), Matrix::zero(f, 1, 1)],
    )
    .unwrap();
    complex.validate().unwrap();
    let h = complex.cohomology();
    println!("three-term complex over {f}:");
    for n in 0..=complex.max_degree() {
        println!("  H^{n}: dim {}", h.dim(n));
    }
    assert_eq!(h.dims(), vec![0, 0, 1]);

    // the same shape over the rationals, with a fraction in the differential
    let q = FieldSpec::rationals();
    let d0 = Matrix::new(q, 1, 2, vec![q.parse("2/3").unwrap(), q.parse("-1/6").unwrap()]).unwrap();
    let complex = CochainComplex::new(q, vec![2, 1], vec![d0]).unwrap();
    complex.validate().unwrap();
    let h = complex.cohomology();
    println!("two-term complex over {q}:");
    for n in 0..=complex.max_degree() {
        println!("  H^{n}: dim {}", h.dim(n));
        if h.dim(n) > 0 {
            println!("  representatives:\n{}", h.group(n).unwrap().reps());
        }
    }
    // alternating dimension sums agree on the complex and its cohomology
    assert_eq!(complex.euler_characteristic(), h.euler_characteristic());
    println!("Euler characteristic: {}", h.euler_characteristic());
}
