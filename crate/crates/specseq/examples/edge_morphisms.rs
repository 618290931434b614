//! The corner maps H^n → E₂^{0,n} and E₂^{n,0} → H^n of a canonically
//! bounded filtration: the first factors through a surjection onto the
//! stable corner cell, the second through an injection out of it.
//!
//! Run with: cargo run --example edge_morphisms

use specseq::filtration::{apply_filtration, canonical_filtrations};
use specseq::spectral::{edge_morphisms, SpectralSequence};
use specseq::{generate, FieldSpec};

fn main() {
    let f = FieldSpec::prime(5).unwrap();
    let bicomplex = generate::random_polycomplex(&mut generate::seeded(20), f, 2, 3, 2);
    let total = bicomplex.totalize();
    let a = canonical_filtrations(&bicomplex).into_iter().next().unwrap();
    let fc = apply_filtration(&total, &a).unwrap();
    let ss = SpectralSequence::compute(&fc, None).unwrap();
    let edges = edge_morphisms(&ss, &fc).unwrap();

    for n in 0..edges.to_corner.len() {
        let to = &edges.to_corner[n];
        let from = &edges.from_corner[n];
        println!(
            "H^{n} -> E_2^(0,{n}): shape {}x{}, rank {} (= dim E_inf^(0,{n}) = {})",
            to.rows(),
            to.cols(),
            to.rank(),
            ss.e_infinity_dim(0, n as i64)
        );
        println!(
            "E_2^({n},0) -> H^{n}: shape {}x{}, rank {} (= dim E_inf^({n},0) = {})",
            from.rows(),
            from.cols(),
            from.rank(),
            ss.e_infinity_dim(n as i64, 0)
        );
        assert_eq!(to.rank(), ss.e_infinity_dim(0, n as i64));
        assert_eq!(from.rank(), ss.e_infinity_dim(n as i64, 0));
    }
}
