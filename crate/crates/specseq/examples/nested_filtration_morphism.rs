//! Nested index subsets A ⊂ B give nested filtrations, and the identity of
//! the total complex induces a morphism of spectral sequences between them:
//! one bidegree-(0,0) matrix per cell per page, commuting with every
//! differential.
//!
//! Run with: cargo run --example nested_filtration_morphism

use specseq::filtration::IndexSubsetFiltration;
use specseq::morphism::inclusion_morphism;
use specseq::{generate, FieldSpec};
use std::collections::BTreeSet;

fn main() {
    let f = FieldSpec::prime(2).unwrap();
    let v = generate::random_polycomplex(&mut generate::seeded(77), f, 3, 2, 2);
    let a = IndexSubsetFiltration::new(3, BTreeSet::from([2])).unwrap();
    let b = IndexSubsetFiltration::new(3, BTreeSet::from([1, 2])).unwrap();

    // construction verifies commutation with the differentials on every page
    let morphism = inclusion_morphism(&v, &a, &b).unwrap();
    println!(
        "morphism from indices {{{a}}} to {{{b}}}, {} pages computed",
        morphism.pages_computed()
    );
    for r in 0..morphism.pages_computed() {
        let nonzero: Vec<String> = morphism
            .maps_at(r)
            .unwrap()
            .iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|(&(p, q), m)| format!("({p},{q}):rank {}", m.rank()))
            .collect();
        println!("  f_{r}: {}", if nonzero.is_empty() { "zero".into() } else { nonzero.join("  ") });
    }

    // swapping the subsets is rejected: the containment goes one way only
    assert!(inclusion_morphism(&v, &b, &a).is_err());
    println!("reversed nesting is rejected, as it should be");
}
