//! The first page of an index-subset filtration is the cohomology of the
//! slices: E₁^{p,q} has the dimension of H^q of the total complex of the
//! sub-polycomplex sitting over Σ_{i∈A} xᵢ = p, with the selected
//! differentials forgotten.
//!
//! Run with: cargo run --example slices_and_the_first_page

use specseq::filtration::{apply_filtration, canonical_filtrations};
use specseq::spectral::{compute_page, Window};
use specseq::{generate, FieldSpec};

fn main() {
    let f = FieldSpec::prime(2).unwrap();
    let v = generate::random_polycomplex(&mut generate::seeded(5), f, 3, 2, 2);
    v.validate().unwrap();
    let t = v.totalize();

    for a in canonical_filtrations(&v) {
        let fc = apply_filtration(&t, &a).unwrap();
        let window = Window::of(&fc).unwrap();
        let e1 = compute_page(&fc, &window, 1).unwrap();
        println!("filtration by {{{a}}}:");
        for p in 0..=window.p_max {
            let slice = v.slice(a.indices(), p as usize).unwrap();
            let slice_h = slice.totalize().underlying().cohomology();
            for q in 0..=window.n_max - p {
                let from_page = e1.dim(p, q);
                let from_slice = slice_h.dim(q);
                assert_eq!(from_page, from_slice, "cell ({p}, {q})");
                if from_page > 0 {
                    println!(
                        "  E_1^({p},{q}) = {from_page} = H^{q} of the slice at level {p}"
                    );
                }
            }
        }
    }
    println!("first page matches slice cohomology at every cell");
}
