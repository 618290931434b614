//! Commuting squares over a field of characteristic zero need the sign twist
//! before they form a bicomplex: ∂ᵢ ↦ (−1)^{xⱼ}·∂ᵢ turns commuting into
//! anticommuting without changing kernels or cokernels. Over GF(2) the twist
//! is invisible.
//!
//! Run with: cargo run --example rational_bicomplex

use specseq::filtration::{apply_filtration, canonical_filtrations};
use specseq::polycomplex::{MultiDegree, Polycomplex};
use specseq::spectral::{check_convergence, SpectralSequence};
use specseq::{FieldSpec, Matrix};

fn main() {
    let q = FieldSpec::rationals();
    let md = |x: usize, y: usize| MultiDegree::new(vec![x, y]);
    // a 2x2 grid of lines with identity maps everywhere: squares commute
    let cells = vec![
        (md(0, 0), 1),
        (md(1, 0), 1),
        (md(0, 1), 1),
        (md(1, 1), 1),
    ];
    let id = Matrix::identity(q, 1);
    let diffs = vec![
        (1, md(0, 0), id.clone()),
        (1, md(0, 1), id.clone()),
        (2, md(0, 0), id.clone()),
        (2, md(1, 0), id),
    ];
    let commuting = Polycomplex::new(2, q, cells, diffs).unwrap();
    assert!(commuting.validate().is_err(), "commuting squares are not anticommuting over Q");

    let bicomplex = commuting.anticommutify(2, 1).unwrap();
    bicomplex.validate().unwrap();
    println!("after the sign twist the bicomplex axioms hold over {q}");
    println!(
        "vertical map in the odd column became {:?}",
        bicomplex.partial(2, &md(1, 0)).entry(0, 0)
    );

    let total = bicomplex.totalize();
    println!("H(total) = {:?}", total.underlying().cohomology().dims());
    for a in canonical_filtrations(&bicomplex) {
        let fc = apply_filtration(&total, &a).unwrap();
        let ss = SpectralSequence::compute(&fc, None).unwrap();
        let report = check_convergence(&ss, &fc).unwrap();
        assert!(report.converged());
        println!("indices {{{a}}}: converged, stabilized at page {}", ss.r_stab());
    }
}
