//! Exact computation of the spectral sequences attached to filtered cochain
//! complexes, bicomplexes, and higher polycomplexes.
//!
//! The crate provides:
//!
//! * exact scalar arithmetic over GF(p) and the rationals ([`field`]);
//! * canonical dense linear algebra: echelon forms, kernels, images, the
//!   subspace lattice, and subquotients with explicit coset representatives
//!   ([`matrix`], [`subspace`]);
//! * cochain complexes and their cohomology ([`cochain`]);
//! * k-graded polycomplexes with anticommuting differentials, totalization
//!   and slicing ([`polycomplex`]);
//! * decreasing filtrations, including the 2^k − 2 canonical index-subset
//!   filtrations of a total complex ([`filtration`]);
//! * the page-by-page spectral sequence engine with stabilization detection,
//!   convergence verification and edge morphisms ([`spectral`]);
//! * the six-term kernel/cokernel extraction for short-exact-row diagrams
//!   ([`snake`]);
//! * morphisms of spectral sequences induced by filtered cochain maps
//!   ([`morphism`]);
//! * a JSON instance format and text/CSV/TikZ renderers ([`instance`],
//!   [`render`]), plus seeded random instance generation ([`generate`]).
//!
//! Every documented identity is checked with exact arithmetic; the crate
//! never touches floating point. Start with the `examples/` directory for
//! runnable walkthroughs of each capability.

pub mod cochain;
pub mod error;
pub mod field;
pub mod filtration;
pub mod generate;
pub mod instance;
pub mod matrix;
pub mod morphism;
pub mod polycomplex;
pub mod render;
pub mod snake;
pub mod spectral;
pub mod subspace;

pub use cochain::{CochainComplex, CochainMap, CohomologyResult};
pub use error::{Error, ErrorKind};
pub use field::{FieldSpec, Scalar};
pub use instance::{parse_instance, parse_instance_str, render_instance, Instance, InstanceContent};
pub use filtration::{
    apply_filtration, canonical_filtrations, Boundedness, FilteredComplex, IndexSubsetFiltration,
};
pub use matrix::Matrix;
pub use morphism::{induced_morphism, inclusion_morphism, SSMorphism};
pub use polycomplex::{MultiDegree, Polycomplex, TotalComplex};
pub use snake::{snake, SnakeDiagram, SnakeResult};
pub use spectral::{
    associated_graded_h, bicomplex_e2_identification, check_convergence, compute_page,
    edge_morphisms, ConvergenceReport, EdgeMorphisms, Page, PageCell, SpectralSequence, Window,
};
pub use subspace::{induced_map, image_basis, kernel_basis, preimage, Subquotient, Subspace};
