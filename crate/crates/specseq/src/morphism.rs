//! Morphisms of spectral sequences induced by filtration-compatible cochain
//! maps, and the canonical morphisms between nested index-subset filtrations.
//!
//! Cell maps are computed page by page from stored representatives: the
//! ambient cochain map is applied to a cell's representatives and projected
//! into the corresponding target cell, with well-definedness verified by the
//! induced-map machinery. Commutation with every computed differential is
//! checked at construction, so a returned morphism is a verified one.

use crate::cochain::{CochainMap, ComplexError};
use crate::filtration::{apply_filtration, FilteredComplex, FiltrationError, IndexSubsetFiltration};
use crate::matrix::Matrix;
use crate::polycomplex::Polycomplex;
use crate::spectral::{EngineError, Page, SpectralSequence, Window};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("the map does not respect the filtrations: φ(F({p}, {n})) leaves the target level")]
    Incompatible { p: i64, n: i64 },
    #[error("index subsets are not strictly nested")]
    NotNested,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// A family of bidegree-(0,0) cell maps, one per page, commuting with the
/// differentials on both sides.
#[derive(Clone, Debug)]
pub struct SSMorphism {
    source: SpectralSequence,
    target: SpectralSequence,
    /// maps[r][(p, q)]: matrix from the source (p, q) cell of page r to the
    /// target one, over the union window
    maps: Vec<BTreeMap<(i64, i64), Matrix>>,
    source_pages: Vec<Page>,
    target_pages: Vec<Page>,
}

impl SSMorphism {
    pub fn source(&self) -> &SpectralSequence {
        &self.source
    }

    pub fn target(&self) -> &SpectralSequence {
        &self.target
    }

    /// Number of computed page levels (0..=last).
    pub fn pages_computed(&self) -> usize {
        self.maps.len()
    }

    pub fn map(&self, r: usize, p: i64, q: i64) -> Option<&Matrix> {
        self.maps.get(r).and_then(|m| m.get(&(p, q)))
    }

    pub fn maps_at(&self, r: usize) -> Option<&BTreeMap<(i64, i64), Matrix>> {
        self.maps.get(r)
    }

    pub fn source_page(&self, r: usize) -> Option<&Page> {
        self.source_pages.get(r)
    }

    pub fn target_page(&self, r: usize) -> Option<&Page> {
        self.target_pages.get(r)
    }
}

/// The morphism of spectral sequences induced by a cochain map that respects
/// the filtrations. Compatibility φ(F(p, n)) ⊆ F'(p, n) is membership-verified
/// for every stored level before anything is computed.
pub fn induced_morphism(
    phi: &CochainMap,
    f_src: &FilteredComplex,
    f_tgt: &FilteredComplex,
) -> Result<SSMorphism, MorphismError> {
    phi.validate()?;
    let n_window = f_src.complex().max_degree().max(f_tgt.complex().max_degree());
    for n in 0..=n_window.max(-1) {
        let levels = f_src.stored_levels(n).max(f_tgt.stored_levels(n)) as i64;
        for p in 0..levels {
            let image = phi
                .phi(n)
                .mul(f_src.filt(p, n).basis())
                .map_err(|e| MorphismError::Internal(e.to_string()))?;
            let target = f_tgt.filt(p, n);
            for j in 0..image.cols() {
                if !target.contains_vector(&image.column(j)) {
                    return Err(MorphismError::Incompatible { p, n });
                }
            }
        }
    }

    let ss_src = SpectralSequence::compute(f_src, None)?;
    let ss_tgt = SpectralSequence::compute(f_tgt, None)?;
    let window = Window {
        p_max: ss_src.window().p_max.max(ss_tgt.window().p_max),
        n_max: ss_src.window().n_max.max(ss_tgt.window().n_max),
    };
    let last = ss_src.r_stab().max(ss_tgt.r_stab()).max(2);

    let source_pages = crate::spectral::compute_page_stack(f_src, &window, last)?;
    let target_pages = crate::spectral::compute_page_stack(f_tgt, &window, last)?;
    let mut maps = Vec::with_capacity(last + 1);
    for r in 0..=last {
        let src_page = &source_pages[r];
        let tgt_page = &target_pages[r];
        let mut level = BTreeMap::new();
        for (&(p, q), cell) in src_page.cells() {
            let target_cell = tgt_page
                .cell(p, q)
                .ok_or_else(|| MorphismError::Internal("windows disagree".into()))?;
            let m = crate::subspace::induced_map(&cell.sq, &target_cell.sq, &phi.phi(p + q))
                .map_err(|e| {
                    MorphismError::Internal(format!("cell map at r = {r}, ({p}, {q}): {e}"))
                })?;
            level.insert((p, q), m);
        }
        // commutation with the differentials on both sides
        for (&(p, q), f_cell) in &level {
            let (tp, tq) = (p + r as i64, q - r as i64 + 1);
            let d_src = src_page.d_at(p, q).expect("materialized");
            let d_tgt = tgt_page.d_at(p, q).expect("materialized");
            let f_target_cell = match level.get(&(tp, tq)) {
                Some(m) => m.clone(),
                None => {
                    // target of d_r fell outside the window: both sides are
                    // zero-dimensional there
                    Matrix::zero(phi.source().field(), d_tgt.rows(), d_src.rows())
                }
            };
            let lhs = f_target_cell
                .mul(d_src)
                .map_err(|e| MorphismError::Internal(e.to_string()))?;
            let rhs = d_tgt
                .mul(f_cell)
                .map_err(|e| MorphismError::Internal(e.to_string()))?;
            if lhs != rhs {
                return Err(MorphismError::Internal(format!(
                    "cell maps fail to commute with d_{r} at ({p}, {q})"
                )));
            }
        }
        maps.push(level);
    }
    Ok(SSMorphism {
        source: ss_src,
        target: ss_tgt,
        maps,
        source_pages,
        target_pages,
    })
}

/// The morphism between the spectral sequences of two nested index-subset
/// filtrations A ⊂ B, induced by the identity of the total complex viewed as
/// a filtered map (F_A ⊆ F_B).
pub fn inclusion_morphism(
    v: &Polycomplex,
    a: &IndexSubsetFiltration,
    b: &IndexSubsetFiltration,
) -> Result<SSMorphism, MorphismError> {
    if !a.is_strict_subset_of(b) {
        return Err(MorphismError::NotNested);
    }
    let t = v.totalize();
    let fc_a = apply_filtration(&t, a)?;
    let fc_b = apply_filtration(&t, b)?;
    let phi = CochainMap::identity(t.underlying());
    induced_morphism(&phi, &fc_a, &fc_b)
}
