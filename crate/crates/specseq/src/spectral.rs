//! The page engine: E_r cells, d_r differentials, stabilization, E_∞,
//! convergence verification, and edge morphisms.
//!
//! Pages are realized in closed form. For a bounded decreasing filtration F
//! on a complex (C, d), the cell at (p, q) of page r is the subquotient
//!
//! ```text
//!   Z_r(p,q) = F(p, n) ∩ d⁻¹(F(p+r, n+1))            with n = p + q,
//!   B_r(p,q) = Z_{r-1}(p+1, q-1) + d·Z_{r-1}(p-r+1, q+r-2),
//!   E_r(p,q) = Z_r(p,q) / B_r(p,q),
//! ```
//!
//! with F(p) = F(0) for p < 0 and F levels past the stored window repeating
//! the last stored subspace. The differential d_r is computed by applying the
//! ambient d to the stored representatives and projecting into the target
//! cell; well-definedness is verified on every call, never assumed. The
//! equivalence of this closed form with the recursive description
//! E_{r+1} ≅ H(E_r, d_r) is not taken on faith either: after each page the
//! engine asserts, cell by cell, that
//! `dim E_{r+1} = dim ker d_r − dim im d_r`, and reports an internal
//! consistency failure otherwise.

use crate::cochain::CohomologyResult;
use crate::field::FieldSpec;
use crate::filtration::{Boundedness, FilteredComplex, FiltrationError};
use crate::matrix::Matrix;
use crate::polycomplex::Polycomplex;
use crate::subspace::{image_basis, induced_map, Subquotient};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("the filtration is not bounded within its window; the convergence theorem does not apply")]
    Unbounded,
    #[error("edge morphisms require a canonically bounded filtration")]
    NotCanonicallyBounded,
    #[error("this operation requires a bicomplex (k = 2), got k = {0}")]
    NotBicomplex(usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
}

/// The lattice region over which cells are materialized.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct Window {
    pub p_max: i64,
    pub n_max: i64,
}

impl Window {
    /// Window of a bounded filtered complex: filtration levels up to the
    /// largest vanishing level, degrees up to the support window.
    pub fn of(fc: &FilteredComplex) -> Result<Window, EngineError> {
        let n_max = fc.complex().max_degree();
        let mut p_max = 0i64;
        for n in 0..=n_max.max(0) {
            match fc.vanishing_level(n) {
                Some(p) => p_max = p_max.max(p),
                None => return Err(EngineError::Unbounded),
            }
        }
        Ok(Window { p_max, n_max })
    }

    /// All (p, q) pairs with 0 ≤ p ≤ p_max and 0 ≤ p + q ≤ n_max.
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for n in 0..=self.n_max.max(-1) {
            for p in 0..=self.p_max {
                out.push((p, n - p));
            }
        }
        out
    }

    pub fn contains(&self, p: i64, q: i64) -> bool {
        p >= 0 && p <= self.p_max && (p + q) >= 0 && (p + q) <= self.n_max
    }

    /// Past this page index every cell in the window has stabilized.
    pub fn stabilization_bound(&self) -> usize {
        self.cells()
            .iter()
            .map(|&(p, q)| p.max(q + 1) + 1)
            .max()
            .unwrap_or(1)
            .max(1) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageCell {
    pub p: i64,
    pub q: i64,
    pub r: usize,
    pub sq: Subquotient,
}

impl PageCell {
    pub fn dim(&self) -> usize {
        self.sq.dim()
    }
}

/// One page: its cells over the window and the d_r matrix out of each cell.
#[derive(Clone, Debug)]
pub struct Page {
    pub r: usize,
    cells: BTreeMap<(i64, i64), PageCell>,
    d: BTreeMap<(i64, i64), Matrix>,
}

impl Page {
    pub fn cell(&self, p: i64, q: i64) -> Option<&PageCell> {
        self.cells.get(&(p, q))
    }

    pub fn dim(&self, p: i64, q: i64) -> usize {
        self.cell(p, q).map_or(0, PageCell::dim)
    }

    /// The differential leaving (p, q), of bidegree (r, 1 − r).
    pub fn d_at(&self, p: i64, q: i64) -> Option<&Matrix> {
        self.d.get(&(p, q))
    }

    pub fn cells(&self) -> impl Iterator<Item = (&(i64, i64), &PageCell)> {
        self.cells.iter()
    }

    pub fn differentials(&self) -> impl Iterator<Item = (&(i64, i64), &Matrix)> {
        self.d.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.cells.values().all(|c| c.dim() == 0)
    }

    fn same_cells_as(&self, other: &Page) -> bool {
        self.cells.len() == other.cells.len()
            && self
                .cells
                .iter()
                .all(|(k, c)| other.cells.get(k).map_or(false, |o| o.sq == c.sq))
    }
}

struct Engine<'a> {
    fc: &'a FilteredComplex,
    // memoized subspaces, keyed by filtration-level indices clamped the same
    // way the level accessor clamps them
    preimages: std::cell::RefCell<BTreeMap<(i64, i64), crate::subspace::Subspace>>,
    cycles: std::cell::RefCell<BTreeMap<(i64, i64, i64), crate::subspace::Subspace>>,
}

impl<'a> Engine<'a> {
    fn new(fc: &'a FilteredComplex) -> Self {
        Engine {
            fc,
            preimages: Default::default(),
            cycles: Default::default(),
        }
    }

    fn internal<T>(r: Result<T, impl std::fmt::Display>, what: &str) -> Result<T, EngineError> {
        r.map_err(|e| EngineError::Internal(format!("{what}: {e}")))
    }

    /// Clamps a level index to the stored range of degree `n`, mirroring the
    /// accessor so memo keys collapse to distinct subspaces only.
    fn clamp(&self, p: i64, n: i64) -> i64 {
        let len = self.fc.stored_levels(n) as i64;
        if p < 0 {
            -1
        } else {
            p.min((len - 1).max(0))
        }
    }

    /// d⁻¹(F(s, n+1)) as a subspace of degree n, memoized.
    fn pre(&self, s: i64, n: i64) -> Result<crate::subspace::Subspace, EngineError> {
        let key = (self.clamp(s, n + 1), n);
        if let Some(hit) = self.preimages.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let target = self.fc.filt(s, n + 1);
        let pre = Self::internal(
            crate::subspace::preimage(&self.fc.complex().d(n), &target),
            "preimage of a filtration level",
        )?;
        self.preimages.borrow_mut().insert(key, pre.clone());
        Ok(pre)
    }

    /// Z_r(p, q) = F(p, n) ∩ d⁻¹(F(p+r, n+1)) for n = p + q. `r` may be −1,
    /// in which case F(p+r) engulfs everything relevant. Memoized.
    fn z(&self, p: i64, n: i64, r: i64) -> Result<crate::subspace::Subspace, EngineError> {
        let key = (self.clamp(p, n), self.clamp(p + r, n + 1), n);
        if let Some(hit) = self.cycles.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let f_p = self.fc.filt(p, n);
        let pre = self.pre(p + r, n)?;
        let z = Self::internal(f_p.intersect(&pre), "intersection with a filtration level")?;
        self.cycles.borrow_mut().insert(key, z.clone());
        Ok(z)
    }

    fn cell(&self, p: i64, q: i64, r: usize) -> Result<Subquotient, EngineError> {
        let n = p + q;
        let r = r as i64;
        let z = self.z(p, n, r)?;
        let z_in = self.z(p + 1, n, r - 1)?;
        let z_out = self.z(p - r + 1, n - 1, r - 1)?;
        let image = image_basis(&Self::internal(
            self.fc.complex().d(n - 1).mul(z_out.basis()),
            "differential applied to older cycles",
        )?);
        let b = Self::internal(z_in.sum(&image), "boundary subspace sum")?;
        Self::internal(Subquotient::new(z, b), "page cell subquotient")
    }

    fn page(&self, window: &Window, r: usize) -> Result<Page, EngineError> {
        let mut cells = BTreeMap::new();
        for (p, q) in window.cells() {
            let sq = self.cell(p, q, r)?;
            cells.insert((p, q), PageCell { p, q, r, sq });
        }
        let mut d = BTreeMap::new();
        for (&(p, q), cell) in &cells {
            let (tp, tq) = (p + r as i64, q - r as i64 + 1);
            let target = match cells.get(&(tp, tq)) {
                Some(c) => c.sq.clone(),
                None => self.cell(tp, tq, r)?,
            };
            let matrix = Engine::internal(
                induced_map(&cell.sq, &target, &self.fc.complex().d(p + q)),
                "page differential",
            )?;
            d.insert((p, q), matrix);
        }
        Ok(Page { r, cells, d })
    }
}

/// Closed-form computation of a single page over the window. Usable for any
/// r, including pages beyond the stabilization index.
pub fn compute_page(fc: &FilteredComplex, window: &Window, r: usize) -> Result<Page, EngineError> {
    Engine::new(fc).page(window, r)
}

/// Pages 0..=last over the window, sharing the memoized cycle subspaces
/// across pages. Prefer this over repeated [`compute_page`] calls.
pub fn compute_page_stack(
    fc: &FilteredComplex,
    window: &Window,
    last: usize,
) -> Result<Vec<Page>, EngineError> {
    let engine = Engine::new(fc);
    (0..=last).map(|r| engine.page(window, r)).collect()
}

/// A computed spectral sequence: pages 0..=r_stab, the stabilized page, and
/// the window they live on.
#[derive(Clone, Debug)]
pub struct SpectralSequence {
    field: FieldSpec,
    window: Window,
    pages: Vec<Page>,
    r_stab: usize,
    e_infinity: BTreeMap<(i64, i64), PageCell>,
}

impl SpectralSequence {
    /// Runs the page recursion of a validated, bounded filtered complex until
    /// stabilization. Refuses unbounded filtrations. If `r_max` is given the
    /// stored page list is truncated there (stabilization data is still
    /// computed).
    pub fn compute(fc: &FilteredComplex, r_max: Option<usize>) -> Result<Self, EngineError> {
        if !fc.classify().is_bounded() {
            return Err(EngineError::Unbounded);
        }
        let window = Window::of(fc)?;
        let bound = window.stabilization_bound();
        let engine = Engine::new(fc);
        let mut pages = Vec::with_capacity(bound + 2);
        for r in 0..=bound + 1 {
            pages.push(engine.page(&window, r)?);
        }
        verify_page_recursion(&pages, &window)?;

        // least r from which all later computed pages are identical
        let mut r_stab = pages.len() - 1;
        while r_stab > 0
            && pages[r_stab - 1].same_cells_as(&pages[r_stab])
            && pages[r_stab - 1].d.values().all(Matrix::is_zero)
        {
            r_stab -= 1;
        }
        if !pages[pages.len() - 2].same_cells_as(&pages[pages.len() - 1]) {
            return Err(EngineError::Internal(
                "pages past the stabilization bound still move".into(),
            ));
        }
        let e_infinity = pages[pages.len() - 1].cells.clone();
        pages.truncate(r_stab.min(r_max.unwrap_or(r_stab)) + 1);
        Ok(SpectralSequence {
            field: fc.field(),
            window,
            pages,
            r_stab,
            e_infinity,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn r_stab(&self) -> usize {
        self.r_stab
    }

    /// Stored pages, r = 0 ..= r_stab (or the requested truncation).
    pub fn pages(&self) -> &[Page] {
        &self.pages
    }

    pub fn page(&self, r: usize) -> Option<&Page> {
        self.pages.get(r)
    }

    pub fn e_infinity(&self) -> impl Iterator<Item = (&(i64, i64), &PageCell)> {
        self.e_infinity.iter()
    }

    pub fn e_infinity_cell(&self, p: i64, q: i64) -> Option<&PageCell> {
        self.e_infinity.get(&(p, q))
    }

    pub fn e_infinity_dim(&self, p: i64, q: i64) -> usize {
        self.e_infinity.get(&(p, q)).map_or(0, PageCell::dim)
    }
}

/// Asserts `dim E_{r+1} = dim ker d_r − dim im d_r` for every cell of every
/// consecutive pair of computed pages.
fn verify_page_recursion(pages: &[Page], window: &Window) -> Result<(), EngineError> {
    for r in 0..pages.len() - 1 {
        let page = &pages[r];
        let next = &pages[r + 1];
        for (&(p, q), cell) in &page.cells {
            // d_r composes to zero
            let (tp, tq) = (p + r as i64, q - r as i64 + 1);
            if let (Some(out), Some(into)) = (page.d.get(&(tp, tq)), page.d.get(&(p, q))) {
                let composite = out
                    .mul(into)
                    .map_err(|e| EngineError::Internal(format!("d_r composition: {e}")))?;
                if !composite.is_zero() {
                    return Err(EngineError::Internal(format!(
                        "d_{r} ∘ d_{r} ≠ 0 out of ({p}, {q})"
                    )));
                }
            }
            let rank_out = page.d.get(&(p, q)).map_or(0, Matrix::rank);
            let (sp, sq_) = (p - r as i64, q + r as i64 - 1);
            let rank_in = if window.contains(sp, sq_) {
                page.d.get(&(sp, sq_)).map_or(0, Matrix::rank)
            } else {
                0
            };
            let expected = cell.dim() - rank_out - rank_in;
            let got = next.dim(p, q);
            if got != expected {
                return Err(EngineError::Internal(format!(
                    "page recursion mismatch at r = {r}, (p, q) = ({p}, {q}): \
                     closed form gives {got}, cohomology of d_{r} gives {expected}"
                )));
            }
        }
    }
    Ok(())
}

/// The filtration induced on cohomology, graded: the piece at (p, q) is
/// F^p H^{p+q} / F^{p+1} H^{p+q}, with F^p H^n realized as the classes of
/// cocycles lying in F(p, n).
#[derive(Clone, Debug)]
pub struct GradedCohomology {
    h: CohomologyResult,
    pieces: BTreeMap<(i64, i64), Subquotient>,
}

impl GradedCohomology {
    pub fn h(&self) -> &CohomologyResult {
        &self.h
    }

    pub fn piece(&self, p: i64, q: i64) -> Option<&Subquotient> {
        self.pieces.get(&(p, q))
    }

    pub fn dim(&self, p: i64, q: i64) -> usize {
        self.pieces.get(&(p, q)).map_or(0, Subquotient::dim)
    }

    pub fn pieces(&self) -> impl Iterator<Item = (&(i64, i64), &Subquotient)> {
        self.pieces.iter()
    }
}

pub fn associated_graded_h(fc: &FilteredComplex) -> Result<GradedCohomology, EngineError> {
    if !fc.classify().is_bounded() {
        return Err(EngineError::Unbounded);
    }
    let window = Window::of(fc)?;
    let h = fc.complex().cohomology();
    let mut pieces = BTreeMap::new();
    for n in 0..=window.n_max.max(-1) {
        let group = h.group(n).expect("degree inside the window");
        let filtered_h = |p: i64| -> Result<crate::subspace::Subspace, EngineError> {
            let met = group
                .z()
                .intersect(&fc.filt(p, n))
                .map_err(|e| EngineError::Internal(format!("graded cohomology: {e}")))?;
            met.sum(group.b())
                .map_err(|e| EngineError::Internal(format!("graded cohomology: {e}")))
        };
        let mut upper = filtered_h(0)?;
        for p in 0..=window.p_max {
            let lower = filtered_h(p + 1)?;
            let piece = Subquotient::new(upper.clone(), lower.clone())
                .map_err(|e| EngineError::Internal(format!("graded cohomology piece: {e}")))?;
            pieces.insert((p, n - p), piece);
            upper = lower;
        }
    }
    Ok(GradedCohomology { h, pieces })
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Verdict {
    Converged,
    Mismatch,
}

/// Dimension comparison of E_∞ against the associated graded cohomology.
#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub h_dims: Vec<usize>,
    /// per (p, q): (dim E_∞, dim F^p H^{p+q} / F^{p+1} H^{p+q})
    pub cells: BTreeMap<(i64, i64), (usize, usize)>,
    pub verdict: Verdict,
}

impl ConvergenceReport {
    pub fn converged(&self) -> bool {
        self.verdict == Verdict::Converged
    }
}

/// Verifies convergence of a computed spectral sequence against the
/// independently computed graded cohomology of the same filtered complex.
/// The theorem guarantees the verdict for bounded filtrations; a mismatch is
/// reported, never silently accepted.
pub fn check_convergence(
    ss: &SpectralSequence,
    fc: &FilteredComplex,
) -> Result<ConvergenceReport, EngineError> {
    let graded = associated_graded_h(fc)?;
    let h_dims = graded.h().dims().to_vec();
    let mut cells = BTreeMap::new();
    let mut ok = true;
    for (p, q) in ss.window.cells() {
        let e_inf = ss.e_infinity_dim(p, q);
        let gr = graded.dim(p, q);
        if e_inf != gr {
            ok = false;
        }
        cells.insert((p, q), (e_inf, gr));
    }
    for n in 0..=ss.window.n_max.max(-1) {
        let total: usize = (0..=ss.window.p_max)
            .map(|p| ss.e_infinity_dim(p, n - p))
            .sum();
        if total != h_dims.get(n as usize).copied().unwrap_or(0) {
            ok = false;
        }
    }
    Ok(ConvergenceReport {
        h_dims,
        cells,
        verdict: if ok { Verdict::Converged } else { Verdict::Mismatch },
    })
}

/// The two canonical corner maps of a first-quadrant spectral sequence from a
/// canonically bounded filtration: H^n → E₂^{0,n} (projection onto E_∞^{0,n}
/// followed by the tower of inclusions) and E₂^{n,0} → H^n (the quotient tower
/// followed by the inclusion E_∞^{n,0} ≅ F^n H^n ⊆ H^n).
#[derive(Clone, Debug)]
pub struct EdgeMorphisms {
    /// index n: matrix of H^n → E₂^{0,n}, shaped dim E₂^{0,n} × dim H^n
    pub to_corner: Vec<Matrix>,
    /// index n: matrix of E₂^{n,0} → H^n, shaped dim H^n × dim E₂^{n,0}
    pub from_corner: Vec<Matrix>,
}

pub fn edge_morphisms(
    ss: &SpectralSequence,
    fc: &FilteredComplex,
) -> Result<EdgeMorphisms, EngineError> {
    if fc.classify() != Boundedness::CanonicallyBounded {
        return Err(EngineError::NotCanonicallyBounded);
    }
    let window = ss.window;
    let e2 = compute_page(fc, &window, 2)?;
    let h = fc.complex().cohomology();
    let internal = |e: crate::matrix::LinalgError, what: &str| {
        EngineError::Internal(format!("{what}: {e}"))
    };
    let engine = Engine::new(fc);
    let stable_r = window.stabilization_bound() + 1;
    let e_inf_at = |p: i64, q: i64| -> Result<Subquotient, EngineError> {
        match ss.e_infinity_cell(p, q) {
            Some(c) => Ok(c.sq.clone()),
            None => engine.cell(p, q, stable_r),
        }
    };
    let e2_at = |p: i64, q: i64| -> Result<Subquotient, EngineError> {
        match e2.cell(p, q) {
            Some(c) => Ok(c.sq.clone()),
            None => engine.cell(p, q, 2),
        }
    };
    let mut to_corner = Vec::new();
    let mut from_corner = Vec::new();
    for n in 0..=window.n_max.max(-1) {
        let id = Matrix::identity(fc.field(), fc.complex().dim(n));
        let h_cell = h.group(n).expect("degree inside the window");

        let e_inf_row = e_inf_at(0, n)?;
        let e2_row = e2_at(0, n)?;
        let surj = induced_map(h_cell, &e_inf_row, &id)
            .map_err(|e| internal(e, "H^n onto the stable corner cell"))?;
        let incl = induced_map(&e_inf_row, &e2_row, &id)
            .map_err(|e| internal(e, "stable corner cell into page two"))?;
        to_corner.push(incl.mul(&surj).map_err(|e| internal(e, "edge composite"))?);

        let e_inf_col = e_inf_at(n, 0)?;
        let e2_col = e2_at(n, 0)?;
        let surj2 = induced_map(&e2_col, &e_inf_col, &id)
            .map_err(|e| internal(e, "page two onto the stable corner cell"))?;
        let incl2 = induced_map(&e_inf_col, h_cell, &id)
            .map_err(|e| internal(e, "stable corner cell into H^n"))?;
        from_corner.push(incl2.mul(&surj2).map_err(|e| internal(e, "edge composite"))?);
    }
    Ok(EdgeMorphisms {
        to_corner,
        from_corner,
    })
}

/// Both identifications of the second page of a bicomplex: for each (p, q),
/// the engine dimension next to an independently computed double-cohomology
/// dimension.
#[derive(Clone, Debug)]
pub struct E2Identification {
    /// column filtration: (dim E₂^{p,q}, dim H_h^p(H_v^q)) per (p, q)
    pub column: BTreeMap<(i64, i64), (usize, usize)>,
    /// row filtration: (dim E₂^{p,q}, dim H_v^p(H_h^q)) per (p, q)
    pub row: BTreeMap<(i64, i64), (usize, usize)>,
}

impl E2Identification {
    pub fn all_match(&self) -> bool {
        self.column.values().all(|&(a, b)| a == b) && self.row.values().all(|&(a, b)| a == b)
    }
}

/// Compares the engine's second page for both index filtrations of a
/// bicomplex against cohomology-of-cohomology computed directly on the cells,
/// without going through the page machinery.
pub fn bicomplex_e2_identification(v: &Polycomplex) -> Result<E2Identification, EngineError> {
    if v.k() != 2 {
        return Err(EngineError::NotBicomplex(v.k()));
    }
    let t = v.totalize();
    let menu = crate::filtration::canonical_filtrations(v);
    let internal = |e: String| EngineError::Internal(e);

    // bounding box of the support
    let max0 = v.support().map(|x| x.coord(0)).max().map_or(-1i64, |m| m as i64);
    let max1 = v.support().map(|x| x.coord(1)).max().map_or(-1i64, |m| m as i64);

    // direct double cohomology: first along `inner`, then induced maps along
    // `outer`
    let double = |inner: usize, outer: usize, imax: i64, omax: i64| -> Result<BTreeMap<(i64, i64), usize>, EngineError> {
        let md = |o: i64, i: i64| -> crate::polycomplex::MultiDegree {
            let mut c = vec![0usize; 2];
            c[outer - 1] = o as usize;
            c[inner - 1] = i as usize;
            crate::polycomplex::MultiDegree::new(c)
        };
        // inner cohomology subquotients per cell
        let mut inner_h: BTreeMap<(i64, i64), Subquotient> = BTreeMap::new();
        for o in 0..=omax.max(-1) {
            for i in 0..=imax.max(-1) {
                let out_m = v.partial(inner, &md(o, i));
                let in_m = if i > 0 {
                    v.partial(inner, &md(o, i - 1))
                } else {
                    Matrix::zero(v.field(), v.dim(&md(o, 0)), 0)
                };
                let sq = Subquotient::new(
                    crate::subspace::kernel_basis(&out_m),
                    image_basis(&in_m),
                )
                .map_err(|e| internal(format!("inner cohomology: {e}")))?;
                inner_h.insert((o, i), sq);
            }
        }
        // outer-induced complexes on inner cohomology, then their cohomology
        let mut dims = BTreeMap::new();
        for i in 0..=imax.max(-1) {
            let groups: Vec<&Subquotient> = (0..=omax.max(-1))
                .map(|o| inner_h.get(&(o, i)).expect("materialized"))
                .collect();
            let maps: Vec<Matrix> = (0..groups.len())
                .map(|o| {
                    let src = groups[o];
                    let dst_sq;
                    let dst = if o + 1 < groups.len() {
                        groups[o + 1]
                    } else {
                        dst_sq = Subquotient::zero(v.field(), 0);
                        &dst_sq
                    };
                    induced_map(src, dst, &v.partial(outer, &md(o as i64, i)))
                        .map_err(|e| internal(format!("outer induced map: {e}")))
                })
                .collect::<Result<_, _>>()?;
            let complex = crate::cochain::CochainComplex::new(
                v.field(),
                groups.iter().map(|g| g.dim()).collect(),
                maps,
            )
            .map_err(|e| internal(format!("outer complex: {e}")))?;
            complex
                .validate()
                .map_err(|e| internal(format!("outer complex axiom: {e}")))?;
            for (o, h_dim) in complex.cohomology().dims().into_iter().enumerate() {
                dims.insert((o as i64, i), h_dim);
            }
        }
        Ok(dims)
    };

    let mut result = E2Identification {
        column: BTreeMap::new(),
        row: BTreeMap::new(),
    };
    for a in &menu {
        let fc = crate::filtration::apply_filtration(&t, a)?;
        let window = Window::of(&fc)?;
        let e2 = compute_page(&fc, &window, 2)?;
        let first = *a.indices().iter().next().expect("nonempty");
        let (table, direct) = if first == 1 {
            (&mut result.column, double(2, 1, max1, max0)?)
        } else {
            (&mut result.row, double(1, 2, max0, max1)?)
        };
        for (p, q) in window.cells() {
            if p < 0 || q < 0 {
                continue;
            }
            let engine_dim = e2.dim(p, q);
            let direct_dim = direct.get(&(p, q)).copied().unwrap_or(0);
            table.insert((p, q), (engine_dim, direct_dim));
        }
    }
    Ok(result)
}
