//! Six-term kernel/cokernel extraction from a two-row diagram with exact
//! rows, run through the page engine.
//!
//! The input is the diagram
//!
//! ```text
//!   0 → D → E → F → 0
//!       ↑α  ↑β  ↑γ
//!   0 → A → B → C → 0
//! ```
//!
//! with exact rows and commuting squares. The rows become the two rows of a
//! bicomplex (after the sign twist that turns commuting squares into
//! anticommuting ones; over GF(2) the twist is a no-op), the engine runs both
//! index filtrations, and the second page of the column filtration contains
//! exactly two potentially nonzero corner cells joined by an isomorphism d₂.
//! Inverting that isomorphism yields the connecting map δ, completing the
//! exact sequence 0 → ker α → ker β → ker γ → coker α → coker β → coker γ → 0.
//! Exactness at all six spots is verified on every run, and an independent
//! diagram-chase construction of δ is available for cross-checking.

use crate::field::FieldSpec;
use crate::filtration::{apply_filtration, IndexSubsetFiltration};
use crate::matrix::{LinalgError, Matrix};
use crate::polycomplex::{MultiDegree, Polycomplex, PolyError};
use crate::spectral::{check_convergence, EngineError, SpectralSequence};
use crate::subspace::{image_basis, induced_map, kernel_basis, Subquotient, Subspace};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SnakeError {
    #[error("matrix {name} has shape {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    Shape {
        name: &'static str,
        want_rows: usize,
        want_cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("the {which} row is not exact at {at}")]
    RowNotExact { which: &'static str, at: &'static str },
    #[error("the square over {over} does not commute")]
    SquareNotCommuting { over: &'static str },
    #[error("matrices use different fields")]
    FieldMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Two short exact rows joined by three vertical maps.
#[derive(Clone, Debug)]
pub struct SnakeDiagram {
    field: FieldSpec,
    alpha: Matrix, // A → D
    beta: Matrix,  // B → E
    gamma: Matrix, // C → F
    bottom_ab: Matrix,
    bottom_bc: Matrix,
    top_de: Matrix,
    top_ef: Matrix,
}

impl SnakeDiagram {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: FieldSpec,
        alpha: Matrix,
        beta: Matrix,
        gamma: Matrix,
        bottom_ab: Matrix,
        bottom_bc: Matrix,
        top_de: Matrix,
        top_ef: Matrix,
    ) -> Result<Self, SnakeError> {
        let all = [
            &alpha, &beta, &gamma, &bottom_ab, &bottom_bc, &top_de, &top_ef,
        ];
        if all.iter().any(|m| m.field() != field) {
            return Err(SnakeError::FieldMismatch);
        }
        let (a, b, c) = (bottom_ab.cols(), bottom_bc.cols(), bottom_bc.rows());
        let (d, e, f) = (top_de.cols(), top_ef.cols(), top_ef.rows());
        let checks: [(&'static str, &Matrix, usize, usize); 5] = [
            ("bottom A→B", &bottom_ab, b, a),
            ("alpha", &alpha, d, a),
            ("beta", &beta, e, b),
            ("gamma", &gamma, f, c),
            ("top D→E", &top_de, e, d),
        ];
        for (name, m, want_rows, want_cols) in checks {
            if m.rows() != want_rows || m.cols() != want_cols {
                return Err(SnakeError::Shape {
                    name,
                    want_rows,
                    want_cols,
                    got_rows: m.rows(),
                    got_cols: m.cols(),
                });
            }
        }
        Ok(SnakeDiagram {
            field,
            alpha,
            beta,
            gamma,
            bottom_ab,
            bottom_bc,
            top_de,
            top_ef,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn gamma(&self) -> &Matrix {
        &self.gamma
    }

    pub fn bottom_ab(&self) -> &Matrix {
        &self.bottom_ab
    }

    pub fn bottom_bc(&self) -> &Matrix {
        &self.bottom_bc
    }

    pub fn top_de(&self) -> &Matrix {
        &self.top_de
    }

    pub fn top_ef(&self) -> &Matrix {
        &self.top_ef
    }

    pub fn dims(&self) -> [usize; 6] {
        [
            self.bottom_ab.cols(),
            self.bottom_bc.cols(),
            self.bottom_bc.rows(),
            self.top_de.cols(),
            self.top_ef.cols(),
            self.top_ef.rows(),
        ]
    }

    /// Checks exactness of both rows and commutativity of both squares,
    /// naming the first failure.
    pub fn validate(&self) -> Result<(), SnakeError> {
        let exact_row = |which: &'static str,
                         inj: &Matrix,
                         surj: &Matrix,
                         names: (&'static str, &'static str, &'static str)|
         -> Result<(), SnakeError> {
            if inj.rank() != inj.cols() {
                return Err(SnakeError::RowNotExact { which, at: names.0 });
            }
            if kernel_basis(surj) != image_basis(inj) {
                return Err(SnakeError::RowNotExact { which, at: names.1 });
            }
            if surj.rank() != surj.rows() {
                return Err(SnakeError::RowNotExact { which, at: names.2 });
            }
            Ok(())
        };
        exact_row("bottom", &self.bottom_ab, &self.bottom_bc, ("A", "B", "C"))?;
        exact_row("top", &self.top_de, &self.top_ef, ("D", "E", "F"))?;

        let left_lhs = self.beta.mul(&self.bottom_ab).expect("shapes checked");
        let left_rhs = self.top_de.mul(&self.alpha).expect("shapes checked");
        if left_lhs != left_rhs {
            return Err(SnakeError::SquareNotCommuting { over: "A" });
        }
        let right_lhs = self.gamma.mul(&self.bottom_bc).expect("shapes checked");
        let right_rhs = self.top_ef.mul(&self.beta).expect("shapes checked");
        if right_lhs != right_rhs {
            return Err(SnakeError::SquareNotCommuting { over: "B" });
        }
        Ok(())
    }

    /// The two-row bicomplex carrying the diagram: the rows are ∂₁, the
    /// vertical maps are ∂₂, sign-twisted into anticommuting form.
    pub fn to_bicomplex(&self) -> Result<Polycomplex, SnakeError> {
        let [a, b, c, d, e, f] = self.dims();
        let md = |x: usize, y: usize| MultiDegree::new(vec![x, y]);
        let cells = vec![
            (md(0, 0), a),
            (md(1, 0), b),
            (md(2, 0), c),
            (md(0, 1), d),
            (md(1, 1), e),
            (md(2, 1), f),
        ];
        let diffs = vec![
            (1, md(0, 0), self.bottom_ab.clone()),
            (1, md(1, 0), self.bottom_bc.clone()),
            (1, md(0, 1), self.top_de.clone()),
            (1, md(1, 1), self.top_ef.clone()),
            (2, md(0, 0), self.alpha.clone()),
            (2, md(1, 0), self.beta.clone()),
            (2, md(2, 0), self.gamma.clone()),
        ];
        let commuting = Polycomplex::new(2, self.field, cells, diffs)?;
        let twisted = commuting.anticommutify(2, 1)?;
        twisted.validate()?;
        Ok(twisted)
    }

    /// The connecting map by the classical chase, independent of the page
    /// engine: lift a kernel element of γ through the bottom row, push it by
    /// β, pull it back through the top row, and project to coker α. Columns
    /// are indexed by the canonical kernel basis of γ, rows by the canonical
    /// quotient coordinates of coker α.
    pub fn connecting_by_chase(&self) -> Result<Matrix, SnakeError> {
        let ker_gamma = kernel_basis(&self.gamma);
        let coker_alpha = cokernel(&self.alpha).map_err(|e| SnakeError::Internal(e.to_string()))?;
        let lifts = self
            .bottom_bc
            .solve(ker_gamma.basis())
            .ok_or_else(|| SnakeError::Internal("kernel elements of γ must lift".into()))?;
        let pushed = self.beta.mul(&lifts).expect("shapes agree");
        let pulled = self
            .top_de
            .solve(&pushed)
            .ok_or_else(|| SnakeError::Internal("β of a lift must pull back through the top row".into()))?;
        Ok(coker_alpha.project().mul(&pulled).expect("shapes agree"))
    }
}

/// The cokernel of a map as a subquotient of its target.
pub fn cokernel(m: &Matrix) -> Result<Subquotient, LinalgError> {
    Subquotient::new(Subspace::full(m.field(), m.rows()), image_basis(m))
}

/// Everything the snake extraction produces: the six spaces, the five maps of
/// the exact sequence, and the engine evidence (the row filtration's first
/// page vanishes and both spectral sequences converge to zero).
#[derive(Clone, Debug)]
pub struct SnakeResult {
    pub ker_alpha: Subspace,
    pub ker_beta: Subspace,
    pub ker_gamma: Subspace,
    pub coker_alpha: Subquotient,
    pub coker_beta: Subquotient,
    pub coker_gamma: Subquotient,
    /// ker α → ker β, in kernel-basis coordinates
    pub ker_ab: Matrix,
    /// ker β → ker γ
    pub ker_bc: Matrix,
    /// the connecting map ker γ → coker α
    pub delta: Matrix,
    /// coker α → coker β, in quotient coordinates
    pub coker_de: Matrix,
    /// coker β → coker γ
    pub coker_ef: Matrix,
    /// dimensions of H^n of the total complex (all zero for exact rows)
    pub total_cohomology: Vec<usize>,
    /// the row filtration's first page vanished identically
    pub row_e1_vanishes: bool,
}

impl SnakeResult {
    pub fn six_dims(&self) -> [usize; 6] {
        [
            self.ker_alpha.dim(),
            self.ker_beta.dim(),
            self.ker_gamma.dim(),
            self.coker_alpha.dim(),
            self.coker_beta.dim(),
            self.coker_gamma.dim(),
        ]
    }
}

/// Restriction of an ambient map to chosen source and target subspaces, in
/// their basis coordinates. Membership of the image is verified.
fn restrict(m: &Matrix, src: &Subspace, dst: &Subspace) -> Result<Matrix, SnakeError> {
    let image = m.mul(src.basis()).expect("shapes agree");
    dst.basis()
        .solve(&image)
        .ok_or_else(|| SnakeError::Internal("restriction leaves the target subspace".into()))
}

pub fn snake(diagram: &SnakeDiagram) -> Result<SnakeResult, SnakeError> {
    diagram.validate()?;
    let bicomplex = diagram.to_bicomplex()?;
    let t = bicomplex.totalize();
    let internal = |what: &str| SnakeError::Internal(what.to_string());

    // the row filtration: exact rows force the first page to vanish
    let row_filt = IndexSubsetFiltration::new(2, BTreeSet::from([2])).expect("proper subset");
    let fc_row = apply_filtration(&t, &row_filt).map_err(EngineError::from)?;
    let ss_row = SpectralSequence::compute(&fc_row, None)?;
    let row_e1 = crate::spectral::compute_page(&fc_row, ss_row.window(), 1)?;
    let row_e1_vanishes = row_e1.is_zero();
    if !row_e1_vanishes {
        return Err(internal("row filtration has a nonzero first page despite exact rows"));
    }
    if !check_convergence(&ss_row, &fc_row)?.converged() {
        return Err(internal("row filtration failed to converge"));
    }

    // the column filtration carries the six-term data
    let col_filt = IndexSubsetFiltration::new(2, BTreeSet::from([1])).expect("proper subset");
    let fc_col = apply_filtration(&t, &col_filt).map_err(EngineError::from)?;
    let ss_col = SpectralSequence::compute(&fc_col, None)?;
    if !check_convergence(&ss_col, &fc_col)?.converged() {
        return Err(internal("column filtration failed to converge"));
    }
    let total_cohomology = t.underlying().cohomology().dims();
    if total_cohomology.iter().any(|&d| d != 0) {
        return Err(internal("total complex of an exact-row diagram has nonzero cohomology"));
    }

    // classical six spaces and the four outer maps
    let ker_alpha = kernel_basis(diagram.alpha());
    let ker_beta = kernel_basis(diagram.beta());
    let ker_gamma = kernel_basis(diagram.gamma());
    let coker_alpha = cokernel(diagram.alpha()).map_err(|e| SnakeError::Internal(e.to_string()))?;
    let coker_beta = cokernel(diagram.beta()).map_err(|e| SnakeError::Internal(e.to_string()))?;
    let coker_gamma = cokernel(diagram.gamma()).map_err(|e| SnakeError::Internal(e.to_string()))?;
    let ker_ab = restrict(&diagram.bottom_ab, &ker_alpha, &ker_beta)?;
    let ker_bc = restrict(&diagram.bottom_bc, &ker_beta, &ker_gamma)?;
    let coker_de = induced_map(&coker_alpha, &coker_beta, &diagram.top_de)
        .map_err(|e| SnakeError::Internal(e.to_string()))?;
    let coker_ef = induced_map(&coker_beta, &coker_gamma, &diagram.top_ef)
        .map_err(|e| SnakeError::Internal(e.to_string()))?;

    // δ through the two stable corner cells of the second page; degenerate
    // diagrams can shrink the window below the corners, so widen it
    let window = crate::spectral::Window {
        p_max: ss_col.window().p_max.max(2),
        n_max: ss_col.window().n_max.max(2),
    };
    let page2 = crate::spectral::compute_page(&fc_col, &window, 2)?;
    let cell01 = page2.cell(0, 1).ok_or_else(|| internal("missing cell (0,1)"))?;
    let cell20 = page2.cell(2, 0).ok_or_else(|| internal("missing cell (2,0)"))?;
    let d2 = page2.d_at(0, 1).ok_or_else(|| internal("missing d₂"))?;
    if cell01.dim() != cell20.dim() {
        return Err(internal("the two corner cells of the second page differ in dimension"));
    }
    let delta = if cell01.dim() == 0 {
        Matrix::zero(diagram.field(), coker_alpha.dim(), ker_gamma.dim())
    } else {
        let d2_inv = d2
            .inverse()
            .ok_or_else(|| internal("d₂ between the corner cells is not invertible"))?;
        // embed ker γ into the C block of total degree 2 and project to the
        // (2, 0) cell
        let c_offset = t
            .offset(2, &MultiDegree::new(vec![2, 0]))
            .ok_or_else(|| internal("missing C block"))?;
        let t2_dim = t.underlying().dim(2);
        let mut embed = Matrix::zero(diagram.field(), t2_dim, ker_gamma.dim());
        for j in 0..ker_gamma.dim() {
            for i in 0..ker_gamma.ambient_dim() {
                embed.set(c_offset + i, j, ker_gamma.basis().entry(i, j).clone());
            }
        }
        for j in 0..embed.cols() {
            if !cell20.sq.z().contains_vector(&embed.column(j)) {
                return Err(internal("a kernel element of γ misses the (2,0) cycle space"));
            }
        }
        let to_cell20 = cell20.sq.project().mul(&embed).expect("shapes agree");
        // extract the D block of the (0, 1) representatives and project to
        // coker α
        let d_offset = t
            .offset(1, &MultiDegree::new(vec![0, 1]))
            .ok_or_else(|| internal("missing D block"))?;
        let d_dim = diagram.dims()[3];
        let rows: Vec<usize> = (d_offset..d_offset + d_dim).collect();
        let d_part = cell01.sq.reps().select_rows(&rows);
        let to_coker = coker_alpha.project().mul(&d_part).expect("shapes agree");
        to_coker
            .mul(&d2_inv)
            .and_then(|m| m.mul(&to_cell20))
            .expect("shapes agree")
    };

    // exactness at all six spots
    let verify = |ok: bool, at: &str| -> Result<(), SnakeError> {
        if ok {
            Ok(())
        } else {
            Err(SnakeError::Internal(format!(
                "extracted sequence is not exact at {at}"
            )))
        }
    };
    verify(kernel_basis(&ker_ab).is_zero(), "ker α")?;
    verify(image_basis(&ker_ab) == kernel_basis(&ker_bc), "ker β")?;
    verify(image_basis(&ker_bc) == kernel_basis(&delta), "ker γ")?;
    verify(image_basis(&delta) == kernel_basis(&coker_de), "coker α")?;
    verify(image_basis(&coker_de) == kernel_basis(&coker_ef), "coker β")?;
    verify(image_basis(&coker_ef).is_full(), "coker γ")?;

    Ok(SnakeResult {
        ker_alpha,
        ker_beta,
        ker_gamma,
        coker_alpha,
        coker_beta,
        coker_gamma,
        ker_ab,
        ker_bc,
        delta,
        coker_de,
        coker_ef,
        total_cohomology,
        row_e1_vanishes,
    })
}
