//! Subspaces in canonical form, the subspace lattice, and subquotients with
//! explicit coset representatives.
//!
//! A [`Subspace`] stores its basis in reduced column echelon form, which is
//! the unique canonical form for a given span: two subspaces are equal if and
//! only if their basis matrices are entry-wise equal. That syntactic equality
//! is what makes stabilization detection and convergence checks cheap.
//!
//! A [`Subquotient`] realizes Z/B for nested subspaces B ⊆ Z of an ambient
//! space. It keeps a representative matrix (an echelon extension of B's basis
//! to a basis of Z) and a projection matrix sending ambient coordinates of
//! elements of Z to quotient coordinates, with `project * reps = identity`.

use crate::field::{FieldSpec, Scalar};
use crate::matrix::{LinalgError, Matrix};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Matrix,       // ambient_dim x dim, reduced column echelon form
    pivots: Vec<usize>,  // pivot row of each basis column, strictly ascending
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::zero(field, ambient_dim, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonicalizes the column span of `columns` into echelon form.
    pub fn from_columns(columns: &Matrix) -> Self {
        let red = columns.transpose().rref();
        let basis = red
            .matrix
            .select_rows(&(0..red.rank).collect::<Vec<_>>())
            .transpose();
        Subspace {
            field: columns.field(),
            ambient_dim: columns.rows(),
            basis,
            pivots: red.pivots,
        }
    }

    /// Subspace spanned by the given standard basis vectors.
    pub fn coordinate_span(field: FieldSpec, ambient_dim: usize, coords: &[usize]) -> Self {
        let mut sorted: Vec<usize> = coords.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let basis = Matrix::from_fn(field, ambient_dim, sorted.len(), |i, j| {
            if i == sorted[j] {
                field.one()
            } else {
                field.zero()
            }
        });
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots: sorted,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Reduces `v` against the basis, returning the residual and the
    /// coordinates used. The residual is zero exactly when `v` lies in the
    /// subspace, in which case `v = basis * coords`.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        debug_assert_eq!(v.len(), self.ambient_dim);
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (j, &pr) in self.pivots.iter().enumerate() {
            let c = residual[pr].clone();
            coords.push(c.clone());
            if c.is_zero() {
                continue;
            }
            for i in 0..self.ambient_dim {
                let b = self.basis.entry(i, j);
                if !b.is_zero() {
                    residual[i] = residual[i].sub(&c.mul(b).expect("same field")).expect("same field");
                }
            }
        }
        (residual, coords)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        let (residual, _) = self.reduce(v);
        residual.iter().all(|e| e.is_zero())
    }

    /// Coordinates of `v` in the subspace basis, if `v` lies in the subspace.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (residual, coords) = self.reduce(v);
        residual.iter().all(|e| e.is_zero()).then_some(coords)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..other.dim()).all(|j| self.contains_vector(&other.basis.column(j)))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim || self.field != other.field {
            return Err(LinalgError::AmbientMismatch {
                lhs: self.ambient_dim,
                rhs: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Subspace::from_columns(&self.basis.hstack(&other.basis)?))
    }

    /// Intersection via the kernel of the concatenated basis matrix
    /// `[U | -V]`: a kernel vector (a, b) witnesses U·a = V·b.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let stacked = self.basis.hstack(&other.basis.neg())?;
        let ker = kernel_basis(&stacked);
        let a_part = ker.basis().select_rows(&(0..self.dim()).collect::<Vec<_>>());
        Ok(Subspace::from_columns(&self.basis.mul(&a_part)?))
    }
}

/// Canonical basis of the kernel of `m`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let red = m.rref();
    let pivot_set: Vec<usize> = red.pivots.clone();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivot_set.contains(c)).collect();
    let mut cols = Matrix::zero(m.field(), m.cols(), free.len());
    for (k, &fcol) in free.iter().enumerate() {
        cols.set(fcol, k, m.field().one());
        for (r, &pcol) in pivot_set.iter().enumerate() {
            cols.set(pcol, k, red.matrix.entry(r, fcol).neg());
        }
    }
    Subspace::from_columns(&cols)
}

/// Canonical basis of the column span of `m`.
pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::from_columns(m)
}

/// Canonical basis of `{v : m·v ∈ W}`.
pub fn preimage(m: &Matrix, w: &Subspace) -> Result<Subspace, LinalgError> {
    if w.ambient_dim() != m.rows() || w.field() != m.field() {
        return Err(LinalgError::AmbientMismatch {
            lhs: m.rows(),
            rhs: w.ambient_dim(),
        });
    }
    // Kernel of [m | -W]: a kernel vector (v, c) witnesses m·v = W·c.
    let stacked = m.hstack(&w.basis().neg())?;
    let ker = kernel_basis(&stacked);
    let v_part = ker.basis().select_rows(&(0..m.cols()).collect::<Vec<_>>());
    Ok(Subspace::from_columns(&v_part))
}

/// The image of a subspace under a linear map.
pub fn map_subspace(m: &Matrix, u: &Subspace) -> Result<Subspace, LinalgError> {
    Ok(Subspace::from_columns(&m.mul(u.basis())?))
}

/// A quotient Z/B of nested subspaces of an ambient coordinate space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subquotient {
    z: Subspace,
    b: Subspace,
    reps: Matrix,    // ambient_dim x dim(Z/B)
    project: Matrix, // dim(Z/B) x ambient_dim, project * reps = identity
}

impl Subquotient {
    /// Requires B ⊆ Z (membership-verified, not assumed).
    pub fn new(z: Subspace, b: Subspace) -> Result<Self, LinalgError> {
        if z.ambient_dim() != b.ambient_dim() || z.field() != b.field() {
            return Err(LinalgError::AmbientMismatch {
                lhs: z.ambient_dim(),
                rhs: b.ambient_dim(),
            });
        }
        for j in 0..b.dim() {
            if !z.contains_vector(&b.basis().column(j)) {
                return Err(LinalgError::NotContained {
                    what: "subquotient denominator",
                    col: j,
                });
            }
        }
        let field = z.field();
        let ambient = z.ambient_dim();

        // Extend B's echelon basis to a basis of Z: walk Z's canonical basis
        // in pivot order and keep the reduced residual of each new column.
        let mut chosen: Vec<Vec<Scalar>> = Vec::new();
        let mut chosen_pivots: Vec<usize> = Vec::new();
        for j in 0..z.dim() {
            let col = z.basis().column(j);
            let (mut residual, _) = b.reduce(&col);
            // reduce further against previously chosen representatives
            for (r, &pr) in chosen_pivots.iter().enumerate() {
                let c = residual[pr].clone();
                if c.is_zero() {
                    continue;
                }
                for i in 0..ambient {
                    let t = chosen[r][i].clone();
                    if !t.is_zero() {
                        residual[i] = residual[i]
                            .sub(&c.mul(&t).expect("same field"))
                            .expect("same field");
                    }
                }
            }
            if let Some(lead) = residual.iter().position(|e| !e.is_zero()) {
                let inv = residual[lead].inv().expect("nonzero");
                for e in residual.iter_mut() {
                    *e = e.mul(&inv).expect("same field");
                }
                chosen.push(residual);
                chosen_pivots.push(lead);
            }
        }
        let dim = chosen.len();
        debug_assert_eq!(dim, z.dim() - b.dim());
        let reps = Matrix::from_fn(field, ambient, dim, |i, j| chosen[j][i].clone());

        // Left inverse of [B | reps] via row reduction of the augmented
        // identity; the rows corresponding to rep columns give the projection.
        let basis_z = b.basis().hstack(&reps)?;
        let aug = basis_z.hstack(&Matrix::identity(field, ambient))?;
        let red = aug.rref();
        let left_inverse = Matrix::from_fn(field, z.dim(), ambient, |i, j| {
            red.matrix.entry(i, z.dim() + j).clone()
        });
        let project = left_inverse.select_rows(&(b.dim()..z.dim()).collect::<Vec<_>>());
        debug_assert_eq!(
            project.mul(&reps).expect("shapes agree"),
            Matrix::identity(field, dim)
        );
        Ok(Subquotient {
            z,
            b,
            reps,
            project,
        })
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subquotient::new(
            Subspace::zero(field, ambient_dim),
            Subspace::zero(field, ambient_dim),
        )
        .expect("trivially nested")
    }

    pub fn field(&self) -> FieldSpec {
        self.z.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.z.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    pub fn z(&self) -> &Subspace {
        &self.z
    }

    pub fn b(&self) -> &Subspace {
        &self.b
    }

    pub fn reps(&self) -> &Matrix {
        &self.reps
    }

    pub fn project(&self) -> &Matrix {
        &self.project
    }

    /// Quotient coordinates of an ambient vector, verified to lie in Z.
    pub fn class_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.z.contains_vector(v).then(|| self.project.apply(v))
    }
}

/// The matrix of the map Z_src/B_src → Z_dst/B_dst induced by the ambient map
/// `m`. Well-definedness is verified, not assumed: `m` must map Z_src into
/// Z_dst and B_src into B_dst, and the failing basis column is reported.
pub fn induced_map(
    src: &Subquotient,
    dst: &Subquotient,
    m: &Matrix,
) -> Result<Matrix, LinalgError> {
    if m.cols() != src.ambient_dim() || m.rows() != dst.ambient_dim() {
        return Err(LinalgError::ShapeMismatch {
            op: "induced_map",
            lhs_rows: m.rows(),
            lhs_cols: m.cols(),
            rhs_rows: dst.ambient_dim(),
            rhs_cols: src.ambient_dim(),
        });
    }
    for j in 0..src.z.dim() {
        let image = m.apply(&src.z.basis().column(j));
        if !dst.z.contains_vector(&image) {
            return Err(LinalgError::IllDefined { part: "cycle", col: j });
        }
    }
    for j in 0..src.b.dim() {
        let image = m.apply(&src.b.basis().column(j));
        if !dst.b.contains_vector(&image) {
            return Err(LinalgError::IllDefined {
                part: "boundary",
                col: j,
            });
        }
    }
    dst.project.mul(&m.mul(&src.reps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    /// Exhaustive span of a subspace over a small prime field, as an oracle.
    fn enumerate_span(s: &Subspace) -> HashSet<Vec<String>> {
        let p = s.field().characteristic().expect("prime field oracle");
        let d = s.dim();
        let mut out = HashSet::new();
        let total = (p as u64).pow(d as u32);
        for code in 0..total {
            let mut c = code;
            let coeffs: Vec<Scalar> = (0..d)
                .map(|_| {
                    let v = s.field().integer((c % p) as i64);
                    c /= p;
                    v
                })
                .collect();
            let mut vec = vec![s.field().zero(); s.ambient_dim()];
            for (j, coeff) in coeffs.iter().enumerate() {
                for i in 0..s.ambient_dim() {
                    let t = s.basis().entry(i, j).mul(coeff).unwrap();
                    vec[i] = vec[i].add(&t).unwrap();
                }
            }
            out.insert(vec.iter().map(|e| e.to_string()).collect());
        }
        out
    }

    #[test]
    fn kernel_of_equal_rows() {
        let m = Matrix::from_int_rows(gf(2), &[vec![1, 1], vec![1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vector(&[gf(2).one(), gf(2).one()]));
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let f = gf(3);
        assert!(kernel_basis(&Matrix::identity(f, 4)).is_zero());
        assert!(kernel_basis(&Matrix::zero(f, 3, 3)).is_full());
    }

    #[test]
    fn image_examples() {
        let q = FieldSpec::rationals();
        assert!(image_basis(&Matrix::identity(q, 2)).is_full());
        assert!(image_basis(&Matrix::zero(q, 2, 2)).is_zero());
        let col = Matrix::from_int_rows(q, &[vec![1], vec![2]]);
        let s = image_basis(&col);
        assert_eq!(s.dim(), 1);
        assert!(s.contains_vector(&[q.integer(1), q.integer(2)]));
    }

    #[test]
    fn sum_and_intersection_of_coordinate_axes() {
        let f = gf(5);
        let u = Subspace::coordinate_span(f, 2, &[0]);
        let v = Subspace::coordinate_span(f, 2, &[1]);
        assert!(u.sum(&v).unwrap().is_full());
        assert!(u.intersect(&v).unwrap().is_zero());
        // idempotence
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn intersection_matches_enumeration_oracle() {
        // U = span{e1+e2, e2+e3}, V = span{e1+e3} in GF(2)^3.
        let f = gf(2);
        let u = Subspace::from_columns(&Matrix::from_int_rows(
            f,
            &[vec![1, 0], vec![1, 1], vec![0, 1]],
        ));
        let v = Subspace::from_columns(&Matrix::from_int_rows(f, &[vec![1], vec![0], vec![1]]));
        let w = u.intersect(&v).unwrap();
        assert_eq!(w, v);

        let u_set = enumerate_span(&u);
        let v_set = enumerate_span(&v);
        let w_set = enumerate_span(&w);
        let expected: HashSet<_> = u_set.intersection(&v_set).cloned().collect();
        assert_eq!(w_set, expected);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = gf(2);
        let u = Subspace::full(f, 2);
        let v = Subspace::full(f, 3);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
    }

    #[test]
    fn preimage_examples() {
        let f = gf(3);
        let w = Subspace::coordinate_span(f, 2, &[1]);
        assert_eq!(preimage(&Matrix::identity(f, 2), &w).unwrap(), w);
        assert!(preimage(&Matrix::zero(f, 2, 2), &w).unwrap().is_full());

        let m = Matrix::from_int_rows(f, &[vec![1, 0], vec![0, 0]]);
        let pre = preimage(&m, &w).unwrap();
        assert_eq!(pre, Subspace::coordinate_span(f, 2, &[1]));

        // oracle: enumerate all 9 vectors of GF(3)^2
        for a in 0..3i64 {
            for b in 0..3i64 {
                let v = vec![f.integer(a), f.integer(b)];
                let image = m.apply(&v);
                assert_eq!(pre.contains_vector(&v), w.contains_vector(&image));
            }
        }
    }

    #[test]
    fn preimage_shape_mismatch() {
        let f = gf(3);
        let m = Matrix::zero(f, 2, 2);
        let w = Subspace::full(f, 3);
        assert!(preimage(&m, &w).is_err());
    }

    #[test]
    fn subquotient_basics() {
        let f = gf(5);
        let z = Subspace::full(f, 2);
        let b = Subspace::coordinate_span(f, 2, &[0]);
        let sq = Subquotient::new(z.clone(), b).unwrap();
        assert_eq!(sq.dim(), 1);
        assert_eq!(sq.reps().column(0), vec![f.zero(), f.one()]);

        let trivial = Subquotient::new(z.clone(), z).unwrap();
        assert_eq!(trivial.dim(), 0);
    }

    #[test]
    fn subquotient_coset_representative() {
        // Z = span{e1+e2, e3}, B = span{e3} in GF(2)^3: the quotient is one
        // dimensional with representative e1+e2.
        let f = gf(2);
        let z = Subspace::from_columns(&Matrix::from_int_rows(
            f,
            &[vec![1, 0], vec![1, 0], vec![0, 1]],
        ));
        let b = Subspace::coordinate_span(f, 3, &[2]);
        let sq = Subquotient::new(z, b).unwrap();
        assert_eq!(sq.dim(), 1);
        assert_eq!(sq.reps().column(0), vec![f.one(), f.one(), f.zero()]);
        // coset oracle: every element of rep + B projects to the same class
        assert_eq!(sq.class_of(&[f.one(), f.one(), f.zero()]), Some(vec![f.one()]));
        assert_eq!(sq.class_of(&[f.one(), f.one(), f.one()]), Some(vec![f.one()]));
        assert_eq!(sq.class_of(&[f.zero(), f.zero(), f.one()]), Some(vec![f.zero()]));
        // not in Z at all
        assert_eq!(sq.class_of(&[f.one(), f.zero(), f.zero()]), None);
    }

    #[test]
    fn subquotient_rejects_non_nested() {
        let f = gf(2);
        let z = Subspace::coordinate_span(f, 2, &[0]);
        let b = Subspace::coordinate_span(f, 2, &[1]);
        assert!(matches!(
            Subquotient::new(z, b),
            Err(LinalgError::NotContained { .. })
        ));
    }

    #[test]
    fn induced_map_identity_and_zero() {
        let f = gf(3);
        let sq = Subquotient::new(Subspace::full(f, 2), Subspace::coordinate_span(f, 2, &[0]))
            .unwrap();
        let id = induced_map(&sq, &sq, &Matrix::identity(f, 2)).unwrap();
        assert_eq!(id, Matrix::identity(f, 1));

        // a map landing in B induces zero
        let into_b = Matrix::from_int_rows(f, &[vec![0, 1], vec![0, 0]]);
        let z = induced_map(&sq, &sq, &into_b).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn induced_map_rejects_the_coordinate_swap() {
        // GF(2), ambient 2, Z = full, B = span{e1} on both sides. The swap
        // sends the representative e2 into B, but it also moves B off itself
        // (e1 ↦ e2 ∉ B), so the quotient map is not well-defined and the
        // verification must reject it naming the offending basis column.
        let f = gf(2);
        let sq = Subquotient::new(Subspace::full(f, 2), Subspace::coordinate_span(f, 2, &[0]))
            .unwrap();
        let swap = Matrix::from_int_rows(f, &[vec![0, 1], vec![1, 0]]);
        let err = induced_map(&sq, &sq, &swap).unwrap_err();
        assert_eq!(
            err,
            LinalgError::IllDefined {
                part: "boundary",
                col: 0
            }
        );
    }

    #[test]
    fn induced_map_detects_ill_definedness() {
        let f = gf(2);
        let src = Subquotient::new(Subspace::full(f, 2), Subspace::coordinate_span(f, 2, &[0]))
            .unwrap();
        let dst =
            Subquotient::new(Subspace::coordinate_span(f, 2, &[0]), Subspace::zero(f, 2)).unwrap();
        // identity does not map full into span{e1}
        let err = induced_map(&src, &dst, &Matrix::identity(f, 2)).unwrap_err();
        assert!(matches!(err, LinalgError::IllDefined { part: "cycle", .. }));
    }

    fn arb_subspace(p: u64, ambient: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(0i64..p as i64, ambient * 3).prop_map(move |data| {
            let f = gf(p);
            let cols = Matrix::new(
                f,
                ambient,
                3,
                data.into_iter().map(|n| f.integer(n)).collect(),
            )
            .unwrap();
            Subspace::from_columns(&cols)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in 0usize..5, cols in 0usize..5, seed in any::<u64>()) {
            let f = gf(5);
            let mut state = seed;
            let m = Matrix::from_fn(f, rows, cols, |_, _| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                f.integer((state >> 33) as i64)
            });
            prop_assert_eq!(kernel_basis(&m).dim() + m.rank(), cols);
        }

        #[test]
        fn dimension_formula(u in arb_subspace(2, 4), v in arb_subspace(2, 4)) {
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            prop_assert!(s.contains(&u) && s.contains(&v));
            prop_assert!(u.contains(&i) && v.contains(&i));
        }

        #[test]
        fn modular_law(v in arb_subspace(2, 4), w in arb_subspace(2, 4), picks in proptest::collection::vec(0u8..2, 4)) {
            // U ⊆ W built by selecting a sub-span of W
            let f = gf(2);
            let selected: Vec<usize> = (0..w.dim()).filter(|&j| picks.get(j).copied().unwrap_or(0) == 1).collect();
            let u = Subspace::from_columns(&w.basis().select_cols(&selected));
            prop_assert!(w.contains(&u));
            let lhs = u.sum(&v.intersect(&w).unwrap()).unwrap();
            let rhs = u.sum(&v).unwrap().intersect(&w).unwrap();
            prop_assert_eq!(lhs, rhs);
            let _ = f;
        }

        #[test]
        fn induced_map_is_representative_independent(seed in any::<u64>()) {
            // Perturb the stored representatives by elements of B and check
            // the induced matrix is unchanged.
            let f = gf(2);
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                f.integer((state >> 33) as i64)
            };
            let z = Subspace::full(f, 4);
            let b_cols = Matrix::from_fn(f, 4, 2, |_, _| next());
            let b = Subspace::from_columns(&b_cols);
            let sq = Subquotient::new(z.clone(), b.clone()).unwrap();
            // m maps Z into Z and B into B: use a map built as identity plus
            // something landing in B.
            let noise = Matrix::from_fn(f, b.dim(), 4, |_, _| next());
            let m = Matrix::identity(f, 4).add(&b.basis().mul(&noise).unwrap()).unwrap();
            let induced = induced_map(&sq, &sq, &m).unwrap();

            // alternative representatives: reps + B * R
            let r = Matrix::from_fn(f, b.dim(), sq.dim(), |_, _| next());
            let alt_reps = sq.reps().add(&b.basis().mul(&r).unwrap()).unwrap();
            let alt_induced = sq.project().mul(&m.mul(&alt_reps).unwrap()).unwrap();
            prop_assert_eq!(induced, alt_induced);
        }
    }
}
