//! Seeded random instance generation for self-tests and the CLI `--seed`
//! flag.
//!
//! Complexes are produced in a structured normal form (a direct sum of
//! elementary two-term pieces and one-term cohomology summands) and then
//! conjugated degreewise by random invertible matrices, so every output is
//! valid by construction while its matrices look generic. Polycomplexes are
//! sign-twisted tensor products of such one-dimensional complexes, again
//! conjugated cellwise. Snake diagrams are assembled in split coordinates
//! where row exactness and commuting squares are automatic.

use crate::cochain::{CochainComplex, CochainMap};
use crate::field::{FieldSpec, Scalar};
use crate::filtration::FilteredComplex;
use crate::matrix::Matrix;
use crate::polycomplex::{MultiDegree, Polycomplex};
use crate::snake::SnakeDiagram;
use crate::subspace::Subspace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A deterministic RNG for reproducible instances.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
    match field.characteristic() {
        Some(p) => field.integer(rng.random_range(0..p.min(1 << 20)) as i64),
        None => {
            let num = rng.random_range(-4i64..=4);
            let den = rng.random_range(1i64..=4);
            Scalar::from_rational(num, den).expect("nonzero denominator")
        }
    }
}

pub fn random_nonzero_scalar(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
    loop {
        let s = random_scalar(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_matrix(rng: &mut impl Rng, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| random_scalar(rng, field))
}

/// Random invertible matrix built as P·L·U with unit triangular factors and
/// nonzero diagonal, so no rejection sampling is needed.
pub fn random_invertible(rng: &mut impl Rng, field: FieldSpec, n: usize) -> Matrix {
    let mut lower = Matrix::identity(field, n);
    let mut upper = Matrix::identity(field, n);
    for i in 0..n {
        upper.set(i, i, random_nonzero_scalar(rng, field));
        for j in 0..i {
            lower.set(i, j, random_scalar(rng, field));
            upper.set(j, i, random_scalar(rng, field));
        }
    }
    // random permutation of the rows
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let p = Matrix::from_fn(field, n, n, |i, j| {
        if perm[i] == j {
            field.one()
        } else {
            field.zero()
        }
    });
    p.mul(&lower.mul(&upper).expect("square")).expect("square")
}

/// Structure of a complex in split coordinates: per degree, the number of
/// cohomology generators and the number of two-term identity pieces starting
/// there. Degree-n dimension is `h[n] + e[n] + e[n-1]`.
#[derive(Clone, Debug)]
pub(crate) struct SplitShape {
    pub h: Vec<usize>,
    pub e: Vec<usize>,
}

impl SplitShape {
    pub fn random(rng: &mut impl Rng, max_deg: usize, max_dim: usize) -> SplitShape {
        let top = rng.random_range(0..=max_deg);
        let mut h = vec![0usize; top + 1];
        let mut e = vec![0usize; top + 1];
        for n in 0..=top {
            // bias towards an identity piece in every degree so differentials
            // are rarely zero
            e[n] = if n < top && rng.random_range(0..4) > 0 { 1 } else { 0 };
            h[n] = rng.random_range(0..=1);
            let prev_e = if n > 0 { e[n - 1] } else { 0 };
            while h[n] + e[n] + prev_e > max_dim {
                if h[n] > 0 {
                    h[n] -= 1;
                } else if e[n] > 0 {
                    e[n] -= 1;
                } else {
                    break;
                }
            }
        }
        let mut shape = SplitShape { h, e };
        if max_dim > 0 && shape.dims().iter().all(|&d| d == 0) {
            shape.h[0] = 1;
        }
        shape
    }

    /// Shape with a nonzero differential out of every degree below `max_deg`
    /// and a nonzero space in every degree up to it. Needs room for two
    /// dimensions per degree whenever max_deg > 0.
    pub fn dense(rng: &mut impl Rng, max_deg: usize, max_dim: usize) -> SplitShape {
        assert!(max_dim >= 2 || max_deg == 0);
        let mut h = vec![0usize; max_deg + 1];
        let mut e = vec![0usize; max_deg + 1];
        for n in 0..=max_deg {
            e[n] = if n < max_deg { 1 } else { 0 };
            let prev = if n > 0 { e[n - 1] } else { 0 };
            let room = max_dim.saturating_sub(e[n] + prev);
            h[n] = if room > 0 { rng.random_range(0..=room.min(1)) } else { 0 };
        }
        if max_deg == 0 && h[0] == 0 {
            h[0] = 1;
        }
        SplitShape { h, e }
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..self.h.len())
            .map(|n| self.h[n] + self.e[n] + if n > 0 { self.e[n - 1] } else { 0 })
            .collect()
    }

    /// The canonical differential in split coordinates: the identity from the
    /// e-block of degree n onto the matching block of degree n+1.
    pub fn canonical_d(&self, field: FieldSpec, n: usize) -> Matrix {
        let dims = self.dims();
        let rows = dims.get(n + 1).copied().unwrap_or(0);
        let cols = dims[n];
        let mut d = Matrix::zero(field, rows, cols);
        if n + 1 < dims.len() {
            let row0 = self.h[n + 1] + self.e[n + 1];
            let col0 = self.h[n];
            for t in 0..self.e[n] {
                d.set(row0 + t, col0 + t, field.one());
            }
        }
        d
    }
}

/// A random validated cochain complex together with its cohomology
/// dimensions, known by construction.
pub fn random_complex_with_h(
    rng: &mut impl Rng,
    field: FieldSpec,
    max_deg: usize,
    max_dim: usize,
) -> (CochainComplex, Vec<usize>) {
    let shape = SplitShape::random(rng, max_deg, max_dim);
    let complex = realize_shape(rng, field, &shape);
    (complex, shape.h)
}

pub fn random_complex(rng: &mut impl Rng, field: FieldSpec, max_deg: usize, max_dim: usize) -> CochainComplex {
    random_complex_with_h(rng, field, max_deg, max_dim).0
}

fn realize_shape(rng: &mut impl Rng, field: FieldSpec, shape: &SplitShape) -> CochainComplex {
    let dims = shape.dims();
    let change: Vec<Matrix> = dims
        .iter()
        .map(|&d| random_invertible(rng, field, d))
        .collect();
    let diffs: Vec<Matrix> = (0..dims.len())
        .map(|n| {
            let d = shape.canonical_d(field, n);
            let left = change
                .get(n + 1)
                .cloned()
                .unwrap_or_else(|| Matrix::identity(field, 0));
            left.mul(&d)
                .and_then(|m| m.mul(&change[n].inverse().expect("invertible")))
                .expect("shapes agree")
        })
        .collect();
    CochainComplex::new(field, dims, diffs).expect("shapes agree")
}

/// Random validated polycomplex with full support on the box
/// `[0, max_coord]^k` and a nonzero differential out of every inner cell in
/// every direction. Used where dense axiom coupling matters.
pub fn random_full_polycomplex(
    rng: &mut impl Rng,
    field: FieldSpec,
    k: usize,
    max_coord: usize,
    max_factor_dim: usize,
) -> Polycomplex {
    let factors: Vec<CochainComplex> = (0..k)
        .map(|_| {
            let shape = SplitShape::dense(rng, max_coord, max_factor_dim);
            realize_shape(rng, field, &shape)
        })
        .collect();
    tensor_polycomplex(rng, field, &factors)
}

/// Random validated polycomplex: a sign-twisted tensor product of k random
/// one-dimensional complexes, conjugated cellwise by random invertible
/// matrices.
pub fn random_polycomplex(
    rng: &mut impl Rng,
    field: FieldSpec,
    k: usize,
    max_coord: usize,
    max_factor_dim: usize,
) -> Polycomplex {
    let factors: Vec<CochainComplex> = (0..k)
        .map(|_| random_complex(rng, field, max_coord, max_factor_dim))
        .collect();
    tensor_polycomplex(rng, field, &factors)
}

/// Assembles the twisted tensor product of the given one-dimensional
/// complexes: the differential in direction i at cell x is
/// (−1)^{x₁+⋯+x_{i−1}} · id ⊗ ⋯ ⊗ d_i ⊗ ⋯ ⊗ id, then everything is
/// conjugated by a random invertible change of basis per cell.
pub fn tensor_polycomplex(
    rng: &mut impl Rng,
    field: FieldSpec,
    factors: &[CochainComplex],
) -> Polycomplex {
    let k = factors.len();
    assert!(k >= 1);
    // enumerate supported cells
    let mut cells: Vec<(MultiDegree, usize)> = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 1)];
    while let Some((coords, dim)) = stack.pop() {
        if coords.len() == k {
            if dim > 0 {
                cells.push((MultiDegree::new(coords), dim));
            }
            continue;
        }
        let i = coords.len();
        for x in 0..=factors[i].max_degree().max(0) as usize {
            let d = factors[i].dim(x as i64);
            if d == 0 {
                continue;
            }
            let mut c = coords.clone();
            c.push(x);
            stack.push((c, dim * d));
        }
    }
    cells.sort_by(|a, b| a.0.cmp(&b.0));
    let dim_of = |x: &MultiDegree| -> usize {
        (0..k)
            .map(|i| factors[i].dim(x.coord(i) as i64))
            .product()
    };
    let change: std::collections::BTreeMap<MultiDegree, Matrix> = cells
        .iter()
        .map(|(x, d)| (x.clone(), random_invertible(rng, field, *d)))
        .collect();
    let mut diffs: Vec<(usize, MultiDegree, Matrix)> = Vec::new();
    for (x, _) in &cells {
        for i in 1..=k {
            let y = x.step(i);
            if dim_of(&y) == 0 {
                continue;
            }
            let mut block = Matrix::identity(field, 1);
            for slot in 0..k {
                let next = if slot + 1 == i {
                    factors[slot].d(x.coord(slot) as i64)
                } else {
                    Matrix::identity(field, factors[slot].dim(x.coord(slot) as i64))
                };
                block = block.kronecker(&next);
            }
            let twist: usize = (0..i - 1).map(|j| x.coord(j)).sum();
            if twist % 2 == 1 {
                block = block.scale(&field.integer(-1));
            }
            let conj = change[&y]
                .mul(&block)
                .and_then(|m| m.mul(&change[x].inverse().expect("invertible")))
                .expect("shapes agree");
            diffs.push((i, x.clone(), conj));
        }
    }
    Polycomplex::new(k, field, cells, diffs).expect("shapes agree by construction")
}

/// Random snake-lemma input: two short exact rows in split coordinates and
/// commuting vertical maps with a free mixing block.
pub fn random_snake_diagram(rng: &mut impl Rng, field: FieldSpec, max_dim: usize) -> SnakeDiagram {
    let a_dim = rng.random_range(0..=max_dim);
    let c_dim = rng.random_range(0..=max_dim);
    let d_dim = rng.random_range(0..=max_dim);
    let f_dim = rng.random_range(0..=max_dim);
    let b_dim = a_dim + c_dim;
    let e_dim = d_dim + f_dim;

    let p = random_invertible(rng, field, b_dim);
    let p_inv = p.inverse().expect("invertible");
    let q = random_invertible(rng, field, e_dim);
    let q_inv = q.inverse().expect("invertible");

    let inj = |total: usize, first: usize| {
        Matrix::from_fn(field, total, first, |i, j| {
            if i == j {
                field.one()
            } else {
                field.zero()
            }
        })
    };
    let proj = |total: usize, first: usize| {
        Matrix::from_fn(field, total - first, total, |i, j| {
            if j == first + i {
                field.one()
            } else {
                field.zero()
            }
        })
    };

    let bottom_ab = p.mul(&inj(b_dim, a_dim)).expect("shapes");
    let bottom_bc = proj(b_dim, a_dim).mul(&p_inv).expect("shapes");
    let top_de = q.mul(&inj(e_dim, d_dim)).expect("shapes");
    let top_ef = proj(e_dim, d_dim).mul(&q_inv).expect("shapes");

    let alpha = random_matrix(rng, field, d_dim, a_dim);
    let gamma = random_matrix(rng, field, f_dim, c_dim);
    let mixing = random_matrix(rng, field, d_dim, c_dim);
    // beta in split coordinates: [[alpha, mixing], [0, gamma]]
    let split_beta = Matrix::from_fn(field, e_dim, b_dim, |i, j| {
        match (i < d_dim, j < a_dim) {
            (true, true) => alpha.entry(i, j).clone(),
            (true, false) => mixing.entry(i, j - a_dim).clone(),
            (false, true) => field.zero(),
            (false, false) => gamma.entry(i - d_dim, j - a_dim).clone(),
        }
    });
    let beta = q.mul(&split_beta).and_then(|m| m.mul(&p_inv)).expect("shapes");

    SnakeDiagram::new(field, alpha, beta, gamma, bottom_ab, bottom_bc, top_de, top_ef)
        .expect("valid by construction")
}

/// Random subspace spanned by `generators` random vectors.
pub fn random_subspace(
    rng: &mut impl Rng,
    field: FieldSpec,
    ambient: usize,
    generators: usize,
) -> Subspace {
    Subspace::from_columns(&random_matrix(rng, field, ambient, generators))
}

/// Closes a degreewise family of seed subspaces under the differential:
/// T_n = seed_n + d(T_{n−1}), which is d-stable because d² = 0.
pub fn stable_closure(c: &CochainComplex, seeds: Vec<Subspace>) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = Vec::with_capacity(seeds.len());
    for (n, seed) in seeds.into_iter().enumerate() {
        let carried = if n == 0 {
            seed
        } else {
            let image = crate::subspace::map_subspace(&c.d(n as i64 - 1), &out[n - 1])
                .expect("shapes agree");
            seed.sum(&image).expect("same ambient")
        };
        out.push(carried);
    }
    out
}

/// A two-step filtration `full ⊇ mid ⊇ 0` from a d-stable middle layer.
pub fn two_step_filtration(c: &CochainComplex, mid: Vec<Subspace>) -> FilteredComplex {
    let levels: Vec<Vec<Subspace>> = (0..c.dims().len())
        .map(|n| {
            vec![
                Subspace::full(c.field(), c.dims()[n]),
                mid[n].clone(),
                Subspace::zero(c.field(), c.dims()[n]),
            ]
        })
        .collect();
    FilteredComplex::new(c.clone(), levels).expect("levels are well-formed")
}

/// Random d-stable two-step filtration on a complex.
pub fn random_two_step_filtration(rng: &mut impl Rng, c: &CochainComplex) -> FilteredComplex {
    let seeds: Vec<Subspace> = c
        .dims()
        .iter()
        .map(|&d| random_subspace(rng, c.field(), d, d / 2 + 1))
        .collect();
    two_step_filtration(c, stable_closure(c, seeds))
}

/// Random chain map with conjugated split structure; both complexes and the
/// map validate by construction.
pub fn random_chain_map(
    rng: &mut impl Rng,
    field: FieldSpec,
    max_deg: usize,
    max_dim: usize,
) -> CochainMap {
    let src_shape = SplitShape::random(rng, max_deg, max_dim);
    let tgt_shape = SplitShape::random(rng, max_deg, max_dim);
    let src_dims = src_shape.dims();
    let tgt_dims = tgt_shape.dims();
    let window = src_dims.len().max(tgt_dims.len());
    let dim_at = |dims: &[usize], n: usize| dims.get(n).copied().unwrap_or(0);

    // free blocks of a chain map in split coordinates
    let hh: Vec<Matrix> = (0..window)
        .map(|n| {
            random_matrix(
                rng,
                field,
                *tgt_shape.h.get(n).unwrap_or(&0),
                *src_shape.h.get(n).unwrap_or(&0),
            )
        })
        .collect();
    let hs: Vec<Matrix> = (0..window)
        .map(|n| {
            random_matrix(
                rng,
                field,
                *tgt_shape.h.get(n).unwrap_or(&0),
                *src_shape.e.get(n).unwrap_or(&0),
            )
        })
        .collect();
    let ss: Vec<Matrix> = (0..window)
        .map(|n| {
            random_matrix(
                rng,
                field,
                *tgt_shape.e.get(n).unwrap_or(&0),
                *src_shape.e.get(n).unwrap_or(&0),
            )
        })
        .collect();
    let th: Vec<Matrix> = (0..window)
        .map(|n| {
            let t_rows = if n > 0 { *tgt_shape.e.get(n - 1).unwrap_or(&0) } else { 0 };
            random_matrix(rng, field, t_rows, *src_shape.h.get(n).unwrap_or(&0))
        })
        .collect();
    let ts: Vec<Matrix> = (0..window)
        .map(|n| {
            let t_rows = if n > 0 { *tgt_shape.e.get(n - 1).unwrap_or(&0) } else { 0 };
            random_matrix(rng, field, t_rows, *src_shape.e.get(n).unwrap_or(&0))
        })
        .collect();

    let phi_split: Vec<Matrix> = (0..window)
        .map(|n| {
            let (sh, se) = (
                *src_shape.h.get(n).unwrap_or(&0),
                *src_shape.e.get(n).unwrap_or(&0),
            );
            let st = if n > 0 { *src_shape.e.get(n - 1).unwrap_or(&0) } else { 0 };
            let (th_dim, te) = (
                *tgt_shape.h.get(n).unwrap_or(&0),
                *tgt_shape.e.get(n).unwrap_or(&0),
            );
            let tt = if n > 0 { *tgt_shape.e.get(n - 1).unwrap_or(&0) } else { 0 };
            // M_t't is forced to equal M_s's one degree down
            let tt_block = if n > 0 { ss[n - 1].clone() } else { Matrix::zero(field, tt, st) };
            Matrix::from_fn(
                field,
                dim_at(&tgt_dims, n),
                dim_at(&src_dims, n),
                |i, j| {
                    let (row_block, ri) = if i < th_dim {
                        (0, i)
                    } else if i < th_dim + te {
                        (1, i - th_dim)
                    } else {
                        (2, i - th_dim - te)
                    };
                    let (col_block, cj) = if j < sh {
                        (0, j)
                    } else if j < sh + se {
                        (1, j - sh)
                    } else {
                        (2, j - sh - se)
                    };
                    match (row_block, col_block) {
                        (0, 0) => hh[n].entry(ri, cj).clone(),
                        (0, 1) => hs[n].entry(ri, cj).clone(),
                        (1, 1) => ss[n].entry(ri, cj).clone(),
                        (2, 0) => th[n].entry(ri, cj).clone(),
                        (2, 1) => ts[n].entry(ri, cj).clone(),
                        (2, 2) => tt_block.entry(ri, cj).clone(),
                        _ => field.zero(),
                    }
                },
            )
        })
        .collect();

    let src_change: Vec<Matrix> = (0..window)
        .map(|n| random_invertible(rng, field, dim_at(&src_dims, n)))
        .collect();
    let tgt_change: Vec<Matrix> = (0..window)
        .map(|n| random_invertible(rng, field, dim_at(&tgt_dims, n)))
        .collect();
    let conj_complex = |shape: &SplitShape, dims: &[usize], change: &[Matrix]| {
        let diffs: Vec<Matrix> = (0..dims.len())
            .map(|n| {
                let d = shape.canonical_d(field, n);
                let left = change
                    .get(n + 1)
                    .cloned()
                    .unwrap_or_else(|| Matrix::identity(field, 0));
                left.mul(&d)
                    .and_then(|m| m.mul(&change[n].inverse().expect("invertible")))
                    .expect("shapes agree")
            })
            .collect();
        CochainComplex::new(field, dims.to_vec(), diffs).expect("shapes agree")
    };
    let source = conj_complex(&src_shape, &src_dims, &src_change);
    let target = conj_complex(&tgt_shape, &tgt_dims, &tgt_change);
    let phi: Vec<Matrix> = (0..window)
        .map(|n| {
            tgt_change[n]
                .mul(&phi_split[n])
                .and_then(|m| m.mul(&src_change[n].inverse().expect("invertible")))
                .expect("shapes agree")
        })
        .collect();
    CochainMap::new(source, target, phi).expect("shapes agree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_complexes_validate_and_report_their_cohomology() {
        let mut rng = seeded(1);
        for field in [FieldSpec::prime(2).unwrap(), FieldSpec::rationals()] {
            for _ in 0..20 {
                let (c, h) = random_complex_with_h(&mut rng, field, 4, 3);
                c.validate().unwrap();
                let computed = c.cohomology().dims();
                let mut expected = h;
                expected.resize(computed.len(), 0);
                assert_eq!(computed, expected);
            }
        }
    }

    #[test]
    fn random_invertible_is_invertible() {
        let mut rng = seeded(2);
        for n in 0..5 {
            let m = random_invertible(&mut rng, FieldSpec::prime(2).unwrap(), n);
            assert!(m.inverse().is_some());
        }
    }

    #[test]
    fn random_polycomplexes_validate() {
        let mut rng = seeded(3);
        for k in 1..=3 {
            for _ in 0..5 {
                let v = random_polycomplex(&mut rng, FieldSpec::prime(2).unwrap(), k, 2, 2);
                v.validate().unwrap();
                let t = v.totalize();
                t.underlying().validate().unwrap();
                // dimension bookkeeping of the totalization
                for n in 0..=t.max_degree().max(0) as usize {
                    let total: usize = t.summand_order(n).iter().map(|x| v.dim(x)).sum();
                    assert_eq!(total, t.underlying().dim(n as i64));
                }
            }
        }
    }

    #[test]
    fn random_polycomplexes_validate_over_q() {
        let mut rng = seeded(4);
        for _ in 0..3 {
            let v = random_polycomplex(&mut rng, FieldSpec::rationals(), 2, 2, 2);
            v.validate().unwrap();
            v.totalize().underlying().validate().unwrap();
        }
    }

    #[test]
    fn random_chain_maps_validate() {
        let mut rng = seeded(5);
        for _ in 0..10 {
            let phi = random_chain_map(&mut rng, FieldSpec::prime(2).unwrap(), 3, 3);
            phi.source().validate().unwrap();
            phi.target().validate().unwrap();
            phi.validate().unwrap();
        }
    }

    #[test]
    fn stable_closure_is_d_stable() {
        let mut rng = seeded(6);
        let c = random_complex(&mut rng, FieldSpec::prime(2).unwrap(), 4, 3);
        let fc = random_two_step_filtration(&mut rng, &c);
        fc.validate().unwrap();
    }
}
