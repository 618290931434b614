//! Decreasing filtrations on cochain complexes and the canonical index-subset
//! filtrations of a total complex.
//!
//! A filtration stores, per degree, the chain of subspaces F(0,n) ⊇ F(1,n) ⊇ …
//! up to a finite window; beyond the stored window the last level repeats.
//! Level 0 is required to be the full space. Boundedness is always judged
//! relative to the window: the engine refuses to assert convergence for
//! anything it cannot classify as bounded.

use crate::cochain::CochainComplex;
use crate::field::FieldSpec;
use crate::polycomplex::{Polycomplex, TotalComplex};
use crate::subspace::Subspace;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiltrationError {
    #[error("filtration level table has {got} degree entries, expected {want}")]
    WrongWindow { want: usize, got: usize },
    #[error("filtration level F({p}, {n}) has ambient dimension {got}, expected {want}")]
    WrongAmbient { p: usize, n: usize, want: usize, got: usize },
    #[error("filtration level F(0, {n}) is not the full space")]
    LevelZeroNotFull { n: usize },
    #[error("filtration is not decreasing at F({p}, {n})")]
    NotDecreasing { p: usize, n: usize },
    #[error("filtration is not d-stable: d(F({p}, {n})) leaves F({p}, {})", n + 1)]
    NotStable { p: usize, n: usize },
    #[error("index subset must be nonempty and proper in 1..={k}")]
    InvalidSubset { k: usize },
    #[error("filtration indices {indices:?} do not match a {k}-complex")]
    ArityMismatch { k: usize, indices: Vec<usize> },
}

/// How a filtration sits inside its finite window.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Boundedness {
    /// F(0, n) is full and F(n+1, n) = 0 for every degree in the window.
    CanonicallyBounded,
    /// every degree reaches the zero subspace within the window
    Bounded,
    /// some degree never reaches zero within the window
    UnboundedWithinWindow,
}

impl Boundedness {
    pub fn is_bounded(&self) -> bool {
        !matches!(self, Boundedness::UnboundedWithinWindow)
    }
}

#[derive(Clone, Debug)]
pub struct FilteredComplex {
    complex: CochainComplex,
    /// levels[n][p] = F(p, n); nonempty per degree with levels[n][0] full.
    levels: Vec<Vec<Subspace>>,
}

impl FilteredComplex {
    pub fn new(complex: CochainComplex, levels: Vec<Vec<Subspace>>) -> Result<Self, FiltrationError> {
        if levels.len() != complex.dims().len() {
            return Err(FiltrationError::WrongWindow {
                want: complex.dims().len(),
                got: levels.len(),
            });
        }
        for (n, chain) in levels.iter().enumerate() {
            if chain.is_empty() || !chain[0].is_full() {
                return Err(FiltrationError::LevelZeroNotFull { n });
            }
            for (p, s) in chain.iter().enumerate() {
                if s.ambient_dim() != complex.dims()[n] || s.field() != complex.field() {
                    return Err(FiltrationError::WrongAmbient {
                        p,
                        n,
                        want: complex.dims()[n],
                        got: s.ambient_dim(),
                    });
                }
            }
        }
        Ok(FilteredComplex { complex, levels })
    }

    /// The one-step filtration full ⊇ 0, available on any complex.
    pub fn trivial(complex: CochainComplex) -> Self {
        let field = complex.field();
        let levels = complex
            .dims()
            .iter()
            .map(|&d| vec![Subspace::full(field, d), Subspace::zero(field, d)])
            .collect();
        FilteredComplex { complex, levels }
    }

    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn field(&self) -> FieldSpec {
        self.complex.field()
    }

    /// Number of stored levels in degree `n`.
    pub fn stored_levels(&self, n: i64) -> usize {
        if n < 0 || n >= self.levels.len() as i64 {
            0
        } else {
            self.levels[n as usize].len()
        }
    }

    /// The subspace F(p, n). Negative levels give the full space, levels past
    /// the stored window repeat the last stored subspace, and degrees outside
    /// the support give the zero space.
    pub fn filt(&self, p: i64, n: i64) -> Subspace {
        if n < 0 || n >= self.levels.len() as i64 {
            return Subspace::zero(self.field(), 0);
        }
        let chain = &self.levels[n as usize];
        if p < 0 {
            chain[0].clone()
        } else {
            let idx = (p as usize).min(chain.len() - 1);
            chain[idx].clone()
        }
    }

    /// Checks monotonicity and d-stability, naming the first failing (p, n).
    pub fn validate(&self) -> Result<(), FiltrationError> {
        for (n, chain) in self.levels.iter().enumerate() {
            for p in 0..chain.len() {
                if p + 1 < chain.len() && !chain[p].contains(&chain[p + 1]) {
                    return Err(FiltrationError::NotDecreasing { p: p + 1, n });
                }
                let d = self.complex.d(n as i64);
                let image = d.mul(chain[p].basis()).expect("shapes agree");
                let target = self.filt(p as i64, n as i64 + 1);
                for j in 0..image.cols() {
                    if !target.contains_vector(&image.column(j)) {
                        return Err(FiltrationError::NotStable { p, n });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn classify(&self) -> Boundedness {
        let mut canonically = true;
        for (n, chain) in self.levels.iter().enumerate() {
            if !chain.last().expect("nonempty").is_zero() {
                return Boundedness::UnboundedWithinWindow;
            }
            if !self.filt(n as i64 + 1, n as i64).is_zero() {
                canonically = false;
            }
        }
        if canonically {
            Boundedness::CanonicallyBounded
        } else {
            Boundedness::Bounded
        }
    }

    /// Smallest level at which F(·, n) vanishes, if it does within the window.
    pub fn vanishing_level(&self, n: i64) -> Option<i64> {
        if n < 0 || n >= self.levels.len() as i64 {
            return Some(0);
        }
        self.levels[n as usize]
            .iter()
            .position(Subspace::is_zero)
            .map(|p| p as i64)
    }
}

/// One of the 2^k − 2 canonical filtrations of a total complex, cut out by
/// the condition Σ_{i∈A} xᵢ ≥ s for a nonempty proper index subset A.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndexSubsetFiltration {
    k: usize,
    indices: BTreeSet<usize>,
}

impl IndexSubsetFiltration {
    pub fn new(k: usize, indices: BTreeSet<usize>) -> Result<Self, FiltrationError> {
        if indices.is_empty() || indices.len() >= k {
            return Err(FiltrationError::InvalidSubset { k });
        }
        if indices.iter().any(|&i| i == 0 || i > k) {
            return Err(FiltrationError::ArityMismatch {
                k,
                indices: indices.into_iter().collect(),
            });
        }
        Ok(IndexSubsetFiltration { k, indices })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn is_strict_subset_of(&self, other: &IndexSubsetFiltration) -> bool {
        self.k == other.k
            && self.indices.len() < other.indices.len()
            && self.indices.is_subset(&other.indices)
    }
}

impl fmt::Display for IndexSubsetFiltration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All 2^k − 2 canonical index-subset filtrations, ordered by subset size and
/// then lexicographically. Empty for k = 1.
pub fn canonical_filtrations(v: &Polycomplex) -> Vec<IndexSubsetFiltration> {
    let k = v.k();
    if k < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 1u64..(1 << k) - 1 {
        let indices: BTreeSet<usize> = (1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        out.push(IndexSubsetFiltration { k, indices });
    }
    out.sort_by(|a, b| {
        a.indices
            .len()
            .cmp(&b.indices.len())
            .then_with(|| a.indices.cmp(&b.indices))
    });
    out
}

/// The filtration of the total complex by the blocks with Σ_{i∈A} xᵢ ≥ p.
/// The output validates and is canonically bounded by construction; both
/// facts are rechecked by the test suite rather than assumed.
pub fn apply_filtration(
    t: &TotalComplex,
    a: &IndexSubsetFiltration,
) -> Result<FilteredComplex, FiltrationError> {
    if a.k() != t.k() {
        return Err(FiltrationError::ArityMismatch {
            k: t.k(),
            indices: a.indices().iter().copied().collect(),
        });
    }
    let complex = t.underlying().clone();
    let field = complex.field();
    let mut levels = Vec::with_capacity(complex.dims().len());
    for n in 0..complex.dims().len() {
        let dim_n = complex.dims()[n];
        // block extents in degree n, in summand order
        let order = t.summand_order(n);
        let extents: Vec<(usize, usize, usize)> = order
            .iter()
            .enumerate()
            .map(|(idx, x)| {
                let start = t.offset(n, x).expect("cell is in the order table");
                let end = order
                    .get(idx + 1)
                    .and_then(|y| t.offset(n, y))
                    .unwrap_or(dim_n);
                (x.sum_over(a.indices()), start, end)
            })
            .collect();
        let mut chain = Vec::with_capacity(n + 2);
        for p in 0..=(n + 1) {
            let mut coords = Vec::new();
            for &(weight, start, end) in &extents {
                if weight >= p {
                    coords.extend(start..end);
                }
            }
            chain.push(Subspace::coordinate_span(field, dim_n, &coords));
        }
        levels.push(chain);
    }
    FilteredComplex::new(complex, levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::matrix::Matrix;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn trivial_filtration_validates_on_any_complex() {
        let mut rng = generate::seeded(10);
        for _ in 0..5 {
            let c = generate::random_complex(&mut rng, gf(2), 4, 3);
            let fc = FilteredComplex::trivial(c);
            fc.validate().unwrap();
            assert_eq!(fc.classify(), Boundedness::CanonicallyBounded);
        }
    }

    #[test]
    fn non_stable_filtration_is_detected() {
        // complex k --id--> k, middle level span{e1} in degree 0 but zero in
        // degree 1: d maps F(1,0) outside F(1,1).
        let f = gf(2);
        let c = crate::cochain::CochainComplex::new(
            f,
            vec![1, 1],
            vec![Matrix::identity(f, 1)],
        )
        .unwrap();
        let levels = vec![
            vec![
                Subspace::full(f, 1),
                Subspace::full(f, 1),
                Subspace::zero(f, 1),
            ],
            vec![Subspace::full(f, 1), Subspace::zero(f, 1)],
        ];
        let fc = FilteredComplex::new(c, levels).unwrap();
        assert_eq!(fc.validate(), Err(FiltrationError::NotStable { p: 1, n: 0 }));
    }

    #[test]
    fn non_monotone_filtration_is_detected() {
        let f = gf(2);
        let c = crate::cochain::CochainComplex::new(f, vec![2], vec![]).unwrap();
        let levels = vec![vec![
            Subspace::full(f, 2),
            Subspace::coordinate_span(f, 2, &[0]),
            Subspace::coordinate_span(f, 2, &[1]),
        ]];
        let fc = FilteredComplex::new(c, levels).unwrap();
        assert_eq!(
            fc.validate(),
            Err(FiltrationError::NotDecreasing { p: 2, n: 0 })
        );
    }

    #[test]
    fn level_zero_must_be_full() {
        let f = gf(2);
        let c = crate::cochain::CochainComplex::new(f, vec![2], vec![]).unwrap();
        let levels = vec![vec![Subspace::coordinate_span(f, 2, &[0])]];
        assert_eq!(
            FilteredComplex::new(c, levels).unwrap_err(),
            FiltrationError::LevelZeroNotFull { n: 0 }
        );
    }

    #[test]
    fn classification_distinguishes_the_three_cases() {
        let f = gf(2);
        let c = crate::cochain::CochainComplex::new(f, vec![1, 1], vec![Matrix::zero(f, 1, 1)])
            .unwrap();

        // all levels full: never vanishes within the window
        let all_full = FilteredComplex::new(
            c.clone(),
            vec![
                vec![Subspace::full(f, 1), Subspace::full(f, 1)],
                vec![Subspace::full(f, 1), Subspace::full(f, 1)],
            ],
        )
        .unwrap();
        assert_eq!(all_full.classify(), Boundedness::UnboundedWithinWindow);

        // vanishing only at level n+2: bounded but not canonically
        let shifted = FilteredComplex::new(
            c.clone(),
            vec![
                vec![
                    Subspace::full(f, 1),
                    Subspace::full(f, 1),
                    Subspace::zero(f, 1),
                ],
                vec![
                    Subspace::full(f, 1),
                    Subspace::full(f, 1),
                    Subspace::full(f, 1),
                    Subspace::zero(f, 1),
                ],
            ],
        )
        .unwrap();
        shifted.validate().unwrap();
        assert_eq!(shifted.classify(), Boundedness::Bounded);

        assert_eq!(
            FilteredComplex::trivial(c).classify(),
            Boundedness::CanonicallyBounded
        );
    }

    #[test]
    fn canonical_filtration_menu() {
        let f = gf(2);
        let bi = generate::random_polycomplex(&mut generate::seeded(11), f, 2, 1, 1);
        let menu: Vec<String> = canonical_filtrations(&bi)
            .iter()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(menu, vec!["1", "2"]);

        let tri = generate::random_polycomplex(&mut generate::seeded(12), f, 3, 1, 1);
        let menu: Vec<String> = canonical_filtrations(&tri)
            .iter()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(menu, vec!["1", "2", "3", "1,2", "1,3", "2,3"]);

        let four = generate::random_polycomplex(&mut generate::seeded(13), f, 4, 1, 1);
        assert_eq!(canonical_filtrations(&four).len(), 14);

        let one = generate::random_polycomplex(&mut generate::seeded(14), f, 1, 2, 2);
        assert!(canonical_filtrations(&one).is_empty());
    }

    #[test]
    fn applied_filtrations_validate_and_are_canonically_bounded() {
        let mut rng = generate::seeded(15);
        for k in 2..=3usize {
            for _ in 0..4 {
                let v = generate::random_polycomplex(&mut rng, gf(2), k, 2, 2);
                let t = v.totalize();
                for a in canonical_filtrations(&v) {
                    let fc = apply_filtration(&t, &a).unwrap();
                    fc.validate().unwrap();
                    assert_eq!(fc.classify(), Boundedness::CanonicallyBounded);
                    // graded dimensions resum to the total dimension
                    for n in 0..=t.max_degree() {
                        let mut sum = 0usize;
                        for p in 0..=(n + 1) {
                            sum += fc.filt(p, n).dim() - fc.filt(p + 1, n).dim();
                        }
                        assert_eq!(sum, t.underlying().dim(n));
                    }
                }
            }
        }
    }

    #[test]
    fn nested_subsets_give_nested_filtrations() {
        let mut rng = generate::seeded(16);
        let v = generate::random_polycomplex(&mut rng, gf(2), 3, 2, 2);
        let t = v.totalize();
        let menu = canonical_filtrations(&v);
        for a in &menu {
            for b in &menu {
                if !a.is_strict_subset_of(b) {
                    continue;
                }
                let fa = apply_filtration(&t, a).unwrap();
                let fb = apply_filtration(&t, b).unwrap();
                for n in 0..=t.max_degree() {
                    for p in 0..=(n + 1) {
                        assert!(fb.filt(p, n).contains(&fa.filt(p, n)));
                    }
                }
            }
        }
    }

    #[test]
    fn full_subset_at_level_zero_is_everything() {
        let f = gf(2);
        let v = generate::random_polycomplex(&mut generate::seeded(17), f, 3, 2, 2);
        let t = v.totalize();
        let a = IndexSubsetFiltration::new(3, BTreeSet::from([1, 2])).unwrap();
        let fc = apply_filtration(&t, &a).unwrap();
        for n in 0..=t.max_degree() {
            assert!(fc.filt(0, n).is_full());
            // levels beyond the total degree vanish: coordinate sums cannot
            // exceed n
            assert!(fc.filt(n + 1, n).is_zero());
        }
    }
}
