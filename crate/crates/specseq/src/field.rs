//! Exact scalar arithmetic over prime fields GF(p) and arbitrary-precision
//! rationals.
//!
//! Every object in this crate is parameterized at runtime by a [`FieldSpec`].
//! Scalars are immutable values kept in canonical form: residues reduced into
//! `[0, p)` for prime fields, fractions in lowest terms with positive
//! denominator for the rationals. No floating point is used anywhere.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("operands belong to different fields ({lhs} vs {rhs})")]
    FieldMismatch { lhs: FieldSpec, rhs: FieldSpec },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {text:?} as a scalar in {field}")]
    Parse { text: String, field: FieldSpec },
}

/// Runtime description of the ground field.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    repr: FieldRepr,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
enum FieldRepr {
    Prime(u64),
    Rational,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    let limit = n.sqrt();
    while d <= limit {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// The prime field GF(p). Primality is verified by trial division.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec {
            repr: FieldRepr::Prime(p),
        })
    }

    /// The field of rational numbers with arbitrary-precision entries.
    pub const fn rationals() -> Self {
        FieldSpec {
            repr: FieldRepr::Rational,
        }
    }

    pub fn characteristic(&self) -> Option<u64> {
        match self.repr {
            FieldRepr::Prime(p) => Some(p),
            FieldRepr::Rational => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.repr, FieldRepr::Rational)
    }

    pub fn zero(&self) -> Scalar {
        match self.repr {
            FieldRepr::Prime(p) => Scalar(ScalarRepr::Prime { residue: 0, p }),
            FieldRepr::Rational => Scalar(ScalarRepr::Rational(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.repr {
            FieldRepr::Prime(p) => Scalar(ScalarRepr::Prime {
                residue: if p == 1 { 0 } else { 1 },
                p,
            }),
            FieldRepr::Rational => Scalar(ScalarRepr::Rational(BigRational::one())),
        }
    }

    /// The scalar representing the integer `n`.
    pub fn integer(&self, n: i64) -> Scalar {
        match self.repr {
            FieldRepr::Prime(p) => {
                let residue = n.rem_euclid(p as i64) as u64;
                Scalar(ScalarRepr::Prime { residue, p })
            }
            FieldRepr::Rational => Scalar(ScalarRepr::Rational(BigRational::from_integer(
                BigInt::from(n),
            ))),
        }
    }

    /// Parses the canonical text form: a decimal integer for GF(p), an
    /// optionally signed `a` or `a/b` for the rationals.
    pub fn parse(&self, text: &str) -> Result<Scalar, FieldError> {
        let err = || FieldError::Parse {
            text: text.to_string(),
            field: *self,
        };
        let text = text.trim();
        match self.repr {
            FieldRepr::Prime(p) => {
                let n: BigInt = text.parse().map_err(|_| err())?;
                let p_big = BigInt::from(p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let (_, digits) = r.to_u64_digits();
                let residue = digits.first().copied().unwrap_or(0);
                Ok(Scalar(ScalarRepr::Prime { residue, p }))
            }
            FieldRepr::Rational => {
                let (num_text, den_text) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let num: BigInt = num_text.trim().parse().map_err(|_| err())?;
                let den: BigInt = den_text.trim().parse().map_err(|_| err())?;
                if den.is_zero() {
                    return Err(err());
                }
                Ok(Scalar(ScalarRepr::Rational(BigRational::new(num, den))))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.repr {
            FieldRepr::Prime(p) => write!(f, "GF({p})"),
            FieldRepr::Rational => write!(f, "Q"),
        }
    }
}

/// An element of a [`FieldSpec`], always stored in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(ScalarRepr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum ScalarRepr {
    Prime { residue: u64, p: u64 },
    Rational(BigRational),
}

/// Modular inverse by the extended Euclidean algorithm.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of a unit in a prime field");
    t0.rem_euclid(p as i128) as u64
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            ScalarRepr::Prime { p, .. } => FieldSpec {
                repr: FieldRepr::Prime(*p),
            },
            ScalarRepr::Rational(_) => FieldSpec::rationals(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            ScalarRepr::Prime { residue, .. } => *residue == 0,
            ScalarRepr::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            ScalarRepr::Prime { residue, .. } => *residue == 1,
            ScalarRepr::Rational(r) => r.is_one(),
        }
    }

    pub fn from_rational(num: i64, den: i64) -> Result<Scalar, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Scalar(ScalarRepr::Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        ))))
    }

    fn check_same_field(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field() != other.field() {
            return Err(FieldError::FieldMismatch {
                lhs: self.field(),
                rhs: other.field(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (ScalarRepr::Prime { residue: a, p }, ScalarRepr::Prime { residue: b, .. }) => {
                let s = (*a as u128 + *b as u128) % *p as u128;
                Scalar(ScalarRepr::Prime {
                    residue: s as u64,
                    p: *p,
                })
            }
            (ScalarRepr::Rational(a), ScalarRepr::Rational(b)) => {
                Scalar(ScalarRepr::Rational(a + b))
            }
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (ScalarRepr::Prime { residue: a, p }, ScalarRepr::Prime { residue: b, .. }) => {
                let s = (*a as u128 * *b as u128) % *p as u128;
                Scalar(ScalarRepr::Prime {
                    residue: s as u64,
                    p: *p,
                })
            }
            (ScalarRepr::Rational(a), ScalarRepr::Rational(b)) => {
                Scalar(ScalarRepr::Rational(a * b))
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            ScalarRepr::Prime { residue, p } => Scalar(ScalarRepr::Prime {
                residue: if *residue == 0 { 0 } else { p - residue },
                p: *p,
            }),
            ScalarRepr::Rational(r) => Scalar(ScalarRepr::Rational(-r)),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.add(&other.neg())
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.0 {
            ScalarRepr::Prime { residue, p } => Scalar(ScalarRepr::Prime {
                residue: inv_mod(*residue, *p),
                p: *p,
            }),
            ScalarRepr::Rational(r) => Scalar(ScalarRepr::Rational(r.recip())),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            ScalarRepr::Prime { residue, .. } => write!(f, "{residue}"),
            ScalarRepr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn prime_field_requires_prime_characteristic() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(97).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(FieldSpec::prime(4), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldSpec::prime(91), Err(FieldError::NotPrime(91)));
        assert_eq!(FieldSpec::prime(0), Err(FieldError::NotPrime(0)));
    }

    #[test]
    fn addition_reduces_modulo_p() {
        let f = gf(5);
        let three = f.integer(3);
        let four = f.integer(4);
        assert_eq!(three.add(&four).unwrap(), f.integer(2));
    }

    #[test]
    fn rational_addition_normalizes() {
        let q = FieldSpec::rationals();
        let half = Scalar::from_rational(1, 2).unwrap();
        let third = Scalar::from_rational(1, 3).unwrap();
        assert_eq!(half.add(&third).unwrap(), q.parse("5/6").unwrap());
    }

    #[test]
    fn characteristic_two() {
        let f = gf(2);
        assert_eq!(f.one().add(&f.one()).unwrap(), f.zero());
    }

    #[test]
    fn inverse_in_gf5() {
        let f = gf(5);
        assert_eq!(f.integer(2).inv().unwrap(), f.integer(3));
    }

    #[test]
    fn inverse_of_negative_rational() {
        let a = Scalar::from_rational(-3, 4).unwrap();
        assert_eq!(a.inv().unwrap(), Scalar::from_rational(-4, 3).unwrap());
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = gf(7);
        assert_eq!(f.zero().inv(), Err(FieldError::DivisionByZero));
        assert_eq!(
            FieldSpec::rationals().zero().inv(),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn mixed_field_operands_are_rejected() {
        let a = gf(5).integer(1);
        let b = gf(7).integer(1);
        let c = FieldSpec::rationals().one();
        assert!(matches!(a.add(&b), Err(FieldError::FieldMismatch { .. })));
        assert!(matches!(a.mul(&c), Err(FieldError::FieldMismatch { .. })));
    }

    #[test]
    fn parse_round_trips_canonical_form() {
        let f = gf(11);
        assert_eq!(f.parse("-1").unwrap(), f.integer(10));
        assert_eq!(f.parse("25").unwrap(), f.integer(3));
        let q = FieldSpec::rationals();
        assert_eq!(q.parse("4/6").unwrap().to_string(), "2/3");
        assert_eq!(q.parse("-4/-6").unwrap().to_string(), "2/3");
        assert_eq!(q.parse("7").unwrap().to_string(), "7");
        assert!(q.parse("1/0").is_err());
        assert!(f.parse("a").is_err());
    }

    fn arb_field() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(gf(2)),
            Just(gf(5)),
            Just(gf(97)),
            Just(FieldSpec::rationals()),
        ]
    }

    fn arb_scalar(field: FieldSpec) -> impl Strategy<Value = Scalar> {
        (any::<i64>(), 1i64..50).prop_map(move |(n, d)| {
            if field.is_rational() {
                Scalar::from_rational(n % 1000, d).unwrap()
            } else {
                field.integer(n)
            }
        })
    }

    proptest! {
        #[test]
        fn field_axioms_hold((f, seeds) in arb_field().prop_flat_map(|f| {
            let s = proptest::collection::vec(arb_scalar(f), 3);
            (Just(f), s)
        })) {
            let (a, b, c) = (&seeds[0], &seeds[1], &seeds[2]);
            // commutativity and associativity
            prop_assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
            prop_assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
            prop_assert_eq!(
                a.add(b).unwrap().add(c).unwrap(),
                a.add(&b.add(c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(b).unwrap().mul(c).unwrap(),
                a.mul(&b.mul(c).unwrap()).unwrap()
            );
            // distributivity
            prop_assert_eq!(
                a.mul(&b.add(c).unwrap()).unwrap(),
                a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap()
            );
            // identities
            prop_assert_eq!(a.add(&f.zero()).unwrap(), a.clone());
            prop_assert_eq!(a.mul(&f.one()).unwrap(), a.clone());
            prop_assert_eq!(a.add(&a.neg()).unwrap(), f.zero());
        }

        #[test]
        fn nonzero_scalars_invert((f, a) in arb_field().prop_flat_map(|f| (Just(f), arb_scalar(f)))) {
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f.one());
            }
        }

        #[test]
        fn fermat_little_theorem(p in prop_oneof![Just(2u64), Just(3), Just(5), Just(13)], n in any::<i64>()) {
            let f = gf(p);
            let a = f.integer(n);
            prop_assert_eq!(a.pow(p), a);
        }
    }
}
