//! Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every homology computation in this crate reduces to ranks of matrices over
//! one of these fields, so scalars are kept canonical at all times: rationals
//! in lowest terms with positive denominator, residues in `[0, p)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::FieldError;

/// Descriptor of the ambient field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// The rational numbers.
    Rational,
    /// The prime field `F_p`, `p < 2^31`.
    Prime(u32),
}

impl FieldKind {
    pub fn prime(p: u32) -> Result<FieldKind, FieldError> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldKind::Prime(p))
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldKind::Rational => FieldElement::Rat(Rational::zero()),
            FieldKind::Prime(p) => FieldElement::Mod(0, *p),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            FieldKind::Rational => FieldElement::Rat(Rational::one()),
            FieldKind::Prime(p) => FieldElement::Mod(1 % *p, *p),
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            FieldKind::Rational => FieldElement::Rat(Rational::from_i64(n)),
            FieldKind::Prime(p) => FieldElement::Mod(mod_reduce(n, *p), *p),
        }
    }

    /// Embeds the rational `num/den` into the field. Over `F_p` this fails
    /// when `p` divides the denominator.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        if den == 0 {
            return Err(FieldError::ZeroDenominator);
        }
        match self {
            FieldKind::Rational => Ok(FieldElement::Rat(Rational::new(num, den))),
            FieldKind::Prime(p) => {
                let d = mod_reduce(den, *p);
                if d == 0 {
                    return Err(FieldError::DenominatorDivisibleByP(den, *p));
                }
                let n = mod_reduce(num, *p);
                Ok(FieldElement::Mod(mod_mul(n, mod_inv(d, *p), *p), *p))
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldKind::Rational => 0,
            FieldKind::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    let n = n as u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_reduce(n: i64, p: u32) -> u32 {
    let p = p as i64;
    (((n % p) + p) % p) as u32
}

fn mod_mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p.
    debug_assert!(a != 0);
    let mut base = a as u64;
    let mut exp = (p - 2) as u64;
    let m = p as u64;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

/// An exact rational, stored in lowest terms with positive denominator.
///
/// Values that fit in a machine word pair stay inline; arithmetic promotes to
/// big integers only on overflow and demotes back as soon as it fits again.
#[derive(Clone, Debug)]
pub struct Rational(Repr);

#[derive(Clone, Debug)]
enum Repr {
    Small(i64, i64),
    Big(Box<(BigInt, BigInt)>),
}

impl Rational {
    pub fn zero() -> Rational {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Rational {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_i64(n: i64) -> Rational {
        Rational(Repr::Small(n, 1))
    }

    /// `num/den`, reduced. Panics on a zero denominator; use
    /// [`FieldKind::from_ratio`] for fallible construction from input data.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational::from_i128(num as i128, den as i128)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Rational {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        if num == 0 {
            return Rational::zero();
        }
        let g = gcd_u128(num.unsigned_abs(), den as u128) as i128;
        num /= g;
        den /= g;
        if let (Ok(n), Ok(d)) = (i64::try_from(num), i64::try_from(den)) {
            Rational(Repr::Small(n, d))
        } else {
            Rational(Repr::Big(Box::new((BigInt::from(num), BigInt::from(den)))))
        }
    }

    fn from_big(mut num: BigInt, mut den: BigInt) -> Rational {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            return Rational::zero();
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        if let (Some(n), Some(d)) = (to_i64(&num), to_i64(&den)) {
            Rational(Repr::Small(n, d))
        } else {
            Rational(Repr::Big(Box::new((num, den))))
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(_) => false, // canonical form demotes zero to Small
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.0.is_negative(),
        }
    }

    fn as_big(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (b.0.clone(), b.1.clone()),
        }
    }

    pub fn add(&self, other: &Rational) -> Rational {
        match (&self.0, &other.0) {
            (Repr::Small(an, ad), Repr::Small(bn, bd)) => {
                let num = *an as i128 * *bd as i128 + *bn as i128 * *ad as i128;
                let den = *ad as i128 * *bd as i128;
                Rational::from_i128(num, den)
            }
            _ => {
                let (an, ad) = self.as_big();
                let (bn, bd) = other.as_big();
                Rational::from_big(&an * &bd + &bn * &ad, ad * bd)
            }
        }
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        match (&self.0, &other.0) {
            (Repr::Small(an, ad), Repr::Small(bn, bd)) => {
                // Cross-reduce first so the i128 products stay small.
                let g1 = gcd_u128(an.unsigned_abs() as u128, bd.unsigned_abs() as u128) as i128;
                let g2 = gcd_u128(bn.unsigned_abs() as u128, ad.unsigned_abs() as u128) as i128;
                let num = (*an as i128 / g1) * (*bn as i128 / g2);
                let den = (*ad as i128 / g2) * (*bd as i128 / g1);
                Rational::from_i128(num, den)
            }
            _ => {
                let (an, ad) = self.as_big();
                let (bn, bd) = other.as_big();
                Rational::from_big(an * bn, ad * bd)
            }
        }
    }

    pub fn neg(&self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => {
                if let Some(neg) = n.checked_neg() {
                    Rational(Repr::Small(neg, *d))
                } else {
                    Rational::from_i128(-(*n as i128), *d as i128)
                }
            }
            Repr::Big(b) => Rational(Repr::Big(Box::new((-b.0.clone(), b.1.clone())))),
        }
    }

    pub fn inv(&self) -> Result<Rational, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match &self.0 {
            Repr::Small(n, d) => Ok(Rational::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Ok(Rational::from_big(b.1.clone(), b.0.clone())),
        }
    }

    pub fn div(&self, other: &Rational) -> Result<Rational, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Rough size measure used for pivot selection: total bit length of
    /// numerator and denominator.
    pub fn bit_size(&self) -> u64 {
        match &self.0 {
            Repr::Small(n, d) => {
                let bn = 64 - n.unsigned_abs().leading_zeros() as u64;
                let bd = 64 - d.unsigned_abs().leading_zeros() as u64;
                bn + bd
            }
            Repr::Big(b) => b.0.bits() + b.1.bits(),
        }
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

fn to_i64(n: &BigInt) -> Option<i64> {
    i64::try_from(n).ok()
}

impl PartialEq for Rational {
    fn eq(&self, other: &Rational) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(an, ad), Repr::Small(bn, bd)) => an == bn && ad == bd,
            // Canonical form keeps small values in Small, so mixed
            // representations compare via promotion only as a safety net.
            _ => {
                let (an, ad) = self.as_big();
                let (bn, bd) = other.as_big();
                an == bn && ad == bd
            }
        }
    }
}

impl Eq for Rational {}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => {
                if b.1.is_one() {
                    write!(f, "{}", b.0)
                } else {
                    write!(f, "{}/{}", b.0, b.1)
                }
            }
        }
    }
}

/// A scalar tagged by its ambient field.
///
/// All public constructors go through [`FieldKind`], so two elements that meet
/// in an arithmetic operation always belong to the same field; a mismatch is a
/// programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElement {
    Rat(Rational),
    Mod(u32, u32),
}

impl FieldElement {
    pub fn kind(&self) -> FieldKind {
        match self {
            FieldElement::Rat(_) => FieldKind::Rational,
            FieldElement::Mod(_, p) => FieldKind::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_zero(),
            FieldElement::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_one(),
            FieldElement::Mod(v, _) => *v == 1,
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a.add(b)),
            (FieldElement::Mod(a, p), FieldElement::Mod(b, q)) => {
                assert_eq!(p, q, "field mismatch");
                FieldElement::Mod(((*a as u64 + *b as u64) % *p as u64) as u32, *p)
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a.mul(b)),
            (FieldElement::Mod(a, p), FieldElement::Mod(b, q)) => {
                assert_eq!(p, q, "field mismatch");
                FieldElement::Mod(mod_mul(*a, *b, *p), *p)
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rat(a) => FieldElement::Rat(a.neg()),
            FieldElement::Mod(a, p) => FieldElement::Mod(if *a == 0 { 0 } else { p - a }, *p),
        }
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        match self {
            FieldElement::Rat(a) => Ok(FieldElement::Rat(a.inv()?)),
            FieldElement::Mod(a, p) => {
                if *a == 0 {
                    Err(FieldError::DivisionByZero)
                } else {
                    Ok(FieldElement::Mod(mod_inv(*a, *p), *p))
                }
            }
        }
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn bit_size(&self) -> u64 {
        match self {
            FieldElement::Rat(r) => r.bit_size(),
            FieldElement::Mod(_, _) => 1,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rat(r) => write!(f, "{r}"),
            FieldElement::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_canonical_form() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(-2, -4), Rational::new(1, 2));
        assert_eq!(Rational::new(2, -4), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, 7), Rational::zero());
        assert_eq!(Rational::new(3, 1).to_string(), "3");
        assert_eq!(Rational::new(-3, 6).to_string(), "-1/2");
    }

    #[test]
    fn rational_overflow_promotes_and_demotes() {
        let big = Rational::new(i64::MAX, 1);
        let sq = big.mul(&big);
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = sq.div(&big).unwrap();
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(_, _)));
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert!(FieldKind::prime(4).is_err());
        assert!(FieldKind::prime(1).is_err());
        assert!(FieldKind::prime(5).is_ok());
        assert!(FieldKind::prime(2147483647).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldKind::prime(7).unwrap();
        let a = f.from_i64(10); // 3 mod 7
        let b = f.from_i64(-2); // 5 mod 7
        assert_eq!(a.add(&b), f.from_i64(1));
        assert_eq!(a.mul(&b), f.from_i64(1));
        assert_eq!(a.inv().unwrap().mul(&a), f.one());
        assert!(f.from_ratio(1, 7).is_err());
        assert_eq!(f.from_ratio(1, 2).unwrap(), f.from_i64(4));
    }

    proptest! {
        #[test]
        fn mul_inverse_is_one(n in -10_000i64..10_000, d in 1i64..10_000) {
            prop_assume!(n != 0);
            let q = FieldKind::Rational;
            let a = q.from_ratio(n, d).unwrap();
            let b = q.from_ratio(d, n).unwrap();
            prop_assert!(a.mul(&b).is_one());
        }

        #[test]
        fn field_axioms_rational(
            an in -1000i64..1000, ad in 1i64..1000,
            bn in -1000i64..1000, bd in 1i64..1000,
            cn in -1000i64..1000, cd in 1i64..1000,
        ) {
            let q = FieldKind::Rational;
            let a = q.from_ratio(an, ad).unwrap();
            let b = q.from_ratio(bn, bd).unwrap();
            let c = q.from_ratio(cn, cd).unwrap();
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
        }
    }
}
