//! Exact arithmetic on six concrete ordered abelian groups.
//!
//! Every element is kept in a unique canonical form (reduced fractions,
//! stripped powers of the base for `ℤ[1/2]` and `ℤ[1/3]`), so structural
//! equality coincides with equality in the group. No floating point is used
//! anywhere: the sign of `a + b√2` is decided by an integer predicate.

mod codec;
mod half;
mod sample;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use codec::ParseError;
pub use half::HalfMax;
pub use sample::{derive_rng, ElementSampler, SampleRng};

/// One of the built-in ordered abelian groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupId {
    /// ℤ
    Int,
    /// ℚ
    Rational,
    /// ℤ[1/2]
    Dyadic,
    /// ℤ[1/3]
    Triadic,
    /// ℤ[√2]
    Zsqrt2,
    /// ℤ×ℤ with the lexicographic order.
    LexInt,
}

impl GroupId {
    pub const ALL: [GroupId; 6] = [
        GroupId::Int,
        GroupId::Rational,
        GroupId::Dyadic,
        GroupId::Triadic,
        GroupId::Zsqrt2,
        GroupId::LexInt,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupId::Int => "int",
            GroupId::Rational => "rational",
            GroupId::Dyadic => "dyadic",
            GroupId::Triadic => "triadic",
            GroupId::Zsqrt2 => "zsqrt2",
            GroupId::LexInt => "lex-int",
        }
    }

    /// True when the group is the additive group of an ordered field.
    pub fn is_field(self) -> bool {
        matches!(self, GroupId::Rational)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupId {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupId::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| GroupError::UnknownGroup(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("mixed-group operation: {0} and {1}")]
    Mixed(GroupId, GroupId),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("maximum exists: {0}")]
    MaximumExists(GroupElement),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// `num / base^exp` with `exp = 0` or `base ∤ num`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct PowerFraction {
    num: BigInt,
    exp: u32,
}

impl PowerFraction {
    fn new(mut num: BigInt, mut exp: u32, base: u32) -> Self {
        let b = BigInt::from(base);
        if num.is_zero() {
            exp = 0;
        }
        while exp > 0 && (&num % &b).is_zero() {
            num /= &b;
            exp -= 1;
        }
        PowerFraction { num, exp }
    }

    /// Numerator rescaled to denominator `base^exp` (requires `exp >= self.exp`).
    fn scaled(&self, exp: u32, base: u32) -> BigInt {
        &self.num * BigInt::from(base).pow(exp - self.exp)
    }

    fn add(&self, other: &Self, base: u32) -> Self {
        let exp = self.exp.max(other.exp);
        PowerFraction::new(self.scaled(exp, base) + other.scaled(exp, base), exp, base)
    }

    fn cmp(&self, other: &Self, base: u32) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.scaled(exp, base).cmp(&other.scaled(exp, base))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Int(BigInt),
    Rational(BigRational),
    Dyadic(PowerFraction),
    Triadic(PowerFraction),
    Zsqrt2(BigInt, BigInt),
    LexInt(BigInt, BigInt),
}

/// An element of one of the built-in groups, always in canonical form.
///
/// The arithmetic operators (`+`, `-`, unary `-`) panic when the operands
/// belong to different groups; use [`GroupElement::checked_add`] and
/// [`GroupElement::compare`] where mixing is a recoverable input error.
/// `PartialOrd` yields `None` across groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement(Repr);

/// Sign of `a + b√2`, decided on integers only.
pub fn zsqrt2_sign(a: &BigInt, b: &BigInt) -> Ordering {
    let a2 = a * a;
    let two_b2 = b * b * 2;
    if b.is_zero() {
        a.cmp(&BigInt::zero())
    } else if b.is_positive() {
        if !a.is_negative() || a2 < two_b2 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if a.is_positive() && a2 > two_b2 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl GroupElement {
    pub fn int(n: impl Into<BigInt>) -> Self {
        GroupElement(Repr::Int(n.into()))
    }

    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, GroupError> {
        let den = den.into();
        if den.is_zero() {
            return Err(GroupError::Precondition("zero denominator".into()));
        }
        Ok(GroupElement(Repr::Rational(BigRational::new(num.into(), den))))
    }

    pub fn from_rational(r: BigRational) -> Self {
        GroupElement(Repr::Rational(r))
    }

    /// `num / 2^exp`
    pub fn dyadic(num: impl Into<BigInt>, exp: u32) -> Self {
        GroupElement(Repr::Dyadic(PowerFraction::new(num.into(), exp, 2)))
    }

    /// `num / 3^exp`
    pub fn triadic(num: impl Into<BigInt>, exp: u32) -> Self {
        GroupElement(Repr::Triadic(PowerFraction::new(num.into(), exp, 3)))
    }

    /// `a + b√2`
    pub fn zsqrt2(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GroupElement(Repr::Zsqrt2(a.into(), b.into()))
    }

    /// `(x, y)` under the lexicographic order.
    pub fn lex(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        GroupElement(Repr::LexInt(x.into(), y.into()))
    }

    /// The integer `n` embedded in `group`; for `lex-int` this is `(n, 0)`.
    pub fn from_int(group: GroupId, n: impl Into<BigInt>) -> Self {
        let n = n.into();
        match group {
            GroupId::Int => GroupElement::int(n),
            GroupId::Rational => GroupElement::from_rational(BigRational::from_integer(n)),
            GroupId::Dyadic => GroupElement::dyadic(n, 0),
            GroupId::Triadic => GroupElement::triadic(n, 0),
            GroupId::Zsqrt2 => GroupElement::zsqrt2(n, 0),
            GroupId::LexInt => GroupElement::lex(n, 0),
        }
    }

    pub fn zero(group: GroupId) -> Self {
        GroupElement::from_int(group, 0)
    }

    pub fn one(group: GroupId) -> Self {
        GroupElement::from_int(group, 1)
    }

    pub fn group(&self) -> GroupId {
        match &self.0 {
            Repr::Int(_) => GroupId::Int,
            Repr::Rational(_) => GroupId::Rational,
            Repr::Dyadic(_) => GroupId::Dyadic,
            Repr::Triadic(_) => GroupId::Triadic,
            Repr::Zsqrt2(..) => GroupId::Zsqrt2,
            Repr::LexInt(..) => GroupId::LexInt,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Coefficients `(a, b)` of `a + b√2`, or the lexicographic pair.
    pub fn as_pair(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.0 {
            Repr::Zsqrt2(a, b) | Repr::LexInt(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// `(numerator, exponent)` for the power-denominator groups, `(n, 0)` for ℤ.
    pub fn as_power_fraction(&self) -> Option<(&BigInt, u32)> {
        match &self.0 {
            Repr::Int(n) => Some((n, 0)),
            Repr::Dyadic(p) | Repr::Triadic(p) => Some((&p.num, p.exp)),
            _ => None,
        }
    }

    fn same_group(&self, other: &Self) -> Result<(), GroupError> {
        if self.group() == other.group() {
            Ok(())
        } else {
            Err(GroupError::Mixed(self.group(), other.group()))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == Ordering::Equal
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    /// Comparison against the identity.
    pub fn signum(&self) -> Ordering {
        let zero = BigInt::zero();
        match &self.0 {
            Repr::Int(n) => n.cmp(&zero),
            Repr::Rational(r) => r.numer().cmp(&zero),
            Repr::Dyadic(p) | Repr::Triadic(p) => p.num.cmp(&zero),
            Repr::Zsqrt2(a, b) => zsqrt2_sign(a, b),
            Repr::LexInt(x, y) => x.cmp(&zero).then_with(|| y.cmp(&zero)),
        }
    }

    /// Total order within a group; mixing groups is a domain error.
    pub fn compare(&self, other: &Self) -> Result<Ordering, GroupError> {
        self.same_group(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => a.cmp(b),
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Dyadic(a), Repr::Dyadic(b)) => a.cmp(b, 2),
            (Repr::Triadic(a), Repr::Triadic(b)) => a.cmp(b, 3),
            (Repr::Zsqrt2(a1, b1), Repr::Zsqrt2(a2, b2)) => zsqrt2_sign(&(a1 - a2), &(b1 - b2)),
            (Repr::LexInt(x1, y1), Repr::LexInt(x2, y2)) => x1.cmp(x2).then_with(|| y1.cmp(y2)),
            _ => unreachable!("group tags already checked"),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, GroupError> {
        self.same_group(other)?;
        Ok(GroupElement(match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a + b),
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Dyadic(a), Repr::Dyadic(b)) => Repr::Dyadic(a.add(b, 2)),
            (Repr::Triadic(a), Repr::Triadic(b)) => Repr::Triadic(a.add(b, 3)),
            (Repr::Zsqrt2(a1, b1), Repr::Zsqrt2(a2, b2)) => Repr::Zsqrt2(a1 + a2, b1 + b2),
            (Repr::LexInt(x1, y1), Repr::LexInt(x2, y2)) => Repr::LexInt(x1 + x2, y1 + y2),
            _ => unreachable!("group tags already checked"),
        }))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, GroupError> {
        self.checked_add(&-other)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `k · self` for an integer `k`.
    pub fn mul_int(&self, k: &BigInt) -> Self {
        GroupElement(match &self.0 {
            Repr::Int(n) => Repr::Int(n * k),
            Repr::Rational(r) => Repr::Rational(r * BigRational::from_integer(k.clone())),
            Repr::Dyadic(p) => Repr::Dyadic(PowerFraction::new(&p.num * k, p.exp, 2)),
            Repr::Triadic(p) => Repr::Triadic(PowerFraction::new(&p.num * k, p.exp, 3)),
            Repr::Zsqrt2(a, b) => Repr::Zsqrt2(a * k, b * k),
            Repr::LexInt(x, y) => Repr::LexInt(x * k, y * k),
        })
    }

    /// Ring product, defined for every built-in group except `lex-int`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, GroupError> {
        self.same_group(other)?;
        Ok(GroupElement(match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a * b),
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Dyadic(a), Repr::Dyadic(b)) => {
                Repr::Dyadic(PowerFraction::new(&a.num * &b.num, a.exp + b.exp, 2))
            }
            (Repr::Triadic(a), Repr::Triadic(b)) => {
                Repr::Triadic(PowerFraction::new(&a.num * &b.num, a.exp + b.exp, 3))
            }
            (Repr::Zsqrt2(a1, b1), Repr::Zsqrt2(a2, b2)) => {
                Repr::Zsqrt2(a1 * a2 + b1 * b2 * 2, a1 * b2 + b1 * a2)
            }
            _ => {
                return Err(GroupError::Precondition(format!(
                    "{} carries no ring structure",
                    self.group()
                )))
            }
        }))
    }

    pub fn double(&self) -> Self {
        self + self
    }

    /// Returns `h` with `h + h = self` when such `h` exists in the group.
    pub fn try_halve(&self) -> Option<Self> {
        let two = BigInt::from(2);
        match &self.0 {
            Repr::Int(n) => n.is_even().then(|| GroupElement::int(n / &two)),
            Repr::Rational(r) => Some(GroupElement::from_rational(r / BigRational::from_integer(two))),
            Repr::Dyadic(p) => Some(GroupElement::dyadic(p.num.clone(), p.exp + 1)),
            Repr::Triadic(p) => p
                .num
                .is_even()
                .then(|| GroupElement::triadic(&p.num / &two, p.exp)),
            Repr::Zsqrt2(a, b) => {
                (a.is_even() && b.is_even()).then(|| GroupElement::zsqrt2(a / &two, b / &two))
            }
            Repr::LexInt(x, y) => {
                (x.is_even() && y.is_even()).then(|| GroupElement::lex(x / &two, y / &two))
            }
        }
    }

    pub fn max_half(&self) -> Result<HalfMax, GroupError> {
        half::max_half(self)
    }

    /// A strictly increasing chain of length `depth` in `{t : 0 ≤ 2t ≤ self}`,
    /// every element strictly above `above` when given. Fails with
    /// [`GroupError::MaximumExists`] if the set has a maximum.
    pub fn half_chain(&self, above: Option<&GroupElement>, depth: usize) -> Result<Vec<Self>, GroupError> {
        half::half_chain(self, above, depth)
    }

    pub fn min<'a>(&'a self, other: &'a Self) -> &'a Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max<'a>(&'a self, other: &'a Self) -> &'a Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl<'a> Add<&'a GroupElement> for &'a GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: &'a GroupElement) -> GroupElement {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: GroupElement) -> GroupElement {
        &self + &rhs
    }
}

impl<'a> Sub<&'a GroupElement> for &'a GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: &'a GroupElement) -> GroupElement {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: GroupElement) -> GroupElement {
        &self - &rhs
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        self.mul_int(&-BigInt::one())
    }
}

impl Neg for GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_examples() {
        assert_eq!(GroupElement::int(3).compare(&GroupElement::int(5)), Ok(Ordering::Less));
        assert_eq!(
            GroupElement::zsqrt2(1, 1).compare(&GroupElement::zsqrt2(2, 0)),
            Ok(Ordering::Greater)
        );
        assert_eq!(
            GroupElement::lex(0, 7).compare(&GroupElement::lex(1, -100)),
            Ok(Ordering::Less)
        );
    }

    #[test]
    fn mixed_groups_are_rejected() {
        let err = GroupElement::int(1).compare(&GroupElement::dyadic(1, 0)).unwrap_err();
        assert_eq!(err, GroupError::Mixed(GroupId::Int, GroupId::Dyadic));
        assert!(GroupElement::int(1).checked_add(&GroupElement::lex(1, 0)).is_err());
        assert_eq!(GroupElement::int(1).partial_cmp(&GroupElement::triadic(1, 0)), None);
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            GroupElement::triadic(1, 1) + GroupElement::triadic(1, 1),
            GroupElement::triadic(2, 1)
        );
        assert_eq!(
            GroupElement::zsqrt2(1, 1) + GroupElement::zsqrt2(1, -1),
            GroupElement::zsqrt2(2, 0)
        );
        assert_eq!(GroupElement::int(2) + GroupElement::int(-5), GroupElement::int(-3));
        // 1/3 + 2/3 strips the denominator entirely
        assert_eq!(
            GroupElement::triadic(1, 1) + GroupElement::triadic(2, 1),
            GroupElement::triadic(1, 0)
        );
    }

    #[test]
    fn canonical_forms_strip_base_powers() {
        assert_eq!(GroupElement::triadic(6, 2), GroupElement::triadic(2, 1));
        assert_eq!(GroupElement::dyadic(12, 3), GroupElement::dyadic(3, 1));
        assert_eq!(GroupElement::dyadic(0, 5), GroupElement::dyadic(0, 0));
        assert_eq!(
            GroupElement::rational(-6, -4).unwrap(),
            GroupElement::rational(3, 2).unwrap()
        );
        assert!(GroupElement::rational(3, 0).is_err());
    }

    #[test]
    fn zsqrt2_sign_cases() {
        use Ordering::*;
        let s = |a: i64, b: i64| zsqrt2_sign(&BigInt::from(a), &BigInt::from(b));
        assert_eq!(s(0, 0), Equal);
        assert_eq!(s(-1, 1), Greater);
        assert_eq!(s(-2, 1), Less);
        assert_eq!(s(1, -1), Less);
        assert_eq!(s(2, -1), Greater);
        assert_eq!(s(-3, 2), Less);
        assert_eq!(s(3, -2), Greater);
        assert_eq!(s(-7, 5), Greater);
        assert_eq!(s(7, -5), Less);
    }

    #[test]
    fn try_halve_examples() {
        assert_eq!(GroupElement::triadic(2, 1).try_halve(), Some(GroupElement::triadic(1, 1)));
        assert_eq!(GroupElement::triadic(1, 1).try_halve(), None);
        assert_eq!(GroupElement::dyadic(1, 0).try_halve(), Some(GroupElement::dyadic(1, 1)));
        assert_eq!(GroupElement::int(7).try_halve(), None);
        assert_eq!(GroupElement::zsqrt2(2, 1).try_halve(), None);
        assert_eq!(GroupElement::lex(4, -2).try_halve(), Some(GroupElement::lex(2, -1)));
    }

    #[test]
    fn abs_and_neg() {
        assert_eq!(GroupElement::zsqrt2(1, -1).abs(), GroupElement::zsqrt2(-1, 1));
        assert_eq!(GroupElement::lex(0, -3).abs(), GroupElement::lex(0, 3));
        assert_eq!(-GroupElement::triadic(1, 2), GroupElement::triadic(-1, 2));
    }
}
