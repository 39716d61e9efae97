//! Half-maxima: the largest `t` with `0 ≤ 2t ≤ λ0`, and witness chains when
//! no such largest element exists.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{GroupElement, GroupError, Repr};

/// Outcome of [`GroupElement::max_half`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalfMax {
    Max(GroupElement),
    /// The set `{t : 0 ≤ 2t ≤ λ0}` has no largest element.
    None,
}

impl HalfMax {
    pub fn max(&self) -> Option<&GroupElement> {
        match self {
            HalfMax::Max(m) => Some(m),
            HalfMax::None => None,
        }
    }
}

pub(super) fn max_half(lambda0: &GroupElement) -> Result<HalfMax, GroupError> {
    if !lambda0.is_positive() {
        return Err(GroupError::Precondition(format!(
            "max_half requires a positive element, got {lambda0}"
        )));
    }
    let two = BigInt::from(2);
    Ok(match &lambda0.0 {
        Repr::Int(n) => HalfMax::Max(GroupElement::int(n.div_floor(&two))),
        Repr::Rational(_) | Repr::Dyadic(_) => {
            HalfMax::Max(lambda0.try_halve().expect("2 is invertible"))
        }
        // Order-dense groups: the supremum λ0/2 is attained iff it lies in the group.
        Repr::Triadic(_) | Repr::Zsqrt2(..) => match lambda0.try_halve() {
            Some(h) => HalfMax::Max(h),
            None => HalfMax::None,
        },
        Repr::LexInt(x, y) => {
            if x.is_even() {
                HalfMax::Max(GroupElement::lex(x / &two, y.div_floor(&two)))
            } else {
                HalfMax::None
            }
        }
    })
}

fn zsqrt2_mul(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    (&a.0 * &b.0 + &a.1 * &b.1 * 2, &a.0 * &b.1 + &a.1 * &b.0)
}

pub(super) fn half_chain(
    lambda0: &GroupElement,
    above: Option<&GroupElement>,
    depth: usize,
) -> Result<Vec<GroupElement>, GroupError> {
    if let HalfMax::Max(m) = max_half(lambda0)? {
        return Err(GroupError::MaximumExists(m));
    }
    let group = lambda0.group();
    let floor = match above {
        Some(t) => {
            if t.group() != group {
                return Err(GroupError::Mixed(group, t.group()));
            }
            if &t.double() > lambda0 {
                return Err(GroupError::Precondition(format!(
                    "chain floor {t} lies outside {{t : 0 ≤ 2t ≤ {lambda0}}}"
                )));
            }
            Some(t.clone())
        }
        None => None,
    };
    let admissible = |t: &GroupElement| {
        !t.is_negative() && floor.as_ref().is_none_or(|f| t > f)
    };

    let mut chain = Vec::with_capacity(depth);
    match &lambda0.0 {
        Repr::Triadic(p) => {
            // t_n = floor(p·3^(n-k) / 2) / 3^n, n > k; strictly increasing towards λ0/2.
            let mut n = p.exp + 1;
            let mut scaled: BigInt = &p.num * 3;
            while chain.len() < depth {
                let t = GroupElement::triadic(scaled.div_floor(&BigInt::from(2)), n);
                if admissible(&t) {
                    chain.push(t);
                }
                n += 1;
                scaled *= 3;
            }
        }
        Repr::Zsqrt2(a, b) => {
            // λ0 - ε lies in 2ℤ[√2] for ε a power of the unit √2-1 (times √2 when
            // a is even), so t = (λ0 - ε)/2 climbs to λ0/2 as ε shrinks.
            let unit = (BigInt::from(-1), BigInt::one());
            let unit_sq = zsqrt2_mul(&unit, &unit);
            let mut eps = match (a.is_odd(), b.is_odd()) {
                (true, true) => unit.clone(),
                (true, false) => unit_sq.clone(),
                (false, true) => (BigInt::zero(), BigInt::one()),
                (false, false) => unreachable!("λ0 ∉ 2ℤ[√2] when no maximum exists"),
            };
            while chain.len() < depth {
                let diff = GroupElement::zsqrt2(a - &eps.0, b - &eps.1);
                let t = diff.try_halve().expect("λ0 - ε is divisible by 2");
                if admissible(&t) {
                    chain.push(t);
                }
                eps = zsqrt2_mul(&eps, &unit_sq);
            }
        }
        Repr::LexInt(x, _) => {
            let c: BigInt = (x - 1) / 2;
            let mut m = match &floor {
                Some(f) => {
                    let (fx, fy) = f.as_pair().expect("lex pair");
                    if fx == &c {
                        (fy + BigInt::one()).max(BigInt::zero())
                    } else {
                        BigInt::zero()
                    }
                }
                None => BigInt::zero(),
            };
            while chain.len() < depth {
                chain.push(GroupElement::lex(c.clone(), m.clone()));
                m += 1;
            }
        }
        Repr::Int(_) | Repr::Rational(_) | Repr::Dyadic(_) => {
            unreachable!("these groups always have a half-maximum")
        }
    }
    Ok(chain)
}
