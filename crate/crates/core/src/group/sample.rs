//! Seeded sampling of exact group elements.
//!
//! Numerators are uniform in a bounded range and denominator exponents are
//! geometric with mean 3 (drawn from integer coin flips, no floating point).
//! Bounded draws go straight into the target range instead of rejecting:
//! `lo + (hi - lo)·u` with `u ∈ [0, 1]` for the ring groups, a direct
//! coordinate draw for `lex-int`, a uniform integer draw for ℤ.

use num_bigint::{BigInt, RandBigInt};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use super::{GroupElement, GroupId};

pub type SampleRng = rand_chacha::ChaCha8Rng;

const EXPONENT_CAP: u32 = 24;

/// Generator for sample `index` of `stream` under `seed`. Each triple gets its
/// own ChaCha key, so draws never depend on the order samples are taken in.
pub fn derive_rng(seed: u64, stream: u64, index: u64) -> SampleRng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&stream.to_le_bytes());
    key[16..24].copy_from_slice(&index.to_le_bytes());
    SampleRng::from_seed(key)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementSampler {
    pub numerator_bound: u64,
}

impl ElementSampler {
    pub fn default_bound(group: GroupId) -> u64 {
        match group {
            GroupId::Triadic => 729,
            _ => 256,
        }
    }

    pub fn for_group(group: GroupId) -> Self {
        ElementSampler { numerator_bound: Self::default_bound(group) }
    }

    /// Geometric with mean 3: count successes of a 3/4 coin before the first failure.
    pub fn exponent(&self, rng: &mut SampleRng) -> u32 {
        let mut k = 0;
        while k < EXPONENT_CAP && rng.gen_range(0..4u8) != 0 {
            k += 1;
        }
        k
    }

    fn numerator(&self, rng: &mut SampleRng) -> BigInt {
        let b = self.numerator_bound as i64;
        BigInt::from(rng.gen_range(-b..=b))
    }

    /// An unconstrained element with bounded numerator(s).
    pub fn element(&self, group: GroupId, rng: &mut SampleRng) -> GroupElement {
        match group {
            GroupId::Int => GroupElement::int(self.numerator(rng)),
            GroupId::Rational => {
                let den = rng.gen_range(1..=self.numerator_bound.max(1));
                GroupElement::rational(self.numerator(rng), den).expect("nonzero denominator")
            }
            GroupId::Dyadic => GroupElement::dyadic(self.numerator(rng), self.exponent(rng)),
            GroupId::Triadic => GroupElement::triadic(self.numerator(rng), self.exponent(rng)),
            GroupId::Zsqrt2 => GroupElement::zsqrt2(self.numerator(rng), self.numerator(rng)),
            GroupId::LexInt => GroupElement::lex(self.numerator(rng), self.numerator(rng)),
        }
    }

    /// A strictly positive element.
    pub fn positive(&self, group: GroupId, rng: &mut SampleRng) -> GroupElement {
        loop {
            let e = self.element(group, rng).abs();
            if e.is_positive() {
                return e;
            }
        }
    }

    /// An element of `[0, 1]` in a ring group.
    fn unit_fraction(&self, group: GroupId, rng: &mut SampleRng) -> GroupElement {
        match group {
            GroupId::Int => GroupElement::int(rng.gen_range(0..=1)),
            GroupId::Rational => {
                let den = rng.gen_range(1..=self.numerator_bound.max(1));
                GroupElement::rational(rng.gen_range(0..=den), den).expect("nonzero denominator")
            }
            GroupId::Dyadic => {
                let k = self.exponent(rng);
                GroupElement::dyadic(rng.gen_range(0..=1u64 << k), k)
            }
            GroupId::Triadic => {
                let k = self.exponent(rng);
                GroupElement::triadic(rng.gen_range(0..=3u64.pow(k)), k)
            }
            GroupId::Zsqrt2 => {
                // For each b the window [-b√2, 1 - b√2] holds one or two integers a.
                let b = self.numerator(rng);
                let lo = ceil_zsqrt2(&BigInt::zero(), &-&b);
                let hi = floor_zsqrt2(&BigInt::one(), &-&b);
                let a = rng.gen_bigint_range(&lo, &(hi + 1));
                GroupElement::zsqrt2(a, b)
            }
            GroupId::LexInt => unreachable!("lex-int is sampled coordinatewise"),
        }
    }

    /// An element of the closed range `[lo, hi]`; endpoints are drawn with
    /// probability 1/16 each so degenerate cases stay covered.
    pub fn between(&self, lo: &GroupElement, hi: &GroupElement, rng: &mut SampleRng) -> GroupElement {
        assert!(lo <= hi, "empty range [{lo}, {hi}]");
        match rng.gen_range(0..16u8) {
            0 => return lo.clone(),
            1 => return hi.clone(),
            _ => {}
        }
        let group = lo.group();
        match group {
            GroupId::Int => {
                let (a, _) = lo.as_power_fraction().expect("int");
                let (b, _) = hi.as_power_fraction().expect("int");
                GroupElement::int(rng.gen_bigint_range(a, &(b + 1)))
            }
            GroupId::LexInt => {
                let (lx, ly) = lo.as_pair().expect("lex pair");
                let (hx, hy) = hi.as_pair().expect("lex pair");
                let spread = BigInt::from(self.numerator_bound);
                let x = rng.gen_bigint_range(lx, &(hx + 1));
                let (ylo, yhi) = if lx == hx {
                    (ly.clone(), hy.clone())
                } else if &x == lx {
                    (ly.clone(), ly + &spread)
                } else if &x == hx {
                    (hy - &spread, hy.clone())
                } else {
                    (-&spread, spread.clone())
                };
                GroupElement::lex(x, rng.gen_bigint_range(&ylo, &(yhi + 1)))
            }
            _ => {
                let u = self.unit_fraction(group, rng);
                let width = hi - lo;
                lo + &width.checked_mul(&u).expect("ring group")
            }
        }
    }
}

/// `⌊c + d√2⌋`
fn floor_zsqrt2(c: &BigInt, d: &BigInt) -> BigInt {
    let root: BigInt = (d * d * 2u32).sqrt();
    if d.is_negative() {
        c - root - 1
    } else {
        c + root
    }
}

/// `⌈c + d√2⌉`
fn ceil_zsqrt2(c: &BigInt, d: &BigInt) -> BigInt {
    if d.is_zero() {
        c.clone()
    } else {
        floor_zsqrt2(c, d) + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_ceil_of_quadratic_irrationals() {
        let b = BigInt::from;
        assert_eq!(floor_zsqrt2(&b(0), &b(1)), b(1));
        assert_eq!(floor_zsqrt2(&b(0), &b(-1)), b(-2));
        assert_eq!(ceil_zsqrt2(&b(1), &b(-1)), b(0));
        assert_eq!(floor_zsqrt2(&b(0), &b(5)), b(7));
        assert_eq!(ceil_zsqrt2(&b(3), &b(0)), b(3));
    }

    #[test]
    fn between_stays_in_range() {
        let mut rng = SampleRng::seed_from_u64(7);
        let ranges = [
            (GroupElement::int(-3), GroupElement::int(4)),
            (GroupElement::triadic(1, 2), GroupElement::triadic(1, 1)),
            (GroupElement::zsqrt2(0, 0), GroupElement::zsqrt2(0, 1)),
            (GroupElement::lex(0, 5), GroupElement::lex(2, -1)),
            (GroupElement::rational(-1, 3).unwrap(), GroupElement::rational(2, 7).unwrap()),
            (GroupElement::dyadic(3, 4), GroupElement::dyadic(3, 4)),
        ];
        for (lo, hi) in ranges {
            let sampler = ElementSampler::for_group(lo.group());
            for _ in 0..500 {
                let e = sampler.between(&lo, &hi, &mut rng);
                assert!(lo <= e && e <= hi, "{e} outside [{lo}, {hi}]");
            }
        }
    }

    #[test]
    fn exponent_has_mean_near_three() {
        let mut rng = SampleRng::seed_from_u64(1);
        let s = ElementSampler::for_group(GroupId::Dyadic);
        let total: u32 = (0..20_000).map(|_| s.exponent(&mut rng)).sum();
        // mean 3, standard error about 0.025
        assert!((57_000..63_000).contains(&total), "total {total}");
    }
}
